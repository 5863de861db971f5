use jetbound_core::{GeometrySpec, TowerContext};
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Coefficient lists in `d`, ascending; `mul` is polynomial multiplication.
fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

#[test]
fn compact_total_chern_times_hyperplane_factor() {
    // (1 + d h) Σ c_j h^j = (1 + h)^{n+2} through h^n
    for n in 1..=6u32 {
        let spec = GeometrySpec::compact(n);
        let c = |j: u32| {
            if j == 0 {
                vec![BigInt::one()]
            } else {
                spec.chern_in_degree(j).unwrap()
            }
        };
        for j in 0..=n {
            let mut lhs = c(j);
            if j > 0 {
                let shifted = mul(&c(j - 1), &[BigInt::zero(), BigInt::one()]);
                lhs.resize(lhs.len().max(shifted.len()), BigInt::zero());
                for (i, x) in shifted.into_iter().enumerate() {
                    lhs[i] += x;
                }
            }
            assert_eq!(
                trim(lhs),
                trim(vec![binom(n as i64 + 2, j as i64)]),
                "n={n} j={j}"
            );
        }
    }
}

#[test]
fn logarithmic_classes_factor_through_the_divisor() {
    // c(T<D>) = c(T_{P^n}) / (1 + d h) = (1 + h)^{n+1} Σ_k (-d h)^k
    for n in 1..=4u32 {
        let spec = GeometrySpec::logarithmic(n);
        for j in 1..=n {
            let mut want = vec![BigInt::zero(); j as usize + 1];
            for i in 0..=j {
                let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
                want[(j - i) as usize] += binom(n as i64 + 1, i as i64) * sign;
            }
            assert_eq!(
                trim(spec.chern_in_degree(j).unwrap()),
                trim(want),
                "n={n} j={j}"
            );
        }
    }
}

#[test]
fn compact_classes_have_unit_leading_term() {
    // c_j = (-1)^j d^j + lower
    for n in 1..=6u32 {
        let spec = GeometrySpec::compact(n);
        for j in 1..=n {
            let c = trim(spec.chern_in_degree(j).unwrap());
            assert_eq!(c.len(), j as usize + 1);
            assert_eq!(c[j as usize], BigInt::from(if j % 2 == 0 { 1 } else { -1 }));
        }
    }
}

#[test]
fn evaluation_of_first_chern_power() {
    // (-1)^n c_1^n on a hypersurface: top coefficient d^{n+1} is 1
    for n in 2..=5u32 {
        let ctx = TowerContext::new(n, 1).unwrap();
        let spec = GeometrySpec::compact(n);
        let cls = jetbound_core::Polynomial::var(ctx.c(1))
            .pow(n)
            .scale(&BigInt::from(if n % 2 == 0 { 1 } else { -1 }));
        let ev = jetbound_core::evaluate_in_degree(&cls, &spec, &ctx).unwrap();
        assert_eq!(ev.coefficient(n + 1), BigInt::one());
        assert_eq!(ev.degree().finite(), Some(n + 1));
    }
}
