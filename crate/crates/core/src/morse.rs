//! Morse-inequality classes on `X_k` and their evaluation in the degree.
//!
//! For weights `a` satisfying the relative nefness chain
//! `a_1 >= 3a_2, …, a_{k-2} >= 3a_{k-1}, a_{k-1} >= 2a_k > 0`, the bundle
//! `O_{X_k}(a) = F - G` with `F = Σ a_j u_j + 2|a| h` and `G = 2|a| h` both
//! nef. Sections exist once `F^N - N F^{N-1} G = (F - N G) F^{N-1}` is
//! positive, `N = n + k(n - 1)`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::geometry::{
    evaluate_in_degree, evaluate_symbolic, EvaluatedClass, GeometryError, GeometryKind,
    GeometrySpec,
};
use crate::poly::{Monomial, Polynomial};
use crate::threshold::degree_threshold;
use crate::tower::{integrate_fibers, RelationSet, TowerContext, TowerError, TowerRing};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MorseError {
    #[error("weights {0:?} violate a_1 >= 3a_2, ..., a_(k-1) >= 2a_k > 0")]
    Inadmissible(Vec<u64>),
    #[error("expected {expected} weights, got {found}")]
    WeightCount { expected: usize, found: usize },
    #[error(transparent)]
    Tower(#[from] TowerError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// `a_1 >= 3a_2, …, a_{k-2} >= 3a_{k-1}` and `a_{k-1} >= 2a_k > 0`.
pub fn is_admissible(a: &[u64]) -> bool {
    let k = a.len();
    if k == 0 || a[k - 1] == 0 {
        return false;
    }
    let tail_ok = k < 2 || a[k - 2] >= 2 * a[k - 1];
    let chain_ok = a
        .windows(2)
        .take(k.saturating_sub(2))
        .all(|w| w[0] >= 3 * w[1]);
    tail_ok && chain_ok
}

/// Admissible weight vector `(a_1, …, a_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(a: Vec<u64>) -> Result<Self, MorseError> {
        if is_admissible(&a) {
            Ok(WeightVector(a))
        } else {
            Err(MorseError::Inadmissible(a))
        }
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    /// `|a| = a_1 + … + a_k`.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `b_j = a_1 + … + a_j`.
    pub fn partial_sums(&self) -> Vec<u64> {
        self.0
            .iter()
            .scan(0u64, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    }

    pub fn scaled(&self, m: u64) -> WeightVector {
        WeightVector(self.0.iter().map(|&x| x * m).collect())
    }
}

/// `(2·3^{k-2}, …, 6, 2, 1)`, or `(1)` for `k = 1`.
pub fn default_weights(k: usize) -> WeightVector {
    assert!(k >= 1, "order must be positive");
    let a = (1..=k)
        .map(|j| {
            if j == k {
                1
            } else {
                2 * 3u64.pow((k - j - 1) as u32)
            }
        })
        .collect();
    WeightVector(a)
}

fn check_order(ctx: &TowerContext, a: &WeightVector) -> Result<(), MorseError> {
    if a.order() != ctx.order() as usize {
        return Err(MorseError::WeightCount {
            expected: ctx.order() as usize,
            found: a.order(),
        });
    }
    Ok(())
}

/// `F = Σ a_j u_j + 2|a| h`.
pub fn nef_part(ctx: &TowerContext, a: &WeightVector) -> Polynomial {
    let mut f = twist(ctx, a);
    for (j, &w) in a.as_slice().iter().enumerate() {
        f += &Polynomial::var(ctx.u(j + 1)).scale(&BigInt::from(w));
    }
    f
}

/// `G = 2|a| h`.
pub fn twist(ctx: &TowerContext, a: &WeightVector) -> Polynomial {
    Polynomial::var(ctx.h()).scale(&BigInt::from(2 * a.total()))
}

/// The unreduced class `(F - N G) F^{N-1}`, expanded.
pub fn morse_class(ctx: &TowerContext, a: &WeightVector) -> Result<Polynomial, MorseError> {
    check_order(ctx, a)?;
    let f = nef_part(ctx, a);
    let g = twist(ctx, a);
    let n_total = ctx.total_dim();
    let lead = &f - &g.scale(&BigInt::from(n_total));
    Ok(&lead * &f.pow(n_total - 1))
}

/// Base class `∫ (F - N G) F^{N-1}` computed in the truncated quotient ring.
pub fn integrated_morse_class(
    ctx: &TowerContext,
    ring: &mut TowerRing,
    a: &WeightVector,
) -> Result<Polynomial, MorseError> {
    check_order(ctx, a)?;
    let f = nef_part(ctx, a);
    let lead = &f - &twist(ctx, a).scale(&BigInt::from(ctx.total_dim()));
    let fr = ring.from_polynomial(&f)?;
    let lr = ring.from_polynomial(&lead)?;
    let power = ring.mul_pow(&lr, &fr, ctx.total_dim() - 1);
    Ok(ring.integrate(&power))
}

/// `P(d)`: the Morse class reduced, integrated and evaluated.
pub fn morse_polynomial(
    spec: &GeometrySpec,
    k: u32,
    a: &WeightVector,
) -> Result<EvaluatedClass, MorseError> {
    let ctx = TowerContext::new(spec.n, k)?;
    let rels = RelationSet::build(&ctx);
    let mut ring = TowerRing::new(&ctx, &rels);
    let cls = integrated_morse_class(&ctx, &mut ring, a)?;
    Ok(evaluate_in_degree(&cls, spec, &ctx)?)
}

/// Same as [`morse_polynomial`] through full expansion and generic reduction.
/// Only practical for small `N`.
pub fn morse_polynomial_direct(
    spec: &GeometrySpec,
    k: u32,
    a: &WeightVector,
) -> Result<EvaluatedClass, MorseError> {
    let ctx = TowerContext::new(spec.n, k)?;
    let rels = RelationSet::build(&ctx);
    let cls = integrate_fibers(&rels.reduce(&morse_class(&ctx, a)?), &ctx)?;
    Ok(evaluate_in_degree(&cls, spec, &ctx)?)
}

/// `O_{X_k}(a)^N = (Σ a_j u_j)^N`, integrated and evaluated.
pub fn self_intersection(
    spec: &GeometrySpec,
    k: u32,
    a: &WeightVector,
) -> Result<EvaluatedClass, MorseError> {
    let ctx = TowerContext::new(spec.n, k)?;
    check_order(&ctx, a)?;
    let rels = RelationSet::build(&ctx);
    let mut ring = TowerRing::new(&ctx, &rels);
    let mut lin = Polynomial::zero();
    for (j, &w) in a.as_slice().iter().enumerate() {
        lin += &Polynomial::var(ctx.u(j + 1)).scale(&BigInt::from(w));
    }
    let lr = ring.from_polynomial(&lin)?;
    let one = ring.one();
    let power = ring.mul_pow(&one, &lr, ctx.total_dim());
    let cls = ring.integrate(&power);
    Ok(evaluate_in_degree(&cls, spec, &ctx)?)
}

/// Coefficient of `d^{n+1}` in the evaluated `O_{X_k}(a)^N`, i.e. the `d^n`
/// coefficient of the base intersection number before the factor `d`.
pub fn leading_degree_coefficient(
    spec: &GeometrySpec,
    k: u32,
    a: &WeightVector,
) -> Result<BigInt, MorseError> {
    Ok(self_intersection(spec, k, a)?.coefficient(spec.n + 1))
}

/// `d^{n+1}` coefficient of `O_{X_k}(a)^N` with the weights as variables
/// `a_1..a_k`, through the generic symbolic ring.
pub fn leading_form_symbolic(spec: &GeometrySpec, k: u32) -> Result<Polynomial, MorseError> {
    let ctx = TowerContext::with_symbolic_weights(spec.n, k)?;
    let rels = RelationSet::build(&ctx);
    let mut lin = Polynomial::zero();
    for j in 1..=k as usize {
        lin += &(&Polynomial::var(ctx.a(j)) * &Polynomial::var(ctx.u(j)));
    }
    let cls = integrate_fibers(&rels.reduce(&lin.pow(ctx.total_dim())), &ctx)?;
    let evaluated = evaluate_symbolic(&cls, spec, &ctx)?;
    Ok(evaluated.coeff_of(ctx.d(), spec.n + 1))
}

/// Recovers the `d^{n+1}` coefficient of `O_{X_k}(a)^N` as a homogeneous
/// polynomial in `a_1..a_k` (variables of
/// [`TowerContext::with_symbolic_weights`]) by exact interpolation.
///
/// The form is dehomogenized at `a_k = 1` and sampled on a rectangular grid
/// inside the admissible cone with `points` values per free coordinate
/// (`points >= N + 1` is required for a unique answer; extra points make the
/// vanishing of all coefficients above degree `N` a consistency check).
pub fn interpolate_leading_form(
    spec: &GeometrySpec,
    k: u32,
    points: usize,
) -> Result<InterpolatedForm, MorseError> {
    let ctx = TowerContext::with_symbolic_weights(spec.n, k)?;
    let total = ctx.total_dim();
    let free = k as usize - 1;
    // a_{k-1} in [2, 2+m), a_j in [3 * max(a_{j+1}), …)
    let mut starts = alloc::vec![0u64; free];
    let mut floor = 2u64;
    for j in (0..free).rev() {
        starts[j] = floor;
        floor = 3 * (floor + points as u64 - 1);
    }
    let grid_len = points.pow(free as u32);
    let mut values = Vec::with_capacity(grid_len);
    let mut samples = 0usize;
    for idx in 0..grid_len {
        let mut a = alloc::vec![0u64; k as usize];
        let mut rest = idx;
        for j in (0..free).rev() {
            a[j] = starts[j] + (rest % points) as u64;
            rest /= points;
        }
        a[k as usize - 1] = 1;
        let w = WeightVector::new(a)?;
        values.push(BigRational::from_integer(leading_degree_coefficient(
            spec, k, &w,
        )?));
        samples += 1;
    }
    // tensor-product Newton interpolation, one axis at a time
    let nodes: Vec<Vec<BigRational>> = (0..free)
        .map(|j| {
            (0..points)
                .map(|i| BigRational::from_integer(BigInt::from(starts[j] + i as u64)))
                .collect()
        })
        .collect();
    let mut coeffs = values;
    for (axis, axis_nodes) in nodes.iter().enumerate() {
        let stride = points.pow((free - 1 - axis) as u32);
        let mut next = coeffs.clone();
        for base in 0..grid_len {
            if !(base / stride).is_multiple_of(points) {
                continue;
            }
            let line: Vec<BigRational> = (0..points)
                .map(|i| coeffs[base + i * stride].clone())
                .collect();
            let mono = newton_to_monomial(axis_nodes, &line);
            for (i, c) in mono.into_iter().enumerate() {
                next[base + i * stride] = c;
            }
        }
        coeffs = next;
    }
    let mut form = Polynomial::zero();
    let mut consistent = true;
    for (idx, c) in coeffs.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut exps = alloc::vec![0u32; free];
        let mut rest = idx;
        for j in (0..free).rev() {
            exps[j] = (rest % points) as u32;
            rest /= points;
        }
        let deg: u32 = exps.iter().sum();
        if deg > total || !c.is_integer() {
            consistent = false;
            continue;
        }
        let mut pairs: Vec<_> = exps
            .iter()
            .enumerate()
            .map(|(j, &e)| (ctx.a(j + 1), e))
            .collect();
        pairs.push((ctx.a(k as usize), total - deg));
        form.add_term(Monomial::from_pairs(pairs), c.to_integer());
    }
    Ok(InterpolatedForm {
        form,
        samples,
        consistent,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpolatedForm {
    /// Homogeneous of degree `N` in the weight variables.
    pub form: Polynomial,
    pub samples: usize,
    /// All recovered coefficients were integral and of degree `<= N`.
    pub consistent: bool,
}

/// Monomial-basis coefficients of the interpolant through `(xs[i], ys[i])`.
fn newton_to_monomial(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner on the Newton form
    let mut poly = alloc::vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // poly = poly * (x - xs[i]) + dd[i]
        let mut shifted = alloc::vec![BigRational::zero(); n];
        for (e, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if e + 1 < n {
                shifted[e + 1] += c;
            }
            shifted[e] -= c * &xs[i];
        }
        shifted[0] += &dd[i];
        poly = shifted;
    }
    poly
}

/// Outcome of one `(n, k, a, geometry)` pipeline run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseReport {
    pub n: u32,
    pub k: u32,
    pub geometry: GeometryKind,
    pub weights: WeightVector,
    pub total_dim: u32,
    /// `∫ (F - N G) F^{N-1}` as a class in `c_l, h`.
    pub integrated_class: Polynomial,
    pub morse_poly: EvaluatedClass,
    /// Coefficient of the highest power of `d` in `P`.
    pub leading_coeff: BigInt,
    pub threshold: Option<BigInt>,
}

impl MorseReport {
    /// Order 1 is accepted but never carries jet differentials of interest.
    pub fn is_degenerate_order(&self) -> bool {
        self.k == 1
    }
}

pub fn run(spec: &GeometrySpec, k: u32, weights: &WeightVector) -> Result<MorseReport, MorseError> {
    let ctx = TowerContext::new(spec.n, k)?;
    check_order(&ctx, weights)?;
    let rels = RelationSet::build(&ctx);
    let mut ring = TowerRing::new(&ctx, &rels);
    let integrated_class = integrated_morse_class(&ctx, &mut ring, weights)?;
    let morse_poly = evaluate_in_degree(&integrated_class, spec, &ctx)?;
    let leading_coeff = morse_poly.leading_coefficient();
    let threshold = degree_threshold(&morse_poly);
    debug_assert_eq!(threshold.is_some(), leading_coeff.is_positive());
    Ok(MorseReport {
        n: spec.n,
        k,
        geometry: spec.kind,
        weights: weights.clone(),
        total_dim: ctx.total_dim(),
        integrated_class,
        morse_poly,
        leading_coeff,
        threshold,
    })
}

/// Integer weight `(n^2)! / (n!)^n`, the multinomial coefficient of
/// `a_1^n ⋯ a_n^n` in `(Σ a_j u_j)^{n^2}`.
pub fn top_multinomial(n: u32) -> BigInt {
    let fact = |m: u32| (1..=m).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    fact(n * n) / fact(n).pow(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: &[u64]) -> WeightVector {
        WeightVector::new(a.to_vec()).unwrap()
    }

    #[test]
    fn default_weight_examples() {
        assert_eq!(default_weights(1).as_slice(), &[1]);
        assert_eq!(default_weights(3).as_slice(), &[6, 2, 1]);
        let a5 = default_weights(5);
        assert_eq!(a5.as_slice(), &[54, 18, 6, 2, 1]);
        assert_eq!(a5.total(), 81);
        for k in 1..=8 {
            assert!(is_admissible(default_weights(k).as_slice()));
            assert_eq!(default_weights(k).total(), 3u64.pow(k as u32 - 1));
        }
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&[6, 2, 1]));
        assert!(!is_admissible(&[1, 1]));
        assert!(is_admissible(&[3, 1]));
        assert!(!is_admissible(&[5, 2, 1]));
        assert!(!is_admissible(&[2, 0]));
        assert!(!is_admissible(&[]));
        assert!(is_admissible(&[7]));
        assert!(!is_admissible(&[0]));
        assert_eq!(w(&[6, 2, 1]).partial_sums(), [6, 8, 9]);
        assert!(matches!(
            WeightVector::new(alloc::vec![1, 1]),
            Err(MorseError::Inadmissible(_))
        ));
    }

    #[test]
    fn default_weights_build_the_reference_classes() {
        // B = 2*3^(k-1)*h, A = B + u_k + sum_{j<k} 2*3^(k-j-1)*u_j
        for k in 1..=5u32 {
            let ctx = TowerContext::new(3, k).unwrap();
            let b = Polynomial::term(2 * 3i64.pow(k - 1), &[(ctx.h(), 1)]);
            let mut a = &b + &Polynomial::var(ctx.u(k as usize));
            for j in 1..k {
                a += &Polynomial::term(2 * 3i64.pow(k - j - 1), &[(ctx.u(j as usize), 1)]);
            }
            let w = default_weights(k as usize);
            assert_eq!(nef_part(&ctx, &w), a, "k={k}");
            assert_eq!(twist(&ctx, &w), b, "k={k}");
        }
    }

    #[test]
    fn morse_class_shape() {
        let ctx = TowerContext::new(2, 2).unwrap();
        let a = w(&[2, 1]);
        assert_eq!(ctx.render(&nef_part(&ctx, &a)), "2*u1 + u2 + 6*h");
        assert_eq!(ctx.render(&twist(&ctx, &a)), "6*h");
        let cls = morse_class(&ctx, &a).unwrap();
        assert_eq!(ctx.class_degree(&cls), Some(ctx.total_dim()));
        assert_eq!(ctx.total_dim(), 4);
        assert!(morse_class(&ctx, &w(&[6, 2, 1])).is_err());
    }

    #[test]
    fn fast_and_direct_routes_agree() {
        for (n, k) in [(2, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
            for kind in [
                GeometryKind::LogarithmicPair,
                GeometryKind::CompactHypersurface,
            ] {
                let spec = GeometrySpec::new(kind, n);
                let a = default_weights(k as usize);
                assert_eq!(
                    morse_polynomial(&spec, k, &a).unwrap(),
                    morse_polynomial_direct(&spec, k, &a).unwrap(),
                    "n={n} k={k} {kind}"
                );
            }
        }
    }

    #[test]
    fn order_one_has_no_top_coefficient() {
        for kind in [
            GeometryKind::LogarithmicPair,
            GeometryKind::CompactHypersurface,
        ] {
            for a1 in [1, 2, 5] {
                let p = morse_polynomial(&GeometrySpec::new(kind, 2), 1, &w(&[a1])).unwrap();
                assert!(p.coefficient(3).is_zero());
            }
        }
    }

    #[test]
    fn newton_interpolation_recovers_cubic() {
        let xs: Vec<BigRational> = (2..8)
            .map(|x| BigRational::from_integer(BigInt::from(x)))
            .collect();
        let ys: Vec<BigRational> = xs
            .iter()
            .map(|x| x * x * x - x * BigRational::from_integer(4.into()))
            .collect();
        let c = newton_to_monomial(&xs, &ys);
        let expect = [0i64, -4, 0, 1, 0, 0];
        for (got, e) in c.iter().zip(expect) {
            assert_eq!(got, &BigRational::from_integer(e.into()));
        }
    }

    #[test]
    fn symbolic_and_interpolated_forms_agree() {
        let spec = GeometrySpec::compact(2);
        let ctx = TowerContext::with_symbolic_weights(2, 2).unwrap();
        let symbolic = leading_form_symbolic(&spec, 2).unwrap();
        let fit = interpolate_leading_form(&spec, 2, 15).unwrap();
        assert!(fit.consistent);
        assert_eq!(fit.samples, 15);
        assert_eq!(fit.form, symbolic);
        let a1a2 = Monomial::from_pairs([(ctx.a(1), 2), (ctx.a(2), 2)]);
        assert_eq!(symbolic.coefficient(&a1a2), BigInt::from(6));
        for (m, _) in symbolic.terms() {
            assert_eq!(m.total_degree(), 4);
        }
    }

    #[test]
    fn leading_form_vanishes_below_order_n() {
        assert!(leading_form_symbolic(&GeometrySpec::compact(3), 1)
            .unwrap()
            .is_zero());
        assert!(leading_form_symbolic(&GeometrySpec::logarithmic(3), 2)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(top_multinomial(2), BigInt::from(6));
        assert_eq!(top_multinomial(3), BigInt::from(1680));
    }
}
