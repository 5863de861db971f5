//! One test per acceptance criterion. Each prints a single
//! `[ACCEPT] PASS|FAIL` line. Every comparison is exact integer or exact
//! polynomial equality; there are no numeric tolerances.

use std::time::{Duration, Instant};

use jetbound_core::checks::{
    compositions, diagonal_monomial, first_chern_identity, multinomial_coefficient, top_coefficient,
};
use jetbound_core::morse::{morse_polynomial, run};
use jetbound_core::threshold::threshold_of_coefficients;
use jetbound_core::{default_weights, degree_threshold, GeometrySpec, Polynomial, VariableId};
use jetbound_validation::{check, criterion, monic, observation, poly};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Logarithmic-pair thresholds, default weights.
const TABLE: [(u32, u32, u64); 10] = [
    (2, 2, 15),
    (2, 3, 14),
    (2, 4, 14),
    (2, 5, 14),
    (3, 3, 75),
    (3, 4, 67),
    (3, 5, 67),
    (4, 4, 306),
    (4, 5, 280),
    (5, 5, 1154),
];

/// Ascending in d, including the trailing factor d; recorded from the GP/PARI
/// reference listing before the build.
const GOLDEN_2_2: [&str; 4] = ["0", "-378", "-153", "12"];
const GOLDEN_3_3: [&str; 5] = ["0", "-948279600", "-535215528", "-17302968", "333162"];

const PROPERTY_CASES: u32 = 1000;
const VANISHING_BUDGET: Duration = Duration::from_secs(60);
const MIN_INTERPOLATION_SAMPLES: usize = 15;

fn ints(v: &[&str]) -> Vec<BigInt> {
    v.iter().map(|s| s.parse().unwrap()).collect()
}

#[test]
fn table_of_logarithmic_thresholds() {
    let mut mismatches = Vec::new();
    let mut cells = Vec::new();
    let start = Instant::now();
    for (n, k, want) in TABLE {
        let r = run(
            &GeometrySpec::logarithmic(n),
            k,
            &default_weights(k as usize),
        )
        .unwrap();
        let got = r.threshold.map(|t| u64::try_from(t).unwrap());
        cells.push(format!(
            "({n},{k})={}",
            got.map_or_else(|| "none".into(), |t| t.to_string())
        ));
        if got != Some(want) {
            let at = |d: u64| r.morse_poly.eval(&BigInt::from(d)).sign();
            mismatches.push(format!(
                "({n},{k}) expected {want} got {got:?}, sign P({}) {:?}, sign P({want}) {:?}",
                want - 1,
                at(want - 1),
                at(want)
            ));
        }
    }
    let detail = if mismatches.is_empty() {
        format!("{} in {:.1?}", cells.join(" "), start.elapsed())
    } else {
        format!("{}; mismatches: {}", cells.join(" "), mismatches.join(", "))
    };
    assert!(
        criterion(
            "table of logarithmic thresholds",
            mismatches.is_empty(),
            &detail
        ),
        "{detail}"
    );
}

#[test]
fn golden_oracle_coefficients() {
    let mut bad = Vec::new();
    for (n, k, want) in [(2, 2, &GOLDEN_2_2[..]), (3, 3, &GOLDEN_3_3[..])] {
        let p = morse_polynomial(
            &GeometrySpec::logarithmic(n),
            k,
            &default_weights(k as usize),
        )
        .unwrap();
        if p.coefficients() != ints(want) {
            bad.push(format!("({n},{k}) got {:?}", p.coefficients()));
        }
    }
    let detail = if bad.is_empty() {
        "(2,2) and (3,3) coefficient lists equal".to_owned()
    } else {
        bad.join("; ")
    };
    assert!(
        criterion("golden oracle coefficients", bad.is_empty(), &detail),
        "{detail}"
    );
}

#[test]
fn diagonal_monomial_normalization() {
    let outcomes: Vec<_> = [2, 3]
        .into_iter()
        .map(|n| diagonal_monomial(n).unwrap())
        .collect();
    let ok = outcomes.iter().all(|o| o.passed);
    let detail = outcomes
        .iter()
        .map(|o| format!("{}: {}", o.name, o.detail))
        .collect::<Vec<_>>()
        .join("; ");
    assert!(
        criterion("diagonal monomial has top coefficient 1", ok, &detail),
        "{detail}"
    );
}

#[test]
fn vanishing_below_order_n() {
    let start = Instant::now();
    let mut tuples = 0usize;
    let mut bad = Vec::new();
    for n in [2u32, 3] {
        let spec = GeometrySpec::compact(n);
        for k in 1..n {
            let total = n + k * (n - 1);
            for e in compositions(total, k as usize) {
                tuples += 1;
                let c = top_coefficient(&spec, k, &e, &Polynomial::one()).unwrap();
                if c != BigInt::from(0) {
                    bad.push(format!("n={n} e={e:?} coefficient {c}"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && tuples > 0 && elapsed < VANISHING_BUDGET;
    let detail = format!("{tuples} tuples in {elapsed:.1?}, nonzero: {bad:?}");
    assert!(
        criterion("top coefficient vanishes below order n", ok, &detail),
        "{detail}"
    );
}

#[test]
fn multinomial_coefficient_by_interpolation() {
    let o = multinomial_coefficient(2, MIN_INTERPOLATION_SAMPLES).unwrap();
    let detail = o.detail.clone();
    assert!(
        criterion("multinomial coefficient 6 for n=2", o.passed, &detail),
        "{detail}"
    );
}

#[test]
fn first_chern_class_identity() {
    let mut bad = Vec::new();
    for n in 1..=5 {
        for k in 1..=5 {
            let o = first_chern_identity(n, k).unwrap();
            if !o.passed {
                bad.push(o.name);
            }
        }
    }
    let detail = format!("25 (n,k) pairs, failing {bad:?}");
    assert!(
        criterion(
            "first Chern class identity n,k <= 5",
            bad.is_empty(),
            &detail
        ),
        "{detail}"
    );
}

#[test]
fn ring_and_reduction_properties() {
    let x = VariableId(0);
    let p = || poly(4, 3, 6);
    let mut results = Vec::new();
    results.push((
        "associativity",
        check(PROPERTY_CASES, 11, &(p(), p(), p()), |(a, b, c)| {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            Ok(())
        }),
    ));
    results.push((
        "distributivity",
        check(PROPERTY_CASES, 12, &(p(), p(), p()), |(a, b, c)| {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            Ok(())
        }),
    ));
    results.push((
        "reduce_monic idempotence",
        check(PROPERTY_CASES, 13, &(p(), monic(4)), |(a, q)| {
            let r = a.reduce_monic(x, &q).unwrap();
            prop_assert!(r
                .degree_in(x)
                .finite()
                .is_none_or(|e| e < q.degree_in(x).finite().unwrap()));
            prop_assert_eq!(r.reduce_monic(x, &q).unwrap(), r);
            Ok(())
        }),
    ));
    results.push((
        "reduction homomorphism",
        check(PROPERTY_CASES, 14, &(p(), p(), monic(4)), |(a, b, q)| {
            let red = |z: &Polynomial| z.reduce_monic(x, &q).unwrap();
            prop_assert_eq!(red(&(&a + &b)), &red(&a) + &red(&b));
            prop_assert_eq!(red(&(&a * &b)), red(&(&red(&a) * &red(&b))));
            Ok(())
        }),
    ));
    results.push((
        "coefficient reconstruction",
        check(PROPERTY_CASES, 15, &(p(), 0u16..4), |(a, v)| {
            let v = VariableId(v);
            prop_assert_eq!(
                Polynomial::from_coefficients_in(v, &a.coefficients_in(v)),
                a
            );
            Ok(())
        }),
    ));
    let ok = results.iter().all(|(_, r)| r.is_ok());
    let detail = results
        .iter()
        .map(|(name, r)| match r {
            Ok(n) => format!("{name} {n} ok"),
            Err(e) => format!("{name} FAILED {e}"),
        })
        .collect::<Vec<_>>()
        .join("; ");
    assert!(
        criterion("ring and reduction properties", ok, &detail),
        "{detail}"
    );
}

#[test]
fn threshold_definition_properties() {
    let mut notes = Vec::new();
    let mut ok = true;
    for (n, k) in [(2u32, 2u32), (3, 3)] {
        let spec = GeometrySpec::logarithmic(n);
        let a = default_weights(k as usize);
        let t1 = degree_threshold(&morse_polynomial(&spec, k, &a).unwrap());
        let t2 = degree_threshold(&morse_polynomial(&spec, k, &a.scaled(2)).unwrap());
        ok &= t1.is_some() && t1 == t2;
        notes.push(format!("({n},{k}) {t1:?} vs doubled {t2:?}"));
    }
    let linear = threshold_of_coefficients(&[BigInt::from(-3), BigInt::from(1)]);
    ok &= linear == Some(BigInt::from(4));
    notes.push(format!("d - 3 -> {linear:?}"));
    let negative = threshold_of_coefficients(&[BigInt::from(5), BigInt::from(-1)]);
    ok &= negative.is_none();
    notes.push(format!("-d + 5 -> {negative:?}"));
    let detail = notes.join("; ");
    assert!(
        criterion("threshold definition properties", ok, &detail),
        "{detail}"
    );
}

/// Not a numbered criterion: rows of the computed table should not increase
/// with the order.
#[test]
fn thresholds_do_not_increase_with_order() {
    let mut rises = Vec::new();
    for n in 2..=4u32 {
        let mut prev: Option<BigInt> = None;
        for k in n..=5 {
            let r = run(
                &GeometrySpec::logarithmic(n),
                k,
                &default_weights(k as usize),
            )
            .unwrap();
            let t = r.threshold.unwrap();
            if let Some(p) = &prev {
                if &t > p {
                    rises.push(format!("n={n}: k={} {p} -> k={k} {t}", k - 1));
                }
            }
            prev = Some(t);
        }
    }
    let detail = format!("rises: {rises:?}");
    let ok = observation(
        "thresholds non-increasing in order",
        rises.is_empty(),
        &detail,
    );
    assert!(ok, "{detail}");
}
