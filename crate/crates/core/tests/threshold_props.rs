use jetbound_core::threshold::{cauchy_bound, root_floors, threshold_of_coefficients};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

fn value(c: &[BigInt], x: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::from(0), |acc, k| acc * x + k)
}

/// Product of `(d - r_i)` times `lead`, with integer roots in a narrow band to
/// provoke ties and multiple roots.
fn from_roots(lead: i64, roots: &[i64]) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(lead)];
    for &r in roots {
        let mut next = vec![BigInt::from(0); c.len() + 1];
        for (i, x) in c.iter().enumerate() {
            next[i + 1] += x;
            next[i] -= x * r;
        }
        c = next;
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn threshold_is_tight(coeffs in prop::collection::vec(-400i64..400, 1..7), lead in 1i64..50) {
        let mut c: Vec<BigInt> = coeffs.into_iter().map(BigInt::from).collect();
        c.push(BigInt::from(lead));
        let t = threshold_of_coefficients(&c).unwrap();
        prop_assert!(t >= BigInt::from(1));
        // positive from t up to past the root bound
        let b = cauchy_bound(&c);
        let mut x = t.clone();
        while x <= &b + 2 {
            prop_assert!(value(&c, &x).is_positive(), "P({}) <= 0 with threshold {}", x, t);
            x += 1;
        }
        if t > BigInt::from(1) {
            prop_assert!(!value(&c, &(&t - 1)).is_positive());
        }
    }

    #[test]
    fn non_positive_lead_has_no_threshold(coeffs in prop::collection::vec(-400i64..400, 0..6), lead in -50i64..=0) {
        let mut c: Vec<BigInt> = coeffs.into_iter().map(BigInt::from).collect();
        c.push(BigInt::from(lead));
        prop_assert_eq!(threshold_of_coefficients(&c), None);
    }

    #[test]
    fn integer_roots_are_found(roots in prop::collection::vec(-6i64..30, 1..6), lead in 1i64..5) {
        let c = from_roots(lead, &roots);
        let mut want: Vec<BigInt> = roots.iter().copied().filter(|&r| r > 0).map(BigInt::from).collect();
        want.sort();
        want.dedup();
        prop_assert_eq!(root_floors(&c, &BigInt::from(0), &cauchy_bound(&c)), want);
        let t = threshold_of_coefficients(&c).unwrap();
        let past_roots = roots.iter().copied().filter(|&r| r > 0).max().map_or(1, |m| m + 1);
        prop_assert!(t <= BigInt::from(past_roots));
    }

    #[test]
    fn scaling_preserves_threshold(coeffs in prop::collection::vec(-400i64..400, 1..6), lead in 1i64..50, s in 1i64..1000) {
        let mut c: Vec<BigInt> = coeffs.into_iter().map(BigInt::from).collect();
        c.push(BigInt::from(lead));
        let scaled: Vec<BigInt> = c.iter().map(|x| x * s).collect();
        prop_assert_eq!(threshold_of_coefficients(&c), threshold_of_coefficients(&scaled));
    }
}
