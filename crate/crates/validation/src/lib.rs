//! Support for the acceptance suite: seeded property runners, polynomial
//! strategies, and one-line criterion reports.

use std::io::Write;

use jetbound_core::{Monomial, Polynomial, VariableId};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestError, TestRng, TestRunner};

/// Writes `[ACCEPT] PASS|FAIL name: detail` straight to stderr, bypassing
/// the test harness capture, and returns `passed`.
pub fn criterion(name: &str, passed: bool, detail: &str) -> bool {
    emit("ACCEPT", name, passed, detail)
}

/// Same as [`criterion`] with a `[CHECK]` tag, for properties that are not
/// acceptance criteria.
pub fn observation(name: &str, passed: bool, detail: &str) -> bool {
    emit("CHECK", name, passed, detail)
}

fn emit(tag: &str, name: &str, passed: bool, detail: &str) -> bool {
    let verdict = if passed { "PASS" } else { "FAIL" };
    let line = format!("[{tag}] {verdict} {name}: {detail}\n");
    let _ = std::io::stderr().lock().write_all(line.as_bytes());
    passed
}

/// Runner with a fixed ChaCha seed and no failure persistence.
pub fn seeded_runner(cases: u32, seed: u8) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(
        config,
        TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]),
    )
}

/// Runs `test` on `cases` seeded samples; `Err` carries the minimal failing input.
pub fn check<S: Strategy>(
    cases: u32,
    seed: u8,
    strategy: &S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<u32, String>
where
    S::Value: std::fmt::Debug,
{
    let mut runner = seeded_runner(cases, seed);
    match runner.run(strategy, test) {
        Ok(()) => Ok(cases),
        Err(TestError::Fail(why, input)) => Err(format!("{why} at {input:?}")),
        Err(TestError::Abort(why)) => Err(format!("aborted: {why}")),
    }
}

pub fn monomial(arity: u16, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, arity as usize).prop_map(|e| {
        Monomial::from_pairs(
            e.into_iter()
                .enumerate()
                .map(|(i, x)| (VariableId(i as u16), x)),
        )
    })
}

pub fn coefficient() -> impl Strategy<Value = BigInt> {
    prop_oneof![
        4 => (-60i64..=60).prop_map(BigInt::from),
        1 => any::<i64>().prop_map(|x| BigInt::from(x) * BigInt::from(x)),
    ]
}

/// Sparse polynomial in `arity` variables with up to `terms` terms.
pub fn poly(arity: u16, max_exp: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(arity, max_exp), coefficient()), 0..=terms)
        .prop_map(Polynomial::from_terms)
}

/// Monic in variable 0 of degree `1..=3`, lower coefficients in all variables.
pub fn monic(arity: u16) -> impl Strategy<Value = Polynomial> {
    let x = VariableId(0);
    (1u32..=3, poly(arity, 2, 4)).prop_map(move |(deg, tail)| {
        let mut low = Polynomial::zero();
        for (m, c) in tail.terms() {
            low.add_term(m.with_exponent(x, m.exponent(x) % deg), c.clone());
        }
        &Polynomial::var(x).pow(deg) + &low
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::strategy::ValueTree;

    #[test]
    fn seeded_runs_are_reproducible() {
        let collect = || {
            let mut runner = seeded_runner(5, 7);
            let s = poly(3, 2, 3);
            (0..5)
                .map(|_| s.new_tree(&mut runner).unwrap().current())
                .collect::<Vec<_>>()
        };
        assert_eq!(collect(), collect());
    }

    #[test]
    fn failures_are_reported() {
        let r = check(50, 1, &(0u32..100), |x| {
            prop_assert!(x < 10);
            Ok(())
        });
        assert!(r.unwrap_err().contains("10"));
        assert_eq!(check(20, 1, &(0u32..100), |_| Ok(())), Ok(20));
    }

    #[test]
    fn monic_has_unit_top_coefficient() {
        let mut runner = seeded_runner(1, 3);
        for _ in 0..50 {
            let q = monic(3).new_tree(&mut runner).unwrap().current();
            let d = q.degree_in(VariableId(0)).finite().unwrap();
            assert!(q.coeff_of(VariableId(0), d).is_one());
        }
    }
}
