#![allow(dead_code)]

use jetbound_core::{Monomial, Polynomial, VariableId};
use num_bigint::BigInt;
use proptest::prelude::*;

pub const ARITY: u16 = 4;

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

/// Sparse polynomial in `arity` variables, up to `terms` terms.
pub fn poly_in(arity: u16, max_exp: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(arity, max_exp), coefficient()), 0..=terms)
        .prop_map(Polynomial::from_terms)
}

pub fn poly() -> impl Strategy<Value = Polynomial> {
    poly_in(ARITY, 3, 6)
}

pub fn var() -> impl Strategy<Value = VariableId> {
    (0..ARITY).prop_map(VariableId)
}

pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}
