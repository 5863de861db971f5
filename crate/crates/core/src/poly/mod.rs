//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! A [`Polynomial`] is a map from [`Monomial`] to a nonzero [`BigInt`]. Terms
//! are kept in a `BTreeMap` ordered graded-lexicographically over the
//! [`VariableId`] order, so equality, iteration and the text format are all
//! deterministic.

mod text;

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use text::{ParseError, VarTable};

/// Index of a ring variable in the fixed global ordering of a context.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VariableId(pub u16);

impl VariableId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Degree of a polynomial in one variable. The zero polynomial has degree
/// [`Degree::NegInfinity`], which orders below every finite degree.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(e) => Some(e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("relation is not monic in variable {0:?}")]
    NonMonicRelation(VariableId),
}

/// A power product, stored as `(variable, exponent)` pairs sorted by variable
/// with every exponent positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<(VariableId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: VariableId) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VariableId, e: u32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial {
                exps: alloc::vec![(v, e)],
            }
        }
    }

    /// Builds a monomial from arbitrary pairs; repeated variables multiply and
    /// zero exponents are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (VariableId, u32)>>(pairs: I) -> Self {
        let mut map: BTreeMap<VariableId, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial {
            exps: map.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: VariableId) -> u32 {
        match self.exps.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VariableId, u32)> + '_ {
        self.exps.iter().copied()
    }

    /// Same monomial with the exponent of `v` replaced by `e`.
    pub fn with_exponent(&self, v: VariableId, e: u32) -> Self {
        let mut exps = self.exps.clone();
        match exps.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) if e == 0 => {
                exps.remove(i);
            }
            Ok(i) => exps[i].1 = e,
            Err(_) if e == 0 => {}
            Err(i) => exps.insert(i, (v, e)),
        }
        Monomial { exps }
    }

    pub fn without(&self, v: VariableId) -> Self {
        self.with_exponent(v, 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut exps = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    exps.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&a[i..]);
        exps.extend_from_slice(&b[j..]);
        Monomial { exps }
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the exponent of the
    /// lowest-indexed variable where the two differ.
    fn cmp(&self, other: &Self) -> Ordering {
        let by_degree = self.total_degree().cmp(&other.total_degree());
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        for (&(va, ea), &(vb, eb)) in self.exps.iter().zip(other.exps.iter()) {
            if va != vb {
                // `self` carries a variable earlier in the order than `other`
                return if va < vb {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
            if ea != eb {
                return ea.cmp(&eb);
            }
        }
        self.exps.len().cmp(&other.exps.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over the integers in canonical form: no zero
/// coefficients, the zero polynomial has no terms.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::from_term(Monomial::one(), c.into())
    }

    pub fn var(v: VariableId) -> Self {
        Self::from_term(Monomial::var(v), BigInt::one())
    }

    pub fn from_term(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// `c * Π v^e`.
    pub fn term<C: Into<BigInt>>(c: C, powers: &[(VariableId, u32)]) -> Self {
        Self::from_term(Monomial::from_pairs(powers.iter().copied()), c.into())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, BigInt> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    /// Returns `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn variables(&self) -> BTreeSet<VariableId> {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|(v, _)| v))
            .collect()
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn degree_in(&self, v: VariableId) -> Degree {
        self.terms
            .keys()
            .map(|m| m.exponent(v))
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Binary powering with canonicalization after every product.
    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Splits `p = Σ_e coeffs[e] * v^e`; `coeffs[e]` is free of `v`.
    pub fn coefficients_in(&self, v: VariableId) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v) as usize;
            if out.len() <= e {
                out.resize_with(e + 1, Polynomial::zero);
            }
            out[e].terms.insert(m.without(v), c.clone());
        }
        out
    }

    /// Inverse of [`Polynomial::coefficients_in`].
    pub fn from_coefficients_in(v: VariableId, coeffs: &[Polynomial]) -> Polynomial {
        let mut p = Polynomial::zero();
        for (e, c) in coeffs.iter().enumerate() {
            let ve = Monomial::var_pow(v, e as u32);
            for (m, x) in c.terms() {
                p.add_term(m.mul(&ve), x.clone());
            }
        }
        p
    }

    /// The polynomial multiplying `v^e`, with `v` removed.
    pub fn coeff_of(&self, v: VariableId, e: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(v) == e)
                .map(|(m, c)| (m.without(v), c.clone()))
                .collect(),
        }
    }

    /// Replaces every occurrence of `v` by `q` (Horner scheme in `v`).
    pub fn substitute(&self, v: VariableId, q: &Polynomial) -> Polynomial {
        let coeffs = self.coefficients_in(v);
        let mut acc = Polynomial::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * q) + c;
        }
        acc
    }

    /// Exact evaluation of `v` at the integer `x`.
    pub fn eval_at_integer(&self, v: VariableId, x: &BigInt) -> Polynomial {
        let coeffs = self.coefficients_in(v);
        let mut acc = Polynomial::zero();
        for c in coeffs.iter().rev() {
            acc = &acc.scale(x) + c;
        }
        acc
    }

    /// Remainder of `self` modulo `rel`, where `rel` is monic in `v`: the
    /// result has `v`-degree below that of `rel` and is congruent to `self`.
    pub fn reduce_monic(&self, v: VariableId, rel: &Polynomial) -> Result<Polynomial, PolyError> {
        let rel_coeffs = rel.coefficients_in(v);
        let r = match rel_coeffs.len() {
            0 | 1 => return Err(PolyError::NonMonicRelation(v)),
            len => len - 1,
        };
        if !rel_coeffs[r].is_one() {
            return Err(PolyError::NonMonicRelation(v));
        }
        let mut coeffs = self.coefficients_in(v);
        if coeffs.len() <= r {
            return Ok(self.clone());
        }
        // v^e = v^(e-r) * v^r ≡ -v^(e-r) * Σ_{i<r} rel_i v^i
        for e in (r..coeffs.len()).rev() {
            let lead = core::mem::take(&mut coeffs[e]);
            if lead.is_zero() {
                continue;
            }
            for (i, rc) in rel_coeffs[..r].iter().enumerate() {
                if !rc.is_zero() {
                    let t = &lead * rc;
                    coeffs[e - r + i] -= &t;
                }
            }
        }
        coeffs.truncate(r);
        Ok(Polynomial::from_coefficients_in(v, &coeffs))
    }

    /// Debug-style rendering with placeholder names `x0, x1, ...`.
    pub fn to_text_anonymous(&self) -> String {
        self.to_text(&VarTable::anonymous(
            self.variables().last().map_or(0, |v| v.index() + 1),
        ))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text_anonymous())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    hashbrown::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
                    hashbrown::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}
