//! Effective degree thresholds.
//!
//! For `P(d)` with positive leading coefficient the threshold is the least
//! `δ >= 1` such that `P(d) > 0` for every integer `d >= δ`. If `d*` is the
//! largest positive integer with `P(d*) <= 0`, then `P` has a real root in
//! `[d*, d* + 1)`, so `d*` is the floor of some root. We isolate the floors of
//! all real roots in `(0, B]` (`B` the Cauchy bound) with a Sturm sequence of
//! the square-free part and test each candidate exactly.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::geometry::EvaluatedClass;

type QPoly = Vec<BigRational>;

fn trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn derivative(p: &[BigRational]) -> QPoly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

/// Quotient and remainder of `a / b`, `b` nonzero.
fn div_rem(a: &[BigRational], b: &[BigRational]) -> (QPoly, QPoly) {
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = alloc::vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db {
        let shift = rem.len() - 1 - db;
        let q = rem.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &q * c;
        }
        quot[shift] = q;
        rem.pop();
        rem = trim(rem);
    }
    (quot, rem)
}

fn gcd(a: &[BigRational], b: &[BigRational]) -> QPoly {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

fn eval_sign(p: &[BigRational], x: &BigInt) -> i8 {
    let x = BigRational::from_integer(x.clone());
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * &x + c;
    }
    if acc.is_positive() {
        1
    } else if acc.is_negative() {
        -1
    } else {
        0
    }
}

/// Sturm sequence of a square-free polynomial.
struct Sturm {
    seq: Vec<QPoly>,
}

impl Sturm {
    fn new(p: &[BigRational]) -> Self {
        let mut seq = alloc::vec![p.to_vec(), derivative(p)];
        loop {
            let n = seq.len();
            if seq[n - 1].is_empty() {
                seq.pop();
                break;
            }
            let (_, r) = div_rem(&seq[n - 2], &seq[n - 1]);
            if r.is_empty() {
                break;
            }
            seq.push(r.into_iter().map(|c| -c).collect());
        }
        Sturm { seq }
    }

    fn variations(&self, x: &BigInt) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.seq {
            let s = eval_sign(p, x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct roots in `(lo, hi]`.
    fn count(&self, lo: &BigInt, hi: &BigInt) -> usize {
        self.variations(lo) - self.variations(hi)
    }
}

/// `ceil(1 + max_i |c_i| / |c_lead|)`; every real root lies in `(-B, B)`.
pub fn cauchy_bound(coeffs: &[BigInt]) -> BigInt {
    let lead = coeffs.last().expect("nonzero polynomial").abs();
    let max = coeffs[..coeffs.len() - 1]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(BigInt::zero);
    BigInt::one() + Integer::div_ceil(&max, &lead)
}

/// Floors of the distinct real roots of `coeffs` lying in `(lo, hi]`, sorted.
pub fn root_floors(coeffs: &[BigInt], lo: &BigInt, hi: &BigInt) -> Vec<BigInt> {
    let p: QPoly = trim(
        coeffs
            .iter()
            .cloned()
            .map(BigRational::from_integer)
            .collect(),
    );
    if p.len() < 2 {
        return Vec::new();
    }
    let g = gcd(&p, &derivative(&p));
    let (sf, _) = div_rem(&p, &g);
    let sturm = Sturm::new(&sf);
    let mut out = Vec::new();
    isolate(&sturm, &sf, lo.clone(), hi.clone(), &mut out);
    out.sort();
    out.dedup();
    out
}

fn isolate(sturm: &Sturm, p: &[BigRational], lo: BigInt, hi: BigInt, out: &mut Vec<BigInt>) {
    let n = sturm.count(&lo, &hi);
    if n == 0 {
        return;
    }
    if &hi - &lo == BigInt::one() {
        // roots in (lo, lo + 1]: an integer root at hi, anything else floors to lo
        let at_hi = eval_sign(p, &hi) == 0;
        if at_hi {
            out.push(hi.clone());
        }
        if n > usize::from(at_hi) {
            out.push(lo);
        }
        return;
    }
    let mid: BigInt = (&lo + &hi) >> 1usize;
    isolate(sturm, p, lo, mid.clone(), out);
    isolate(sturm, p, mid, hi, out);
}

/// Least `δ >= 1` with `P(d) > 0` for all integers `d >= δ`; `None` when the
/// leading coefficient is not positive.
pub fn degree_threshold(p: &EvaluatedClass) -> Option<BigInt> {
    threshold_of_coefficients(&p.coefficients())
}

pub fn threshold_of_coefficients(coeffs: &[BigInt]) -> Option<BigInt> {
    let lead = coeffs.last()?;
    if !lead.is_positive() {
        return None;
    }
    if coeffs.len() == 1 {
        return Some(BigInt::one());
    }
    let bound = cauchy_bound(coeffs);
    let value = |x: &BigInt| {
        let mut acc = BigInt::zero();
        for c in coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    let last_non_positive = root_floors(coeffs, &BigInt::zero(), &bound)
        .into_iter()
        .rev()
        .find(|f| f.is_positive() && !value(f).is_positive());
    Some(last_non_positive.map_or_else(BigInt::one, |f| f + 1))
}
