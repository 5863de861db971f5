//! Structural identities of the tower, runnable as a self-check.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::geometry::{evaluate_in_degree, GeometrySpec};
use crate::morse::{
    default_weights, interpolate_leading_form, leading_degree_coefficient, morse_polynomial,
    top_multinomial, WeightVector,
};
use crate::poly::{Monomial, Polynomial};
use crate::threshold::degree_threshold;
use crate::tower::{intersect, RelationSet, TowerContext, TowerError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: String, passed: bool, detail: String) -> Self {
        CheckOutcome {
            name,
            passed,
            detail,
        }
    }
}

/// All compositions of `total` into `parts` nonnegative integers, in
/// lexicographic order.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts);
    fn rec(left: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(left - e, parts - 1, cur, out);
            cur.pop();
        }
    }
    if parts > 0 {
        rec(total, parts, &mut cur, &mut out);
    }
    out
}

/// `c_1^{[j]} = c_1 + (r - 1)(u_1 + … + u_j)` for `0 <= j <= k - 1`.
pub fn first_chern_identity(n: u32, k: u32) -> Result<CheckOutcome, TowerError> {
    let ctx = TowerContext::new(n, k)?;
    let rels = RelationSet::build(&ctx);
    let mut failures = Vec::new();
    for j in 0..k as usize {
        let mut expect = Polynomial::var(ctx.c(1));
        for s in 1..=j {
            expect += &Polynomial::var(ctx.u(s)).scale(&BigInt::from(ctx.rank() - 1));
        }
        if rels.lifted_chern(j, 1) != expect {
            failures.push(j);
        }
    }
    Ok(CheckOutcome::new(
        format!("c1 identity n={n} k={k}"),
        failures.is_empty(),
        format!("levels 0..{} failing {:?}", k - 1, failures),
    ))
}

/// `d^{n+1}` coefficient of the evaluated `∫ u^e · extra`.
pub fn top_coefficient(
    spec: &GeometrySpec,
    k: u32,
    exponents: &[u32],
    extra: &Polynomial,
) -> Result<BigInt, TowerError> {
    let ctx = TowerContext::new(spec.n, k)?;
    let rels = RelationSet::build(&ctx);
    let cls = intersect(&ctx, &rels, exponents, extra)?;
    let ev = evaluate_in_degree(&cls, spec, &ctx).expect("intersection lands in the base");
    Ok(ev.coefficient(spec.n + 1))
}

/// Every monomial `u_1^{j_1} ⋯ u_k^{j_k}` of top degree, `k <= n - 1`, has no
/// `d^{n+1}` term.
pub fn monomials_vanish(spec: &GeometrySpec, k: u32) -> Result<CheckOutcome, TowerError> {
    let ctx = TowerContext::new(spec.n, k)?;
    let rels = RelationSet::build(&ctx);
    let tuples = compositions(ctx.total_dim(), k as usize);
    let mut bad = Vec::new();
    for e in &tuples {
        let cls = intersect(&ctx, &rels, e, &Polynomial::one())?;
        let ev = evaluate_in_degree(&cls, spec, &ctx).expect("intersection lands in the base");
        if !ev.coefficient(spec.n + 1).is_zero() {
            bad.push(e.clone());
        }
    }
    Ok(CheckOutcome::new(
        format!("monomial vanishing {} n={} k={k}", spec.kind, spec.n),
        bad.is_empty(),
        format!("{} tuples, nonzero at {:?}", tuples.len(), bad),
    ))
}

/// `u_1^{j_1} ⋯ u_m^{j_m} · c_1^i` with `m = n - i - 1`, `Σ j = mn + 1`, has no
/// `d^{n+1}` term.
pub fn twisted_monomials_vanish(spec: &GeometrySpec, i: u32) -> Result<CheckOutcome, TowerError> {
    let n = spec.n;
    let m = n - i - 1;
    let ctx = TowerContext::new(n, m)?;
    let rels = RelationSet::build(&ctx);
    let c1i = Polynomial::from_term(Monomial::var_pow(ctx.c(1), i), BigInt::one());
    let tuples = compositions(m * n + 1, m as usize);
    let mut bad = Vec::new();
    for e in &tuples {
        let cls = intersect(&ctx, &rels, e, &c1i)?;
        let ev = evaluate_in_degree(&cls, spec, &ctx).expect("intersection lands in the base");
        if !ev.coefficient(n + 1).is_zero() {
            bad.push(e.clone());
        }
    }
    Ok(CheckOutcome::new(
        format!("c1^{i} twisted vanishing {} n={n}", spec.kind),
        bad.is_empty(),
        format!("{} tuples, nonzero at {:?}", tuples.len(), bad),
    ))
}

/// `∫ u_1^n ⋯ u_n^n` has `d^{n+1}` coefficient 1 on a hypersurface.
pub fn diagonal_monomial(n: u32) -> Result<CheckOutcome, TowerError> {
    let spec = GeometrySpec::compact(n);
    let e = alloc::vec![n; n as usize];
    let top = top_coefficient(&spec, n, &e, &Polynomial::one())?;
    Ok(CheckOutcome::new(
        format!("diagonal monomial compact n={n}"),
        top.is_one(),
        format!("d^{} coefficient {top}", n + 1),
    ))
}

/// `O(a)^N` has no `d^{n+1}` term for `k < n` and all admissible `a` with
/// entries `<= max_entry`.
pub fn self_intersection_vanishes(spec: &GeometrySpec, k: u32, max_entry: u64) -> CheckOutcome {
    let mut tested = 0usize;
    let mut bad = Vec::new();
    for a in admissible_up_to(k as usize, max_entry) {
        tested += 1;
        match leading_degree_coefficient(spec, k, &a) {
            Ok(c) if c.is_zero() => {}
            _ => bad.push(a.as_slice().to_vec()),
        }
    }
    CheckOutcome::new(
        format!(
            "self-intersection vanishing {} n={} k={k}",
            spec.kind, spec.n
        ),
        bad.is_empty() && tested > 0,
        format!("{tested} weight vectors, nonzero at {bad:?}"),
    )
}

/// Admissible vectors with every entry in `1..=max_entry`.
pub fn admissible_up_to(k: usize, max_entry: u64) -> Vec<WeightVector> {
    let mut out = Vec::new();
    let mut cur = alloc::vec![1u64; k];
    loop {
        if let Ok(w) = WeightVector::new(cur.clone()) {
            out.push(w);
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if cur[pos] < max_entry {
                cur[pos] += 1;
                break;
            }
            cur[pos] = 1;
        }
    }
}

/// Coefficient of `(a_1 ⋯ a_n)^n` in the `d^{n+1}` coefficient of `O(a)^{n^2}`,
/// by interpolation with `points` samples per free weight.
pub fn multinomial_coefficient(
    n: u32,
    points: usize,
) -> Result<CheckOutcome, crate::morse::MorseError> {
    let spec = GeometrySpec::compact(n);
    let ctx = TowerContext::with_symbolic_weights(n, n)?;
    let fit = interpolate_leading_form(&spec, n, points)?;
    let mono = Monomial::from_pairs((1..=n as usize).map(|j| (ctx.a(j), n)));
    let got = fit.form.coefficient(&mono);
    let want = top_multinomial(n);
    Ok(CheckOutcome::new(
        format!("multinomial coefficient n={n}"),
        fit.consistent && got == want,
        format!(
            "{} samples, coefficient {got}, expected {want}",
            fit.samples
        ),
    ))
}

/// Doubling the weights leaves the threshold unchanged.
pub fn scaling_invariance(
    spec: &GeometrySpec,
    k: u32,
) -> Result<CheckOutcome, crate::morse::MorseError> {
    let a = default_weights(k as usize);
    let p1 = morse_polynomial(spec, k, &a)?;
    let p2 = morse_polynomial(spec, k, &a.scaled(2))?;
    let (t1, t2) = (degree_threshold(&p1), degree_threshold(&p2));
    Ok(CheckOutcome::new(
        format!("weight scaling {} n={} k={k}", spec.kind, spec.n),
        t1 == t2,
        format!("thresholds {t1:?} and {t2:?}"),
    ))
}

/// The full battery: vanishing and normalization for dimensions `<= 3` (the
/// twisted case also for 4), the first Chern identity for `n, k <= 5`.
pub fn standard_suite() -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let mut push = |r: Result<CheckOutcome, String>| match r {
        Ok(o) => out.push(o),
        Err(e) => out.push(CheckOutcome::new(String::from("internal"), false, e)),
    };
    for n in 1..=5 {
        for k in 1..=5 {
            push(first_chern_identity(n, k).map_err(|e| format!("{e}")));
        }
    }
    for n in 2..=3 {
        for k in 1..n {
            push(monomials_vanish(&GeometrySpec::compact(n), k).map_err(|e| format!("{e}")));
            push(monomials_vanish(&GeometrySpec::logarithmic(n), k).map_err(|e| format!("{e}")));
        }
    }
    push(twisted_monomials_vanish(&GeometrySpec::compact(3), 1).map_err(|e| format!("{e}")));
    for i in 1..=2 {
        push(twisted_monomials_vanish(&GeometrySpec::compact(4), i).map_err(|e| format!("{e}")));
    }
    for n in 2..=3 {
        push(diagonal_monomial(n).map_err(|e| format!("{e}")));
    }
    for n in 2..=3 {
        for k in 1..n {
            push(Ok(self_intersection_vanishes(
                &GeometrySpec::compact(n),
                k,
                9,
            )));
            push(Ok(self_intersection_vanishes(
                &GeometrySpec::logarithmic(n),
                k,
                9,
            )));
        }
    }
    push(multinomial_coefficient(2, 15).map_err(|e| format!("{e}")));
    for (n, k) in [(2, 2), (3, 3)] {
        push(scaling_invariance(&GeometrySpec::logarithmic(n), k).map_err(|e| format!("{e}")));
    }
    out
}
