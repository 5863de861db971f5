//! Arithmetic directly in the quotient ring `H*(X)[u_1..u_k] / (q_1..q_k)`.
//!
//! Expanding `F^{N-1}` before reducing (as the generic route does) produces
//! every monomial of degree `N-1` in `k+1` variables with huge exponents. Here
//! every product is reduced immediately, so elements stay in the basis
//! `u^e` with `0 <= e_j < r`, and base monomials of cohomological degree above
//! `dim X` are dropped: they are zero on `X`, and neither reduction nor
//! multiplication can lower the base degree of a term.
//!
//! Normal forms of the overflowing monomials `u^g` (some `g_j >= r`) are
//! memoized; the reduction step `u_i^r -> T_i` always targets the highest
//! overflowing level first, which strictly decreases `g` in the reverse
//! lexicographic order, so the recursion terminates.

use alloc::rc::Rc;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{RelationSet, TowerContext, TowerError, VarKind};
use crate::poly::{Monomial, Polynomial, VariableId};

const OVERFLOW: u16 = u16::MAX;

#[derive(Clone, Debug)]
struct Term {
    u: u32,
    b: u16,
    c: BigInt,
}

/// Element of the truncated quotient ring: `(basis index, base monomial
/// index) -> coefficient`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReducedClass {
    terms: HashMap<(u32, u16), BigInt>,
}

impl ReducedClass {
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&mut self, u: u32, b: u16, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((u, b)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(u, b));
        }
    }
}

/// Base monomials in `c_1..c_n, h` of cohomological degree `<= n`.
#[derive(Debug)]
struct BaseMonomials {
    /// Exponents over `[c_1, …, c_n, h]`.
    exps: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, u16>,
    products: Vec<u16>,
    one: u16,
}

impl BaseMonomials {
    fn new(n: usize) -> Self {
        let weights: Vec<u32> = (1..=n as u32).chain(core::iter::once(1)).collect();
        let mut exps = Vec::new();
        let mut cur = alloc::vec![0u32; n + 1];
        fn walk(
            pos: usize,
            budget: u32,
            weights: &[u32],
            cur: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            if pos == weights.len() {
                out.push(cur.clone());
                return;
            }
            let mut e = 0;
            while e * weights[pos] <= budget {
                cur[pos] = e;
                walk(pos + 1, budget - e * weights[pos], weights, cur, out);
                e += 1;
            }
            cur[pos] = 0;
        }
        walk(0, n as u32, &weights, &mut cur, &mut exps);
        assert!(exps.len() < OVERFLOW as usize, "too many base monomials");
        let index: HashMap<Vec<u32>, u16> = exps
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u16))
            .collect();
        let len = exps.len();
        let mut products = alloc::vec![OVERFLOW; len * len];
        for i in 0..len {
            for j in 0..len {
                let sum: Vec<u32> = exps[i].iter().zip(&exps[j]).map(|(a, b)| a + b).collect();
                if let Some(&p) = index.get(&sum) {
                    products[i * len + j] = p;
                }
            }
        }
        let one = index[&alloc::vec![0u32; n + 1]];
        BaseMonomials {
            exps,
            index,
            products,
            one,
        }
    }

    fn mul(&self, a: u16, b: u16) -> u16 {
        self.products[a as usize * self.exps.len() + b as usize]
    }
}

/// Quotient-ring engine for one tower. Not `Sync`: build one per thread.
pub struct TowerRing {
    k: usize,
    r: u32,
    u_vars: Vec<VariableId>,
    base_vars: Vec<VariableId>,
    strides: Vec<u32>,
    base: BaseMonomials,
    /// `tails[i]` is the reduced form of `u_{i+1}^r`.
    tails: Vec<Rc<[Term]>>,
    memo: HashMap<Vec<u32>, Rc<[Term]>>,
}

impl TowerRing {
    pub fn new(ctx: &TowerContext, rels: &RelationSet) -> Self {
        let k = ctx.order() as usize;
        let r = ctx.rank();
        let n = ctx.dim() as usize;
        let mut strides = Vec::with_capacity(k);
        let mut s = 1u32;
        for _ in 0..k {
            strides.push(s);
            s = s.checked_mul(r).expect("basis too large");
        }
        let mut base_vars: Vec<VariableId> = (1..=n).map(|l| ctx.c(l)).collect();
        base_vars.push(ctx.h());
        let mut ring = TowerRing {
            k,
            r,
            u_vars: (1..=k).map(|j| ctx.u(j)).collect(),
            base_vars,
            strides,
            base: BaseMonomials::new(n),
            tails: Vec::with_capacity(k),
            memo: HashMap::new(),
        };
        for j in 1..=k {
            // u_j^r = -(q_j - u_j^r); the lower levels it touches are already known
            let uj_r = Polynomial::from_term(Monomial::var_pow(ctx.u(j), r), BigInt::one());
            let tail = -(rels.relation(j) - &uj_r);
            let reduced = ring
                .from_polynomial(&tail)
                .expect("relations only involve tower and base variables");
            let terms: Vec<Term> = reduced
                .terms
                .into_iter()
                .map(|((u, b), c)| Term { u, b, c })
                .collect();
            ring.tails.push(terms.into());
        }
        ring
    }

    fn pack(&self, e: &[u32]) -> u32 {
        e.iter().zip(&self.strides).map(|(a, s)| a * s).sum()
    }

    fn unpack(&self, mut u: u32) -> Vec<u32> {
        let mut e = Vec::with_capacity(self.k);
        for _ in 0..self.k {
            e.push(u % self.r);
            u /= self.r;
        }
        e
    }

    fn top_index(&self) -> u32 {
        self.pack(&alloc::vec![self.r - 1; self.k])
    }

    /// Normal form of `u^g` for arbitrary exponents.
    fn reduce_monomial(&mut self, g: &[u32]) -> Rc<[Term]> {
        let Some(i) = (0..self.k).rev().find(|&i| g[i] >= self.r) else {
            return Rc::from(alloc::vec![Term {
                u: self.pack(g),
                b: self.base.one,
                c: BigInt::one()
            }]);
        };
        if let Some(hit) = self.memo.get(g) {
            return hit.clone();
        }
        let mut rest = g.to_vec();
        rest[i] -= self.r;
        let tail = self.tails[i].clone();
        let mut acc = ReducedClass::default();
        for t in tail.iter() {
            let f = self.unpack(t.u);
            let shifted: Vec<u32> = rest.iter().zip(&f).map(|(a, b)| a + b).collect();
            let sub = self.reduce_monomial(&shifted);
            for s in sub.iter() {
                let b = self.base.mul(t.b, s.b);
                if b != OVERFLOW {
                    acc.add(s.u, b, &t.c * &s.c);
                }
            }
        }
        let out: Rc<[Term]> = acc
            .terms
            .into_iter()
            .map(|((u, b), c)| Term { u, b, c })
            .collect();
        self.memo.insert(g.to_vec(), out.clone());
        out
    }

    /// Embeds a polynomial in `u_j`, `c_l`, `h`, reducing and truncating.
    pub fn from_polynomial(&mut self, p: &Polynomial) -> Result<ReducedClass, TowerError> {
        let mut out = ReducedClass::default();
        for (m, c) in p.terms() {
            let mut g = alloc::vec![0u32; self.k];
            let mut be = alloc::vec![0u32; self.base_vars.len()];
            for (v, e) in m.iter() {
                if let Some(j) = self.u_vars.iter().position(|&x| x == v) {
                    g[j] = e;
                } else if let Some(l) = self.base_vars.iter().position(|&x| x == v) {
                    be[l] = e;
                } else {
                    return Err(TowerError::UnsupportedVariable(v));
                }
            }
            let Some(&b) = self.base.index.get(&be) else {
                continue;
            };
            for t in self.reduce_monomial(&g).iter() {
                let bb = self.base.mul(b, t.b);
                if bb != OVERFLOW {
                    out.add(t.u, bb, c * &t.c);
                }
            }
        }
        Ok(out)
    }

    pub fn to_polynomial(&self, x: &ReducedClass) -> Polynomial {
        Polynomial::from_terms(x.terms.iter().map(|(&(u, b), c)| {
            let e = self.unpack(u);
            let pairs = self.u_vars.iter().copied().zip(e).chain(
                self.base_vars
                    .iter()
                    .copied()
                    .zip(self.base.exps[b as usize].iter().copied()),
            );
            (Monomial::from_pairs(pairs), c.clone())
        }))
    }

    pub fn mul(&mut self, x: &ReducedClass, y: &ReducedClass) -> ReducedClass {
        let mut out = ReducedClass::default();
        let ys: Vec<(Vec<u32>, u16, &BigInt)> = y
            .terms
            .iter()
            .map(|(&(u, b), c)| (self.unpack(u), b, c))
            .collect();
        for (&(ux, bx), cx) in &x.terms {
            let ex = self.unpack(ux);
            for (ey, by, cy) in &ys {
                let b = self.base.mul(bx, *by);
                if b == OVERFLOW {
                    continue;
                }
                let g: Vec<u32> = ex.iter().zip(ey).map(|(a, b)| a + b).collect();
                if g.iter().all(|&e| e < self.r) {
                    out.add(self.pack(&g), b, cx * *cy);
                } else {
                    let c = cx * *cy;
                    for t in self.reduce_monomial(&g).iter() {
                        let bb = self.base.mul(b, t.b);
                        if bb != OVERFLOW {
                            out.add(t.u, bb, &c * &t.c);
                        }
                    }
                }
            }
        }
        out
    }

    /// `x * y^e` by repeated multiplication; cheap when `y` is small (a
    /// linear form), which is the case for every power taken here.
    pub fn mul_pow(&mut self, x: &ReducedClass, y: &ReducedClass, e: u32) -> ReducedClass {
        let mut acc = x.clone();
        for _ in 0..e {
            acc = self.mul(&acc, y);
        }
        acc
    }

    pub fn one(&self) -> ReducedClass {
        let mut x = ReducedClass::default();
        x.add(0, self.base.one, BigInt::one());
        x
    }

    /// Coefficient of `u_1^{r-1} ⋯ u_k^{r-1}`: the pushforward to the base.
    pub fn integrate(&self, x: &ReducedClass) -> Polynomial {
        let top = self.top_index();
        Polynomial::from_terms(x.terms.iter().filter(|(&(u, _), _)| u == top).map(
            |(&(_, b), c)| {
                let pairs = self
                    .base_vars
                    .iter()
                    .copied()
                    .zip(self.base.exps[b as usize].iter().copied());
                (Monomial::from_pairs(pairs), c.clone())
            },
        ))
    }

    /// Same contract as [`super::intersect`], computed in the truncated ring.
    pub fn intersect(
        &mut self,
        ctx: &TowerContext,
        exponents: &[u32],
        extra: &Polynomial,
    ) -> Result<Polynomial, TowerError> {
        let m = super::check_intersection(ctx, exponents, extra)?;
        for v in extra.variables() {
            if !matches!(
                ctx.kind(v),
                Some(VarKind::Chern(_)) | Some(VarKind::Hyperplane) | Some(VarKind::Taut(_))
            ) {
                return Err(TowerError::UnsupportedVariable(v));
            }
        }
        let x = self.from_polynomial(&extra.mul_monomial(&m))?;
        Ok(self.integrate(&x))
    }
}
