//! Cohomology ring of the Demailly–Semple tower `X_k → … → X_1 → X`.
//!
//! `H*(X_k)` is `H*(X)[u_1, …, u_k]` modulo the monic relations
//! `q_j = u_j^r + Σ_l c_l^{[j-1]} u_j^{r-l}`, where the lifted Chern classes
//! `c_l^{[j]}` of `V_j` come from the recursion
//!
//! ```text
//! c_l^{[j]} = Σ_{s=0}^{l} [C(r-s, l-s) - C(r-s, l-s-1)] u_j^{l-s} c_s^{[j-1]}
//! ```
//!
//! Reduction runs from `u_k` down to `u_1`; integration along the fibers then
//! keeps the coefficient of `u_j^{r-1}` at every level.

mod ring;

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::BigInt;

use crate::poly::{Degree, Monomial, Polynomial, VarTable, VariableId};

pub use ring::{ReducedClass, TowerRing};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TowerError {
    #[error("invalid tower dimensions n={n}, k={k} (need n >= 1, k >= 1)")]
    InvalidDimensions { n: u32, k: u32 },
    #[error("class is not reduced: degree {degree} in u{level} (rank {rank})")]
    Unreduced {
        level: usize,
        degree: u32,
        rank: u32,
    },
    #[error("expected {expected} exponents, got {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("intersection has total degree {found}, tower dimension is {expected}")]
    DimensionMismatch { expected: u32, found: u32 },
    #[error("extra class is not homogeneous")]
    NotHomogeneous,
    #[error("variable {0:?} is not supported here")]
    UnsupportedVariable(VariableId),
}

/// Role of a variable in a [`TowerContext`].
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum VarKind {
    /// `u_j`, 1-based level.
    Taut(usize),
    /// `c_l`, 1-based index.
    Chern(usize),
    Hyperplane,
    Degree,
    /// Symbolic weight `a_j`, 1-based.
    Weight(usize),
}

/// Dimensions of the tower and the variable layout
/// `u_1..u_k, c_1..c_r, h, d [, a_1..a_k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerContext {
    n: u32,
    k: u32,
    symbolic_weights: bool,
    names: VarTable,
}

impl TowerContext {
    /// Tower of order `k` over an `n`-dimensional base with `V` of rank `n`.
    pub fn new(n: u32, k: u32) -> Result<Self, TowerError> {
        Self::build(n, k, false)
    }

    /// Same layout plus symbolic weight variables `a_1..a_k`.
    pub fn with_symbolic_weights(n: u32, k: u32) -> Result<Self, TowerError> {
        Self::build(n, k, true)
    }

    fn build(n: u32, k: u32, symbolic_weights: bool) -> Result<Self, TowerError> {
        if n == 0 || k == 0 || n > 64 || k > 64 {
            return Err(TowerError::InvalidDimensions { n, k });
        }
        let mut names: Vec<String> = (1..=k).map(|j| format!("u{j}")).collect();
        names.extend((1..=n).map(|l| format!("c{l}")));
        names.push("h".into());
        names.push("d".into());
        if symbolic_weights {
            names.extend((1..=k).map(|j| format!("a{j}")));
        }
        Ok(TowerContext {
            n,
            k,
            symbolic_weights,
            names: VarTable::new(names),
        })
    }

    /// Dimension of the base.
    pub fn dim(&self) -> u32 {
        self.n
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.k
    }

    /// `dim X_k = n + k(r - 1)`.
    pub fn total_dim(&self) -> u32 {
        self.n + self.k * (self.rank() - 1)
    }

    pub fn has_symbolic_weights(&self) -> bool {
        self.symbolic_weights
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &VarTable {
        &self.names
    }

    pub fn u(&self, j: usize) -> VariableId {
        assert!(j >= 1 && j <= self.k as usize, "u{j} out of range");
        VariableId((j - 1) as u16)
    }

    pub fn c(&self, l: usize) -> VariableId {
        assert!(l >= 1 && l <= self.rank() as usize, "c{l} out of range");
        VariableId((self.k as usize + l - 1) as u16)
    }

    pub fn h(&self) -> VariableId {
        VariableId((self.k + self.rank()) as u16)
    }

    pub fn d(&self) -> VariableId {
        VariableId((self.k + self.rank() + 1) as u16)
    }

    pub fn a(&self, j: usize) -> VariableId {
        assert!(self.symbolic_weights, "context has no weight variables");
        assert!(j >= 1 && j <= self.k as usize, "a{j} out of range");
        VariableId((self.k + self.rank() + 2) as u16 + (j - 1) as u16)
    }

    pub fn kind(&self, v: VariableId) -> Option<VarKind> {
        let (i, k, r) = (v.index(), self.k as usize, self.rank() as usize);
        Some(if i < k {
            VarKind::Taut(i + 1)
        } else if i < k + r {
            VarKind::Chern(i - k + 1)
        } else if i == k + r {
            VarKind::Hyperplane
        } else if i == k + r + 1 {
            VarKind::Degree
        } else if self.symbolic_weights && i < 2 * k + r + 2 {
            VarKind::Weight(i - k - r - 1)
        } else {
            return None;
        })
    }

    /// Cohomological degree of a variable: `u_j` and `h` have degree 1, `c_l`
    /// degree `l`, `d` and weights degree 0.
    pub fn weight(&self, v: VariableId) -> u32 {
        match self.kind(v) {
            Some(VarKind::Taut(_)) | Some(VarKind::Hyperplane) => 1,
            Some(VarKind::Chern(l)) => l as u32,
            _ => 0,
        }
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.iter().map(|(v, e)| self.weight(v) * e).sum()
    }

    /// Homogeneous cohomological degree of `p`; `None` for the zero
    /// polynomial or a mixed-degree class.
    pub fn class_degree(&self, p: &Polynomial) -> Option<u32> {
        let mut degrees = p.terms().map(|(m, _)| self.monomial_degree(m));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn render(&self, p: &Polynomial) -> String {
        p.to_text(&self.names)
    }

    pub fn parse(&self, s: &str) -> Result<Polynomial, crate::poly::ParseError> {
        Polynomial::parse(s, &self.names)
    }
}

/// `C(n, m)` with `C(n, m) = 0` for `m < 0` or `m > n`.
pub(crate) fn binomial(n: i64, m: i64) -> BigInt {
    if m < 0 || n < 0 || m > n {
        return BigInt::from(0);
    }
    let m = m.min(n - m);
    let mut acc = BigInt::from(1);
    for i in 0..m {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Lifted Chern classes `c_l^{[j]}` (levels `0..k`) and relations `q_1..q_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSet {
    rank: u32,
    u_vars: Vec<VariableId>,
    /// `lifted[j][l-1] = c_l^{[j]}`.
    lifted: Vec<Vec<Polynomial>>,
    /// `relations[j-1] = q_j`.
    relations: Vec<Polynomial>,
}

impl RelationSet {
    pub fn build(ctx: &TowerContext) -> RelationSet {
        let r = ctx.rank() as usize;
        let k = ctx.order() as usize;
        let level0: Vec<Polynomial> = (1..=r).map(|l| Polynomial::var(ctx.c(l))).collect();
        let mut lifted = vec![level0];
        for t in 1..k {
            let ut = Polynomial::var(ctx.u(t));
            let prev = &lifted[t - 1];
            let next: Vec<Polynomial> = (1..=r)
                .map(|l| {
                    let mut acc = Polynomial::zero();
                    for s in 0..=l {
                        let coeff = binomial((r - s) as i64, (l - s) as i64)
                            - binomial((r - s) as i64, (l - s) as i64 - 1);
                        if coeff == BigInt::from(0) {
                            continue;
                        }
                        let lower = if s == 0 {
                            Polynomial::one()
                        } else {
                            prev[s - 1].clone()
                        };
                        acc += &(&lower * &ut.pow((l - s) as u32)).scale(&coeff);
                    }
                    acc
                })
                .collect();
            lifted.push(next);
        }
        let relations = (1..=k)
            .map(|j| {
                let uj = Polynomial::var(ctx.u(j));
                let mut q = uj.pow(r as u32);
                for l in 1..=r {
                    q += &(&lifted[j - 1][l - 1] * &uj.pow((r - l) as u32));
                }
                q
            })
            .collect();
        RelationSet {
            rank: r as u32,
            u_vars: (1..=k).map(|j| ctx.u(j)).collect(),
            lifted,
            relations,
        }
    }

    pub fn order(&self) -> usize {
        self.relations.len()
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// `q_j`, 1-based.
    pub fn relation(&self, j: usize) -> &Polynomial {
        &self.relations[j - 1]
    }

    /// `c_l^{[j]}` for `0 <= j < k`; zero for `l > r`, one for `l = 0`.
    pub fn lifted_chern(&self, level: usize, l: usize) -> Polynomial {
        match l {
            0 => Polynomial::one(),
            l if l > self.rank as usize => Polynomial::zero(),
            l => self.lifted[level][l - 1].clone(),
        }
    }

    /// Canonical text of `q_1; …; q_k`, used in cache keys.
    pub fn canonical_text(&self, ctx: &TowerContext) -> String {
        self.relations
            .iter()
            .map(|q| ctx.render(q))
            .collect::<Vec<_>>()
            .join("; ")
    }

    /// Normal form of `p`: reduce by `q_k`, then `q_{k-1}`, …, then `q_1`.
    /// Afterwards every `u_j` has degree below `r`.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let mut acc = p.clone();
        for (j, q) in self.relations.iter().enumerate().rev() {
            acc = acc
                .reduce_monic(self.u_vars[j], q)
                .expect("tower relations are monic by construction");
        }
        acc
    }
}

pub fn reduce_tower(p: &Polynomial, rels: &RelationSet) -> Polynomial {
    rels.reduce(p)
}

/// Pushforward to the base of a reduced class: the coefficient of
/// `u_k^{r-1}`, then of `u_{k-1}^{r-1}`, …, then of `u_1^{r-1}`.
pub fn integrate_fibers(p: &Polynomial, ctx: &TowerContext) -> Result<Polynomial, TowerError> {
    let r = ctx.rank();
    for j in 1..=ctx.order() as usize {
        if let Degree::Finite(e) = p.degree_in(ctx.u(j)) {
            if e >= r {
                return Err(TowerError::Unreduced {
                    level: j,
                    degree: e,
                    rank: r,
                });
            }
        }
    }
    let mut acc = p.clone();
    for j in (1..=ctx.order() as usize).rev() {
        acc = acc.coeff_of(ctx.u(j), r - 1);
    }
    Ok(acc)
}

fn check_intersection(
    ctx: &TowerContext,
    exponents: &[u32],
    extra: &Polynomial,
) -> Result<Monomial, TowerError> {
    if exponents.len() != ctx.order() as usize {
        return Err(TowerError::WrongArity {
            expected: ctx.order() as usize,
            found: exponents.len(),
        });
    }
    let base: u32 = exponents.iter().sum();
    let extra_deg = if extra.is_zero() {
        0
    } else {
        ctx.class_degree(extra).ok_or(TowerError::NotHomogeneous)?
    };
    if base + extra_deg != ctx.total_dim() {
        return Err(TowerError::DimensionMismatch {
            expected: ctx.total_dim(),
            found: base + extra_deg,
        });
    }
    Ok(Monomial::from_pairs(
        exponents
            .iter()
            .enumerate()
            .map(|(j, &e)| (ctx.u(j + 1), e)),
    ))
}

/// `∫ u_1^{e_1} ⋯ u_k^{e_k} · extra` as a class on the base.
pub fn intersect(
    ctx: &TowerContext,
    rels: &RelationSet,
    exponents: &[u32],
    extra: &Polynomial,
) -> Result<Polynomial, TowerError> {
    let m = check_intersection(ctx, exponents, extra)?;
    let product = extra.mul_monomial(&m);
    integrate_fibers(&rels.reduce(&product), ctx)
}
