//! Chern classes of the base and evaluation of top classes in the degree `d`.
//!
//! Two bases are supported, both with `V` of rank `n`:
//!
//! - a smooth hypersurface `X ⊂ P^{n+1}` of degree `d`, where
//!   `c(T_X)·(1 + d h) = (1 + h)^{n+2}`;
//! - the logarithmic pair `(P^n, D)` with `D` smooth of degree `d`, where
//!   `c_j(T⟨D⟩) = (-1)^j h^j Σ_{i<=j} (-1)^i C(n+1, i) d^{j-i}`.
//!
//! [`evaluate_in_degree`] substitutes these into a degree-`n` class, sets
//! `h = 1` and multiplies by `d`. For the hypersurface the factor `d` is
//! `∫_X h^n`; for the pair it is kept as well so both geometries follow one
//! convention. It is a positive factor and does not move any threshold.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::{Degree, Monomial, Polynomial, VariableId};
use crate::tower::{binomial, TowerContext, VarKind};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeometryKind {
    CompactHypersurface,
    LogarithmicPair,
}

impl GeometryKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GeometryKind::CompactHypersurface => "compact",
            GeometryKind::LogarithmicPair => "log",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "compact" | "compact_hypersurface" => Some(GeometryKind::CompactHypersurface),
            "log" | "logarithmic" | "logarithmic_pair" => Some(GeometryKind::LogarithmicPair),
            _ => None,
        }
    }
}

impl fmt::Display for GeometryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeometrySpec {
    pub kind: GeometryKind,
    pub n: u32,
}

impl GeometrySpec {
    pub fn new(kind: GeometryKind, n: u32) -> Self {
        GeometrySpec { kind, n }
    }

    pub fn compact(n: u32) -> Self {
        Self::new(GeometryKind::CompactHypersurface, n)
    }

    pub fn logarithmic(n: u32) -> Self {
        Self::new(GeometryKind::LogarithmicPair, n)
    }

    /// Coefficients (ascending in `d`) of `c_j / h^j`.
    pub fn chern_in_degree(&self, j: u32) -> Result<Vec<BigInt>, GeometryError> {
        if j == 0 || j > self.n {
            return Err(GeometryError::ChernIndexOutOfRange { j, n: self.n });
        }
        let n = self.n as i64;
        let j = j as i64;
        let mut coeffs = alloc::vec![BigInt::zero(); j as usize + 1];
        match self.kind {
            // Σ_i C(n+2, j-i) (-d)^i
            GeometryKind::CompactHypersurface => {
                for i in 0..=j {
                    let sign = if i % 2 == 0 {
                        BigInt::one()
                    } else {
                        -BigInt::one()
                    };
                    coeffs[i as usize] = sign * binomial(n + 2, j - i);
                }
            }
            // (-1)^j Σ_i (-1)^i C(n+1, i) d^{j-i}
            GeometryKind::LogarithmicPair => {
                for i in 0..=j {
                    let sign = if (i + j) % 2 == 0 {
                        BigInt::one()
                    } else {
                        -BigInt::one()
                    };
                    coeffs[(j - i) as usize] = sign * binomial(n + 1, i);
                }
            }
        }
        Ok(coeffs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("Chern class c_{j} out of range for a base of dimension {n}")]
    ChernIndexOutOfRange { j: u32, n: u32 },
    #[error("context dimension {ctx} does not match geometry dimension {spec}")]
    DimensionMismatch { ctx: u32, spec: u32 },
    #[error("class still contains variable {0:?}")]
    ResidualVariable(VariableId),
    #[error("class is not homogeneous of degree {expected}")]
    WrongDegree { expected: u32 },
}

/// `c_j` of the base as `h^j · p(d)`.
pub fn base_chern(
    spec: &GeometrySpec,
    ctx: &TowerContext,
    j: u32,
) -> Result<Polynomial, GeometryError> {
    let coeffs = spec.chern_in_degree(j)?;
    Ok(univariate(ctx.d(), &coeffs).mul_monomial(&Monomial::var_pow(ctx.h(), j)))
}

fn univariate(v: VariableId, coeffs: &[BigInt]) -> Polynomial {
    Polynomial::from_terms(
        coeffs
            .iter()
            .enumerate()
            .map(|(e, c)| (Monomial::var_pow(v, e as u32), c.clone())),
    )
}

/// A class on the base written as a polynomial in the degree `d` alone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvaluatedClass {
    d: VariableId,
    poly: Polynomial,
}

impl EvaluatedClass {
    pub fn from_coefficients(d: VariableId, coeffs: &[BigInt]) -> Self {
        EvaluatedClass {
            d,
            poly: univariate(d, coeffs),
        }
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn variable(&self) -> VariableId {
        self.d
    }

    /// Coefficients ascending in `d`, trimmed (empty for zero).
    pub fn coefficients(&self) -> Vec<BigInt> {
        let mut out = Vec::new();
        if let Degree::Finite(deg) = self.poly.degree_in(self.d) {
            out.resize(deg as usize + 1, BigInt::zero());
            for (m, c) in self.poly.terms() {
                out[m.exponent(self.d) as usize] = c.clone();
            }
        }
        out
    }

    pub fn coefficient(&self, e: u32) -> BigInt {
        self.poly.coefficient(&Monomial::var_pow(self.d, e))
    }

    pub fn degree(&self) -> Degree {
        self.poly.degree_in(self.d)
    }

    /// Coefficient of the highest power of `d` (zero for the zero class).
    pub fn leading_coefficient(&self) -> BigInt {
        match self.degree() {
            Degree::Finite(e) => self.coefficient(e),
            Degree::NegInfinity => BigInt::zero(),
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.poly
            .eval_at_integer(self.d, x)
            .as_constant()
            .expect("univariate in d")
    }

    pub fn is_positive_at(&self, x: &BigInt) -> bool {
        self.eval(x).is_positive()
    }
}

/// Substitutes the base Chern classes into a degree-`n` class in `c_l, h`,
/// sets `h = 1` and multiplies by `d`.
pub fn evaluate_in_degree(
    cls: &Polynomial,
    spec: &GeometrySpec,
    ctx: &TowerContext,
) -> Result<EvaluatedClass, GeometryError> {
    for v in cls.variables() {
        if !matches!(
            ctx.kind(v),
            Some(VarKind::Chern(_)) | Some(VarKind::Hyperplane)
        ) {
            return Err(GeometryError::ResidualVariable(v));
        }
    }
    let poly = substitute_base(cls, spec, ctx)?;
    Ok(EvaluatedClass { d: ctx.d(), poly })
}

/// Like [`evaluate_in_degree`] but lets symbolic weights `a_j` through; the
/// result is a polynomial in `d` and the weights.
pub fn evaluate_symbolic(
    cls: &Polynomial,
    spec: &GeometrySpec,
    ctx: &TowerContext,
) -> Result<Polynomial, GeometryError> {
    for v in cls.variables() {
        if !matches!(
            ctx.kind(v),
            Some(VarKind::Chern(_)) | Some(VarKind::Hyperplane) | Some(VarKind::Weight(_))
        ) {
            return Err(GeometryError::ResidualVariable(v));
        }
    }
    substitute_base(cls, spec, ctx)
}

fn substitute_base(
    cls: &Polynomial,
    spec: &GeometrySpec,
    ctx: &TowerContext,
) -> Result<Polynomial, GeometryError> {
    if ctx.dim() != spec.n {
        return Err(GeometryError::DimensionMismatch {
            ctx: ctx.dim(),
            spec: spec.n,
        });
    }
    if !cls.is_zero() && ctx.class_degree(cls) != Some(spec.n) {
        return Err(GeometryError::WrongDegree { expected: spec.n });
    }
    let mut acc = cls.substitute(ctx.h(), &Polynomial::one());
    for l in 1..=spec.n {
        let cl = univariate(ctx.d(), &spec.chern_in_degree(l)?);
        acc = acc.substitute(ctx.c(l as usize), &cl);
    }
    Ok(acc.mul_monomial(&Monomial::var(ctx.d())))
}
