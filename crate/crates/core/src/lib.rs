//! Exact intersection numbers on Demailly–Semple jet towers.
//!
//! The crate is `no_std` (it only needs `alloc`). Everything is exact integer
//! arithmetic on sparse multivariate polynomials:
//!
//! - [`poly`]: the polynomial ring, substitution, monic reduction, text format.
//! - [`tower`]: Chern relations of the tower `X_k`, reduction to normal form,
//!   integration along the fibers, and a truncated quotient-ring engine
//!   ([`tower::TowerRing`]) for the large products.
//! - [`geometry`]: Chern classes of the base (hypersurface or logarithmic
//!   pair) and evaluation of a top class into a polynomial in the degree `d`.
//! - [`morse`]: weight vectors, the Morse-inequality class and its pipeline.
//! - [`threshold`]: effective degree thresholds via Sturm sequences.
//! - [`checks`]: the vanishing / normalization identities used by `verify`.
#![no_std]

extern crate alloc;

pub mod checks;
pub mod geometry;
pub mod morse;
pub mod poly;
pub mod threshold;
pub mod tower;

pub use geometry::{base_chern, evaluate_in_degree, EvaluatedClass, GeometryKind, GeometrySpec};
pub use morse::{default_weights, is_admissible, MorseReport, WeightVector};
pub use poly::{Degree, Monomial, Polynomial, VarTable, VariableId};
pub use threshold::degree_threshold;
pub use tower::{RelationSet, TowerContext, TowerRing};

/// Version tag folded into cache keys; bump whenever outputs can change.
pub const ENGINE_VERSION: &str = concat!("jetbound-core/", env!("CARGO_PKG_VERSION"), "+r1");
