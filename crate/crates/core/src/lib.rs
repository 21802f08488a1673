//! Decision procedure for promise constraint satisfaction problems that
//! combines the canonical LP relaxation over exact rationals with an integer
//! affine relaxation refined by the LP's support, plus the polymorphism and
//! minion machinery needed to audit when that procedure is correct.
//!
//! All arithmetic is exact. The solver kernels are generic over a scalar
//! type (see [`scalar`]); concrete computations run on machine-word
//! rationals/integers where they fit and fall back to arbitrary precision
//! when they do not. Floating point is never used.

pub mod affine;
pub mod blp;
pub mod corpus;
pub mod decision;
pub mod hnf;
pub mod minions;
pub mod oracle;
pub mod poly;
pub mod rounding;
pub mod scalar;
pub mod simplex;
pub mod structure;

mod error;

pub use error::Error;

/// Exact rational scalar used in all public interfaces.
pub type Rat = num_rational::BigRational;
/// Exact integer scalar used in all public interfaces.
pub type Int = num_bigint::BigInt;

/// Convenience result alias.
pub type Result<T> = std::result::Result<T, Error>;
