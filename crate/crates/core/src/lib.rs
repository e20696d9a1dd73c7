//! Exact computations for commuting varieties of symmetric pairs.
//!
//! Everything runs over the rationals or over rational-function fields in
//! named variables `t, t1, t2, ...`; no floating point is used anywhere.

pub mod commvar;
pub mod error;
pub mod exactlin;
pub mod liealg;
pub mod nilpotent;
pub mod poly;
pub mod sampling;
pub mod scalar;
pub mod spinor;
pub mod sympair;

pub use error::{Error, Result};
pub use exactlin::Matrix;
pub use poly::{MPoly, RatFunc, UniPoly};
pub use scalar::{ExactDiv, Field, Scalar, Q};

/// Matrix over the rationals.
pub type QMatrix = Matrix<Q>;
/// Matrix over the polynomial ring `Q[t, t1, ...]`.
pub type PolyMatrix = Matrix<MPoly>;
/// Matrix over the function field `Q(t, t1, ...)`.
pub type RatFuncMatrix = Matrix<RatFunc>;
