//! Polynomials and rational functions over `Q`.

mod mpoly;
mod ratfunc;
mod unipoly;

pub use mpoly::{parse_var_name, var_name, MPoly, Monomial};
pub use ratfunc::RatFunc;
pub use unipoly::UniPoly;
