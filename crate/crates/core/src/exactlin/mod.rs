//! Exact linear algebra over `Q` and over rational-function fields.

mod charpoly;
mod elim;
mod grassmann;
mod json;
mod matrix;
mod sparse;

pub use charpoly::{char_poly, is_nilpotent, is_semisimple, jordan_chevalley, min_poly};
pub use elim::{
    independent_subset, inverse, kernel_basis, rank_fraction_free, rank_over_field, rank_q, rref,
    solve, to_ratfunc, Echelon, Rank,
};
pub use grassmann::grassmann_limit;
pub use json::{rational, JsonEntry, RationalTree};
pub use matrix::{combine, Matrix};
pub use sparse::{SparseEchelon, SparseRow};
