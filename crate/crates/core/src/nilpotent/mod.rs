//! Nilpotent elements of `g1` for the `SO_SO` family.

mod deform;
mod diagram;
mod jordan;
mod triple;

pub use deform::{centralizer_limit, semisimple_deformation, DeformationReport, LimitReport};
pub use diagram::{alternating_row, enumerate_ab_diagrams, swap_row, AbDiagram};
pub use jordan::{diagram_from_ranks, representative, sigma_adapted_jordan, JordanData};
pub use triple::{
    ad_eigenvalues, is_even, is_sigma_distinguished, kr_triple, DecisionMode, DistinguishedReport, Sl2Triple,
    SYMBOLIC_AMBIENT_LIMIT,
};
