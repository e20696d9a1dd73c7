//! The half-spinor obstruction for `(E6, so10 + k)`: a Clifford model of
//! `so10`, the quartic invariant `f` on `g(1) x g(1)`, and its certificate.

mod certificate;
mod clifford;
mod quartic;

pub use certificate::{
    build_c1, c1_weights, contraction_eps, e6_spadesuit_obstruction, shared_model, verify_spinor_certificate, ContractionRecord,
    InvarianceRecord, SpinorCertificate, BOUND_VANISHES, SPINOR_FAMILY,
};
pub use clifford::{
    build_clifford10, dual_index, CliffordModel, WeightVector, HALF_DIM, MODES, SO10_DIM, SPIN_DIM, VECTOR_DIM,
};
pub use quartic::{solve_equivariant_quadratic, QuarticInvariant};
