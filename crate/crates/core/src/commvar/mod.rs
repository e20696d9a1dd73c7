//! Commuting varieties: `C0` probes, the D1 invariant, reducibility
//! certificates, condition (♠), and membership evidence.

mod certificate;
mod d1;
mod evidence;
mod spadesuit;
mod tangent;

pub use certificate::{
    check_d1_params, content_digest, d1_witness, reducibility_certificate, verify_certificate, verify_json, Check, D1BoundProof,
    D1Certificate, EquivarianceRecord, ReducibilityCertificate, VerifyReport, FIELD_NOTE, IDENTITY_VERIFIED,
};
pub use d1::{d1, d1_equivariance_check, d1_equivariance_identity, d1_symbolic_rank, generic_cartan_d1, G0Element};
pub use evidence::{membership_evidence, verify_evidence, BaseTag, EvidenceNode, MembershipEvidence, Step};
pub use spadesuit::{c1_tangent_dim, spadesuit_check, SpadesuitReport};
pub use tangent::{c0_tangent_dim, is_commuting_pair, saturation_tangent_dim, CommutingPair};
