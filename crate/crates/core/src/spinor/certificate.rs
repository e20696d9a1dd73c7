//! The quartic-spinor certificate that condition (♠) fails for
//! `(E6, so10 + k)`.

use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::clifford::{build_clifford10, CliffordModel, WeightVector, HALF_DIM, MODES, SO10_DIM};
use super::quartic::{solve_equivariant_quadratic, QuarticInvariant};
use crate::commvar::{content_digest, ReducibilityCertificate, VerifyReport, FIELD_NOTE, IDENTITY_VERIFIED};
use crate::error::{Error, Result};
use crate::poly::var_name;
use crate::sampling::RunConfig;
use crate::scalar::{q, qf, Q};

pub const SPINOR_FAMILY: &str = "E6_SO10";
pub const BOUND_VANISHES: &str = "vanishes";
const BIDEGREE_MONOMIALS: usize = 9;

/// `ε`-coordinates of the two weights spanning `c(1)`: `π5` and
/// `(ε1 - ε2 - ε3 - ε4 - ε5) / 2`.
pub fn c1_weights() -> [Vec<Q>; 2] {
    [vec![qf(1, 2); MODES], std::iter::once(qf(1, 2)).chain(std::iter::repeat_n(qf(-1, 2), MODES - 1)).collect()]
}

/// `ε`-values of the contracting element `h`: `ε1(h) = -1`, the rest zero.
pub fn contraction_eps() -> Vec<Q> {
    std::iter::once(q(-1)).chain(std::iter::repeat_n(q(0), MODES - 1)).collect()
}

/// The Clifford model and the quartic invariant, built once per process.
/// The construction is deterministic and self-checking.
pub fn shared_model() -> Result<&'static (CliffordModel, QuarticInvariant)> {
    static MODEL: OnceLock<Result<(CliffordModel, QuarticInvariant)>> = OnceLock::new();
    MODEL
        .get_or_init(|| {
            let model = build_clifford10()?;
            let inv = solve_equivariant_quadratic(&model)?;
            Ok((model, inv))
        })
        .as_ref()
        .map_err(Clone::clone)
}

/// The two weight vectors spanning `c(1) ⊂ S+`.
pub fn build_c1(model: &CliffordModel) -> Result<[WeightVector; 2]> {
    let [a, b] = c1_weights();
    Ok([model.plus_weight_vector(&a)?, model.plus_weight_vector(&b)?])
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvarianceRecord {
    pub law: String,
    pub generators_checked: usize,
    pub grading_factor: String,
    pub identity: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContractionRecord {
    /// `ε`-values of `h`.
    #[serde(with = "crate::exactlin::rational")]
    pub epsilon_h: Vec<Q>,
    /// `μ(h)` for the two weights of `c(1)`.
    #[serde(with = "crate::exactlin::rational")]
    pub weight_pairings: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpinorCertificate {
    pub family: String,
    pub bound: String,
    pub quadratic_kernel_dims: Vec<usize>,
    pub c1: Vec<WeightVector>,
    pub identity_variables: Vec<String>,
    pub identity_monomials_checked: usize,
    pub identity: String,
    pub invariance: InvarianceRecord,
    /// First component of the witness pair in `g(1) x g(1) = S+ x S+`.
    #[serde(with = "crate::exactlin::rational")]
    pub witness_vector_plus: Vec<Q>,
    /// Second component of the witness pair.
    #[serde(with = "crate::exactlin::rational")]
    pub witness_vector_minus: Vec<Q>,
    #[serde(with = "crate::exactlin::rational")]
    pub witness_value: Q,
    pub witness_search: String,
    pub contraction: ContractionRecord,
    pub claim: String,
    pub field_note: String,
    pub config: RunConfig,
    /// SHA-256 of the canonical JSON of all other fields.
    pub digest: String,
}

const INVARIANCE_LAW: &str = "Df(s, u)(rho(z) s, rho(z) u) = 0 for every so10 generator z";
const GRADING_FACTOR: &str = "the k-factor acts on g(1) by scalars and f is bihomogeneous of bidegree (2, 2)";

fn claim() -> String {
    "f vanishes identically on c(1) x c(1) and is invariant under so10 + k, so it vanishes on the closure \
     of G0(c(1) x c(1)); f is nonzero at the witness, so condition (spadesuit) fails"
        .to_string()
}

fn unit(i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); HALF_DIM];
    v[i] = q(1);
    v
}

/// Searches weight-basis pairs, then pairs of two-term sums of weight
/// vectors, then seeded random integer vectors.
fn find_witness(inv: &QuarticInvariant, cfg: &RunConfig) -> Result<(Vec<Q>, Vec<Q>, &'static str)> {
    let basis: Vec<Vec<Q>> = (0..HALF_DIM).map(unit).collect();
    for s in &basis {
        for u in &basis {
            if !inv.f(s, u).is_zero() {
                return Ok((s.clone(), u.clone(), "basis_pairs"));
            }
        }
    }
    let sums: Vec<Vec<Q>> = (0..HALF_DIM)
        .flat_map(|i| (i + 1..HALF_DIM).map(move |j| (i, j)))
        .map(|(i, j)| basis[i].iter().zip(&basis[j]).map(|(a, b)| a + b).collect())
        .collect();
    let images: Vec<Vec<Q>> = sums.iter().map(|s| inv.quadratic(s, true)).collect();
    for (s, qs) in sums.iter().zip(&images) {
        for (u, qu) in sums.iter().zip(&images) {
            if !inv.pair_vectors(qs, qu, |c, x, y| c * x * y).is_zero() {
                return Ok((s.clone(), u.clone(), "two_term_sums"));
            }
        }
    }
    let mut rng = cfg.rng("spinor-witness");
    for _ in 0..cfg.samples {
        let s = rng.rationals(HALF_DIM, cfg.coordinate_bound);
        let u = rng.rationals(HALF_DIM, cfg.coordinate_bound);
        if !inv.f(&s, &u).is_zero() {
            return Ok((s, u, "random"));
        }
    }
    Err(Error::Internal("no witness with f != 0 within the search budget".into()))
}

fn weight_pairings(model: &CliffordModel, c1: &[WeightVector]) -> Result<Vec<Q>> {
    let h = model.restrict(&model.cartan_element(&contraction_eps()), true);
    c1.iter()
        .map(|w| {
            let image = h.mul_vec(&w.vector);
            let pivot = w.vector.iter().position(|c| !c.is_zero()).ok_or_else(|| Error::Internal("zero".into()))?;
            let mu = &image[pivot] / &w.vector[pivot];
            if image.iter().zip(&w.vector).any(|(a, b)| *a != &mu * b) {
                return Err(Error::Internal("c(1) vector is not an eigenvector of h".into()));
            }
            Ok(mu)
        })
        .collect()
}

/// Builds the quartic-spinor certificate, re-verifying it before returning.
pub fn e6_spadesuit_obstruction(cfg: &RunConfig) -> Result<ReducibilityCertificate> {
    cfg.validate()?;
    let (model, inv) = shared_model()?;
    let c1 = build_c1(model)?;
    let (restricted, monomials) = inv.restricted_to_span(&c1[0].vector, &c1[1].vector);
    if !restricted.is_zero() || monomials != BIDEGREE_MONOMIALS {
        return Err(Error::Internal("f does not vanish on c(1) x c(1)".into()));
    }
    if !model.so10_plus().iter().all(|rho| inv.infinitesimal_invariance(rho)) || !inv.is_bihomogeneous() {
        return Err(Error::Internal("f is not invariant".into()));
    }
    let (s, u, search) = find_witness(inv, cfg)?;
    let witness_value = inv.f(&s, &u);
    let cert = SpinorCertificate {
        family: SPINOR_FAMILY.to_string(),
        bound: BOUND_VANISHES.to_string(),
        quadratic_kernel_dims: inv.kernel_dims.to_vec(),
        contraction: ContractionRecord { epsilon_h: contraction_eps(), weight_pairings: weight_pairings(model, &c1)? },
        c1: c1.to_vec(),
        identity_variables: (0..4).map(var_name).collect(),
        identity_monomials_checked: monomials,
        identity: IDENTITY_VERIFIED.to_string(),
        invariance: InvarianceRecord {
            law: INVARIANCE_LAW.to_string(),
            generators_checked: SO10_DIM,
            grading_factor: GRADING_FACTOR.to_string(),
            identity: IDENTITY_VERIFIED.to_string(),
        },
        witness_vector_plus: s,
        witness_vector_minus: u,
        witness_value,
        witness_search: search.to_string(),
        claim: claim(),
        field_note: FIELD_NOTE.to_string(),
        config: cfg.clone(),
        digest: String::new(),
    };
    let cert = SpinorCertificate { digest: content_digest(&cert), ..cert };
    let report = verify_spinor_certificate(&cert);
    if !report.passed() {
        let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        return Err(Error::Internal(format!("fresh certificate fails {failed:?}")));
    }
    Ok(ReducibilityCertificate::QuarticSpinor(Box::new(cert)))
}

/// Re-derives the model and the invariant and replays every obligation.
pub fn verify_spinor_certificate(c: &SpinorCertificate) -> VerifyReport {
    let mut report = VerifyReport::default();
    report.record("family", Ok(c.family == SPINOR_FAMILY && c.bound == BOUND_VANISHES));
    report.record("config", c.config.validate().map(|_| true));
    let (model, inv) = match shared_model() {
        Ok(x) => x,
        Err(e) => {
            report.record("Clifford model and quadratic maps", Err(e));
            return report;
        }
    };
    report.record("quadratic map kernels are one-dimensional", Ok(c.quadratic_kernel_dims == [1, 1]));
    let c1 = build_c1(model);
    report.record("c(1) weight vectors", c1.as_ref().map(|w| c.c1 == w.to_vec()).map_err(Clone::clone));
    let vectors_ok = c.c1.len() == 2 && c.c1.iter().all(|w| w.vector.len() == HALF_DIM);
    if vectors_ok {
        let (restricted, monomials) = inv.restricted_to_span(&c.c1[0].vector, &c.c1[1].vector);
        report.record("f vanishes on c(1) x c(1)", Ok(restricted.is_zero() && c.identity == IDENTITY_VERIFIED));
        report.record("identity monomial count", Ok(monomials == c.identity_monomials_checked && monomials == BIDEGREE_MONOMIALS));
        report.record(
            "identity variables",
            Ok(c.identity_variables == (0..4).map(var_name).collect::<Vec<_>>()),
        );
        report.record("contraction pairings", weight_pairings(model, &c.c1).map(|p| p == c.contraction.weight_pairings));
    } else {
        report.record("c(1) vector shape", Ok(false));
    }
    report.record("contraction element", Ok(c.contraction.epsilon_h == contraction_eps()));
    report.record(
        "contraction sends c(1) x c(1) to zero",
        Ok(!c.contraction.weight_pairings.is_empty() && c.contraction.weight_pairings.iter().all(|m| *m < Q::zero())),
    );
    let inv_rec = &c.invariance;
    report.record(
        "invariance record",
        Ok(inv_rec.law == INVARIANCE_LAW
            && inv_rec.generators_checked == SO10_DIM
            && inv_rec.grading_factor == GRADING_FACTOR
            && inv_rec.identity == IDENTITY_VERIFIED),
    );
    report.record(
        "f is so10-invariant",
        Ok(model.so10_plus().len() == SO10_DIM && model.so10_plus().iter().all(|rho| inv.infinitesimal_invariance(rho))),
    );
    report.record("f is bihomogeneous", Ok(inv.is_bihomogeneous()));
    let shapes = c.witness_vector_plus.len() == HALF_DIM && c.witness_vector_minus.len() == HALF_DIM;
    report.record("witness shape", Ok(shapes));
    if shapes {
        let value = inv.f(&c.witness_vector_plus, &c.witness_vector_minus);
        report.record("witness value", Ok(value == c.witness_value));
        report.record("f is nonzero at the witness", Ok(!value.is_zero()));
    }
    report.record(
        "witness search stage",
        Ok(["basis_pairs", "two_term_sums", "random"].contains(&c.witness_search.as_str())),
    );
    report.record("claim", Ok(c.claim == claim()));
    report.record("field note", Ok(c.field_note == FIELD_NOTE));
    report.record("content digest", Ok(content_digest(c) == c.digest));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c1_weights_are_half_spinor_plus_weights() {
        for w in c1_weights() {
            assert_eq!(w.len(), 5);
            let minus = w.iter().filter(|c| **c < Q::zero()).count();
            assert_eq!(minus % 2, 0);
        }
    }

    #[test]
    fn contraction_separates_c1_weights() {
        let eps = contraction_eps();
        let pair = |w: &[Q]| w.iter().zip(&eps).map(|(a, b)| a * b).sum::<Q>();
        let [w1, w2] = c1_weights();
        assert_eq!(pair(&w1), pair(&w2));
        assert!(!pair(&w1).is_zero());
    }

    #[test]
    fn unit_vectors() {
        let u = unit(3);
        assert_eq!(u.len(), HALF_DIM);
        assert_eq!(u.iter().filter(|x| !x.is_zero()).count(), 1);
        assert_eq!(u[3], q(1));
    }
}
