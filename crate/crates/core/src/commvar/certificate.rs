//! Reducibility certificates and their independent re-verification.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::d1::{d1, d1_equivariance_identity, generic_cartan_d1, G0Element};
use super::tangent::{is_commuting_pair, CommutingPair};
use crate::error::{Error, Result};
use crate::exactlin::{rank_q, Matrix, Rank};
use crate::poly::{var_name, MPoly};
use crate::sampling::RunConfig;
use crate::scalar::{q, Q};
use crate::spinor::SpinorCertificate;
use crate::sympair::{make_pair, Family, PairSpec, SymPair};

pub const FIELD_NOTE: &str = "computed over Q; claims stable under base change";
pub const IDENTITY_VERIFIED: &str = "verified";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct D1BoundProof {
    /// Rank of `D1(t, h)` over `Q(coordinates of c x c)`.
    pub symbolic_rank: usize,
    pub variables: Vec<String>,
    pub generic_d1: Matrix<MPoly>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquivarianceRecord {
    pub law: String,
    pub samples: Vec<G0Element>,
    pub identity: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct D1Certificate {
    pub family: Family,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub bound: usize,
    pub bound_proof: D1BoundProof,
    pub equivariance: EquivarianceRecord,
    pub witness: CommutingPair,
    pub witness_value: usize,
    pub claim: String,
    pub field_note: String,
    pub config: RunConfig,
    /// SHA-256 of the canonical JSON of all other fields.
    pub digest: String,
}

/// A certificate that `C(g1)` is reducible, tagged by the invariant used.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "invariant")]
pub enum ReducibilityCertificate {
    #[serde(rename = "D1")]
    D1(D1Certificate),
    #[serde(rename = "quartic_spinor")]
    QuarticSpinor(Box<SpinorCertificate>),
}

impl ReducibilityCertificate {
    pub fn to_json_string(&self, pretty: bool) -> String {
        let out = if pretty { serde_json::to_string_pretty(self) } else { serde_json::to_string(self) };
        out.expect("certificates serialize")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// SHA-256 (hex) of the canonical JSON of `value` with its `digest` field
/// removed. Object keys serialize in sorted order.
pub fn content_digest<T: Serialize>(value: &T) -> String {
    let mut tree = serde_json::to_value(value).expect("certificates serialize");
    if let Some(map) = tree.as_object_mut() {
        map.remove("digest");
    }
    format!("{:x}", Sha256::digest(tree.to_string().as_bytes()))
}

/// Outcome of one named verification obligation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn record(&mut self, name: &str, outcome: Result<bool>) {
        let (passed, detail) = match outcome {
            Ok(true) => (true, None),
            Ok(false) => (false, None),
            Err(e) => (false, Some(e.to_string())),
        };
        self.checks.push(Check { name: name.to_string(), passed, detail });
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn d1_law(family: Family) -> &'static str {
    match family {
        Family::GlGl => "D1(Ad(g)xi, Ad(g)eta) = C D1(xi, eta) diag(B^-1, B^-1) for g = diag(B, C)",
        _ => "D1(Ad(g)xi, Ad(g)eta) = B D1(xi, eta) diag(B^t, B^t) for g = diag(B, (B^t)^-1)",
    }
}

fn d1_claim(bound: usize, value: usize) -> String {
    format!(
        "rk D1 <= {bound} on the closure of G0(c x c) by G0-equivariance and semicontinuity of rank; \
         the witness in g(1) x g(1) has rk D1 = {value} > {bound}, so condition (spadesuit) fails \
         and C(g1) has at least three irreducible components"
    )
}

/// Parameters admitted for D1 certificates: `GL_GL(n, m)` with `1 <= n < m`
/// and `SO2N_GLN(n)` with odd `n >= 3`.
pub fn check_d1_params(spec: PairSpec) -> Result<()> {
    spec.validate()?;
    match (spec.family, spec.m) {
        (Family::GlGl, Some(m)) if spec.n >= 1 && spec.n < m => Ok(()),
        (Family::GlGl, _) => Err(Error::InvalidParams(
            "the GL_GL certificate needs 1 <= n < m (for n = m condition (spadesuit) is not violated by D1)".into(),
        )),
        (Family::So2nGln, None) if spec.n >= 3 && spec.n % 2 == 1 => Ok(()),
        (Family::So2nGln, _) => Err(Error::InvalidParams(
            "the SO2N_GLN certificate needs odd n = 2k + 1 >= 3".into(),
        )),
        (Family::SoSo, _) => Err(Error::InvalidParams("no D1 certificate for the SO_SO family".into())),
    }
}

/// The explicit witness pair in `g(1) x g(1)`: for `GL_GL`, `X = (δ_ij)` and
/// `Y = (δ_{i, j+m-n})` as `m x n` blocks; for `SO2N_GLN(2k+1)`, skew blocks
/// of rank `2k` with zero last (resp. first) row and column.
pub fn d1_witness(pair: &SymPair) -> Result<CommutingPair> {
    check_d1_params(pair.spec())?;
    let gr = pair.short_grading()?;
    let n = pair.spec().n;
    let (x, y) = match pair.family() {
        Family::GlGl => {
            let m = pair.spec().m.unwrap_or(0);
            let x = Matrix::from_fn(m, n, |i, j| if i == j { q(1) } else { q(0) });
            let y = Matrix::from_fn(m, n, |i, j| if i == j + m - n { q(1) } else { q(0) });
            (x, y)
        }
        _ => {
            let k = n / 2;
            let mut x = Matrix::<Q>::zeros(n, n);
            let mut z = Matrix::<Q>::zeros(n, n);
            for i in 0..k {
                x.set(2 * i, 2 * i + 1, q(1));
                x.set(2 * i + 1, 2 * i, q(-1));
                z.set(2 * i + 1, 2 * i + 2, q(1));
                z.set(2 * i + 2, 2 * i + 1, q(-1));
            }
            (x, z)
        }
    };
    CommutingPair::new(gr.embed_plus_block(&x), gr.embed_plus_block(&y), pair)
}

fn expected_witness_value(spec: PairSpec) -> usize {
    match spec.family {
        Family::GlGl => spec.m.unwrap_or(0).min(2 * spec.n),
        _ => spec.n,
    }
}

fn variables(pair: &SymPair) -> Vec<String> {
    (0..2 * pair.rank()).map(var_name).collect()
}

fn equivariance_samples(pair: &SymPair, cfg: &RunConfig) -> Result<Vec<G0Element>> {
    let mut rng = cfg.rng("d1-equivariance");
    (0..cfg.samples).map(|_| G0Element::random(pair, &mut rng, cfg.coordinate_bound)).collect()
}

/// Builds the D1 certificate for `GL_GL(n, m)` (`n < m`) or `SO2N_GLN(n)`
/// (odd `n >= 3`); every stored proof obligation is checked before returning.
pub fn reducibility_certificate(spec: PairSpec, cfg: &RunConfig) -> Result<ReducibilityCertificate> {
    check_d1_params(spec)?;
    cfg.validate()?;
    let pair = make_pair(spec)?;
    let generic = generic_cartan_d1(&pair)?;
    let symbolic_rank = generic.rank();
    let samples = equivariance_samples(&pair, cfg)?;
    for g in &samples {
        if !d1_equivariance_identity(g, &pair)? {
            return Err(Error::Internal("D1 transformation law failed".into()));
        }
    }
    let witness = d1_witness(&pair)?;
    let witness_value = rank_q(&d1(&witness.x, &witness.y, &pair)?);
    let cert = D1Certificate {
        family: spec.family,
        n: spec.n,
        m: spec.m,
        bound: symbolic_rank,
        bound_proof: D1BoundProof { symbolic_rank, variables: variables(&pair), generic_d1: generic },
        equivariance: EquivarianceRecord {
            law: d1_law(spec.family).to_string(),
            samples,
            identity: IDENTITY_VERIFIED.to_string(),
        },
        witness,
        witness_value,
        claim: d1_claim(symbolic_rank, witness_value),
        field_note: FIELD_NOTE.to_string(),
        config: cfg.clone(),
        digest: String::new(),
    };
    let cert = ReducibilityCertificate::D1(D1Certificate { digest: content_digest(&cert), ..cert });
    let report = verify_certificate(&cert);
    if !report.passed() {
        let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        return Err(Error::Internal(format!("fresh certificate fails {failed:?}")));
    }
    Ok(cert)
}

/// Re-runs every proof obligation of a certificate from its raw data.
pub fn verify_certificate(cert: &ReducibilityCertificate) -> VerifyReport {
    match cert {
        ReducibilityCertificate::D1(c) => verify_d1(c),
        ReducibilityCertificate::QuarticSpinor(c) => crate::spinor::verify_spinor_certificate(c),
    }
}

/// Parses and verifies; malformed input is an error, failed obligations are
/// reported.
pub fn verify_json(text: &str) -> Result<VerifyReport> {
    Ok(verify_certificate(&ReducibilityCertificate::from_json_str(text)?))
}

fn verify_d1(c: &D1Certificate) -> VerifyReport {
    let mut report = VerifyReport::default();
    let spec = PairSpec { family: c.family, n: c.n, m: c.m };
    report.record("parameters", check_d1_params(spec).map(|_| true));
    report.record("config", c.config.validate().map(|_| true));
    if !report.passed() {
        return report;
    }
    let pair = match make_pair(spec) {
        Ok(p) => p,
        Err(e) => {
            report.record("pair construction", Err(e));
            return report;
        }
    };
    let proof = &c.bound_proof;
    report.record("generic D1 matches c x c", generic_cartan_d1(&pair).map(|g| g == proof.generic_d1));
    report.record("variables", Ok(proof.variables == variables(&pair)));
    report.record("symbolic rank", Ok(proof.generic_d1.rank() == proof.symbolic_rank));
    report.record("bound equals symbolic rank", Ok(c.bound == proof.symbolic_rank));

    let eq = &c.equivariance;
    report.record("transformation law", Ok(eq.law == d1_law(c.family) && eq.identity == IDENTITY_VERIFIED));
    report.record(
        "equivariance samples reproduce from seed",
        equivariance_samples(&pair, &c.config).map(|s| s == eq.samples),
    );
    let identity = eq.samples.iter().try_fold(!eq.samples.is_empty(), |ok, g| {
        d1_equivariance_identity(g, &pair).map(|holds| ok && holds)
    });
    report.record("equivariance polynomial identity", identity);

    let w = &c.witness;
    report.record("witness commutes in g1", is_commuting_pair(&w.x, &w.y, &pair));
    report.record(
        "witness lies in g(1) x g(1)",
        pair.short_grading().map(|gr| gr.gp1.contains(&w.x) && gr.gp1.contains(&w.y)),
    );
    report.record("witness is the explicit construction", d1_witness(&pair).map(|e| e == *w));
    report.record("witness rank", d1(&w.x, &w.y, &pair).map(|d| rank_q(&d) == c.witness_value));
    report.record("witness value", Ok(c.witness_value == expected_witness_value(spec)));
    report.record("witness exceeds bound", Ok(c.witness_value > c.bound));
    report.record("claim", Ok(c.claim == d1_claim(c.bound, c.witness_value)));
    report.record("field note", Ok(c.field_note == FIELD_NOTE));
    report.record("content digest", Ok(content_digest(c) == c.digest));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn digest_ignores_its_own_field_and_key_order() {
        let a = json!({"bound": 2, "witness_value": 3, "digest": "old"});
        let b = json!({"witness_value": 3, "bound": 2});
        assert_eq!(content_digest(&a), content_digest(&b));
        assert_ne!(content_digest(&a), content_digest(&json!({"bound": 2, "witness_value": 4})));
        assert_eq!(content_digest(&b).len(), 64);
    }

    #[test]
    fn d1_parameter_ranges() {
        assert!(check_d1_params(PairSpec::gl_gl(1, 2)).is_ok());
        assert!(check_d1_params(PairSpec::gl_gl(2, 2)).is_err());
        assert!(check_d1_params(PairSpec::gl_gl(3, 2)).is_err());
        assert!(check_d1_params(PairSpec::so2n_gln(5)).is_ok());
        assert!(check_d1_params(PairSpec::so2n_gln(4)).is_err());
        assert!(check_d1_params(PairSpec::so2n_gln(1)).is_err());
        assert!(check_d1_params(PairSpec::so_so(2, 3)).is_err());
    }

    #[test]
    fn expected_witness_values() {
        assert_eq!(expected_witness_value(PairSpec::gl_gl(1, 2)), 2);
        assert_eq!(expected_witness_value(PairSpec::gl_gl(2, 5)), 4);
        assert_eq!(expected_witness_value(PairSpec::so2n_gln(5)), 5);
    }

    #[test]
    fn empty_report_does_not_pass() {
        let mut report = VerifyReport::default();
        assert!(!report.passed());
        report.record("ok", Ok(true));
        assert!(report.passed());
        report.record("broken", Err(Error::Internal("boom".into())));
        assert!(!report.passed());
        let failed: Vec<_> = report.failures().collect();
        assert_eq!(failed.len(), 1);
        assert_eq!(failed[0].detail.as_deref(), Some("internal consistency failure: boom"));
    }
}
