//! Condition (♠): whether `G0 (c(1) x c(1))` is dense in `g(1) x g(1)`.

use serde::{Deserialize, Serialize};

use super::certificate::{check_d1_params, reducibility_certificate, ReducibilityCertificate};
use super::tangent::saturation_tangent_dim;
use crate::error::Result;
use crate::exactlin::combine;
use crate::sampling::RunConfig;
use crate::sympair::SymPair;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SpadesuitReport {
    /// The sampled tangent dimension reaches `2 dim g(1)`; a lower bound
    /// only, never a proof that (♠) holds.
    HoldsEvidence { tangent_dim: usize, target: usize },
    /// (♠) fails, with a certificate.
    FailsCertificate {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tangent_dim: Option<usize>,
        target: usize,
        certificate: Box<ReducibilityCertificate>,
    },
    Inconclusive { tangent_dim: usize, target: usize },
}

impl SpadesuitReport {
    pub fn status(&self) -> &'static str {
        match self {
            SpadesuitReport::HoldsEvidence { .. } => "holds_evidence",
            SpadesuitReport::FailsCertificate { .. } => "fails_certificate",
            SpadesuitReport::Inconclusive { .. } => "inconclusive",
        }
    }
}

/// Maximum over seeded samples of the tangent dimension of
/// `G0 (c(1) x c(1))` at `(t1, h1)`.
pub fn c1_tangent_dim(pair: &SymPair, cfg: &RunConfig) -> Result<usize> {
    cfg.validate()?;
    let gr = pair.short_grading()?;
    let mut rng = cfg.rng("spadesuit-tangent");
    let mut best = 0;
    for _ in 0..cfg.samples {
        let t = combine(&pair.sample_generic_cartan_coords(&mut rng, cfg.coordinate_bound), &gr.c1);
        let h = combine(&pair.sample_generic_cartan_coords(&mut rng, cfg.coordinate_bound), &gr.c1);
        if gr.c1.is_empty() {
            continue;
        }
        best = best.max(saturation_tangent_dim(pair, &gr.c1, &t, &h));
    }
    Ok(best)
}

/// Samples the tangent dimension and, if it falls short of `2 dim g(1)`,
/// attaches a D1 certificate when the pair admits one.
pub fn spadesuit_check(pair: &SymPair, cfg: &RunConfig) -> Result<SpadesuitReport> {
    let gr = pair.short_grading()?;
    let target = 2 * gr.gp1.dim();
    let tangent_dim = c1_tangent_dim(pair, cfg)?;
    if tangent_dim >= target {
        return Ok(SpadesuitReport::HoldsEvidence { tangent_dim, target });
    }
    if check_d1_params(pair.spec()).is_ok() {
        let certificate = Box::new(reducibility_certificate(pair.spec(), cfg)?);
        return Ok(SpadesuitReport::FailsCertificate { tangent_dim: Some(tangent_dim), target, certificate });
    }
    Ok(SpadesuitReport::Inconclusive { tangent_dim, target })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_are_tagged_by_status() {
        let r = SpadesuitReport::Inconclusive { tangent_dim: 3, target: 4 };
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["status"], r.status());
        assert_eq!(serde_json::from_value::<SpadesuitReport>(v).unwrap(), r);
        assert_eq!(SpadesuitReport::HoldsEvidence { tangent_dim: 4, target: 4 }.status(), "holds_evidence");
    }
}
