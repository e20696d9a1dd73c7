//! Commuting pairs and tangent-dimension probes of `G0`-saturations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{rank_q, Matrix};
use crate::sampling::RunConfig;
use crate::scalar::Q;
use crate::sympair::SymPair;

/// `(x, y)` in `g1 x g1` with `[x, y] = 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommutingPair {
    pub x: Matrix<Q>,
    pub y: Matrix<Q>,
}

impl CommutingPair {
    pub fn new(x: Matrix<Q>, y: Matrix<Q>, pair: &SymPair) -> Result<Self> {
        if !is_commuting_pair(&x, &y, pair)? {
            return Err(Error::Precondition("not a commuting pair in g1".into()));
        }
        Ok(CommutingPair { x, y })
    }
}

/// Whether `[x, y] = 0` and both lie in `g1`.
pub fn is_commuting_pair(x: &Matrix<Q>, y: &Matrix<Q>, pair: &SymPair) -> Result<bool> {
    let n = pair.ambient();
    for m in [x, y] {
        if m.rows() != n || m.cols() != n {
            return Err(Error::Dimension(format!("expected {n}x{n} matrices")));
        }
    }
    Ok(x.comm(y).is_zero() && pair.g1().contains(x) && pair.g1().contains(y))
}

/// Dimension of `{([z, t] + u, [z, h] + v) : z in g0, u, v in span(slice)}`,
/// the tangent space at `(t, h)` of `G0 (S x S)` for `S = span(slice)`.
pub fn saturation_tangent_dim(pair: &SymPair, slice: &[Matrix<Q>], t: &Matrix<Q>, h: &Matrix<Q>) -> usize {
    let zero = Matrix::zeros(pair.ambient(), pair.ambient());
    let concat = |a: &Matrix<Q>, b: &Matrix<Q>| {
        let mut v = a.to_vector();
        v.extend(b.to_vector());
        v
    };
    let mut columns: Vec<Vec<Q>> = pair.g0().basis().iter().map(|z| concat(&z.comm(t), &z.comm(h))).collect();
    for u in slice {
        columns.push(concat(u, &zero));
        columns.push(concat(&zero, u));
    }
    if columns.is_empty() {
        return 0;
    }
    let len = columns[0].len();
    rank_q(&Matrix::from_columns(len, &columns))
}

/// Maximum over seeded samples `(t, h)` in `c x c` of the tangent dimension
/// of `G0 (c x c)`, a lower bound for `dim C0`.
pub fn c0_tangent_dim(pair: &SymPair, cfg: &RunConfig) -> Result<usize> {
    cfg.validate()?;
    let mut rng = cfg.rng("c0-tangent");
    let mut best = 0;
    for _ in 0..cfg.samples {
        let t = pair.cartan_element(&pair.sample_generic_cartan_coords(&mut rng, cfg.coordinate_bound));
        let h = pair.cartan_element(&pair.sample_generic_cartan_coords(&mut rng, cfg.coordinate_bound));
        best = best.max(saturation_tangent_dim(pair, pair.cartan(), &t, &h));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use crate::sympair::{make_pair, PairSpec};

    #[test]
    fn commuting_pair_rejects_wrong_shapes_and_g0_elements() {
        let pair = make_pair(PairSpec::so_so(1, 1)).unwrap();
        assert!(is_commuting_pair(&Matrix::zeros(3, 3), &Matrix::zeros(3, 3), &pair).is_err());
        let x = pair.g1().basis()[0].clone();
        assert!(is_commuting_pair(&x, &x, &pair).unwrap());
        assert!(CommutingPair::new(x.clone(), x.scale(&q(2)), &pair).is_ok());
        let pair = make_pair(PairSpec::so_so(2, 1)).unwrap();
        let z = pair.g0().basis()[0].clone();
        assert!(!is_commuting_pair(&z, &z, &pair).unwrap());
    }

    #[test]
    fn tangent_dim_at_origin_is_twice_the_slice() {
        let pair = make_pair(PairSpec::so_so(2, 2)).unwrap();
        let zero = Matrix::zeros(4, 4);
        assert_eq!(saturation_tangent_dim(&pair, pair.cartan(), &zero, &zero), 2 * pair.rank());
        assert_eq!(saturation_tangent_dim(&pair, &[], &zero, &zero), 0);
    }
}
