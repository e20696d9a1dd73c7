//! Limits of kernels of one-parameter families in the Grassmannian.

use num_traits::{One, Zero};

use super::elim::{kernel_basis, rank_q, to_ratfunc, Echelon};
use super::Matrix;
use crate::error::{Error, Result};
use crate::poly::MPoly;
use crate::scalar::Q;

const T: usize = 0;

/// Limit at `t = point` of the kernel of `family(t)`, returned as a basis of
/// vectors over `Q` whose span has the generic kernel dimension.
///
/// The kernel is computed over `Q(t)`, each vector is cleared of
/// denominators, re-expanded around `point` and divided by the largest power
/// of `t - point` that divides it. If the resulting values at `point` are
/// dependent, a vanishing combination is divided by its order of vanishing
/// and substituted for one of its members; this preserves the span over
/// `Q(t)` and strictly lowers the order of vanishing of the Plücker
/// coordinates, so it terminates.
pub fn grassmann_limit(family: &Matrix<MPoly>, point: &Q) -> Result<Vec<Vec<Q>>> {
    if family.entries().iter().any(|p| p.num_vars() > T + 1) {
        return Err(Error::InvalidParams(
            "grassmann_limit expects a family in the single variable t".into(),
        ));
    }
    let generic = kernel_basis(&to_ratfunc(family));
    let d = generic.len();
    let shift = &MPoly::var(T) + &MPoly::constant(point.clone());
    let mut vecs: Vec<Vec<MPoly>> = generic
        .iter()
        .map(|v| {
            let mut den = MPoly::one();
            for x in v {
                let g = den.gcd(x.denom());
                den = &den * &x.denom().div_exact(&g).expect("gcd divides");
            }
            let cleared: Vec<MPoly> = v
                .iter()
                .map(|x| {
                    let factor = den.div_exact(x.denom()).expect("lcm is a multiple");
                    (x.numer() * &factor).substitute(T, &shift)
                })
                .collect();
            strip_vanishing(cleared)
        })
        .collect();

    let cols = family.cols();
    let budget = 64 + 4 * cols * cols;
    for _ in 0..budget {
        let values: Vec<Vec<Q>> = vecs.iter().map(|v| eval_at_zero(v)).collect();
        let mut ech = Echelon::<Q>::new(cols);
        let mut dependency = None;
        for (k, v) in values.iter().enumerate() {
            if let Some(c) = ech.coordinates(v) {
                dependency = Some((k, c));
                break;
            }
            ech.insert(v);
        }
        let Some((k, coeffs)) = dependency else {
            let m = Matrix::from_columns(cols, &values);
            debug_assert_eq!(rank_q(&m), d);
            return Ok(values);
        };
        // values[k] = sum_j coeffs[j] values[j] over the first k vectors
        let mut combo = vecs[k].clone();
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cj = MPoly::constant(c.clone());
            for (x, y) in combo.iter_mut().zip(&vecs[j]) {
                *x = &*x - &(&cj * y);
            }
        }
        if combo.iter().all(Zero::is_zero) {
            return Err(Error::Internal(
                "generic kernel vectors became dependent over Q(t)".into(),
            ));
        }
        vecs[k] = strip_vanishing(combo);
    }
    Err(Error::Internal(format!(
        "normalization did not restore dimension {d} after re-echelonization"
    )))
}

fn strip_vanishing(v: Vec<MPoly>) -> Vec<MPoly> {
    let val = v
        .iter()
        .filter(|x| !x.is_zero())
        .map(|x| x.valuation_in(T))
        .min()
        .unwrap_or(0);
    v.into_iter().map(|x| x.div_var_pow(T, val)).collect()
}

fn eval_at_zero(v: &[MPoly]) -> Vec<Q> {
    let zero = [Q::zero()];
    v.iter().map(|x| x.eval(&zero)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn t() -> MPoly {
        MPoly::var(0)
    }

    fn c(v: i64) -> MPoly {
        MPoly::constant(q(v))
    }

    #[test]
    fn constant_family_matches_kernel() {
        let m0 = Matrix::from_rows(vec![vec![q(1), q(1)], vec![q(1), q(1)]]).unwrap();
        let lim = grassmann_limit(&m0.lift(), &q(0)).unwrap();
        assert_eq!(lim, kernel_basis(&m0));
    }

    #[test]
    fn diagonal_family() {
        let fam = Matrix::from_rows(vec![vec![t(), c(0)], vec![c(0), c(0)]]).unwrap();
        let lim = grassmann_limit(&fam, &q(0)).unwrap();
        assert_eq!(lim, vec![vec![q(0), q(1)]]);
    }

    #[test]
    fn limit_differs_from_special_kernel() {
        // the kernel of [[t, t^2]] is spanned by (t, -1), which tends to (0, -1)
        let fam = Matrix::from_rows(vec![vec![t(), &t() * &t()]]).unwrap();
        let lim = grassmann_limit(&fam, &q(0)).unwrap();
        assert_eq!(lim.len(), 1);
        assert!(lim[0][0].is_zero() && !lim[0][1].is_zero());
    }

    #[test]
    fn re_echelonization() {
        // cleared kernel vectors (1, t, 0) and (1, 0, t) collide at t = 0
        let fam = Matrix::from_rows(vec![vec![&t() * &t(), -t(), -t()]]).unwrap();
        let lim = grassmann_limit(&fam, &q(0)).unwrap();
        assert_eq!(lim.len(), 2);
        let m = Matrix::from_columns(3, &lim);
        assert_eq!(rank_q(&m), 2);
        // the limit plane must be annihilated by the limit of the row
        // direction (0, -1, -1)
        for v in &lim {
            assert!((v[1].clone() + v[2].clone()).is_zero());
        }
    }
}
