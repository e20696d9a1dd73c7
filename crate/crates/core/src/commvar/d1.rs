//! The rank invariant `D1(ξ, η) = (X | Z)` for the short gradings of
//! `GL_GL` and `SO2N_GLN`, and its transformation law under `G0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{inverse, Matrix, Rank};
use crate::poly::MPoly;
use crate::sampling::Sampler;
use crate::scalar::{Scalar, Q};
use crate::sympair::{generic_element, Family, ShortGrading, SymPair};

/// An element of `G0` in block form: `diag(B, C)` for `GL_GL`, and
/// `diag(B, (B^t)^{-1})` for `SO2N_GLN`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum G0Element {
    Gl { b: Matrix<Q>, c: Matrix<Q> },
    So2n { b: Matrix<Q> },
}

fn checked_inverse(m: &Matrix<Q>, name: &str) -> Result<Matrix<Q>> {
    if !m.is_square() {
        return Err(Error::Dimension(format!("{name} is not square")));
    }
    inverse(m).ok_or_else(|| Error::InvalidParams(format!("{name} is singular")))
}

impl G0Element {
    fn check_shape(&self, pair: &SymPair) -> Result<()> {
        let spec = pair.spec();
        let ok = match (self, pair.family()) {
            (G0Element::Gl { b, c }, Family::GlGl) => b.rows() == spec.n && c.rows() == spec.m.unwrap_or(0),
            (G0Element::So2n { b }, Family::So2nGln) => b.rows() == spec.n,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!("group element does not match {spec}")))
        }
    }

    /// The ambient matrix `g` and its inverse.
    pub fn ambient(&self, pair: &SymPair) -> Result<(Matrix<Q>, Matrix<Q>)> {
        self.check_shape(pair)?;
        Ok(match self {
            G0Element::Gl { b, c } => {
                let (bi, ci) = (checked_inverse(b, "B")?, checked_inverse(c, "C")?);
                (Matrix::block_diag(b, c), Matrix::block_diag(&bi, &ci))
            }
            G0Element::So2n { b } => {
                let bi = checked_inverse(b, "B")?;
                (Matrix::block_diag(b, &bi.transpose()), Matrix::block_diag(&bi, &b.transpose()))
            }
        })
    }

    /// `(L, B̂)` with `D1(Ad(g) ξ, Ad(g) η) = L D1(ξ, η) B̂`.
    pub fn transformation_factors(&self, pair: &SymPair) -> Result<(Matrix<Q>, Matrix<Q>)> {
        self.check_shape(pair)?;
        Ok(match self {
            G0Element::Gl { b, c } => {
                let bi = checked_inverse(b, "B")?;
                checked_inverse(c, "C")?;
                (c.clone(), Matrix::block_diag(&bi, &bi))
            }
            G0Element::So2n { b } => {
                checked_inverse(b, "B")?;
                let bt = b.transpose();
                (b.clone(), Matrix::block_diag(&bt, &bt))
            }
        })
    }

    /// A seeded random element with integer blocks, resampled until invertible.
    pub fn random(pair: &SymPair, rng: &mut Sampler, bound: i64) -> Result<Self> {
        let spec = pair.spec();
        let mut block = |k: usize| loop {
            let m = Matrix::from_vec(k, k, rng.rationals(k * k, bound)).expect("shape");
            if inverse(&m).is_some() {
                return m;
            }
        };
        match pair.family() {
            Family::GlGl => Ok(G0Element::Gl { b: block(spec.n), c: block(spec.m.unwrap_or(0)) }),
            Family::So2nGln => Ok(G0Element::So2n { b: block(spec.n) }),
            Family::SoSo => Err(Error::InvalidParams("D1 is defined for GL_GL and SO2N_GLN".into())),
        }
    }
}

fn grading(pair: &SymPair) -> Result<&ShortGrading> {
    match pair.family() {
        Family::GlGl | Family::So2nGln => pair.short_grading(),
        Family::SoSo => Err(Error::InvalidParams("D1 is defined for GL_GL and SO2N_GLN".into())),
    }
}

/// `(X | Z)` where `X` and `Z` are the `g(1)` blocks of `ξ` and `η`.
pub fn d1<T: Scalar>(xi: &Matrix<T>, eta: &Matrix<T>, pair: &SymPair) -> Result<Matrix<T>> {
    let gr = grading(pair)?;
    let n = pair.ambient();
    for m in [xi, eta] {
        if m.rows() != n || m.cols() != n {
            return Err(Error::Dimension(format!("expected {n}x{n} matrices")));
        }
    }
    Ok(Matrix::hcat(&gr.plus_block(xi), &gr.plus_block(eta)))
}

/// `D1(t, h)` for the generic pair of Cartan elements, in the variables
/// `t, t1, ...` (`t` first, then `h`).
pub fn generic_cartan_d1(pair: &SymPair) -> Result<Matrix<MPoly>> {
    let r = pair.rank();
    d1(&pair.generic_cartan(0), &pair.generic_cartan(r), pair)
}

/// Rank of `D1` on generic `c x c`, over the function field of its coordinates.
pub fn d1_symbolic_rank(pair: &SymPair) -> Result<usize> {
    Ok(generic_cartan_d1(pair)?.rank())
}

/// Checks `D1(Ad(g) ξ, Ad(g) η) = L D1(ξ, η) B̂` exactly for the given
/// arguments, which may be symbolic.
pub fn d1_equivariance_check<T: Scalar>(g: &G0Element, xi: &Matrix<T>, eta: &Matrix<T>, pair: &SymPair) -> Result<bool> {
    let (gm, gi) = g.ambient(pair)?;
    let (left, b_hat) = g.transformation_factors(pair)?;
    let (gm, gi, left, b_hat) = (gm.lift::<T>(), gi.lift::<T>(), left.lift::<T>(), b_hat.lift::<T>());
    let lhs = d1(&gm.mul(xi).mul(&gi), &gm.mul(eta).mul(&gi), pair)?;
    let rhs = left.mul(&d1(xi, eta, pair)?).mul(&b_hat);
    Ok(lhs == rhs)
}

/// The identity of [`d1_equivariance_check`] for generic `ξ, η in g1`,
/// i.e. as a polynomial identity in their coordinates.
pub fn d1_equivariance_identity(g: &G0Element, pair: &SymPair) -> Result<bool> {
    let dim = pair.g1().dim();
    let xi = generic_element(pair.g1().basis(), 0);
    let eta = generic_element(pair.g1().basis(), dim);
    if dim == 0 {
        return Ok(true);
    }
    d1_equivariance_check(g, &xi, &eta, pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use crate::sympair::{make_pair, PairSpec};

    #[test]
    fn group_elements_must_match_the_pair() {
        let gl = make_pair(PairSpec::gl_gl(1, 2)).unwrap();
        let so = make_pair(PairSpec::so2n_gln(3)).unwrap();
        let g = G0Element::So2n { b: Matrix::identity(3) };
        assert!(g.ambient(&so).is_ok());
        assert!(g.ambient(&gl).is_err());
        let wrong = G0Element::Gl { b: Matrix::identity(2), c: Matrix::identity(2) };
        assert!(wrong.ambient(&gl).is_err());
        let singular = G0Element::Gl { b: Matrix::identity(1), c: Matrix::zeros(2, 2) };
        assert!(singular.transformation_factors(&gl).is_err());
    }

    #[test]
    fn so2n_ambient_is_block_orthogonal() {
        let so = make_pair(PairSpec::so2n_gln(3)).unwrap();
        let b = Matrix::from_rows(vec![vec![q(1), q(2), q(0)], vec![q(0), q(1), q(0)], vec![q(0), q(0), q(3)]]).unwrap();
        let (g, gi) = G0Element::So2n { b }.ambient(&so).unwrap();
        assert_eq!(g.mul(&gi), Matrix::identity(6));
    }

    #[test]
    fn d1_rejects_so_so_and_bad_shapes() {
        let so = make_pair(PairSpec::so_so(2, 2)).unwrap();
        assert!(d1(&Matrix::<Q>::zeros(4, 4), &Matrix::zeros(4, 4), &so).is_err());
        let gl = make_pair(PairSpec::gl_gl(1, 2)).unwrap();
        assert!(d1(&Matrix::<Q>::zeros(2, 2), &Matrix::zeros(2, 2), &gl).is_err());
        assert_eq!(d1(&Matrix::<Q>::zeros(3, 3), &Matrix::zeros(3, 3), &gl).unwrap().cols(), 2);
    }
}
