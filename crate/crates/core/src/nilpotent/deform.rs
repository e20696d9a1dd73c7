//! The semisimple deformation `e(t) = e - t^2 f` of an even nilpotent element
//! and the limit of its centralizers at `t = 0`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::triple::{is_even, kr_triple};
use crate::error::{Error, Result};
use crate::exactlin::{
    char_poly, grassmann_limit, kernel_basis, min_poly, rank_q, to_ratfunc, Matrix,
};
use crate::liealg::{ad_restricted, centralizer_dim};
use crate::poly::{MPoly, Monomial, UniPoly};
use crate::scalar::Q;
use crate::sympair::SymPair;

const T: usize = 0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeformationReport {
    /// `e(t)` with entries in `Q[t]`.
    pub curve: Matrix<MPoly>,
    pub even: bool,
    /// The minimal polynomial of `e(t)` over `Q(t)` is squarefree.
    pub min_poly_squarefree: bool,
    pub centralizer_dim_generic: usize,
    pub centralizer_dim_at_e: usize,
    /// `char(e(t))(x) = sum_k c_k (-1)^((N-k)/2) t^(N-k) x^k` where
    /// `char(h) = sum_k c_k x^k`, i.e. `e(t)` has the spectrum of `i t h`.
    pub char_poly_matches: bool,
    /// The same identity specialised at `t = 1`.
    pub char_poly_matches_at_one: bool,
    pub fiber_at_zero_is_e: bool,
}

impl DeformationReport {
    /// The sheet condition, asserted only for even `e`.
    pub fn sheet_condition(&self) -> bool {
        self.centralizer_dim_generic == self.centralizer_dim_at_e
    }

    /// Every check that is claimed for this `e`.
    pub fn passed(&self) -> bool {
        self.min_poly_squarefree
            && self.char_poly_matches
            && self.char_poly_matches_at_one
            && self.fiber_at_zero_is_e
            && (!self.even || self.sheet_condition())
    }
}

fn curve(e: &Matrix<Q>, f: &Matrix<Q>) -> Matrix<MPoly> {
    let t2 = MPoly::monomial(Q::one(), Monomial::var(T, 2));
    e.lift::<MPoly>().sub(&f.lift::<MPoly>().map(|c| c * &t2))
}

/// Expected characteristic polynomial of `e(t)` from that of `h`, or `None`
/// if a coefficient of `char(h)` with odd `N - k` is nonzero.
fn twisted_char_poly(h: &Matrix<Q>) -> Result<Option<UniPoly<MPoly>>> {
    let chi = char_poly(h)?;
    let n = h.rows();
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let c = chi.coeff(k);
        let gap = n - k;
        if gap % 2 == 1 {
            if !c.is_zero() {
                return Ok(None);
            }
            coeffs.push(MPoly::zero());
            continue;
        }
        let sign = if (gap / 2).is_multiple_of(2) { Q::one() } else { -Q::one() };
        coeffs.push(MPoly::monomial(c * sign, Monomial::var(T, gap as u32)));
    }
    Ok(Some(UniPoly::new(coeffs)))
}

/// Builds `e(t)` from a Kostant-Rallis triple of `e` and checks that it is a
/// semisimple curve through `e` with the centralizer dimension of `e` and
/// the spectrum of `i t h`.
pub fn semisimple_deformation(e: &Matrix<Q>, pair: &SymPair) -> Result<DeformationReport> {
    if e.is_zero() {
        return Err(Error::Precondition("semisimple_deformation needs e != 0".into()));
    }
    let triple = kr_triple(e, pair)?;
    let even = is_even(e, pair)?;
    let family = curve(e, &triple.f);

    let min_poly_squarefree = min_poly(&to_ratfunc(&family))?.is_squarefree();
    let g_lifted: Vec<Matrix<MPoly>> = pair.algebra().basis().iter().map(Matrix::lift).collect();
    let centralizer_dim_generic = centralizer_dim(&g_lifted, &family);
    let centralizer_dim_at_e = centralizer_dim(pair.algebra().basis(), e);

    let actual = char_poly(&family)?;
    let (char_poly_matches, char_poly_matches_at_one) = match twisted_char_poly(&triple.h)? {
        Some(expected) => {
            let at_one = |p: &UniPoly<MPoly>| p.map(|c| c.eval_var(T, &Q::one()));
            (actual == expected, at_one(&actual) == at_one(&expected))
        }
        None => (false, false),
    };
    let fiber_at_zero_is_e = family.map(|c| c.eval_var(T, &Q::zero()).as_constant().unwrap_or_default()) == *e;
    Ok(DeformationReport {
        curve: family,
        even,
        min_poly_squarefree,
        centralizer_dim_generic,
        centralizer_dim_at_e,
        char_poly_matches,
        char_poly_matches_at_one,
        fiber_at_zero_is_e,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitReport {
    /// Basis of `lim_{t -> 0} (g1)_{e(t)}` in coordinates of the `g1` basis.
    #[serde(with = "crate::exactlin::rational")]
    pub limit: Vec<Vec<Q>>,
    /// Basis of `(g1)_e` in the same coordinates.
    #[serde(with = "crate::exactlin::rational")]
    pub centralizer: Vec<Vec<Q>>,
    pub equal: bool,
}

/// Compares the limit at `t = 0` of `(g1)_{e(t)}` with `(g1)_e` by rank
/// tests in both directions. For `e = 0` the family is constant.
pub fn centralizer_limit(e: &Matrix<Q>, pair: &SymPair) -> Result<LimitReport> {
    let g1 = pair.g1().basis();
    let centralizer = if g1.is_empty() { Vec::new() } else { kernel_basis(&ad_restricted(g1, e)) };
    let limit = if e.is_zero() || g1.is_empty() {
        centralizer.clone()
    } else {
        let f = kr_triple(e, pair)?.f;
        let g1_lifted: Vec<Matrix<MPoly>> = g1.iter().map(Matrix::lift).collect();
        grassmann_limit(&ad_restricted(&g1_lifted, &curve(e, &f)), &Q::zero())?
    };
    let rank_of = |vs: &[Vec<Q>]| {
        if vs.is_empty() {
            0
        } else {
            rank_q(&Matrix::from_columns(g1.len(), vs))
        }
    };
    let joint: Vec<Vec<Q>> = limit.iter().chain(&centralizer).cloned().collect();
    let (r_lim, r_cent, r_joint) = (rank_of(&limit), rank_of(&centralizer), rank_of(&joint));
    let equal = r_lim == r_cent && r_joint == r_cent;
    Ok(LimitReport { limit, centralizer, equal })
}
