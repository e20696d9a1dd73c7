//! Normal sl2-triples, evenness, and the distinguishedness test.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{char_poly, combine, is_nilpotent, solve, Matrix};
use crate::liealg::centralizer_in;
use crate::poly::{MPoly, UniPoly};
use crate::sampling::RunConfig;
use crate::scalar::{q, Q};
use crate::sympair::{generic_element, Family, SymPair};

/// `(e, h, f)` with `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`.
#[derive(Clone, Debug, PartialEq)]
pub struct Sl2Triple {
    pub e: Matrix<Q>,
    pub h: Matrix<Q>,
    pub f: Matrix<Q>,
}

impl Sl2Triple {
    /// Exact check of the bracket relations and of `e, f in g1`, `h in g0`.
    pub fn check(&self, pair: &SymPair) -> Result<()> {
        let two = q(2);
        if self.h.comm(&self.e) != self.e.scale(&two) {
            return Err(Error::Verification("[h, e] != 2e".into()));
        }
        if self.h.comm(&self.f) != self.f.scale(&-two) {
            return Err(Error::Verification("[h, f] != -2f".into()));
        }
        if self.e.comm(&self.f) != self.h {
            return Err(Error::Verification("[e, f] != h".into()));
        }
        if !pair.g1().contains(&self.e) || !pair.g1().contains(&self.f) {
            return Err(Error::Verification("e or f is not in g1".into()));
        }
        if !pair.g0().contains(&self.h) {
            return Err(Error::Verification("h is not in g0".into()));
        }
        Ok(())
    }
}

/// Matrix whose columns are `map(b)` flattened, over the given basis.
fn linear_map(basis: &[Matrix<Q>], map: impl Fn(&Matrix<Q>) -> Matrix<Q>) -> Matrix<Q> {
    let cols: Vec<Vec<Q>> = basis.iter().map(|b| map(b).to_vector()).collect();
    let rows = cols.first().map_or(0, Vec::len);
    Matrix::from_columns(rows, &cols)
}

/// Kostant-Rallis triple for a nonzero nilpotent `e in g1`. First
/// `h = [e, y]` with `y in g1` and `[h, e] = 2e`; then `f in g1` with
/// `[e, f] = h` and `[h, f] = -2f`, both by exact linear solves.
pub fn kr_triple(e: &Matrix<Q>, pair: &SymPair) -> Result<Sl2Triple> {
    if e.is_zero() {
        return Err(Error::Precondition("kr_triple needs e != 0".into()));
    }
    if !pair.g1().contains(e) || !is_nilpotent(e) {
        return Err(Error::Precondition("e must be a nilpotent element of g1".into()));
    }
    let g1 = pair.g1().basis();
    let stage1 = linear_map(g1, |y| e.comm(y).comm(e));
    let y = solve(&stage1, &e.scale(&q(2)).to_vector())
        .ok_or_else(|| Error::Internal("no h with [h, e] = 2e in [e, g1]".into()))?;
    let h = e.comm(&combine(&y, g1));

    let upper = linear_map(g1, |f| e.comm(f));
    let lower = linear_map(g1, |f| h.comm(f).add(&f.scale(&q(2))));
    let mut stacked = Matrix::zeros(upper.rows() + lower.rows(), g1.len());
    stacked.set_block(0, 0, &upper);
    stacked.set_block(upper.rows(), 0, &lower);
    let mut rhs = h.to_vector();
    rhs.extend(std::iter::repeat_n(Q::zero(), lower.rows()));
    let fc = solve(&stacked, &rhs)
        .ok_or_else(|| Error::Internal("no f completing the triple".into()))?;
    let triple = Sl2Triple { e: e.clone(), h, f: combine(&fc, g1) };
    triple.check(pair)?;
    Ok(triple)
}

/// All roots of `chi` with multiplicity, if they are integers in `[-bound, bound]`.
pub(crate) fn integer_roots(mut chi: UniPoly<Q>, bound: i64) -> Option<Vec<i64>> {
    let mut roots = Vec::new();
    for lambda in -bound..=bound {
        let root = UniPoly::new(vec![q(-lambda), q(1)]);
        loop {
            let (quot, rem) = chi.divrem(&root);
            if !rem.is_zero() {
                break;
            }
            roots.push(lambda);
            chi = quot;
        }
    }
    (chi.degree() == Some(0)).then_some(roots)
}

/// Integer eigenvalues of `ad(h)` on `g` with multiplicity, ascending; errors
/// if the characteristic polynomial does not split over the integers.
pub fn ad_eigenvalues(h: &Matrix<Q>, pair: &SymPair) -> Result<Vec<i64>> {
    let space = pair.algebra().space();
    let cols: Vec<Vec<Q>> = space
        .basis()
        .iter()
        .map(|b| {
            space
                .coordinates(&h.comm(b))
                .ok_or_else(|| Error::Internal("[h, g] leaves g".into()))
        })
        .collect::<Result<_>>()?;
    let ad = Matrix::from_columns(space.dim(), &cols);
    let bound = 2 * pair.ambient() as i64;
    integer_roots(char_poly(&ad)?, bound)
        .ok_or_else(|| Error::Verification("ad(h) has eigenvalues outside the integers".into()))
}

/// Whether every eigenvalue of `ad(h)` on `g` is even; `e = 0` is even.
pub fn is_even(e: &Matrix<Q>, pair: &SymPair) -> Result<bool> {
    if e.is_zero() {
        return Ok(true);
    }
    let t = kr_triple(e, pair)?;
    Ok(ad_eigenvalues(&t.h, pair)?.iter().all(|l| l % 2 == 0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecisionMode {
    /// A sampled centralizer element is not nilpotent.
    ExactWitness,
    /// Characteristic polynomial of the generic centralizer element.
    ExactSymbolic,
    /// Schwartz-Zippel sampling; `false` answers are still exact.
    Randomized,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistinguishedReport {
    pub distinguished: bool,
    pub mode: DecisionMode,
    pub centralizer_dim: usize,
    /// Upper bound on the probability of a wrong `true` in randomized mode.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_bound: Option<f64>,
}

/// Ambient size up to which the exact symbolic mode is used.
pub const SYMBOLIC_AMBIENT_LIMIT: usize = 10;
const RANDOM_MODE_SAMPLES: usize = 16;
const RANDOM_MODE_BOUND: i64 = 1_000_000;

/// Whether `(g1)_e` contains no nonzero semisimple element of `[g, g]`, i.e.
/// every element of `(g1)_e` is nilpotent. For `GL_GL`, `g1` already lies in
/// the trace-zero part, so no adjustment for the centre is needed.
pub fn is_sigma_distinguished(e: &Matrix<Q>, pair: &SymPair, cfg: &RunConfig) -> Result<DistinguishedReport> {
    if !pair.g1().contains(e) || !is_nilpotent(e) {
        return Err(Error::Precondition("e must be a nilpotent element of g1".into()));
    }
    debug_assert!(pair.family() != Family::GlGl || pair.g1().basis().iter().all(|b| b.trace().is_zero()));
    let cent = centralizer_in(pair.g1().basis(), e);
    let dim = cent.len();
    let report = |distinguished, mode, failure_bound| DistinguishedReport {
        distinguished,
        mode,
        centralizer_dim: dim,
        failure_bound,
    };
    let mut rng = cfg.rng("sigma-distinguished");
    let sample = |coords: &[Q]| {
        cent.iter()
            .zip(coords)
            .fold(Matrix::zeros(pair.ambient(), pair.ambient()), |acc, (b, c)| acc.add(&b.scale(c)))
    };
    for _ in 0..cfg.samples.max(1) {
        let coords = rng.rationals(dim, cfg.coordinate_bound);
        if !is_nilpotent(&sample(&coords)) {
            return Ok(report(false, DecisionMode::ExactWitness, None));
        }
    }
    if dim <= cfg.symbolic_threshold && pair.ambient() <= SYMBOLIC_AMBIENT_LIMIT {
        let x = generic_element(&cent, 0);
        let chi = char_poly(&x)?;
        let nilpotent = chi.coeffs().iter().rev().skip(1).all(MPoly::is_zero);
        return Ok(report(nilpotent, DecisionMode::ExactSymbolic, None));
    }
    for _ in 0..RANDOM_MODE_SAMPLES {
        let coords = rng.rationals(dim, RANDOM_MODE_BOUND);
        if !is_nilpotent(&sample(&coords)) {
            return Ok(report(false, DecisionMode::ExactWitness, None));
        }
    }
    let per_sample = pair.ambient() as f64 / (2 * RANDOM_MODE_BOUND + 1) as f64;
    Ok(report(true, DecisionMode::Randomized, Some(per_sample.powi(RANDOM_MODE_SAMPLES as i32))))
}
