//! The symmetric pairs of the three families, with Cartan subspaces, short
//! gradings and the predicted structure of semisimple centralizers.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{char_poly, inverse, is_semisimple, kernel_basis, Matrix};
use crate::liealg::{ad_restricted, split_by_involution, InvolutionData, MatrixLieAlgebra, Subspace};
use crate::poly::{MPoly, UniPoly};
use crate::sampling::Sampler;
use crate::scalar::{q, qf, Scalar, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `(so_{n+m}, so_n + so_m)`
    #[serde(rename = "SO_SO")]
    SoSo,
    /// `(gl_{n+m}, gl_n + gl_m)`
    #[serde(rename = "GL_GL")]
    GlGl,
    /// `(so_{2n}, gl_n)`
    #[serde(rename = "SO2N_GLN")]
    So2nGln,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::SoSo => "SO_SO",
            Family::GlGl => "GL_GL",
            Family::So2nGln => "SO2N_GLN",
        }
    }
}

/// Family and parameters; `m` is absent for `SO2N_GLN`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    pub family: Family,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

impl PairSpec {
    pub fn so_so(n: usize, m: usize) -> Self {
        PairSpec { family: Family::SoSo, n, m: Some(m) }
    }

    pub fn gl_gl(n: usize, m: usize) -> Self {
        PairSpec { family: Family::GlGl, n, m: Some(m) }
    }

    pub fn so2n_gln(n: usize) -> Self {
        PairSpec { family: Family::So2nGln, n, m: None }
    }

    pub fn ambient(&self) -> usize {
        match self.family {
            Family::So2nGln => 2 * self.n,
            _ => self.n + self.m.unwrap_or(0),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match (self.family, self.m) {
            (Family::So2nGln, None) if self.n >= 1 => Ok(()),
            (Family::So2nGln, _) => Err(Error::InvalidParams(
                "SO2N_GLN takes a single parameter n >= 1".into(),
            )),
            (_, Some(m)) if self.n + m >= 1 => Ok(()),
            (_, Some(_)) => Err(Error::InvalidParams("n + m must be at least 1".into())),
            (_, None) => Err(Error::InvalidParams(format!("{} needs both n and m", self.family.tag()))),
        }
    }
}

impl fmt::Display for PairSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m {
            Some(m) => write!(f, "{}({}, {m})", self.family.tag(), self.n),
            None => write!(f, "{}({})", self.family.tag(), self.n),
        }
    }
}

/// `g = g(-1) + g(0) + g(1)` with `g(0) = g0`, described by integer levels on
/// the basis of `V`: the entry `(i, j)` of a matrix has degree `level_i - level_j`.
#[derive(Clone, Debug)]
pub struct ShortGrading {
    levels: Vec<i32>,
    pub gm1: Subspace,
    pub g0: Subspace,
    pub gp1: Subspace,
    pub c1: Vec<Matrix<Q>>,
    pub cm1: Vec<Matrix<Q>>,
    /// Rows and columns of the `g(1)` block in `V`-coordinates.
    block_rows: std::ops::Range<usize>,
    block_cols: std::ops::Range<usize>,
}

impl ShortGrading {
    pub fn levels(&self) -> &[i32] {
        &self.levels
    }

    /// Degree-`k` component of `x`.
    pub fn component<T: Scalar>(&self, x: &Matrix<T>, k: i32) -> Matrix<T> {
        Matrix::from_fn(x.rows(), x.cols(), |i, j| {
            if self.levels[i] - self.levels[j] == k {
                x.get(i, j).clone()
            } else {
                T::zero()
            }
        })
    }

    /// The `g(1)` block of `x` in its canonical coordinates, the `X` of
    /// the block form.
    pub fn plus_block<T: Scalar>(&self, x: &Matrix<T>) -> Matrix<T> {
        x.submatrix(self.block_rows.clone(), self.block_cols.clone())
    }

    /// Embeds a block into the ambient algebra; the result lies in `g(1)` if
    /// the block satisfies the family's shape constraints.
    pub fn embed_plus_block<T: Scalar>(&self, block: &Matrix<T>) -> Matrix<T> {
        let n = self.levels.len();
        let mut out = Matrix::zeros(n, n);
        out.set_block(self.block_rows.start, self.block_cols.start, block);
        out
    }

    pub fn block_shape(&self) -> (usize, usize) {
        (self.block_rows.len(), self.block_cols.len())
    }
}

/// Multiset of `gl` block sizes `k_i` and the residual orthogonal pair
/// `(so_{n+m-2k}, so_{n-k} + so_{m-k})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerShape {
    pub gl_blocks: Vec<usize>,
    pub residual: (usize, usize),
}

impl CentralizerShape {
    pub fn k(&self) -> usize {
        self.gl_blocks.iter().sum()
    }

    pub fn dim_g(&self) -> usize {
        let r = self.residual.0 + self.residual.1;
        self.gl_blocks.iter().map(|k| k * k).sum::<usize>() + r * r.saturating_sub(1) / 2
    }

    pub fn dim_g0(&self) -> usize {
        let so = |d: usize| d * d.saturating_sub(1) / 2;
        self.gl_blocks.iter().map(|&k| so(k)).sum::<usize>() + so(self.residual.0) + so(self.residual.1)
    }

    pub fn dim_g1(&self) -> usize {
        self.dim_g() - self.dim_g0()
    }
}

#[derive(Clone, Debug)]
pub struct SymPair {
    spec: PairSpec,
    algebra: MatrixLieAlgebra,
    involution: InvolutionData,
    g0: Subspace,
    g1: Subspace,
    cartan: Vec<Matrix<Q>>,
    grading: Option<ShortGrading>,
}

/// Signs of the split diagonal form used for the `SO_SO` family.
fn so_so_form(n: usize, m: usize) -> Vec<Q> {
    let s = |i: usize| if i.is_multiple_of(2) { q(1) } else { q(-1) };
    (0..n).map(s).chain((0..m).map(|j| -s(j))).collect()
}

pub fn make_pair(spec: PairSpec) -> Result<SymPair> {
    spec.validate()?;
    let pair = match spec.family {
        Family::SoSo => make_so_so(spec)?,
        Family::GlGl => make_gl_gl(spec)?,
        Family::So2nGln => make_so2n_gln(spec)?,
    };
    pair.check_structure()?;
    Ok(pair)
}

fn diag_signs(n_minus: usize, n_plus: usize) -> Matrix<Q> {
    let d: Vec<Q> = (0..n_minus).map(|_| q(-1)).chain((0..n_plus).map(|_| q(1))).collect();
    Matrix::diagonal(&d)
}

fn make_so_so(spec: PairSpec) -> Result<SymPair> {
    let (n, m) = (spec.n, spec.m.unwrap_or(0));
    let big_n = n + m;
    let f = so_so_form(n, m);
    // b_ij = E_ij - f_i f_j E_ji, lexicographic in (i, j)
    let mut basis = Vec::new();
    for i in 0..big_n {
        for j in i + 1..big_n {
            let mut b = Matrix::<Q>::unit(big_n, big_n, i, j);
            b.set(j, i, -(&f[i] * &f[j]));
            basis.push(b);
        }
    }
    let form = Matrix::diagonal(&f);
    let algebra = MatrixLieAlgebra::new(&format!("so_{big_n}"), big_n, basis, Some(form))?;
    let involution = InvolutionData::new(diag_signs(n, m))?;
    let (g0, g1) = split_by_involution(&algebra, &involution)?;
    let cartan = (0..n.min(m))
        .map(|i| {
            let mut c = Matrix::<Q>::unit(big_n, big_n, i, n + i);
            c.set(n + i, i, q(1));
            c
        })
        .collect();
    Ok(SymPair { spec, algebra, involution, g0, g1, cartan, grading: None })
}

fn make_gl_gl(spec: PairSpec) -> Result<SymPair> {
    let (n, m) = (spec.n, spec.m.unwrap_or(0));
    let big_n = n + m;
    let algebra = MatrixLieAlgebra::gl(big_n);
    let involution = InvolutionData::new(diag_signs(n, m))?;
    let (g0, g1) = split_by_involution(&algebra, &involution)?;
    let cartan: Vec<Matrix<Q>> = (0..n.min(m))
        .map(|i| {
            let mut c = Matrix::<Q>::unit(big_n, big_n, n + i, i);
            c.set(i, n + i, q(1));
            c
        })
        .collect();
    let levels: Vec<i32> = (0..n).map(|_| 0).chain((0..m).map(|_| 1)).collect();
    let grading = build_grading(levels, &algebra, &g0, &cartan, n..n + m, 0..n)?;
    Ok(SymPair { spec, algebra, involution, g0, g1, cartan, grading: Some(grading) })
}

fn make_so2n_gln(spec: PairSpec) -> Result<SymPair> {
    let n = spec.n;
    let big_n = 2 * n;
    let mut form = Matrix::<Q>::zeros(big_n, big_n);
    form.set_block(0, n, &Matrix::identity(n));
    form.set_block(n, 0, &Matrix::identity(n));
    // g0 = diag(E_ij, -E_ji); g1 = skew blocks in the upper right, then lower left
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut b = Matrix::<Q>::unit(big_n, big_n, i, j);
            b.set(n + j, n + i, q(-1));
            basis.push(b);
        }
    }
    for (row_off, col_off) in [(0, n), (n, 0)] {
        for i in 0..n {
            for j in i + 1..n {
                let mut b = Matrix::<Q>::unit(big_n, big_n, row_off + i, col_off + j);
                b.set(row_off + j, col_off + i, q(-1));
                basis.push(b);
            }
        }
    }
    let algebra = MatrixLieAlgebra::new(&format!("so_{big_n}"), big_n, basis, Some(form))?;
    let involution =
        InvolutionData::new(Matrix::block_diag(&Matrix::identity(n), &Matrix::identity(n).neg()))?;
    let (g0, g1) = split_by_involution(&algebra, &involution)?;
    let cartan: Vec<Matrix<Q>> = (0..n / 2)
        .map(|i| {
            let j = n - 1 - i;
            let mut x = Matrix::<Q>::unit(n, n, i, j);
            x.set(j, i, q(-1));
            let mut c = Matrix::zeros(big_n, big_n);
            c.set_block(0, n, &x);
            c.set_block(n, 0, &x);
            c
        })
        .collect();
    let levels: Vec<i32> = (0..n).map(|_| 1).chain((0..n).map(|_| 0)).collect();
    let grading = build_grading(levels, &algebra, &g0, &cartan, 0..n, n..2 * n)?;
    Ok(SymPair { spec, algebra, involution, g0, g1, cartan, grading: Some(grading) })
}

fn build_grading(
    levels: Vec<i32>,
    algebra: &MatrixLieAlgebra,
    g0: &Subspace,
    cartan: &[Matrix<Q>],
    block_rows: std::ops::Range<usize>,
    block_cols: std::ops::Range<usize>,
) -> Result<ShortGrading> {
    let n = levels.len();
    let mut grading = ShortGrading {
        levels,
        gm1: Subspace::new(n, Vec::new())?,
        g0: g0.clone(),
        gp1: Subspace::new(n, Vec::new())?,
        c1: Vec::new(),
        cm1: Vec::new(),
        block_rows,
        block_cols,
    };
    let parts = |k: i32| -> Vec<Matrix<Q>> {
        algebra.basis().iter().map(|b| grading.component(b, k)).collect()
    };
    let (plus, minus, zero) = (parts(1), parts(-1), parts(0));
    let gp1 = Subspace::spanned_by(n, &plus);
    let gm1 = Subspace::spanned_by(n, &minus);
    if !algebra.space().contains_all(gp1.basis()) || !algebra.space().contains_all(gm1.basis()) {
        return Err(Error::Internal("graded components leave the algebra".into()));
    }
    if !Subspace::spanned_by(n, &zero).same_span(g0) {
        return Err(Error::Internal("degree-zero part differs from g0".into()));
    }
    grading.c1 = cartan.iter().map(|c| grading.component(c, 1)).collect();
    grading.cm1 = cartan.iter().map(|c| grading.component(c, -1)).collect();
    grading.gp1 = gp1;
    grading.gm1 = gm1;
    Ok(grading)
}

impl SymPair {
    pub fn spec(&self) -> PairSpec {
        self.spec
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    pub fn algebra(&self) -> &MatrixLieAlgebra {
        &self.algebra
    }

    pub fn involution(&self) -> &InvolutionData {
        &self.involution
    }

    pub fn ambient(&self) -> usize {
        self.algebra.ambient()
    }

    pub fn g0(&self) -> &Subspace {
        &self.g0
    }

    pub fn g1(&self) -> &Subspace {
        &self.g1
    }

    pub fn cartan(&self) -> &[Matrix<Q>] {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn short_grading(&self) -> Result<&ShortGrading> {
        self.grading.as_ref().ok_or_else(|| {
            Error::InvalidParams(format!("{} has no short grading", self.spec.family.tag()))
        })
    }

    /// `dim g1 + dim c`.
    pub fn expected_commvar_dim(&self) -> usize {
        self.g1.dim() + self.rank()
    }

    /// `sum tau_{offset + i} c_i` over the polynomial ring.
    pub fn generic_cartan(&self, var_offset: usize) -> Matrix<MPoly> {
        let n = self.ambient();
        let mut out = Matrix::zeros(n, n);
        for (i, c) in self.cartan.iter().enumerate() {
            out = out.add(&c.lift::<MPoly>().scale(&MPoly::var(var_offset + i)));
        }
        out
    }

    pub fn cartan_element(&self, coords: &[Q]) -> Matrix<Q> {
        assert_eq!(coords.len(), self.rank());
        let n = self.ambient();
        self.cartan
            .iter()
            .zip(coords)
            .fold(Matrix::zeros(n, n), |acc, (c, x)| acc.add(&c.scale(x)))
    }

    /// Cartan coordinates with distinct nonzero absolute values, resampling
    /// up to eight times; the last draw is kept if none qualifies.
    pub fn sample_generic_cartan_coords(&self, rng: &mut Sampler, bound: i64) -> Vec<Q> {
        let mut coords = Vec::new();
        for _ in 0..8 {
            coords = rng.ints(self.rank(), bound);
            let mut abs: Vec<i64> = coords.iter().map(|v| v.abs()).collect();
            abs.sort_unstable();
            abs.dedup();
            if abs.len() == coords.len() && !abs.contains(&0) {
                break;
            }
        }
        coords.into_iter().map(q).collect()
    }

    /// A random element of `G0` and its inverse, by the Cayley transform
    /// `(I - K)^{-1} (I + K)` of a random integer `K` in `g0`.
    pub fn random_g0_element(&self, rng: &mut Sampler, bound: i64) -> (Matrix<Q>, Matrix<Q>) {
        let n = self.ambient();
        loop {
            let coords = rng.rationals(self.g0.dim(), bound);
            let k = self.g0.element(&coords);
            let id = Matrix::identity(n);
            if let Some(inv) = inverse(&id.sub(&k)) {
                let g = inv.mul(&id.add(&k));
                let g_inv = inverse(&g).expect("Cayley transform is invertible");
                return (g, g_inv);
            }
        }
    }

    /// The σ-stable subalgebra spanned by `elements` as a pair in its own
    /// right, with the same family, form and involution. Subpairs carry no
    /// Cartan subspace and no short grading.
    pub fn subpair(&self, elements: &[Matrix<Q>]) -> Result<SymPair> {
        let n = self.ambient();
        let half = qf(1, 2);
        let (mut even, mut odd) = (Vec::new(), Vec::new());
        for x in elements {
            let s = self.involution.apply(x);
            even.push(x.add(&s).scale(&half));
            odd.push(x.sub(&s).scale(&half));
        }
        let g0 = Subspace::spanned_by(n, &even);
        let g1 = Subspace::spanned_by(n, &odd);
        if g0.dim() + g1.dim() != Subspace::spanned_by(n, elements).dim() {
            return Err(Error::Precondition("subalgebra is not stable under the involution".into()));
        }
        let basis = g0.basis().iter().chain(g1.basis()).cloned().collect();
        let algebra = MatrixLieAlgebra::new("subalgebra", n, basis, self.algebra.form().cloned())?;
        Ok(SymPair {
            spec: self.spec,
            algebra,
            involution: self.involution.clone(),
            g0,
            g1,
            cartan: Vec::new(),
            grading: None,
        })
    }

    /// Structural invariants checked at construction.
    pub fn check_structure(&self) -> Result<()> {
        for b in self.g1.basis() {
            if self.involution.apply(b) != b.neg() {
                return Err(Error::Verification("sigma is not -1 on g1".into()));
            }
        }
        for b in self.g0.basis() {
            if self.involution.apply(b) != *b {
                return Err(Error::Verification("sigma is not +1 on g0".into()));
            }
        }
        let expected_rank = match self.spec.family {
            Family::SoSo | Family::GlGl => self.spec.n.min(self.spec.m.unwrap_or(0)),
            Family::So2nGln => self.spec.n / 2,
        };
        if self.rank() != expected_rank {
            return Err(Error::Verification("unexpected rank".into()));
        }
        for (i, c) in self.cartan.iter().enumerate() {
            if !self.g1.contains(c) {
                return Err(Error::Verification(format!("Cartan element {i} is not in g1")));
            }
            if !is_semisimple(c)? {
                return Err(Error::Verification(format!("Cartan element {i} is not semisimple")));
            }
            for d in &self.cartan[..i] {
                if !c.comm(d).is_zero() {
                    return Err(Error::Verification("Cartan subspace is not abelian".into()));
                }
            }
        }
        if self.common_centralizer_dim_in_g1() != self.rank() {
            return Err(Error::Verification("Cartan subspace is not maximal abelian".into()));
        }
        if let Some(gr) = &self.grading {
            self.check_grading(gr)?;
        }
        Ok(())
    }

    /// Dimension of `{z in g1 : [z, c] = 0 for all c in cartan}`.
    pub fn common_centralizer_dim_in_g1(&self) -> usize {
        let basis = self.g1.basis();
        if basis.is_empty() {
            return 0;
        }
        if self.cartan.is_empty() {
            return basis.len();
        }
        let blocks: Vec<Matrix<Q>> = self.cartan.iter().map(|c| ad_restricted(basis, c)).collect();
        let rows: usize = blocks.iter().map(Matrix::rows).sum();
        let mut stacked = Matrix::zeros(rows, basis.len());
        let mut r = 0;
        for b in &blocks {
            stacked.set_block(r, 0, b);
            r += b.rows();
        }
        kernel_basis(&stacked).len()
    }

    fn check_grading(&self, gr: &ShortGrading) -> Result<()> {
        let spaces = [(-1_i32, &gr.gm1), (0, &gr.g0), (1, &gr.gp1)];
        for (i, a) in &spaces {
            for (j, b) in &spaces {
                for x in a.basis() {
                    for y in b.basis() {
                        let br = x.comm(y);
                        let k = i + j;
                        let ok = if k.abs() > 1 {
                            br.is_zero()
                        } else {
                            gr.component(&br, k) == br
                        };
                        if !ok {
                            return Err(Error::Verification(format!(
                                "[g({i}), g({j})] is not contained in g({k})"
                            )));
                        }
                    }
                }
            }
        }
        for x in gr.gp1.basis().iter().chain(gr.gm1.basis()) {
            if !crate::exactlin::is_nilpotent(x) {
                return Err(Error::Verification("g(+-1) element is not nilpotent".into()));
            }
        }
        let rank_of = |v: &[Matrix<Q>]| Subspace::spanned_by(self.ambient(), v).dim();
        if rank_of(&gr.c1) != self.rank() || rank_of(&gr.cm1) != self.rank() {
            return Err(Error::Verification("dim c(+-1) differs from the rank".into()));
        }
        for (c, (p, m)) in self.cartan.iter().zip(gr.c1.iter().zip(&gr.cm1)) {
            if p.add(m) != *c {
                return Err(Error::Verification("Cartan element is not c(1) + c(-1)".into()));
            }
        }
        Ok(())
    }
}

/// Centralizer structure of a semisimple `h` in `g1` for `SO_SO(n, m)`,
/// read from the squarefree factorization of `char_poly(h)`.
///
/// Eigenvalues of such `h` come in pairs `+-lambda`; a squarefree factor of
/// multiplicity `k` that is a polynomial in `x^2` of degree `2r` accounts for
/// `r` eigenvalue pairs, each giving a `gl_k` block. A factor `x` of
/// multiplicity `z` gives the residual pair with `n + m - 2k = z`.
pub fn predicted_centralizer_pair(pair: &SymPair, h: &Matrix<Q>) -> Result<CentralizerShape> {
    if pair.family() != Family::SoSo {
        return Err(Error::InvalidParams(
            "the centralizer predictor applies to the SO_SO family".into(),
        ));
    }
    if !pair.g1().contains(h) {
        return Err(Error::Precondition("h is not in g1".into()));
    }
    if !is_semisimple(h)? {
        return Err(Error::Precondition("h is not semisimple".into()));
    }
    let (n, m) = (pair.spec.n, pair.spec.m.unwrap_or(0));
    let chi = char_poly(h)?;
    let x = UniPoly::<Q>::x();
    let mut blocks = Vec::new();
    let mut zero_mult = 0;
    for (idx, factor) in chi.squarefree_decomposition().into_iter().enumerate() {
        let mult = idx + 1;
        let (quot, rem) = factor.divrem(&x);
        let rest = if rem.is_zero() {
            zero_mult = mult;
            quot
        } else {
            factor
        };
        let deg = rest.degree().unwrap_or(0);
        if rest.coeffs().iter().enumerate().any(|(k, c)| k % 2 == 1 && !c.is_zero()) || deg % 2 == 1 {
            return Err(Error::Internal("eigenvalues of h are not symmetric".into()));
        }
        blocks.extend(std::iter::repeat_n(mult, deg / 2));
    }
    blocks.sort_unstable_by(|a, b| b.cmp(a));
    let k: usize = blocks.iter().sum();
    if 2 * k + zero_mult != n + m || k > n.min(m) {
        return Err(Error::Internal("inconsistent eigenvalue multiplicities".into()));
    }
    Ok(CentralizerShape { gl_blocks: blocks, residual: (n - k, m - k) })
}

/// A generic symbolic element of `span(basis)` over fresh variables.
pub fn generic_element(basis: &[Matrix<Q>], var_offset: usize) -> Matrix<MPoly> {
    let n = basis.first().map_or(0, Matrix::rows);
    basis.iter().enumerate().fold(Matrix::zeros(n, n), |acc, (i, b)| {
        acc.add(&b.lift::<MPoly>().scale(&MPoly::var(var_offset + i)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Matrix;
    use crate::liealg::centralizer_in;

    #[test]
    fn catalog_examples() {
        let p = make_pair(PairSpec::gl_gl(2, 3)).unwrap();
        assert_eq!((p.g1().dim(), p.rank()), (12, 2));
        let p = make_pair(PairSpec::so2n_gln(3)).unwrap();
        assert_eq!((p.g1().dim(), p.rank()), (6, 1));
        let p = make_pair(PairSpec::so_so(1, 1)).unwrap();
        assert_eq!((p.g1().dim(), p.rank()), (1, 1));
        assert_eq!(p.expected_commvar_dim(), 2);
        let p = make_pair(PairSpec::so_so(2, 3)).unwrap();
        assert_eq!((p.algebra().dim(), p.g0().dim(), p.g1().dim(), p.rank()), (10, 4, 6, 2));
        assert_eq!(p.expected_commvar_dim(), 8);
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(make_pair(PairSpec::so_so(0, 0)).is_err());
        assert!(make_pair(PairSpec::so2n_gln(0)).is_err());
        assert!(make_pair(PairSpec { family: Family::GlGl, n: 1, m: None }).is_err());
    }

    #[test]
    fn degenerate_rank_zero() {
        let p = make_pair(PairSpec::so_so(3, 0)).unwrap();
        assert_eq!((p.g1().dim(), p.rank()), (0, 0));
    }

    #[test]
    fn gradings() {
        let p = make_pair(PairSpec::gl_gl(2, 3)).unwrap();
        let gr = p.short_grading().unwrap();
        assert_eq!((gr.gp1.dim(), gr.c1.len()), (6, 2));
        assert_eq!(gr.block_shape(), (3, 2));
        let p = make_pair(PairSpec::so2n_gln(3)).unwrap();
        let gr = p.short_grading().unwrap();
        assert_eq!((gr.gp1.dim(), gr.c1.len()), (3, 1));
        assert!(make_pair(PairSpec::so_so(2, 2)).unwrap().short_grading().is_err());
    }

    #[test]
    fn distinguished_shape_examples() {
        let p = make_pair(PairSpec::so_so(2, 3)).unwrap();
        let h = p.cartan_element(&[q(2), q(5)]);
        let shape = predicted_centralizer_pair(&p, &h).unwrap();
        assert_eq!(shape, CentralizerShape { gl_blocks: vec![1, 1], residual: (0, 1) });
        assert_eq!((shape.dim_g(), shape.dim_g0()), (2, 0));
        assert_eq!(centralizer_in(p.algebra().basis(), &h).len(), 2);
        assert_eq!(centralizer_in(p.g0().basis(), &h).len(), 0);

        let zero = Matrix::zeros(5, 5);
        let shape = predicted_centralizer_pair(&p, &zero).unwrap();
        assert_eq!(shape.residual, (2, 3));
        assert_eq!(shape.dim_g(), 10);

        let p = make_pair(PairSpec::so_so(2, 2)).unwrap();
        let h = p.cartan_element(&[q(3), q(3)]);
        let shape = predicted_centralizer_pair(&p, &h).unwrap();
        assert_eq!(shape, CentralizerShape { gl_blocks: vec![2], residual: (0, 0) });
        assert_eq!(shape.dim_g(), 4);
        assert_eq!(centralizer_in(p.algebra().basis(), &h).len(), 4);
    }
}
