//! Matrix Lie algebras as explicit subspaces of `gl_N`, involutions, and
//! centralizers.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{
    independent_subset, inverse, is_nilpotent, is_semisimple, kernel_basis, Echelon, Matrix, Rank,
};
use crate::scalar::{Field, Scalar, Q};

/// A linear subspace of `N x N` matrices with a fixed, independent basis and
/// exact coordinates with respect to it.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Matrix<Q>>,
    echelon: Echelon<Q>,
}

impl Subspace {
    /// # Errors
    /// If the basis is dependent or the shapes disagree.
    pub fn new(ambient: usize, basis: Vec<Matrix<Q>>) -> Result<Self> {
        let mut echelon = Echelon::new(ambient * ambient);
        for b in &basis {
            if b.rows() != ambient || b.cols() != ambient {
                return Err(Error::Dimension(format!(
                    "basis element of size {}x{} in gl_{ambient}",
                    b.rows(),
                    b.cols()
                )));
            }
            if !echelon.insert(&b.to_vector()) {
                return Err(Error::InvalidParams("basis elements are linearly dependent".into()));
            }
        }
        Ok(Subspace { ambient, basis, echelon })
    }

    /// Subspace spanned by `elements`, keeping a maximal independent subfamily
    /// in order.
    pub fn spanned_by(ambient: usize, elements: &[Matrix<Q>]) -> Self {
        let vecs: Vec<Vec<Q>> = elements.iter().map(Matrix::to_vector).collect();
        let keep = independent_subset(ambient * ambient, &vecs);
        let basis = keep.into_iter().map(|i| elements[i].clone()).collect();
        Subspace::new(ambient, basis).expect("independent by construction")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix<Q>] {
        &self.basis
    }

    pub fn contains(&self, x: &Matrix<Q>) -> bool {
        x.rows() == self.ambient && x.cols() == self.ambient && self.echelon.contains(&x.to_vector())
    }

    pub fn coordinates(&self, x: &Matrix<Q>) -> Option<Vec<Q>> {
        if x.rows() != self.ambient || x.cols() != self.ambient {
            return None;
        }
        self.echelon.coordinates(&x.to_vector())
    }

    /// `sum c_i b_i` for coefficients in any ring containing `Q`.
    pub fn element<T: Scalar>(&self, coeffs: &[T]) -> Matrix<T> {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = Matrix::zeros(self.ambient, self.ambient);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            out = out.add(&b.lift::<T>().scale(c));
        }
        out
    }

    pub fn contains_all(&self, other: &[Matrix<Q>]) -> bool {
        other.iter().all(|x| self.contains(x))
    }

    /// Whether both subspaces are equal (mutual containment).
    pub fn same_span(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_all(other.basis())
    }
}

/// A Lie subalgebra of `gl_N` with an optional invariant symmetric form.
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra {
    name: String,
    space: Subspace,
    form: Option<Matrix<Q>>,
}

impl MatrixLieAlgebra {
    /// Validates independence, bracket closure and form invariance.
    pub fn new(name: &str, ambient: usize, basis: Vec<Matrix<Q>>, form: Option<Matrix<Q>>) -> Result<Self> {
        let space = Subspace::new(ambient, basis)?;
        let alg = MatrixLieAlgebra { name: name.to_string(), space, form };
        alg.check_form()?;
        alg.check_closure()?;
        Ok(alg)
    }

    /// `gl_N` with the matrix-unit basis in lexicographic order.
    pub fn gl(n: usize) -> Self {
        let basis = (0..n * n).map(|k| Matrix::unit(n, n, k / n, k % n)).collect();
        MatrixLieAlgebra {
            name: format!("gl_{n}"),
            space: Subspace::new(n, basis).expect("matrix units are independent"),
            form: None,
        }
    }

    /// `so(V, F) = { x : x^t F + F x = 0 }` for a nondegenerate symmetric `F`,
    /// with the reduced-echelon kernel basis.
    pub fn so(form: &Matrix<Q>) -> Result<Self> {
        let n = form.rows();
        if !form.is_square() || form.transpose() != *form {
            return Err(Error::InvalidParams("form must be square and symmetric".into()));
        }
        if inverse(form).is_none() {
            return Err(Error::InvalidParams("form must be nondegenerate".into()));
        }
        let equations = Matrix::from_fn(n * n, n * n, |row, col| {
            let x = Matrix::<Q>::unit(n, n, col / n, col % n);
            let lhs = x.transpose().mul(form).add(&form.mul(&x));
            lhs.entries()[row].clone()
        });
        let basis = kernel_basis(&equations)
            .into_iter()
            .map(|v| Matrix::from_vec(n, n, v).expect("n^2 entries"))
            .collect();
        MatrixLieAlgebra::new(&format!("so_{n}"), n, basis, Some(form.clone()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ambient(&self) -> usize {
        self.space.ambient()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> &[Matrix<Q>] {
        self.space.basis()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn form(&self) -> Option<&Matrix<Q>> {
        self.form.as_ref()
    }

    pub fn contains(&self, x: &Matrix<Q>) -> bool {
        self.space.contains(x)
    }

    pub fn check_form(&self) -> Result<()> {
        let Some(f) = &self.form else {
            return Ok(());
        };
        for (i, b) in self.basis().iter().enumerate() {
            if !b.transpose().mul(f).add(&f.mul(b)).is_zero() {
                return Err(Error::Verification(format!(
                    "basis element {i} of {} does not preserve the form",
                    self.name
                )));
            }
        }
        Ok(())
    }

    /// Structure constants: `[b_i, b_j] = sum_k c[i][j][k] b_k`.
    pub fn structure_constants(&self) -> Result<Vec<Vec<Vec<Q>>>> {
        let b = self.basis();
        let mut out = vec![vec![Vec::new(); b.len()]; b.len()];
        for i in 0..b.len() {
            for j in 0..b.len() {
                if j < i {
                    out[i][j] = out[j][i].iter().map(|c: &Q| -c.clone()).collect();
                    continue;
                }
                let br = b[i].comm(&b[j]);
                out[i][j] = self.space.coordinates(&br).ok_or_else(|| {
                    Error::Verification(format!(
                        "{} is not closed: [b_{i}, b_{j}] is outside the span",
                        self.name
                    ))
                })?;
            }
        }
        Ok(out)
    }

    pub fn check_closure(&self) -> Result<()> {
        self.structure_constants().map(|_| ())
    }

    /// Jacobi identity on every basis triple, checked through the structure
    /// constants.
    pub fn check_jacobi(&self) -> Result<()> {
        let c = self.structure_constants()?;
        let d = self.dim();
        // [b_i, [b_j, b_k]] = sum_l c[j][k][l] [b_i, b_l] = sum_l sum_m c[j][k][l] c[i][l][m] b_m
        let nested = |i: usize, j: usize, k: usize, m: usize| -> Q {
            (0..d)
                .filter(|&l| !c[j][k][l].is_zero())
                .fold(Q::zero(), |acc, l| acc + &c[j][k][l] * &c[i][l][m])
        };
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    for m in 0..d {
                        let s = nested(i, j, k, m) + nested(j, k, i, m) + nested(k, i, j, m);
                        if !s.is_zero() {
                            return Err(Error::Verification(format!(
                                "Jacobi identity fails on ({i}, {j}, {k})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Involution `x -> A x A^{-1}` by an invertible `A` with `A^2` scalar.
#[derive(Clone, Debug)]
pub struct InvolutionData {
    conjugator: Matrix<Q>,
    inverse: Matrix<Q>,
}

impl InvolutionData {
    pub fn new(conjugator: Matrix<Q>) -> Result<Self> {
        let inv = inverse(&conjugator)
            .ok_or_else(|| Error::InvalidParams("involution conjugator is singular".into()))?;
        let sq = conjugator.mul(&conjugator);
        let c = sq.get(0, 0).clone();
        if sq != Matrix::identity(conjugator.rows()).scale(&c) {
            return Err(Error::InvalidParams("A^2 is not a scalar matrix".into()));
        }
        Ok(InvolutionData { conjugator, inverse: inv })
    }

    pub fn identity(n: usize) -> Self {
        InvolutionData { conjugator: Matrix::identity(n), inverse: Matrix::identity(n) }
    }

    pub fn conjugator(&self) -> &Matrix<Q> {
        &self.conjugator
    }

    pub fn apply(&self, x: &Matrix<Q>) -> Matrix<Q> {
        self.conjugator.mul(x).mul(&self.inverse)
    }

    /// Same action on matrices over any coefficient ring.
    pub fn apply_lifted<T: Scalar>(&self, x: &Matrix<T>) -> Matrix<T> {
        self.conjugator.lift::<T>().mul(x).mul(&self.inverse.lift())
    }
}

/// The `+1` and `-1` eigenspaces of the involution on `g`.
pub fn split_by_involution(g: &MatrixLieAlgebra, inv: &InvolutionData) -> Result<(Subspace, Subspace)> {
    let half = Q::new(1.into(), 2.into());
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (i, b) in g.basis().iter().enumerate() {
        let s = inv.apply(b);
        if !g.contains(&s) {
            return Err(Error::InvalidParams(format!(
                "involution does not preserve {} (basis element {i})",
                g.name()
            )));
        }
        if inv.apply(&s) != *b {
            return Err(Error::InvalidParams("conjugation is not an involution on g".into()));
        }
        plus.push(b.add(&s).scale(&half));
        minus.push(b.sub(&s).scale(&half));
    }
    let n = g.ambient();
    let g0 = Subspace::spanned_by(n, &plus);
    let g1 = Subspace::spanned_by(n, &minus);
    if g0.dim() + g1.dim() != g.dim() {
        return Err(Error::Internal("eigenspace dimensions do not add up".into()));
    }
    Ok((g0, g1))
}

/// Matrix of `z -> [z, x]` on `span(space)`, columns indexed by the basis.
pub fn ad_restricted<T: Scalar>(space: &[Matrix<T>], x: &Matrix<T>) -> Matrix<T> {
    let cols: Vec<Vec<T>> = space.iter().map(|z| z.comm(x).to_vector()).collect();
    let n = x.rows();
    Matrix::from_columns(n * n, &cols)
}

/// Basis of `{z in span(space) : [z, x] = 0}` in reduced-echelon coordinates.
pub fn centralizer_in<F: Field>(space: &[Matrix<F>], x: &Matrix<F>) -> Vec<Matrix<F>> {
    if space.is_empty() {
        return Vec::new();
    }
    let n = x.rows();
    kernel_basis(&ad_restricted(space, x))
        .into_iter()
        .map(|coeffs| {
            let mut z = Matrix::zeros(n, n);
            for (c, b) in coeffs.iter().zip(space) {
                if !c.is_zero() {
                    z = z.add(&b.scale(c));
                }
            }
            z
        })
        .collect()
}

/// Dimension of the centralizer of `x` in `span(space)`, over the fraction
/// field of the entry ring.
pub fn centralizer_dim<T: Scalar>(space: &[Matrix<T>], x: &Matrix<T>) -> usize
where
    Matrix<T>: Rank,
{
    if space.is_empty() {
        return 0;
    }
    space.len() - ad_restricted(space, x).rank()
}

pub fn is_nilpotent_element<T: Scalar>(x: &Matrix<T>) -> bool {
    is_nilpotent(x)
}

pub fn is_semisimple_element<F: Field>(x: &Matrix<F>) -> Result<bool> {
    is_semisimple(x)
}
