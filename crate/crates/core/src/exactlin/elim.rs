//! Elimination: reduced echelon forms, kernels, solves, and fraction-free rank.

use num_integer::Integer;
use num_traits::{One, Zero};

use super::Matrix;
use crate::scalar::{ExactDiv, Field, Q};

/// Reduced row echelon form and pivot columns. Pivot choice: first nonzero
/// entry at or below the current row, columns scanned left to right.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<F>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = F::one() / a[r][c].clone();
        for j in c..cols {
            a[r][j] = a[r][j].clone() * inv.clone();
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let factor = a[i][c].clone();
            for j in c..cols {
                if a[r][j].is_zero() {
                    continue;
                }
                a[i][j] = a[i][j].clone() - factor.clone() * a[r][j].clone();
            }
        }
        pivots.push(c);
        r += 1;
    }
    let out = Matrix::from_rows(a).unwrap_or_else(|_| Matrix::zeros(rows, cols));
    (out, pivots)
}

pub fn rank_over_field<F: Field>(m: &Matrix<F>) -> usize {
    rref(m).1.len()
}

/// Rank by fraction-free (Bareiss) elimination; every division is exact.
pub fn rank_fraction_free<T: ExactDiv>(m: &Matrix<T>) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<T>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let pivot = a[r][c].clone();
        for i in r + 1..rows {
            let lead = a[i][c].clone();
            for j in c + 1..cols {
                let num = pivot.clone() * a[i][j].clone() - lead.clone() * a[r][j].clone();
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss division must be exact");
            }
            a[i][c] = T::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Rank over `Q`: rows are scaled to integers, then eliminated fraction-free.
pub fn rank_q(m: &Matrix<Q>) -> usize {
    let scaled = Matrix::from_fn(m.rows(), m.cols(), |i, j| {
        let l = m
            .row(i)
            .iter()
            .fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
        m.get(i, j).clone() * Q::from_integer(l)
    });
    rank_fraction_free(&scaled)
}

/// Basis of the right kernel, one vector per free column of the RREF.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let (r, pivots) = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![F::zero(); cols];
            v[free] = F::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free).clone();
            }
            v
        })
        .collect()
}

/// A solution of `m x = b` with free variables set to zero, if one exists.
pub fn solve<F: Field>(m: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    assert_eq!(b.len(), m.rows());
    let cols = m.cols();
    let aug = Matrix::from_fn(m.rows(), cols + 1, |i, j| {
        if j < cols {
            m.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r.get(row, cols).clone();
    }
    Some(x)
}

pub fn inverse<F: Field>(m: &Matrix<F>) -> Option<Matrix<F>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            F::one()
        } else {
            F::zero()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.submatrix(0..n, n..2 * n))
}

/// Incrementally built echelon basis of a span that remembers how each stored
/// row was assembled from the inserted vectors.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    dim: usize,
    rows: Vec<EchelonRow<F>>,
    inserted: usize,
}

#[derive(Clone, Debug)]
struct EchelonRow<F> {
    pivot: usize,
    v: Vec<F>,
    combo: Vec<F>,
}

impl<F: Field> Echelon<F> {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new(), inserted: 0 }
    }

    pub fn len(&self) -> usize {
        self.inserted
    }

    pub fn is_empty(&self) -> bool {
        self.inserted == 0
    }

    /// Residual of `v` after reduction and the coefficients `c` with
    /// `v = sum c_k inserted_k + residual`.
    pub fn reduce(&self, v: &[F]) -> (Vec<F>, Vec<F>) {
        assert_eq!(v.len(), self.dim);
        let mut res = v.to_vec();
        let mut coeffs = vec![F::zero(); self.inserted];
        for row in &self.rows {
            let c = res[row.pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (x, y) in res.iter_mut().zip(&row.v) {
                if !y.is_zero() {
                    *x = x.clone() - c.clone() * y.clone();
                }
            }
            for (x, y) in coeffs.iter_mut().zip(&row.combo) {
                if !y.is_zero() {
                    *x = x.clone() + c.clone() * y.clone();
                }
            }
        }
        (res, coeffs)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).0.iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in terms of the inserted vectors, if `v` is in the span.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let (res, coeffs) = self.reduce(v);
        res.iter().all(Zero::is_zero).then_some(coeffs)
    }

    /// Inserts `v` if it is independent of the current span.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let (res, coeffs) = self.reduce(v);
        let Some(pivot) = res.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = F::one() / res[pivot].clone();
        let v: Vec<F> = res.into_iter().map(|x| x * inv.clone()).collect();
        for row in &mut self.rows {
            row.combo.push(F::zero());
        }
        let mut combo: Vec<F> = coeffs.into_iter().map(|c| -c * inv.clone()).collect();
        combo.push(inv);
        self.rows.push(EchelonRow { pivot, v, combo });
        self.inserted += 1;
        true
    }
}

/// Indices of a maximal linearly independent subfamily, chosen greedily in order.
pub fn independent_subset<F: Field>(dim: usize, vectors: &[Vec<F>]) -> Vec<usize> {
    let mut ech = Echelon::new(dim);
    vectors
        .iter()
        .enumerate()
        .filter_map(|(i, v)| ech.insert(v).then_some(i))
        .collect()
}

/// Generic wrapper so callers can ask any exact matrix for its rank.
pub trait Rank {
    fn rank(&self) -> usize;
}

impl Rank for Matrix<Q> {
    fn rank(&self) -> usize {
        rank_q(self)
    }
}

impl Rank for Matrix<crate::poly::MPoly> {
    fn rank(&self) -> usize {
        rank_fraction_free(self)
    }
}

impl Rank for Matrix<crate::poly::RatFunc> {
    fn rank(&self) -> usize {
        rank_over_field(self)
    }
}

/// Converts polynomial entries to rational functions.
pub fn to_ratfunc(m: &Matrix<crate::poly::MPoly>) -> Matrix<crate::poly::RatFunc> {
    m.map(|p| crate::poly::RatFunc::from_poly(p.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn m(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::<Q>::zeros(3, 3).rank(), 0);
        assert_eq!(Matrix::<Q>::identity(4).rank(), 4);
        // (X|Y) for n=2, m=3: x_ij = 1 iff i=j, y_ij = 1 iff i=j+1
        let xy = m(&[&[1, 0, 0, 0], &[0, 1, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(xy.rank(), 3);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::<Q>::identity(3)).is_empty());
        let k = kernel_basis(&Matrix::<Q>::zeros(2, 4));
        assert_eq!(k.len(), 4);
        for (i, v) in k.iter().enumerate() {
            for (j, x) in v.iter().enumerate() {
                assert_eq!(*x, if i == j { q(1) } else { q(0) });
            }
        }
        // hand solution of [[1,1],[1,1]] v = 0
        let k = kernel_basis(&m(&[&[1, 1], &[1, 1]]));
        assert_eq!(k, vec![vec![q(-1), q(1)]]);
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let x = solve(&a, &[q(3), q(2)]).unwrap();
        assert_eq!(x, vec![q(1), q(1)]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv.mul(&a), Matrix::identity(2));
        assert!(inverse(&m(&[&[1, 1], &[1, 1]])).is_none());
        assert!(solve(&m(&[&[1, 1], &[1, 1]]), &[q(1), q(2)]).is_none());
    }

    #[test]
    fn echelon_coordinates() {
        let mut e = Echelon::<Q>::new(3);
        assert!(e.insert(&[q(1), q(1), q(0)]));
        assert!(e.insert(&[q(0), q(1), q(1)]));
        assert!(!e.insert(&[q(1), q(2), q(1)]));
        assert_eq!(e.coordinates(&[q(2), q(3), q(1)]).unwrap(), vec![q(2), q(1)]);
        assert!(e.coordinates(&[q(0), q(0), q(1)]).is_none());
    }
}
