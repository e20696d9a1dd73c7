//! Characteristic and minimal polynomials, semisimplicity, and the additive
//! Jordan decomposition.

use super::elim::{inverse, Echelon};
use super::Matrix;
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::scalar::{Field, Scalar, Q};

/// `det(x I - m)` by Berkowitz's division-free algorithm, so it works over any
/// commutative ring, in particular over polynomial entries.
pub fn char_poly<T: Scalar>(m: &Matrix<T>) -> Result<UniPoly<T>> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "characteristic polynomial of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(UniPoly::one());
    }
    // Coefficients highest degree first for the trailing principal block.
    let mut poly = vec![T::one(), -m.get(n - 1, n - 1).clone()];
    for k in (0..n - 1).rev() {
        let s = n - k - 1;
        let mut toeplitz = Vec::with_capacity(s + 2);
        toeplitz.push(T::one());
        toeplitz.push(-m.get(k, k).clone());
        let mut v: Vec<T> = (k + 1..n).map(|i| m.get(i, k).clone()).collect();
        for step in 0..s {
            let dot = (0..s).fold(T::zero(), |acc, j| {
                let r = m.get(k, k + 1 + j);
                if r.is_zero() || v[j].is_zero() {
                    acc
                } else {
                    acc + r.clone() * v[j].clone()
                }
            });
            toeplitz.push(-dot);
            if step + 1 < s {
                v = (0..s)
                    .map(|i| {
                        (0..s).fold(T::zero(), |acc, j| {
                            let a = m.get(k + 1 + i, k + 1 + j);
                            if a.is_zero() || v[j].is_zero() {
                                acc
                            } else {
                                acc + a.clone() * v[j].clone()
                            }
                        })
                    })
                    .collect();
            }
        }
        let next: Vec<T> = (0..s + 2)
            .map(|i| {
                (0..=i.min(s)).fold(T::zero(), |acc, j| {
                    acc + toeplitz[i - j].clone() * poly[j].clone()
                })
            })
            .collect();
        poly = next;
    }
    poly.reverse();
    Ok(UniPoly::new(poly))
}

/// Minimal polynomial by the first linear dependency among `I, m, m^2, ...`.
pub fn min_poly<F: Field>(m: &Matrix<F>) -> Result<UniPoly<F>> {
    if !m.is_square() {
        return Err(Error::Dimension("minimal polynomial of a non-square matrix".into()));
    }
    let n = m.rows();
    let mut ech = Echelon::<F>::new(n * n);
    let mut power = Matrix::identity(n);
    loop {
        let v = power.to_vector();
        if let Some(c) = ech.coordinates(&v) {
            let mut coeffs: Vec<F> = c.into_iter().map(|x| -x).collect();
            coeffs.push(F::one());
            return Ok(UniPoly::new(coeffs));
        }
        ech.insert(&v);
        power = power.mul(m);
    }
}

/// Diagonalizable over the algebraic closure: the minimal polynomial is squarefree.
pub fn is_semisimple<F: Field>(m: &Matrix<F>) -> Result<bool> {
    Ok(min_poly(m)?.is_squarefree())
}

pub fn is_nilpotent<T: Scalar>(m: &Matrix<T>) -> bool {
    if !m.is_square() {
        return false;
    }
    let mut p = m.clone();
    let mut k = 1;
    while k < m.rows() && !p.is_zero() {
        p = p.mul(m);
        k += 1;
    }
    p.is_zero()
}

/// Additive Jordan decomposition `m = s + n` with `s` semisimple, `n`
/// nilpotent and `[s, n] = 0`, by Newton iteration on the squarefree part of
/// the characteristic polynomial. Both parts are polynomials in `m`.
pub fn jordan_chevalley(m: &Matrix<Q>) -> Result<(Matrix<Q>, Matrix<Q>)> {
    let p = char_poly(m)?.squarefree_part();
    let dp = p.derivative();
    let mut s = m.clone();
    for _ in 0..=m.rows().max(1) {
        let ps = p.eval_matrix(&s);
        if ps.is_zero() {
            let n = m.sub(&s);
            return Ok((s, n));
        }
        let inv = inverse(&dp.eval_matrix(&s))
            .ok_or_else(|| Error::Internal("derivative not invertible in Newton step".into()))?;
        s = s.sub(&ps.mul(&inv));
    }
    Err(Error::Internal("Newton iteration did not converge".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn m(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()).unwrap()
    }

    fn p(c: &[i64]) -> UniPoly<Q> {
        UniPoly::new(c.iter().map(|&v| q(v)).collect())
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(char_poly(&m(&[&[0, 1], &[0, 0]])).unwrap(), p(&[0, 0, 1]));
        assert_eq!(char_poly(&m(&[&[1, 0], &[0, -1]])).unwrap(), p(&[-1, 0, 1]));
        assert_eq!(char_poly(&m(&[&[2, 1], &[0, 2]])).unwrap(), p(&[4, -4, 1]));
    }

    #[test]
    fn min_poly_and_semisimple() {
        let j = m(&[&[2, 1], &[0, 2]]);
        assert_eq!(min_poly(&j).unwrap(), p(&[4, -4, 1]));
        assert!(!is_semisimple(&j).unwrap());
        assert!(is_semisimple(&m(&[&[1, 0], &[0, -1]])).unwrap());
        assert_eq!(min_poly(&Matrix::<Q>::identity(3)).unwrap(), p(&[-1, 1]));
        // rotation: eigenvalues +-i, still semisimple
        assert!(is_semisimple(&m(&[&[0, -1], &[1, 0]])).unwrap());
    }

    #[test]
    fn jordan_chevalley_block() {
        let a = m(&[&[2, 1], &[0, 2]]);
        let (s, n) = jordan_chevalley(&a).unwrap();
        assert_eq!(s, m(&[&[2, 0], &[0, 2]]));
        assert_eq!(n, m(&[&[0, 1], &[0, 0]]));
    }

    #[test]
    fn jordan_chevalley_mixed() {
        // diag(J_2(1), 3) conjugated by an upper unitriangular matrix
        let a = m(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 3]]);
        let g = m(&[&[1, 2, 1], &[0, 1, 1], &[0, 0, 1]]);
        let gi = inverse(&g).unwrap();
        let b = g.mul(&a).mul(&gi);
        let (s, n) = jordan_chevalley(&b).unwrap();
        assert!(is_semisimple(&s).unwrap());
        assert!(is_nilpotent(&n));
        assert!(s.bracket(&n).unwrap().is_zero());
        assert_eq!(s.add(&n), b);
        assert_eq!(gi.mul(&s).mul(&g), m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 3]]));
    }
}
