//! The Clifford algebra of a 10-dimensional split quadratic space, its
//! 32-dimensional spinor module and the two half-spinor modules of `so10`.
//!
//! Basis vectors `0..5` of `V` are `e_k` and `9 - k` is the dual `f_k`; the
//! metric pairs `e_k` with `f_k` by `1/2`, so that `Γ(e_k) = a_k^†` and
//! `Γ(f_k) = a_k` are Jordan-Wigner fermion operators with entries in
//! `{0, ±1}`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::liealg::Subspace;
use crate::scalar::{q, qf, Q};

pub const VECTOR_DIM: usize = 10;
pub const MODES: usize = 5;
pub const SPIN_DIM: usize = 32;
pub const HALF_DIM: usize = 16;
pub const SO10_DIM: usize = 45;

/// A simultaneous eigenvector of the Cartan subalgebra, with its weight in
/// the `ε`-basis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightVector {
    #[serde(with = "crate::exactlin::rational")]
    pub coordinates: Vec<Q>,
    #[serde(with = "crate::exactlin::rational")]
    pub vector: Vec<Q>,
}

#[derive(Clone, Debug)]
pub struct CliffordModel {
    gammas: Vec<Matrix<Q>>,
    metric: Matrix<Q>,
    plus: Vec<usize>,
    minus: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    so10: Vec<Matrix<Q>>,
    so10_plus: Vec<Matrix<Q>>,
    so10_minus: Vec<Matrix<Q>>,
    vector_action: Vec<Matrix<Q>>,
}

fn occupation(state: usize, mode: usize) -> bool {
    state >> mode & 1 == 1
}

fn creation(mode: usize) -> Matrix<Q> {
    let mut m = Matrix::zeros(SPIN_DIM, SPIN_DIM);
    for state in 0..SPIN_DIM {
        if occupation(state, mode) {
            continue;
        }
        let parity = (0..mode).filter(|&j| occupation(state, j)).count();
        m.set(state | 1 << mode, state, if parity % 2 == 0 { q(1) } else { q(-1) });
    }
    m
}

fn restrict(m: &Matrix<Q>, idx: &[usize]) -> Matrix<Q> {
    Matrix::from_fn(idx.len(), idx.len(), |i, j| m.get(idx[i], idx[j]).clone())
}

fn leaks(m: &Matrix<Q>, from: &[usize], to: &[usize]) -> bool {
    from.iter().any(|&j| to.iter().any(|&i| !m.get(i, j).is_zero()))
}

/// Index of the `e_k` partner of vector index `i`.
pub fn dual_index(i: usize) -> usize {
    VECTOR_DIM - 1 - i
}

impl CliffordModel {
    pub fn gammas(&self) -> &[Matrix<Q>] {
        &self.gammas
    }

    pub fn metric(&self) -> &Matrix<Q> {
        &self.metric
    }

    /// Spinor basis states spanning `S+` and `S-`, in increasing order.
    pub fn halfspinor_plus(&self) -> &[usize] {
        &self.plus
    }

    pub fn halfspinor_minus(&self) -> &[usize] {
        &self.minus
    }

    /// The index pairs `(i, j)`, `i < j`, of the `so10` basis.
    pub fn generator_pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `ρ(z_ij) = [Γ_i, Γ_j] / 4` on the full spinor module.
    pub fn so10(&self) -> &[Matrix<Q>] {
        &self.so10
    }

    pub fn so10_plus(&self) -> &[Matrix<Q>] {
        &self.so10_plus
    }

    pub fn so10_minus(&self) -> &[Matrix<Q>] {
        &self.so10_minus
    }

    /// The action of each generator on `V`, read off from
    /// `[ρ(z), Γ(v)] = Γ(z v)`.
    pub fn vector_action(&self) -> &[Matrix<Q>] {
        &self.vector_action
    }

    /// Position in the `so10` basis of the generator for the pair `(i, j)`.
    pub fn generator_index(&self, i: usize, j: usize) -> Option<usize> {
        self.pairs.iter().position(|&p| p == (i.min(j), i.max(j)))
    }

    /// `H_k = 2 ρ(z_{k, dual(k)})`, acting on `e_k` by `1` and on `f_k` by `-1`.
    pub fn cartan(&self) -> Vec<Matrix<Q>> {
        (0..MODES)
            .map(|k| self.so10[self.generator_index(k, dual_index(k)).expect("cartan pair")].scale(&q(2)))
            .collect()
    }

    /// The Cartan element with the given `ε`-values.
    pub fn cartan_element(&self, eps: &[Q]) -> Matrix<Q> {
        let h = self.cartan();
        eps.iter().zip(&h).fold(Matrix::zeros(SPIN_DIM, SPIN_DIM), |acc, (c, hk)| acc.add(&hk.scale(c)))
    }

    fn block(&self, plus: bool) -> &[usize] {
        if plus {
            &self.plus
        } else {
            &self.minus
        }
    }

    /// Restriction of a spinor operator to `S+` or `S-`.
    pub fn restrict(&self, m: &Matrix<Q>, plus: bool) -> Matrix<Q> {
        restrict(m, self.block(plus))
    }

    /// Weight vectors of `S+` or `S-`, verified as eigenvectors of every
    /// Cartan generator.
    pub fn weights(&self, plus: bool) -> Result<Vec<WeightVector>> {
        let h: Vec<Matrix<Q>> = self.cartan().iter().map(|m| self.restrict(m, plus)).collect();
        (0..HALF_DIM)
            .map(|i| {
                let mut vector = vec![Q::zero(); HALF_DIM];
                vector[i] = Q::one();
                self.weight_of(&h, vector)
            })
            .collect()
    }

    fn weight_of(&self, h: &[Matrix<Q>], vector: Vec<Q>) -> Result<WeightVector> {
        let pivot = vector.iter().position(|c| !c.is_zero()).ok_or_else(|| Error::Precondition("zero vector".into()))?;
        let mut coordinates = Vec::with_capacity(MODES);
        for hk in h {
            let image = hk.mul_vec(&vector);
            let lambda = &image[pivot] / &vector[pivot];
            if image.iter().zip(&vector).any(|(a, b)| *a != &lambda * b) {
                return Err(Error::Precondition("vector is not a weight vector".into()));
            }
            coordinates.push(lambda);
        }
        Ok(WeightVector { coordinates, vector })
    }

    /// The weight vector of `S+` with the given `ε`-coordinates.
    pub fn plus_weight_vector(&self, coordinates: &[Q]) -> Result<WeightVector> {
        self.weights(true)?
            .into_iter()
            .find(|w| w.coordinates == coordinates)
            .ok_or_else(|| Error::Precondition("no such weight in S+".into()))
    }

    /// Checks the Clifford relations for all 55 pairs, the block structure,
    /// and that the restricted generators realize `so10`.
    pub fn check(&self) -> Result<()> {
        let id = Matrix::identity(SPIN_DIM);
        for i in 0..VECTOR_DIM {
            for j in i..VECTOR_DIM {
                let anti = self.gammas[i].mul(&self.gammas[j]).add(&self.gammas[j].mul(&self.gammas[i]));
                if anti != id.scale(&(q(2) * self.metric.get(i, j))) {
                    return Err(Error::Internal(format!("Clifford relation fails for ({i}, {j})")));
                }
            }
        }
        for z in &self.so10 {
            if leaks(z, &self.plus, &self.minus) || leaks(z, &self.minus, &self.plus) {
                return Err(Error::Internal("so10 generator mixes the half-spinor blocks".into()));
            }
        }
        for (name, gens) in [("S+", &self.so10_plus), ("S-", &self.so10_minus)] {
            let span = Subspace::spanned_by(HALF_DIM, gens);
            if span.dim() != SO10_DIM {
                return Err(Error::Internal(format!("restricted generators on {name} are dependent")));
            }
            for a in gens.iter() {
                for b in gens.iter() {
                    if !span.contains(&a.comm(b)) {
                        return Err(Error::Internal(format!("restricted generators on {name} are not closed")));
                    }
                }
            }
        }
        for z in &self.vector_action {
            if z.transpose().mul(&self.metric).add(&self.metric.mul(z)) != Matrix::zeros(VECTOR_DIM, VECTOR_DIM) {
                return Err(Error::Internal("vector action does not preserve the metric".into()));
            }
        }
        Ok(())
    }
}

/// Builds the model and checks all of its invariants.
pub fn build_clifford10() -> Result<CliffordModel> {
    let mut gammas = vec![Matrix::zeros(SPIN_DIM, SPIN_DIM); VECTOR_DIM];
    let mut metric = Matrix::zeros(VECTOR_DIM, VECTOR_DIM);
    for k in 0..MODES {
        let up = creation(k);
        gammas[dual_index(k)] = up.transpose();
        gammas[k] = up;
        metric.set(k, dual_index(k), qf(1, 2));
        metric.set(dual_index(k), k, qf(1, 2));
    }
    let odd = |s: &usize| s.count_ones() % 2 == 1;
    let plus: Vec<usize> = (0..SPIN_DIM).filter(odd).collect();
    let minus: Vec<usize> = (0..SPIN_DIM).filter(|s| !odd(s)).collect();
    let pairs: Vec<(usize, usize)> =
        (0..VECTOR_DIM).flat_map(|i| (i + 1..VECTOR_DIM).map(move |j| (i, j))).collect();
    let so10: Vec<Matrix<Q>> = pairs.iter().map(|&(i, j)| gammas[i].comm(&gammas[j]).scale(&qf(1, 4))).collect();
    let gamma_span = Subspace::new(SPIN_DIM, gammas.clone())?;
    let mut vector_action = Vec::with_capacity(SO10_DIM);
    for z in &so10 {
        let mut action = Matrix::zeros(VECTOR_DIM, VECTOR_DIM);
        for (l, g) in gammas.iter().enumerate() {
            let coords = gamma_span
                .coordinates(&z.comm(g))
                .ok_or_else(|| Error::Internal("[ρ(z), Γ] is not a gamma combination".into()))?;
            for (k, c) in coords.into_iter().enumerate() {
                action.set(k, l, c);
            }
        }
        vector_action.push(action);
    }
    let so10_plus = so10.iter().map(|z| restrict(z, &plus)).collect();
    let so10_minus = so10.iter().map(|z| restrict(z, &minus)).collect();
    let model = CliffordModel { gammas, metric, plus, minus, pairs, so10, so10_plus, so10_minus, vector_action };
    model.check()?;
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn anticomm(a: &Matrix<Q>, b: &Matrix<Q>) -> Matrix<Q> {
        a.mul(b).add(&b.mul(a))
    }

    #[test]
    fn creation_operators_satisfy_car() {
        let ops: Vec<_> = (0..MODES).map(creation).collect();
        for i in 0..MODES {
            for j in 0..MODES {
                assert!(anticomm(&ops[i], &ops[j]).is_zero());
                let expected = if i == j { Matrix::identity(SPIN_DIM) } else { Matrix::zeros(SPIN_DIM, SPIN_DIM) };
                assert_eq!(anticomm(&ops[i], &ops[j].transpose()), expected);
            }
        }
    }

    #[test]
    fn dual_index_is_an_involution_without_fixed_points() {
        for i in 0..VECTOR_DIM {
            assert_eq!(dual_index(dual_index(i)), i);
            assert_ne!(dual_index(i), i);
        }
        assert_eq!(dual_index(0), 9);
    }

    #[test]
    fn restriction_and_leak_detection() {
        let a = creation(0);
        assert!(leaks(&a, &[0], &[1]));
        assert!(!leaks(&a, &[1], &[0, 2, 3]));
        assert_eq!(restrict(&a, &[0, 1]), Matrix::from_rows(vec![vec![q(0), q(0)], vec![q(1), q(0)]]).unwrap());
    }
}
