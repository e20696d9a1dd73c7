//! The equivariant quadratic maps `S± -> V` and the quartic invariant `f`.

use num_traits::{One, Zero};

use super::clifford::{dual_index, CliffordModel, HALF_DIM, VECTOR_DIM};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, SparseEchelon, SparseRow};
use crate::poly::{MPoly, Monomial};
use crate::scalar::Q;

const SYM_ENTRIES: usize = HALF_DIM * (HALF_DIM + 1) / 2;

/// `q_i(s) = s^t Q_i s` for the components `i` of `V`, for both half-spinor
/// modules, together with the metric of `V`.
#[derive(Clone, Debug)]
pub struct QuarticInvariant {
    pub quadratic_map_plus: Vec<Matrix<Q>>,
    pub quadratic_map_minus: Vec<Matrix<Q>>,
    pub metric: Matrix<Q>,
    /// Dimensions of the solution spaces for `S+` and `S-`.
    pub kernel_dims: [usize; 2],
    inverse_metric: Matrix<Q>,
}

fn sym_index(a: usize, b: usize) -> usize {
    let (a, b) = (a.min(b), a.max(b));
    a * HALF_DIM - a * (a + 1) / 2 + b
}

fn unknown(i: usize, a: usize, b: usize) -> usize {
    i * SYM_ENTRIES + sym_index(a, b)
}

fn add_to(row: &mut SparseRow, col: usize, v: Q) {
    let entry = row.entry(col).or_insert_with(Q::zero);
    *entry += v;
}

/// Solves `Q_i ρ(z) + ρ(z)^t Q_i = Σ_j π(z)_ij Q_j` for all 45 generators
/// over the `10 * 136` entries of the symmetric matrices `Q_i`. Returns the
/// normalized generator and the dimension of the solution space.
fn solve_block(gens: &[Matrix<Q>], vector_action: &[Matrix<Q>]) -> (Vec<Matrix<Q>>, usize) {
    let mut system = SparseEchelon::new(VECTOR_DIM * SYM_ENTRIES);
    for (rho, pi) in gens.iter().zip(vector_action) {
        for i in 0..VECTOR_DIM {
            for a in 0..HALF_DIM {
                for b in a..HALF_DIM {
                    let mut row = SparseRow::new();
                    for c in 0..HALF_DIM {
                        if !rho.get(c, b).is_zero() {
                            add_to(&mut row, unknown(i, a, c), rho.get(c, b).clone());
                        }
                        if !rho.get(c, a).is_zero() {
                            add_to(&mut row, unknown(i, c, b), rho.get(c, a).clone());
                        }
                    }
                    for j in 0..VECTOR_DIM {
                        if !pi.get(i, j).is_zero() {
                            add_to(&mut row, unknown(j, a, b), -pi.get(i, j).clone());
                        }
                    }
                    system.add_equation(row);
                }
            }
        }
    }
    let kernel = system.kernel();
    let dim = kernel.len();
    let Some(v) = kernel.into_iter().next() else {
        return (Vec::new(), 0);
    };
    let lead = v.iter().find(|c| !c.is_zero()).cloned().unwrap_or_else(Q::one);
    let maps = (0..VECTOR_DIM)
        .map(|i| {
            Matrix::from_fn(HALF_DIM, HALF_DIM, |a, b| &v[unknown(i, a, b)] / &lead)
        })
        .collect();
    (maps, dim)
}

/// Solves for the equivariant quadratic maps on both half-spinor modules;
/// each solution space must be one-dimensional.
pub fn solve_equivariant_quadratic(model: &CliffordModel) -> Result<QuarticInvariant> {
    let (plus, dim_plus) = solve_block(model.so10_plus(), model.vector_action());
    let (minus, dim_minus) = solve_block(model.so10_minus(), model.vector_action());
    if dim_plus != 1 || dim_minus != 1 {
        return Err(Error::Internal(format!(
            "equivariant quadratic maps have dimensions {dim_plus} and {dim_minus}, expected 1"
        )));
    }
    let metric = model.metric().clone();
    let inverse_metric = crate::exactlin::inverse(&metric).ok_or_else(|| Error::Internal("singular metric".into()))?;
    Ok(QuarticInvariant {
        quadratic_map_plus: plus,
        quadratic_map_minus: minus,
        metric,
        kernel_dims: [dim_plus, dim_minus],
        inverse_metric,
    })
}

fn quadratic_form<T: Clone>(m: &Matrix<Q>, s: &[T], mul: impl Fn(&Q, &T, &T) -> T, zero: T, add: impl Fn(T, T) -> T) -> T {
    let mut acc = zero;
    for a in 0..HALF_DIM {
        for b in 0..HALF_DIM {
            let c = m.get(a, b);
            if !c.is_zero() {
                acc = add(acc, mul(c, &s[a], &s[b]));
            }
        }
    }
    acc
}

impl QuarticInvariant {
    /// `g^{ij}`, the inverse of the metric of `V`.
    pub fn inverse_metric(&self) -> &Matrix<Q> {
        &self.inverse_metric
    }

    fn maps(&self, plus: bool) -> &[Matrix<Q>] {
        if plus {
            &self.quadratic_map_plus
        } else {
            &self.quadratic_map_minus
        }
    }

    /// `q(s) in V` for `s` in `S+` or `S-`.
    pub fn quadratic(&self, s: &[Q], plus: bool) -> Vec<Q> {
        self.maps(plus)
            .iter()
            .map(|m| quadratic_form(m, s, |c, x, y| c * x * y, Q::zero(), |a, b| a + b))
            .collect()
    }

    /// `q(s)` for a vector of polynomials.
    pub fn quadratic_poly(&self, s: &[MPoly], plus: bool) -> Vec<MPoly> {
        self.maps(plus)
            .iter()
            .map(|m| quadratic_form(m, s, |c, x, y| (x * y).scale(c), MPoly::zero(), |a, b| a + b))
            .collect()
    }

    /// `g^{-1}(v, w)`.
    pub fn pair_vectors<T: Clone + Zero>(&self, v: &[T], w: &[T], mul: impl Fn(&Q, &T, &T) -> T) -> T {
        let mut acc = T::zero();
        for i in 0..VECTOR_DIM {
            let j = dual_index(i);
            acc = acc + mul(self.inverse_metric.get(i, j), &v[i], &w[j]);
        }
        acc
    }

    /// `f(s, u) = Σ g^{ij} q_i(s) q_j(u)` on `S+ x S+`.
    pub fn f(&self, s: &[Q], u: &[Q]) -> Q {
        self.pair_vectors(&self.quadratic(s, true), &self.quadratic(u, true), |c, x, y| c * x * y)
    }

    /// `f` as a polynomial in the given coordinate vectors.
    pub fn f_poly(&self, s: &[MPoly], u: &[MPoly]) -> MPoly {
        self.pair_vectors(&self.quadratic_poly(s, true), &self.quadratic_poly(u, true), |c, x, y| (x * y).scale(c))
    }

    /// Residual of the defining equations of the quadratic map for one
    /// generator; zero when equivariant.
    pub fn equivariance_residual(&self, rho: &Matrix<Q>, pi: &Matrix<Q>, plus: bool) -> Vec<Matrix<Q>> {
        let maps = self.maps(plus);
        (0..VECTOR_DIM)
            .map(|i| {
                let lhs = maps[i].mul(rho).add(&rho.transpose().mul(&maps[i]));
                (0..VECTOR_DIM).fold(lhs, |acc, j| acc.sub(&maps[j].scale(pi.get(i, j))))
            })
            .collect()
    }

    /// Checks `Df(s, u) (ρ(z) s, ρ(z) u) = 0`, the derivative of
    /// `f(exp(τ ρ(z)) s, exp(τ ρ(z)) u)` at `τ = 0`, as a polynomial identity
    /// in generic `s, u` for one generator `ρ(z)` on `S+`.
    pub fn infinitesimal_invariance(&self, rho: &Matrix<Q>) -> bool {
        let (s, u) = generic_pair();
        let derived: Vec<Matrix<Q>> =
            self.quadratic_map_plus.iter().map(|m| m.mul(rho).add(&rho.transpose().mul(m))).collect();
        let along = |v: &[MPoly]| -> Vec<MPoly> {
            derived
                .iter()
                .map(|m| quadratic_form(m, v, |c, x, y| (x * y).scale(c), MPoly::zero(), |a, b| a + b))
                .collect()
        };
        let (qs, qu) = (self.quadratic_poly(&s, true), self.quadratic_poly(&u, true));
        let (ds, du) = (along(&s), along(&u));
        let mul = |c: &Q, x: &MPoly, y: &MPoly| (x * y).scale(c);
        (self.pair_vectors(&ds, &qu, mul) + self.pair_vectors(&qs, &du, mul)).is_zero()
    }

    /// Every monomial of `f(s, u)` has degree 2 in `s` and 2 in `u`, so the
    /// grading scalar rescales `f` by a nonzero factor.
    pub fn is_bihomogeneous(&self) -> bool {
        let (s, u) = generic_pair();
        self.f_poly(&s, &u).terms().all(|(m, _)| {
            let ds: u32 = (0..HALF_DIM).map(|v| m.exp(v)).sum();
            let du: u32 = (HALF_DIM..2 * HALF_DIM).map(|v| m.exp(v)).sum();
            ds == 2 && du == 2
        })
    }

    /// Expands `f(a w1 + b w2, a' w1 + b' w2)` in the four coefficients and
    /// reads off the coefficient of each of the nine monomials of bidegree
    /// `(2, 2)`. Returns the expansion and the number of coefficients that
    /// vanish; the identity holds when the expansion is zero and all nine do.
    pub fn restricted_to_span(&self, w1: &[Q], w2: &[Q]) -> (MPoly, usize) {
        let combo = |x: usize, y: usize| -> Vec<MPoly> {
            w1.iter()
                .zip(w2)
                .map(|(c1, c2)| MPoly::var(x).scale(c1) + MPoly::var(y).scale(c2))
                .collect()
        };
        let qs = self.quadratic_poly(&combo(0, 1), true);
        let qu = self.quadratic_poly(&combo(2, 3), true);
        let total = self.pair_vectors(&qs, &qu, |c, x, y| (x * y).scale(c));
        let coefficient = |m: &Monomial| total.terms().find(|(k, _)| *k == m).map(|(_, c)| c.clone()).unwrap_or_default();
        let vanishing = (0..=2u32)
            .flat_map(|i| (0..=2u32).map(move |j| Monomial::from_exps(vec![i, 2 - i, j, 2 - j])))
            .filter(|m| coefficient(m).is_zero())
            .count();
        (total, vanishing)
    }
}

fn generic_pair() -> (Vec<MPoly>, Vec<MPoly>) {
    ((0..HALF_DIM).map(MPoly::var).collect(), (HALF_DIM..2 * HALF_DIM).map(MPoly::var).collect())
}
