//! Sparse elimination over `Q` for large, very sparse homogeneous systems.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalar::Q;

pub type SparseRow = BTreeMap<usize, Q>;

/// Echelon form of a homogeneous system built one equation at a time. Each
/// stored row is normalized so that its smallest column has coefficient one,
/// and no two stored rows share that leading column.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    unknowns: usize,
    rows: BTreeMap<usize, SparseRow>,
}

impl SparseEchelon {
    pub fn new(unknowns: usize) -> Self {
        SparseEchelon { unknowns, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    /// Adds the equation `sum row[j] x_j = 0`. Returns whether it was new.
    pub fn add_equation(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some((&lead, lead_coeff)) = row.iter().next() else {
                return false;
            };
            match self.rows.get(&lead) {
                Some(pivot_row) => {
                    let factor = lead_coeff.clone();
                    for (j, v) in pivot_row {
                        let entry = row.entry(*j).or_insert_with(Q::zero);
                        *entry -= &factor * v;
                        if entry.is_zero() {
                            row.remove(j);
                        }
                    }
                }
                None => {
                    let inv = lead_coeff.recip();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.rows.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Basis of the solution space, one vector per free unknown, in the
    /// same convention as the dense reduced echelon kernel.
    pub fn kernel(&self) -> Vec<Vec<Q>> {
        // back substitution: reduce every stored row against the rows with
        // larger leading columns, processed from the right
        let mut reduced: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (&lead, row) in self.rows.iter().rev() {
            let mut row = row.clone();
            let pivots_in_row: Vec<usize> = row
                .keys()
                .copied()
                .filter(|j| *j != lead && reduced.contains_key(j))
                .collect();
            for p in pivots_in_row {
                let Some(factor) = row.get(&p).cloned() else {
                    continue;
                };
                for (j, v) in &reduced[&p] {
                    let entry = row.entry(*j).or_insert_with(Q::zero);
                    *entry -= &factor * v;
                    if entry.is_zero() {
                        row.remove(j);
                    }
                }
            }
            reduced.insert(lead, row);
        }
        let mut out = Vec::new();
        for free in (0..self.unknowns).filter(|j| !self.rows.contains_key(j)) {
            let mut v = vec![Q::zero(); self.unknowns];
            v[free] = Q::one();
            for (&lead, row) in &reduced {
                if let Some(c) = row.get(&free) {
                    v[lead] = -c.clone();
                }
            }
            out.push(v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{kernel_basis, Matrix};
    use crate::scalar::q;

    #[test]
    fn matches_dense_kernel() {
        let dense = Matrix::from_rows(vec![
            vec![q(1), q(2), q(0), q(-1)],
            vec![q(2), q(4), q(1), q(0)],
            vec![q(3), q(6), q(1), q(-1)],
        ])
        .unwrap();
        let mut sp = SparseEchelon::new(4);
        for i in 0..3 {
            let row: SparseRow = dense.row(i).iter().cloned().enumerate().collect();
            sp.add_equation(row);
        }
        assert_eq!(sp.rank(), 2);
        assert_eq!(sp.kernel(), kernel_basis(&dense));
    }
}
