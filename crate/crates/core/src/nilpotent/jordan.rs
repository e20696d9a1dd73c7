//! Representatives of ab-diagrams and σ-adapted Jordan bases.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::diagram::AbDiagram;
use super::triple::kr_triple;
use crate::error::{Error, Result};
use crate::exactlin::{inverse, is_nilpotent, kernel_basis, rank_q, Matrix};
use crate::scalar::{q, Q};
use crate::sympair::{Family, SymPair};

/// Concrete σ-adapted Jordan structure of a nilpotent `e in g1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JordanData {
    /// Cyclic vectors `w_i`.
    #[serde(with = "crate::exactlin::rational")]
    pub cyclic_vectors: Vec<Vec<Q>>,
    /// `d_i`, so that `e^{d_i} w_i != 0 = e^{d_i + 1} w_i`.
    pub heights: Vec<usize>,
    /// The involution `i -> i*`.
    pub pairing: Vec<usize>,
    /// Row strings: the letters of `e^s w_i` for `s = 0..=d_i`.
    pub types: Vec<String>,
    /// Bases `e^s w_i` of the cyclic spaces `V_i`.
    #[serde(with = "crate::exactlin::rational")]
    pub spaces: Vec<Vec<Vec<Q>>>,
}

fn require_so_so(pair: &SymPair) -> Result<(&Matrix<Q>, &Matrix<Q>)> {
    if pair.family() != Family::SoSo {
        return Err(Error::InvalidParams(format!(
            "nilpotent Jordan data is implemented for SO_SO only, not {}",
            pair.family().tag()
        )));
    }
    let form = pair.algebra().form().ok_or_else(|| Error::Internal("SO_SO pair without a form".into()))?;
    Ok((form, pair.involution().conjugator()))
}

fn require_nilpotent_in_g1(e: &Matrix<Q>, pair: &SymPair) -> Result<()> {
    if e.rows() != pair.ambient() || !e.is_square() {
        return Err(Error::Dimension(format!("expected a {0}x{0} matrix", pair.ambient())));
    }
    if !pair.g1().contains(e) {
        return Err(Error::Precondition("e is not in g1".into()));
    }
    if !is_nilpotent(e) {
        return Err(Error::Precondition("e is not nilpotent".into()));
    }
    Ok(())
}

fn bilinear(form: &Matrix<Q>, x: &[Q], y: &[Q]) -> Q {
    x.iter().zip(form.mul_vec(y)).map(|(a, b)| a * b).sum()
}

/// `a` for the `-1` eigenspace of the involution, `b` for `+1`.
fn letter(inv: &Matrix<Q>, v: &[Q]) -> Result<char> {
    let image = inv.mul_vec(v);
    if image.iter().zip(v).all(|(x, y)| *x == -y) {
        Ok('a')
    } else if image.as_slice() == v {
        Ok('b')
    } else {
        Err(Error::Internal("vector is not an eigenvector of the involution".into()))
    }
}

impl JordanData {
    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    pub fn diagram(&self) -> Result<AbDiagram> {
        AbDiagram::new(self.types.clone())
    }

    /// Exact check of every structural invariant against `e`.
    pub fn check(&self, e: &Matrix<Q>, pair: &SymPair) -> Result<()> {
        let (form, inv) = require_so_so(pair)?;
        let k = self.len();
        let lens = [self.cyclic_vectors.len(), self.pairing.len(), self.types.len(), self.spaces.len()];
        if lens.iter().any(|&l| l != k) {
            return Err(Error::Verification("inconsistent Jordan data lengths".into()));
        }
        let mut all = Vec::new();
        for i in 0..k {
            let d = self.heights[i];
            let space = &self.spaces[i];
            if space.len() != d + 1 || space[0] != self.cyclic_vectors[i] {
                return Err(Error::Verification(format!("space {i} is not spanned by its string")));
            }
            for s in 0..d {
                if e.mul_vec(&space[s]) != space[s + 1] {
                    return Err(Error::Verification(format!("space {i} is not an e-string")));
                }
            }
            if e.mul_vec(&space[d]).iter().any(|x| !x.is_zero()) {
                return Err(Error::Verification(format!("e^(d+1) w_{i} != 0")));
            }
            let word: String = space.iter().map(|v| letter(inv, v)).collect::<Result<_>>()?;
            if word != self.types[i] {
                return Err(Error::Verification(format!("type of row {i} is {word}")));
            }
            let j = self.pairing[i];
            if j >= k || self.pairing[j] != i || self.heights[j] != d || ((i == j) != d.is_multiple_of(2)) {
                return Err(Error::Verification(format!("bad pairing at row {i}")));
            }
            for (j2, other) in self.spaces.iter().enumerate() {
                if j2 == j {
                    continue;
                }
                if space.iter().any(|x| other.iter().any(|y| !bilinear(form, x, y).is_zero())) {
                    return Err(Error::Verification(format!("V_{i} and V_{j2} are not orthogonal")));
                }
            }
            all.extend(space.iter().cloned());
        }
        let n = pair.ambient();
        if all.len() != n || (n > 0 && rank_q(&Matrix::from_columns(n, &all)) != n) {
            return Err(Error::Verification("strings do not form a basis".into()));
        }
        Ok(())
    }
}

/// The σ-adapted Jordan data of `e`, built from the lowest-weight vectors
/// of a Kostant-Rallis triple. Odd rows come from a β-orthogonal basis of
/// each involution eigenspace of `ker(h + d) ∩ ker f` for even `d`, where
/// `β(x, y) = (x, e^d y)`; even rows come in dually paired families for
/// odd `d`.
pub fn sigma_adapted_jordan(e: &Matrix<Q>, pair: &SymPair) -> Result<JordanData> {
    let (form, inv) = require_so_so(pair)?;
    require_nilpotent_in_g1(e, pair)?;
    let n = pair.ambient();
    let (h, f) = if e.is_zero() {
        (Matrix::zeros(n, n), Matrix::zeros(n, n))
    } else {
        let t = kr_triple(e, pair)?;
        (t.h, t.f)
    };
    let id = Matrix::<Q>::identity(n);
    let mut rows: Vec<(Vec<Q>, usize, Option<usize>)> = Vec::new();
    let mut power = Matrix::identity(n);
    for d in 0..n {
        let shifted = h.add(&id.scale(&q(d as i64)));
        let lowest = |sign: i64| {
            let mut stacked = Matrix::zeros(3 * n, n);
            stacked.set_block(0, 0, &shifted);
            stacked.set_block(n, 0, &f);
            stacked.set_block(2 * n, 0, &inv.sub(&id.scale(&q(sign))));
            kernel_basis(&stacked)
        };
        let (minus, plus) = (lowest(-1), lowest(1));
        let beta = |x: &[Q], y: &[Q]| bilinear(form, x, &power.mul_vec(y));
        if d % 2 == 0 {
            for part in [minus, plus] {
                for w in orthogonal_basis(part, &beta)? {
                    rows.push((w, d, None));
                }
            }
        } else if !minus.is_empty() || !plus.is_empty() {
            if minus.len() != plus.len() {
                return Err(Error::Internal(format!("unbalanced lowest weights at height {d}")));
            }
            let k = minus.len();
            let pairing = Matrix::from_fn(k, k, |i, j| beta(&minus[i], &plus[j]));
            let dual = inverse(&pairing)
                .ok_or_else(|| Error::Internal(format!("degenerate pairing at height {d}")))?;
            for (i, w) in minus.iter().enumerate() {
                let u: Vec<Q> = (0..n)
                    .map(|c| (0..k).map(|j| &plus[j][c] * dual.get(j, i)).sum())
                    .collect();
                let idx = rows.len();
                rows.push((w.clone(), d, Some(idx + 1)));
                rows.push((u, d, Some(idx)));
            }
        }
        power = power.mul(e);
    }
    let mut data = JordanData {
        cyclic_vectors: Vec::new(),
        heights: Vec::new(),
        pairing: Vec::new(),
        types: Vec::new(),
        spaces: Vec::new(),
    };
    for (i, (w, d, partner)) in rows.into_iter().enumerate() {
        let mut space = vec![w.clone()];
        for _ in 0..d {
            let next = e.mul_vec(space.last().expect("nonempty string"));
            space.push(next);
        }
        data.types.push(space.iter().map(|v| letter(inv, v)).collect::<Result<_>>()?);
        data.cyclic_vectors.push(w);
        data.heights.push(d);
        data.pairing.push(partner.unwrap_or(i));
        data.spaces.push(space);
    }
    data.check(e, pair)?;
    Ok(data)
}

/// Orthogonal basis for a nondegenerate symmetric form on `span(vectors)`.
fn orthogonal_basis(mut vectors: Vec<Vec<Q>>, beta: &impl Fn(&[Q], &[Q]) -> Q) -> Result<Vec<Vec<Q>>> {
    let mut out = Vec::new();
    while !vectors.is_empty() {
        let pivot = match vectors.iter().position(|v| !beta(v, v).is_zero()) {
            Some(p) => p,
            None => {
                // all remaining vectors are isotropic; x + y is not when (x, y) != 0
                let (i, j) = (0..vectors.len())
                    .flat_map(|i| (0..vectors.len()).map(move |j| (i, j)))
                    .find(|&(i, j)| !beta(&vectors[i], &vectors[j]).is_zero())
                    .ok_or_else(|| Error::Internal("degenerate form on lowest weights".into()))?;
                let sum = vectors[i].iter().zip(&vectors[j]).map(|(x, y)| x + y).collect();
                vectors[i] = sum;
                i
            }
        };
        let w = vectors.swap_remove(pivot);
        let norm = beta(&w, &w);
        for v in vectors.iter_mut() {
            let c = beta(v, &w) / &norm;
            for (x, y) in v.iter_mut().zip(&w) {
                *x -= &c * y;
            }
        }
        out.push(w);
    }
    Ok(out)
}

/// Nilpotent `e in g1` whose σ-adapted Jordan data has diagram `d`.
///
/// A model space with basis `v_{r,s}` (row `r`, position `s`) carries
/// `e v_{r,s} = v_{r,s+1}` and a Gram matrix with
/// `(v_{r,s}, v_{r,d-s}) = ε_r (-1)^s` on odd rows and
/// `(v_{r,s}, v_{r*,d-s}) = (-1)^s` between the `a`-start and `b`-start rows
/// of an even pair. The sign `ε_r` makes the middle vectors of the odd rows
/// alternate in norm, which is what makes the model space isometric over `Q`
/// to the split form of the pair. The isometry sends hyperbolic pairs to the
/// planes `(e_p, e_q)` of the form and middle vectors to single basis vectors.
pub fn representative(d: &AbDiagram, pair: &SymPair) -> Result<Matrix<Q>> {
    let (form, _) = require_so_so(pair)?;
    let spec = pair.spec();
    let (n, m) = (spec.n, spec.m.unwrap_or(0));
    if d.a_count() != n || d.b_count() != m {
        return Err(Error::InvalidParams(format!(
            "diagram {d} has {} a and {} b, the pair needs {n} and {m}",
            d.a_count(),
            d.b_count()
        )));
    }
    let rows = d.rows();
    let mut offsets = Vec::with_capacity(rows.len());
    let mut total = 0;
    for r in rows {
        offsets.push(total);
        total += r.len();
    }
    let idx = |r: usize, s: usize| offsets[r] + s;
    let letter_at = |r: usize, s: usize| rows[r].as_bytes()[s];

    let mut model_e = Matrix::<Q>::zeros(total, total);
    for (r, row) in rows.iter().enumerate() {
        for s in 0..row.len() - 1 {
            model_e.set(idx(r, s + 1), idx(r, s), Q::one());
        }
    }

    // hyperbolic pairs (x, y, (x, y)) and middle vectors (v, norm), per letter
    let mut hyper: [Vec<(usize, usize, Q)>; 2] = [Vec::new(), Vec::new()];
    let mut middles: [Vec<(usize, Q)>; 2] = [Vec::new(), Vec::new()];
    let part = |c: u8| usize::from(c == b'b');
    let sign = |k: usize| if k.is_multiple_of(2) { Q::one() } else { -Q::one() };
    for (r, row) in rows.iter().enumerate() {
        let h = row.len() - 1;
        if h % 2 == 1 {
            continue;
        }
        let mid = h / 2;
        let p = part(letter_at(r, mid));
        // a-middles alternate +, -, ...; b-middles -, +, ...
        let target = if p == 0 { sign(middles[0].len()) } else { -sign(middles[1].len()) };
        let eps = &target * sign(mid);
        middles[p].push((idx(r, mid), target));
        for s in 0..mid {
            hyper[part(letter_at(r, s))].push((idx(r, s), idx(r, h - s), &eps * sign(s)));
        }
    }
    let even_starts = |first: char| {
        rows.iter().enumerate().filter(move |(_, x)| x.len() % 2 == 0 && x.starts_with(first)).map(|(r, _)| r)
    };
    let (a_starts, b_starts): (Vec<usize>, Vec<usize>) = (even_starts('a').collect(), even_starts('b').collect());
    for (&ra, &rb) in a_starts.iter().zip(&b_starts) {
        let h = rows[ra].len() - 1;
        if rows[rb].len() - 1 != h {
            return Err(Error::Internal("unmatched even rows".into()));
        }
        for s in 0..=h {
            hyper[part(letter_at(ra, s))].push((idx(ra, s), idx(rb, h - s), sign(s)));
        }
    }

    let mut gram = Matrix::<Q>::zeros(total, total);
    let mut iso = Matrix::<Q>::zeros(total, total);
    for (p, (start, size)) in [(0, n), (n, m)].into_iter().enumerate() {
        if size == 0 {
            continue;
        }
        let slot_sign = form.get(start, start).clone();
        let mut plane = 0;
        for (x, y, c) in &hyper[p] {
            let (sp, sq) = (start + 2 * plane, start + 2 * plane + 1);
            iso.set(sp, *x, Q::one());
            iso.set(sq, *x, Q::one());
            let scale = c / (q(2) * &slot_sign);
            iso.set(sp, *y, scale.clone());
            iso.set(sq, *y, -scale);
            gram.set(*x, *y, c.clone());
            gram.set(*y, *x, c.clone());
            plane += 1;
        }
        for chunk in middles[p].chunks(2) {
            for (k, (v, norm)) in chunk.iter().enumerate() {
                let slot = start + 2 * plane + k;
                if slot >= start + size || form.get(slot, slot) != norm {
                    return Err(Error::Internal("middle vectors do not fit the form".into()));
                }
                iso.set(slot, *v, Q::one());
                gram.set(*v, *v, norm.clone());
            }
            plane += 1;
        }
    }
    if iso.transpose().mul(form).mul(&iso) != gram {
        return Err(Error::Internal("model isometry check failed".into()));
    }
    let iso_inv = inverse(&iso).ok_or_else(|| Error::Internal("model map is singular".into()))?;
    let e = iso.mul(&model_e).mul(&iso_inv);
    require_nilpotent_in_g1(&e, pair).map_err(|err| Error::Internal(format!("representative: {err}")))?;
    Ok(e)
}

/// The ab-diagram of a nilpotent `e in g1` read off the ranks of powers of
/// `e` on the two involution eigenspaces, without any Jordan basis.
pub fn diagram_from_ranks(e: &Matrix<Q>, pair: &SymPair) -> Result<AbDiagram> {
    require_so_so(pair)?;
    require_nilpotent_in_g1(e, pair)?;
    let spec = pair.spec();
    let (n, m) = (spec.n, spec.m.unwrap_or(0));
    let big_n = n + m;
    // rank of e^k restricted to V_a (first n coordinates) and V_b
    let rank_on = |k: usize, cols: std::ops::Range<usize>| -> usize {
        if cols.is_empty() {
            return 0;
        }
        rank_q(&e.pow(k as u32).submatrix(0..big_n, cols))
    };
    let delta = |k: usize, cols: std::ops::Range<usize>| rank_on(k, cols.clone()) - rank_on(k + 1, cols);
    // strings[y][len]: number of rows of length >= len ending in letter y
    let mut strings = vec![vec![0usize; big_n + 2]; 2];
    for k in 0..big_n {
        let (da, db) = (delta(k, 0..n), delta(k, n..big_n));
        // a vector of V_a killed exactly by e^{k+1} starts a string whose
        // last letter is a for even k and b for odd k
        if k % 2 == 0 {
            strings[0][k + 1] = da;
            strings[1][k + 1] = db;
        } else {
            strings[1][k + 1] = da;
            strings[0][k + 1] = db;
        }
    }
    let mut rows = Vec::new();
    for len in 1..=big_n {
        for (y, last) in ['a', 'b'].into_iter().enumerate() {
            let count = strings[y][len] - strings[y][len + 1];
            let other = if last == 'a' { 'b' } else { 'a' };
            let first = if len % 2 == 1 { last } else { other };
            for _ in 0..count {
                rows.push(super::diagram::alternating_row(first, len));
            }
        }
    }
    AbDiagram::new(rows)
}
