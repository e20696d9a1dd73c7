//! ab-diagrams: multisets of alternating strings over `{a, b}`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Canonical row order: longer rows first, then lexicographic.
fn row_order(x: &str, y: &str) -> Ordering {
    y.len().cmp(&x.len()).then_with(|| x.cmp(y))
}

/// The alternating string of the given length starting with `first`.
pub fn alternating_row(first: char, len: usize) -> String {
    let other = if first == 'a' { 'b' } else { 'a' };
    (0..len).map(|s| if s % 2 == 0 { first } else { other }).collect()
}

/// `a <-> b` exchanged.
pub fn swap_row(row: &str) -> String {
    row.chars().map(|c| if c == 'a' { 'b' } else { 'a' }).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct AbDiagram {
    rows: Vec<String>,
}

impl AbDiagram {
    /// Validates alternation and the pairing of even rows, then sorts the
    /// rows canonically.
    pub fn new(mut rows: Vec<String>) -> Result<Self> {
        for r in &rows {
            if r.is_empty() || r.chars().any(|c| c != 'a' && c != 'b') {
                return Err(Error::InvalidParams(format!("invalid row {r:?}")));
            }
            if r.as_bytes().windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParams(format!("row {r:?} does not alternate")));
            }
        }
        rows.sort_by(|x, y| row_order(x, y));
        let d = AbDiagram { rows };
        for r in d.rows.iter().filter(|r| r.len() % 2 == 0) {
            let swapped = swap_row(r);
            let count = |s: &str| d.rows.iter().filter(|x| x.as_str() == s).count();
            if count(r) != count(&swapped) {
                return Err(Error::InvalidParams(format!(
                    "even row {r:?} is not paired with {swapped:?}"
                )));
            }
        }
        Ok(d)
    }

    pub fn rows(&self) -> &[String] {
        &self.rows
    }

    pub fn a_count(&self) -> usize {
        self.rows.iter().map(|r| r.matches('a').count()).sum()
    }

    pub fn b_count(&self) -> usize {
        self.rows.iter().map(|r| r.matches('b').count()).sum()
    }

    pub fn has_even_row(&self) -> bool {
        self.rows.iter().any(|r| r.len() % 2 == 0)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

impl TryFrom<Vec<String>> for AbDiagram {
    type Error = Error;
    fn try_from(rows: Vec<String>) -> Result<Self> {
        AbDiagram::new(rows)
    }
}

impl From<AbDiagram> for Vec<String> {
    fn from(d: AbDiagram) -> Vec<String> {
        d.rows
    }
}

impl Ord for AbDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        for (x, y) in self.rows.iter().zip(&other.rows) {
            match row_order(x, y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.rows.len().cmp(&other.rows.len())
    }
}

impl PartialOrd for AbDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AbDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.rows.join(", "))
    }
}

/// A building block of a diagram: one odd row, or an even row with its swap.
#[derive(Clone, Debug)]
struct Piece {
    rows: Vec<String>,
    a: usize,
    b: usize,
}

fn pieces(max_len: usize) -> Vec<Piece> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        if len % 2 == 1 {
            for first in ['a', 'b'] {
                let r = alternating_row(first, len);
                let a = r.matches('a').count();
                out.push(Piece { a, b: len - a, rows: vec![r] });
            }
        } else {
            let r = alternating_row('a', len);
            out.push(Piece { a: len, b: len, rows: vec![swap_row(&r), r] });
        }
    }
    out
}

/// All ab-diagrams with `n` letters `a` and `m` letters `b`, in canonical order.
pub fn enumerate_ab_diagrams(n: usize, m: usize) -> Vec<AbDiagram> {
    let all = pieces(n + m);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend(&all, 0, n, m, &mut chosen, &mut out);
    out.sort();
    out
}

fn extend(
    all: &[Piece],
    start: usize,
    n: usize,
    m: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<AbDiagram>,
) {
    if n == 0 && m == 0 {
        let rows = chosen.iter().flat_map(|&i| all[i].rows.clone()).collect();
        out.push(AbDiagram::new(rows).expect("pieces form valid diagrams"));
        return;
    }
    for i in start..all.len() {
        let p = &all[i];
        if p.a <= n && p.b <= m {
            chosen.push(i);
            extend(all, i, n - p.a, m - p.b, chosen, out);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(rows: &[&str]) -> AbDiagram {
        AbDiagram::new(rows.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    /// Independent oracle: all multisets of alternating rows with the right
    /// letter counts, filtered by the pairing rule.
    fn brute_force(n: usize, m: usize) -> Vec<AbDiagram> {
        let mut rows = Vec::new();
        for len in 1..=n + m {
            rows.push(alternating_row('a', len));
            rows.push(alternating_row('b', len));
        }
        let mut found = std::collections::BTreeSet::new();
        fn rec(
            rows: &[String],
            start: usize,
            n: usize,
            m: usize,
            cur: &mut Vec<String>,
            found: &mut std::collections::BTreeSet<AbDiagram>,
        ) {
            if n == 0 && m == 0 {
                if let Ok(d) = AbDiagram::new(cur.clone()) {
                    found.insert(d);
                }
                return;
            }
            for i in start..rows.len() {
                let a = rows[i].matches('a').count();
                let b = rows[i].len() - a;
                if a <= n && b <= m {
                    cur.push(rows[i].clone());
                    rec(rows, i, n - a, m - b, cur, found);
                    cur.pop();
                }
            }
        }
        rec(&rows, 0, n, m, &mut Vec::new(), &mut found);
        found.into_iter().collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(enumerate_ab_diagrams(1, 1), vec![d(&["a", "b"])]);
        assert_eq!(enumerate_ab_diagrams(2, 1), vec![d(&["aba"]), d(&["a", "a", "b"])]);
        assert_eq!(enumerate_ab_diagrams(0, 0), vec![d(&[])]);
    }

    #[test]
    fn matches_brute_force() {
        for n in 0..=4 {
            for m in 0..=4 {
                assert_eq!(enumerate_ab_diagrams(n, m), brute_force(n, m), "({n}, {m})");
            }
        }
    }

    #[test]
    fn validation() {
        assert!(AbDiagram::new(vec!["aab".into()]).is_err());
        assert!(AbDiagram::new(vec!["ab".into()]).is_err());
        let pair = d(&["ba", "ab"]);
        assert_eq!(pair.rows(), &["ab".to_string(), "ba".to_string()]);
        assert_eq!((pair.a_count(), pair.b_count()), (2, 2));
        assert!(pair.has_even_row());
    }
}
