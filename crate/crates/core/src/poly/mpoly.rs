use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{parse_q, q_to_string, ExactDiv, Scalar, Q};

/// Exponent vector indexed by variable number, trailing zeros trimmed so that
/// equal monomials have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(index: usize, exp: u32) -> Self {
        let mut v = vec![0; index + 1];
        v[index] = exp;
        Monomial::from_exps(v)
    }

    pub fn from_exps(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().max(other.0.len());
        Monomial::from_exps((0..len).map(|i| self.exp(i) + other.exp(i)).collect())
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut out = self.0.clone();
        for (i, &e) in other.0.iter().enumerate() {
            if out[i] < e {
                return None;
            }
            out[i] -= e;
        }
        Some(Monomial::from_exps(out))
    }

    fn with_exp(&self, var: usize, exp: u32) -> Monomial {
        let mut v = self.0.clone();
        if v.len() <= var {
            v.resize(var + 1, 0);
        }
        v[var] = exp;
        Monomial::from_exps(v)
    }
}

/// Graded lexicographic order: total degree first, ties broken by the
/// exponent of the lowest-numbered variable.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let len = self.0.len().max(other.0.len());
            for i in 0..len {
                match self.exp(i).cmp(&other.exp(i)) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Printable name of variable `index`: `t`, `t1`, `t2`, ...
pub fn var_name(index: usize) -> String {
    if index == 0 {
        "t".to_string()
    } else {
        format!("t{index}")
    }
}

pub fn parse_var_name(name: &str) -> Result<usize> {
    match name.strip_prefix('t') {
        Some("") => Ok(0),
        Some(rest) => rest
            .parse::<usize>()
            .ok()
            .filter(|&i| i > 0 && rest == i.to_string())
            .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}"))),
        None => Err(Error::Parse(format!("unknown variable {name:?}"))),
    }
}

/// Sparse multivariate polynomial over `Q`. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Q>,
}

impl MPoly {
    pub fn constant(c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MPoly { terms }
    }

    pub fn var(index: usize) -> Self {
        MPoly::monomial(Q::one(), Monomial::var(index, 1))
    }

    pub fn monomial(c: Q, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = MPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Constant term value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Q> {
        if self.is_constant() {
            Some(self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Q::zero))
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// One more than the highest variable index that occurs.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.0.len()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    /// Lowest exponent of `var` over all terms (the `var`-adic valuation).
    pub fn valuation_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).min().unwrap_or(0)
    }

    pub fn scale(&self, c: &Q) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> MPoly {
        match self.leading() {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => MPoly::zero(),
        }
    }

    /// Coefficients of `self` viewed as a polynomial in `var`, indexed by power.
    pub fn coeffs_in(&self, var: usize) -> Vec<MPoly> {
        let mut out = vec![MPoly::zero(); self.degree_in(var) as usize + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (m, c) in &self.terms {
            let e = m.exp(var) as usize;
            out[e].add_term(m.with_exp(var, 0), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(var: usize, coeffs: &[MPoly]) -> MPoly {
        let mut p = MPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            let shift = Monomial::var(var, e as u32);
            for (m, v) in &c.terms {
                p.add_term(m.mul(&shift), v.clone());
            }
        }
        p
    }

    fn lc_in(&self, var: usize) -> MPoly {
        let d = self.degree_in(var);
        let mut p = MPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(var) == d {
                p.add_term(m.with_exp(var, 0), c.clone());
            }
        }
        p
    }

    /// Evaluates with `values[i]` substituted for variable `i`.
    ///
    /// # Panics
    /// If a variable with no supplied value occurs.
    pub fn eval(&self, values: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term *= num_traits::pow(values[i].clone(), e as usize);
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitutes `value` for one variable, leaving the others symbolic.
    pub fn eval_var(&self, var: usize, value: &Q) -> MPoly {
        let mut p = MPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            let coeff = c * num_traits::pow(value.clone(), e as usize);
            p.add_term(m.with_exp(var, 0), coeff);
        }
        p
    }

    /// Substitutes a polynomial for one variable.
    pub fn substitute(&self, var: usize, value: &MPoly) -> MPoly {
        let coeffs = self.coeffs_in(var);
        let mut acc = MPoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Divides every term by `var^k`; callers ensure `k <= valuation_in(var)`.
    pub fn div_var_pow(&self, var: usize, k: u32) -> MPoly {
        let m = Monomial::var(var, k);
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.div(&m).expect("valuation exceeded"), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient by `divisor`, or `None` if `divisor` does not divide.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        let (lm, lc) = divisor.leading()?;
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(lm)?;
            let qc = c / lc;
            let step = MPoly::monomial(qc.clone(), qm.clone());
            rem = &rem - &(divisor * &step);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Greatest common divisor, normalized to leading coefficient one.
    ///
    /// Recursive: content/primitive-part splitting in the lowest variable
    /// present, primitive pseudo-remainder sequence on the primitive parts.
    pub fn gcd(&self, other: &MPoly) -> MPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return MPoly::one();
        }
        if let Some(g) = monomial_gcd_shortcut(self, other) {
            return g;
        }
        let var = match (lowest_var(self), lowest_var(other)) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => return MPoly::one(),
        };
        let ca = self.content_in(var);
        let cb = other.content_in(var);
        let c = ca.gcd(&cb);
        let pa = self.div_exact(&ca).expect("content divides");
        let pb = other.div_exact(&cb).expect("content divides");
        let g = primitive_prs(pa, pb, var);
        (&c * &g).monic()
    }

    fn content_in(&self, var: usize) -> MPoly {
        let mut g = MPoly::zero();
        for c in self.coeffs_in(var) {
            if c.is_zero() {
                continue;
            }
            g = g.gcd(&c);
            if g.is_constant() {
                return MPoly::one();
            }
        }
        g
    }

    fn primitive_part_in(&self, var: usize) -> MPoly {
        let c = self.content_in(var);
        self.div_exact(&c).expect("content divides")
    }
}

fn lowest_var(p: &MPoly) -> Option<usize> {
    p.terms
        .keys()
        .filter_map(|m| m.0.iter().position(|&e| e > 0))
        .min()
}

/// When one side is a single term the gcd is a monomial.
fn monomial_gcd_shortcut(a: &MPoly, b: &MPoly) -> Option<MPoly> {
    let (single, other) = if a.num_terms() == 1 {
        (a, b)
    } else if b.num_terms() == 1 {
        (b, a)
    } else {
        return None;
    };
    let (m, _) = single.leading()?;
    let mut exps = m.0.clone();
    for t in other.terms.keys() {
        for (i, e) in exps.iter_mut().enumerate() {
            *e = (*e).min(t.exp(i));
        }
    }
    Some(MPoly::monomial(Q::one(), Monomial::from_exps(exps)))
}

fn pseudo_rem(f: &MPoly, g: &MPoly, var: usize) -> MPoly {
    let dg = g.degree_in(var);
    let lcg = g.lc_in(var);
    let mut r = f.clone();
    while !r.is_zero() && r.degree_in(var) >= dg {
        let dr = r.degree_in(var);
        let lcr = r.lc_in(var);
        let shifted = g.mul_monomial(&Monomial::var(var, dr - dg));
        r = &(&r * &lcg) - &(&lcr * &shifted);
    }
    r
}

fn primitive_prs(a: MPoly, b: MPoly, var: usize) -> MPoly {
    let (mut f, mut g) = if a.degree_in(var) >= b.degree_in(var) {
        (a, b)
    } else {
        (b, a)
    };
    if g.degree_in(var) == 0 {
        return MPoly::one();
    }
    loop {
        let r = pseudo_rem(&f, &g, var);
        if r.is_zero() {
            return g.primitive_part_in(var);
        }
        if r.degree_in(var) == 0 {
            return MPoly::one();
        }
        f = g;
        g = r.primitive_part_in(var);
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::constant(Q::one())
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Scalar for MPoly {
    fn from_q(value: &Q) -> Self {
        MPoly::constant(value.clone())
    }
}

impl ExactDiv for MPoly {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        self.div_exact(divisor)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*{}", var_name(i))?,
                    _ => write!(f, "*{}^{e}", var_name(i))?,
                }
            }
        }
        Ok(())
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    coeff: String,
    exps: BTreeMap<String, u32>,
}

#[derive(serde::Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson {
    terms: Vec<TermJson>,
}

impl serde::Serialize for MPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| TermJson {
                coeff: q_to_string(c),
                exps: m
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| (var_name(i), e))
                    .collect(),
            })
            .collect();
        PolyJson { terms }.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for MPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(d)?;
        let mut p = MPoly::zero();
        for t in raw.terms {
            let c = parse_q(&t.coeff).map_err(D::Error::custom)?;
            let mut exps = Vec::new();
            for (name, e) in t.exps {
                let i = parse_var_name(&name).map_err(D::Error::custom)?;
                if exps.len() <= i {
                    exps.resize(i + 1, 0);
                }
                exps[i] += e;
            }
            p.add_term(Monomial::from_exps(exps), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn x(i: usize) -> MPoly {
        MPoly::var(i)
    }
    fn c(v: i64) -> MPoly {
        MPoly::constant(q(v))
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::from_exps(vec![2]);
        let b = Monomial::from_exps(vec![0, 1]);
        let ab = Monomial::from_exps(vec![1, 1]);
        assert!(a > b);
        assert!(a > ab && ab > b);
        assert!(Monomial::from_exps(vec![1]) > Monomial::from_exps(vec![0, 1]));
    }

    #[test]
    fn exact_division() {
        let p = &(&x(0) + &c(1)) * &(&x(1) - &x(0));
        assert_eq!(p.div_exact(&(&x(1) - &x(0))).unwrap(), &x(0) + &c(1));
        assert!(p.div_exact(&(&x(1) + &c(2))).is_none());
    }

    #[test]
    fn gcd_multivariate() {
        let common = &(&x(0) * &x(1)) + &c(3);
        let a = &common * &(&x(0) + &x(2));
        let b = &common * &(&(&x(1) * &x(1)) - &c(2));
        assert_eq!(a.gcd(&b), common.monic());
        let coprime = (&x(0) + &c(1)).gcd(&(&x(0) - &c(1)));
        assert_eq!(coprime, MPoly::one());
    }

    #[test]
    fn gcd_univariate_squares() {
        let t = x(0);
        let a = &(&t * &t) - &c(1);
        let b = &(&t - &c(1)) * &(&t - &c(1));
        assert_eq!(a.gcd(&b), &t - &c(1));
    }

    #[test]
    fn substitution_and_eval() {
        let t = x(0);
        let p = &(&t * &t) + &c(1);
        let shifted = p.substitute(0, &(&t + &c(2)));
        assert_eq!(shifted.eval(&[q(0)]), q(5));
        assert_eq!(p.eval_var(0, &q(3)), c(10));
    }

    #[test]
    fn json_roundtrip() {
        let p = &(&x(0) * &x(0)).scale(&crate::scalar::qf(3, 2)) - &x(2);
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.contains("\"t\":2"));
        let back: MPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
