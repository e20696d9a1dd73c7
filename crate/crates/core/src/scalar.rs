//! Coefficient domains.
//!
//! Everything in this crate is computed over the rationals or over rational
//! function fields in finitely many variables. Matrix code is written once
//! against [`Scalar`] (a commutative ring with a copy of the integers) and
//! [`Field`] (division available), and instantiated at [`Q`],
//! [`MPoly`](crate::poly::MPoly) and [`RatFunc`](crate::poly::RatFunc).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number; always stored in lowest terms with a
/// positive denominator.
pub type Q = BigRational;

/// Commutative ring containing the rationals.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_q(value: &Q) -> Self;

    fn from_i64(value: i64) -> Self {
        Self::from_q(&Q::from_integer(value.into()))
    }
}

/// A [`Scalar`] in which every nonzero element is invertible.
pub trait Field: Scalar + Div<Output = Self> {}

/// Rings with a division that succeeds exactly when the quotient exists.
///
/// Fraction-free elimination divides by earlier pivots; those divisions are
/// always exact, so `None` there signals a bug.
pub trait ExactDiv: Scalar {
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

impl Scalar for Q {
    fn from_q(value: &Q) -> Self {
        value.clone()
    }
}

impl Field for Q {}

impl ExactDiv for Q {
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self / divisor)
        }
    }
}

/// Shorthand for an integer-valued rational.
pub fn q(value: i64) -> Q {
    Q::from_integer(BigInt::from(value))
}

/// Shorthand for `num / den`.
pub fn qf(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as the `"p/q"` string used in every JSON artifact.
pub fn q_to_string(value: &Q) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_q(text: &str) -> Result<Q> {
    let text = text.trim();
    let parse_int = |s: &str| {
        BigInt::from_str(s).map_err(|_| Error::Parse(format!("bad rational literal {text:?}")))
    };
    match text.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() || den.is_negative() {
                return Err(Error::Parse(format!("bad denominator in {text:?}")));
            }
            Ok(Q::new(parse_int(num)?, den))
        }
        None => Ok(Q::from_integer(parse_int(text)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let x = qf(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(q_to_string(&q(0)), "0/1");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0/1", "-3/2", "17/1", "5/7"] {
            assert_eq!(q_to_string(&parse_q(s).unwrap()), s);
        }
        assert_eq!(parse_q("4").unwrap(), q(4));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
        assert!(parse_q("1/-2").is_err());
    }
}
