//! Exact rationals extended by a single point at infinity.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num/den`, reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// A point of the projective line over `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedRational {
    Finite(Rational),
    Infinity,
}

pub use ExtendedRational::Infinity;

impl ExtendedRational {
    pub fn finite(q: Rational) -> Self {
        Self::Finite(q)
    }

    pub fn int(v: i64) -> Self {
        Self::Finite(int(v))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::Finite(ratio(num, den))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Self::Infinity)
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            Self::Finite(q) => Some(q),
            Self::Infinity => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_finite().is_some_and(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_finite().is_some_and(One::is_one)
    }
}

impl From<Rational> for ExtendedRational {
    fn from(q: Rational) -> Self {
        Self::Finite(q)
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(q) => write!(f, "{q}"),
            Self::Infinity => f.write_str("inf"),
        }
    }
}

/// Strict `[+-]digits[/digits]` parser; the denominator must be nonzero.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (t, None),
    };
    let digits = num.strip_prefix(['+', '-']).unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let d = BigInt::from_str(d).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            d
        }
    };
    Ok(Rational::new(num, den))
}

impl FromStr for ExtendedRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "inf" | "∞" | "infinity" => Ok(Self::Infinity),
            t => parse_rational(t).map(Self::Finite),
        }
    }
}

/// Comma-separated rationals, e.g. `2,3` or `5/2,-7/3`.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, Error> {
    if s.trim().is_empty() {
        return Err(Error::Parse("empty rational list".into()));
    }
    s.split(',').map(parse_rational).collect()
}

/// Comma-separated positive indices, e.g. `4,5`.
pub fn parse_index_list(s: &str) -> Result<Vec<usize>, Error> {
    if s.trim().is_empty() {
        return Err(Error::Parse("empty index list".into()));
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            if t.is_empty() || t.len() > 6 || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!("not an index: {t:?}")));
            }
            let v: usize = t.parse().map_err(|_| Error::Parse(format!("not an index: {t:?}")))?;
            if v == 0 {
                return Err(Error::Parse("indices are 1-based".into()));
            }
            Ok(v)
        })
        .collect()
}
