use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number over `i128`, always in lowest terms with a positive
/// denominator. Every arithmetic operation is checked; overflow surfaces as
/// [`Error::Overflow`] instead of wrapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: i128,
    denom: i128,
}

impl Rational {
    pub const ZERO: Rational = Rational { numer: 0, denom: 1 };
    pub const ONE: Rational = Rational { numer: 1, denom: 1 };

    pub fn new(numer: i128, denom: i128) -> Result<Self> {
        if denom == 0 {
            return Err(Error::DivisionByZero);
        }
        if numer == i128::MIN || denom == i128::MIN {
            return Err(Error::Overflow("rational normalization"));
        }
        let g = numer.gcd(&denom);
        let (mut numer, mut denom) = (numer / g, denom / g);
        if denom < 0 {
            numer = -numer;
            denom = -denom;
        }
        Ok(Rational { numer, denom })
    }

    pub const fn from_integer(value: i128) -> Self {
        Rational {
            numer: value,
            denom: 1,
        }
    }

    pub fn numer(&self) -> i128 {
        self.numer
    }

    pub fn denom(&self) -> i128 {
        self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer == 0
    }

    pub fn is_integer(&self) -> bool {
        self.denom == 1
    }

    pub fn checked_add(self, rhs: Rational) -> Result<Rational> {
        const OP: &str = "rational addition";
        let g = self.denom.gcd(&rhs.denom);
        let left = self
            .numer
            .checked_mul(rhs.denom / g)
            .ok_or(Error::Overflow(OP))?;
        let right = rhs
            .numer
            .checked_mul(self.denom / g)
            .ok_or(Error::Overflow(OP))?;
        let numer = left.checked_add(right).ok_or(Error::Overflow(OP))?;
        let denom = (self.denom / g)
            .checked_mul(rhs.denom)
            .ok_or(Error::Overflow(OP))?;
        Rational::new(numer, denom)
    }

    pub fn checked_neg(self) -> Result<Rational> {
        Ok(Rational {
            numer: self
                .numer
                .checked_neg()
                .ok_or(Error::Overflow("rational negation"))?,
            denom: self.denom,
        })
    }

    pub fn checked_sub(self, rhs: Rational) -> Result<Rational> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn checked_mul(self, rhs: Rational) -> Result<Rational> {
        const OP: &str = "rational multiplication";
        // Cross-cancel first so intermediate products stay as small as possible.
        let g1 = self.numer.gcd(&rhs.denom).max(1);
        let g2 = rhs.numer.gcd(&self.denom).max(1);
        let numer = (self.numer / g1)
            .checked_mul(rhs.numer / g2)
            .ok_or(Error::Overflow(OP))?;
        let denom = (self.denom / g2)
            .checked_mul(rhs.denom / g1)
            .ok_or(Error::Overflow(OP))?;
        Rational::new(numer, denom)
    }

    pub fn recip(self) -> Result<Rational> {
        Rational::new(self.denom, self.numer)
    }

    pub fn checked_div(self, rhs: Rational) -> Result<Rational> {
        self.checked_mul(rhs.recip()?)
    }

    pub fn checked_pow(self, exp: u32) -> Result<Rational> {
        const OP: &str = "rational power";
        // Lowest terms are preserved by powers, so no re-normalization needed.
        Ok(Rational {
            numer: self.numer.checked_pow(exp).ok_or(Error::Overflow(OP))?,
            denom: self.denom.checked_pow(exp).ok_or(Error::Overflow(OP))?,
        })
    }

    /// Exact sum of a sequence of rationals.
    pub fn checked_sum<I: IntoIterator<Item = Rational>>(values: I) -> Result<Rational> {
        values
            .into_iter()
            .try_fold(Rational::ZERO, Rational::checked_add)
    }

    /// Nearest `f64`; for display only.
    pub fn to_f64(&self) -> f64 {
        self.numer as f64 / self.denom as f64
    }
}

impl From<i128> for Rational {
    fn from(value: i128) -> Self {
        Rational::from_integer(value)
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value.into())
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Continued-fraction comparison; never multiplies, so cannot overflow.
        let (mut a, mut b) = (self.numer, self.denom);
        let (mut c, mut d) = (other.numer, other.denom);
        let mut flipped = false;
        loop {
            let (q1, r1) = (a.div_euclid(b), a.rem_euclid(b));
            let (q2, r2) = (c.div_euclid(d), c.rem_euclid(d));
            let ord = q1.cmp(&q2).then_with(|| match (r1 == 0, r2 == 0) {
                (true, true) => Ordering::Equal,
                (true, false) => Ordering::Less,
                (false, true) => Ordering::Greater,
                (false, false) => Ordering::Equal,
            });
            if ord != Ordering::Equal || r1 == 0 {
                return if flipped { ord.reverse() } else { ord };
            }
            // a/b = q + r1/b, compare r1/b vs r2/d by comparing d/r2 vs b/r1.
            (a, b, c, d) = (b, r1, d, r2);
            flipped = !flipped;
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            f.pad(&self.numer.to_string())
        } else {
            f.pad(&format!("{}/{}", self.numer, self.denom))
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 0,
            message: format!("invalid rational {s:?}"),
        };
        match s.split_once('/') {
            Some((p, q)) => Rational::new(
                p.trim().parse().map_err(|_| bad())?,
                q.trim().parse().map_err(|_| bad())?,
            ),
            None => Ok(Rational::from_integer(s.trim().parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
