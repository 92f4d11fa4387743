use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// A nonnegative rational number kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactRatio {
    numer: BigUint,
    denom: BigUint,
}

impl ExactRatio {
    /// Builds `numer / denom` in lowest terms. Returns `None` for a zero denominator.
    pub fn new(numer: BigUint, denom: BigUint) -> Option<Self> {
        if denom.is_zero() {
            return None;
        }
        if numer.is_zero() {
            return Some(Self::zero());
        }
        let g = numer.gcd(&denom);
        if g.is_one() {
            return Some(Self { numer, denom });
        }
        Some(Self {
            numer: numer / &g,
            denom: denom / &g,
        })
    }

    pub fn integer(value: BigUint) -> Self {
        Self {
            numer: value,
            denom: BigUint::one(),
        }
    }

    pub fn zero() -> Self {
        Self::integer(BigUint::zero())
    }

    pub fn one() -> Self {
        Self::integer(BigUint::one())
    }

    pub fn numer(&self) -> &BigUint {
        &self.numer
    }

    pub fn denom(&self) -> &BigUint {
        &self.denom
    }

    pub fn is_integer(&self) -> bool {
        self.denom.is_one()
    }

    /// Multiplies in place by `num / den`, cancelling common factors before
    /// multiplying so intermediate values stay small. `den` must be nonzero.
    pub(crate) fn scale(&mut self, num: &BigUint, den: &BigUint) {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            *self = Self::zero();
            return;
        }
        let g = num.gcd(den);
        let (mut num, mut den) = (num / &g, den / &g);
        let g_nd = num.gcd(&self.denom);
        if !g_nd.is_one() {
            num /= &g_nd;
            self.denom /= &g_nd;
        }
        let g_dn = den.gcd(&self.numer);
        if !g_dn.is_one() {
            den /= &g_dn;
            self.numer /= &g_dn;
        }
        self.numer *= num;
        self.denom *= den;
    }
}

impl Mul for &ExactRatio {
    type Output = ExactRatio;

    fn mul(self, rhs: &ExactRatio) -> ExactRatio {
        let mut out = self.clone();
        out.scale(&rhs.numer, &rhs.denom);
        out
    }
}

impl fmt::Display for ExactRatio {
    /// `a/b`, or bare `a` when the denominator is one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid ratio literal")]
pub struct ParseRatioError;

impl FromStr for ExactRatio {
    type Err = ParseRatioError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigUint = num.trim().parse().map_err(|_| ParseRatioError)?;
        let den: BigUint = den.trim().parse().map_err(|_| ParseRatioError)?;
        ExactRatio::new(num, den).ok_or(ParseRatioError)
    }
}
