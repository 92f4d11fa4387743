//! Trial-division factorization and primality.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Trial division with a ceiling on the largest divisor tried.
///
/// A cofactor is fully resolved once the divisor passes its square root, so
/// the default ceiling of `2^32` always completes for cofactors below `2^64`.
/// Larger cofactors with no small factor raise [`Error::InputTooLarge`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialDivision {
    pub max_divisor: u64,
}

impl Default for TrialDivision {
    fn default() -> Self {
        Self {
            max_divisor: 1 << 32,
        }
    }
}

impl TrialDivision {
    /// Prime factorization of `v >= 1` as ascending `prime -> exponent`.
    pub fn factorize(&self, v: &BigUint) -> Result<BTreeMap<BigUint, u64>> {
        if v.is_zero() {
            return Err(Error::NonPositive);
        }
        let mut out = BTreeMap::new();
        let mut rest = v.clone();
        let push = |p: u64, e: u64, out: &mut BTreeMap<BigUint, u64>| {
            if e > 0 {
                *out.entry(BigUint::from(p)).or_insert(0) += e;
            }
        };

        for p in [2u64, 3] {
            let e = strip_big(&mut rest, p);
            push(p, e, &mut out);
        }
        let mut d = 5u64;
        // divisors 6i +- 1
        while !rest.is_one() {
            if let Some(small) = rest.to_u64() {
                factor_small(small, d, self.max_divisor, &mut out)?;
                return Ok(out);
            }
            if d > self.max_divisor {
                return Err(Error::InputTooLarge {
                    cofactor: rest,
                    limit: self.max_divisor,
                });
            }
            for step in [d, d + 2] {
                let e = strip_big(&mut rest, step);
                push(step, e, &mut out);
            }
            d += 6;
        }
        Ok(out)
    }

    /// Primality by trial division up to the square root.
    pub fn is_prime(&self, v: &BigUint) -> Result<bool> {
        if v < &BigUint::from(2u8) {
            return Ok(false);
        }
        let f = self.factorize(v)?;
        Ok(f.len() == 1 && f.values().all(|&e| e == 1))
    }
}

fn strip_big(rest: &mut BigUint, p: u64) -> u64 {
    let p = BigUint::from(p);
    let mut e = 0;
    loop {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            return e;
        }
        *rest = q;
        e += 1;
    }
}

/// Finishes factoring `n` (already free of factors below `start`) in native arithmetic.
fn factor_small(
    mut n: u64,
    start: u64,
    limit: u64,
    out: &mut BTreeMap<BigUint, u64>,
) -> Result<()> {
    let mut d = start;
    while n > 1 {
        if d.checked_mul(d).is_none_or(|sq| sq > n) {
            *out.entry(BigUint::from(n)).or_insert(0) += 1;
            return Ok(());
        }
        if d > limit {
            return Err(Error::InputTooLarge {
                cofactor: n.into(),
                limit,
            });
        }
        for p in [d, d + 2] {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            if e > 0 {
                *out.entry(BigUint::from(p)).or_insert(0) += e;
            }
        }
        d += 6;
    }
    Ok(())
}

/// Factorizes a positive integer with the default trial-division ceiling.
pub fn factorize_value(v: &BigInt) -> Result<BTreeMap<BigUint, u64>> {
    match v.sign() {
        Sign::Plus => TrialDivision::default().factorize(v.magnitude()),
        _ => Err(Error::NonPositive),
    }
}

/// Primality with the default trial-division ceiling.
pub fn is_prime(v: &BigUint) -> Result<bool> {
    TrialDivision::default().is_prime(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fac(v: u64) -> Vec<(u64, u64)> {
        factorize_value(&BigInt::from(v))
            .unwrap()
            .into_iter()
            .map(|(p, e)| (p.to_u64().unwrap(), e))
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(fac(12), vec![(2, 2), (3, 1)]);
        assert_eq!(fac(1), vec![]);
        assert_eq!(fac(97), vec![(97, 1)]);
        assert_eq!(fac(25), vec![(5, 2)]);
        assert_eq!(fac(49 * 11), vec![(7, 2), (11, 1)]);
        assert_eq!(factorize_value(&BigInt::from(0)), Err(Error::NonPositive));
        assert_eq!(factorize_value(&BigInt::from(-4)), Err(Error::NonPositive));
    }

    #[test]
    fn large_smooth_values() {
        // 30^40 needs BigUint arithmetic throughout
        let v = BigUint::from(30u32).pow(40);
        let f = TrialDivision::default().factorize(&v).unwrap();
        let expect: BTreeMap<BigUint, u64> = [(2u32, 40u64), (3, 40), (5, 40)]
            .map(|(p, e)| (p.into(), e))
            .into();
        assert_eq!(f, expect);
    }

    #[test]
    fn prime_above_u32() {
        let p = BigUint::from(4294967311u64);
        assert!(is_prime(&p).unwrap());
        assert!(!is_prime(&(p * 3u32)).unwrap());
    }

    #[test]
    fn ceiling_is_enforced() {
        let td = TrialDivision { max_divisor: 100 };
        // 1009 * 1013 has no factor at or below 100
        let v = BigUint::from(1009u64 * 1013);
        assert!(matches!(td.factorize(&v), Err(Error::InputTooLarge { .. })));
        // but a prime cofactor whose square root is under the ceiling resolves
        assert_eq!(td.factorize(&BigUint::from(1009u32)).unwrap().len(), 1);
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60u64)
            .filter(|&n| is_prime(&BigUint::from(n)).unwrap())
            .collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }

    proptest! {
        #[test]
        fn product_of_factors_is_value(v in 1u64..10_000_000) {
            let f = factorize_value(&BigInt::from(v)).unwrap();
            let back: BigUint = f.iter().map(|(p, &e)| p.pow(e as u32)).product();
            prop_assert_eq!(back, BigUint::from(v));
            for p in f.keys() {
                let p = p.to_u64().unwrap();
                prop_assert!((2..p).take_while(|d| d * d <= p).all(|d| p % d != 0));
            }
        }
    }
}
