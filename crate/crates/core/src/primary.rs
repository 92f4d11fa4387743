//! Primary (single-prime) components of a sequence.
//!
//! Every term factors as `n_F = prod_p p^{a_p(n)}`, so a sequence splits into
//! one exponent sequence per prime and `C(n, k)_F` splits the same way. For a
//! single prime the coefficient is `p^(N - K)` with
//! `N = a(n-k+1) + ... + a(n)` and `K = a(1) + ... + a(k)`, which makes
//! admissibility a comparison of exponent sums.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::factor::TrialDivision;
use crate::ratio::ExactRatio;
use crate::sequence::{AdmissibilityReport, FSequence};

/// A prime together with exponents `a(1..N)`; renders as `p^a(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentSequence {
    prime: BigUint,
    exponents: Vec<u64>,
}

impl ExponentSequence {
    /// Fails with [`Error::NotPrime`] unless `prime` passes trial division.
    pub fn new(prime: BigUint, exponents: Vec<u64>) -> Result<Self> {
        if !TrialDivision::default().is_prime(&prime)? {
            return Err(Error::NotPrime(prime));
        }
        Ok(Self { prime, exponents })
    }

    /// Skips the primality check; callers guarantee `prime` is prime.
    pub(crate) fn new_unchecked(prime: BigUint, exponents: Vec<u64>) -> Self {
        Self { prime, exponents }
    }

    pub fn prime(&self) -> &BigUint {
        &self.prime
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }
}

/// Canonical map from primes to their exponent sequences.
///
/// All-zero components are dropped and primes iterate in ascending order, so
/// `decompose` and `reconstruct` are mutually inverse.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrimaryDecomposition {
    components: BTreeMap<BigUint, ExponentSequence>,
    len: usize,
}

impl PrimaryDecomposition {
    /// An empty decomposition (the all-ones sequence of length `len`).
    pub fn empty(len: usize) -> Self {
        Self {
            components: BTreeMap::new(),
            len,
        }
    }

    /// Builds a canonical decomposition of length `len`.
    ///
    /// Components sharing a prime are merged by adding exponents, which is the
    /// pointwise product of the two primary sequences.
    pub fn from_components<I>(len: usize, components: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentSequence>,
    {
        let mut out = Self::empty(len);
        for c in components {
            if c.len() != len {
                return Err(Error::LengthMismatch {
                    expected: len,
                    found: c.len(),
                });
            }
            match out.components.get_mut(&c.prime) {
                Some(existing) => {
                    for (a, b) in existing.exponents.iter_mut().zip(&c.exponents) {
                        *a += b;
                    }
                }
                None => {
                    out.components.insert(c.prime.clone(), c);
                }
            }
        }
        out.components.retain(|_, c| !c.is_trivial());
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, prime: &BigUint) -> Option<&ExponentSequence> {
        self.components.get(prime)
    }

    /// Components in ascending prime order.
    pub fn components(&self) -> impl Iterator<Item = &ExponentSequence> {
        self.components.values()
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.components.keys()
    }
}

/// Splits every term into prime powers.
pub fn decompose(seq: &FSequence) -> Result<PrimaryDecomposition> {
    decompose_with(seq, &TrialDivision::default())
}

pub fn decompose_with(seq: &FSequence, td: &TrialDivision) -> Result<PrimaryDecomposition> {
    let n = seq.len();
    let mut components: BTreeMap<BigUint, Vec<u64>> = BTreeMap::new();
    for (i, term) in seq.terms().iter().enumerate() {
        for (p, e) in td.factorize(term)? {
            components.entry(p).or_insert_with(|| vec![0; n])[i] = e;
        }
    }
    Ok(PrimaryDecomposition {
        components: components
            .into_iter()
            .map(|(p, exps)| (p.clone(), ExponentSequence::new_unchecked(p, exps)))
            .collect(),
        len: n,
    })
}

/// Pointwise product of the rendered components.
pub fn reconstruct(decomp: &PrimaryDecomposition) -> FSequence {
    let mut terms = vec![BigUint::one(); decomp.len];
    for c in decomp.components.values() {
        for (t, &e) in terms.iter_mut().zip(&c.exponents) {
            *t *= pow(&c.prime, e);
        }
    }
    FSequence::from_terms(terms).expect("products of prime powers are positive")
}

/// Renders `p^a(1), ..., p^a(N)`.
pub fn primary_to_sequence(exps: &ExponentSequence) -> FSequence {
    let terms = exps
        .exponents
        .iter()
        .map(|&e| pow(&exps.prime, e))
        .collect();
    FSequence::from_terms(terms).expect("prime powers are positive")
}

fn pow(base: &BigUint, e: u64) -> BigUint {
    let e = u32::try_from(e).expect("exponent exceeds u32");
    base.pow(e)
}

/// First `(n, k)` with `2 <= n`, `1 <= k <= n/2` where the last-`k` exponent
/// sum falls short of the first-`k` sum, with the shortfall `K - N`.
pub(crate) fn first_exponent_violation(weights: &[u64]) -> Option<(usize, usize, u64)> {
    let mut prefix = Vec::with_capacity(weights.len() + 1);
    prefix.push(0u128);
    for &w in weights {
        prefix.push(prefix.last().unwrap() + u128::from(w));
    }
    for n in 2..=weights.len() {
        for k in 1..=n / 2 {
            let head = prefix[k];
            let tail = prefix[n] - prefix[n - k];
            if tail < head {
                let gap = u64::try_from(head - tail).expect("exponent gap exceeds u64");
                return Some((n, k, gap));
            }
        }
    }
    None
}

/// Decides admissibility of the rendered primary sequence from exponent sums alone.
///
/// The failure witness is `1 / p^(K - N)`, the same reduced value the direct
/// scan reports for `p^a(n)`.
pub fn lemma1_admissible(exps: &ExponentSequence) -> AdmissibilityReport {
    let depth = exps.len();
    match first_exponent_violation(&exps.exponents) {
        None => AdmissibilityReport::pass(depth),
        Some((n, k, gap)) => {
            let witness = ExactRatio::new(BigUint::one(), pow(&exps.prime, gap))
                .expect("prime power is nonzero");
            AdmissibilityReport::fail(depth, n, k, witness)
        }
    }
}

/// The base of a primary sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimaryBase {
    /// Every term is 1, which is a power of every prime.
    Any,
    Prime(BigUint),
}

/// Returns the single prime whose powers cover every term, `Any` for the
/// all-ones sequence (including the empty one), or `None`.
pub fn is_primary(seq: &FSequence) -> Option<PrimaryBase> {
    let mut base: Option<BigUint> = None;
    let td = TrialDivision::default();
    for term in seq.terms().iter().filter(|t| !t.is_one()) {
        let f = td.factorize(term).ok()?;
        if f.len() != 1 {
            return None;
        }
        let p = f.into_keys().next().unwrap();
        match &base {
            Some(b) if *b != p => return None,
            Some(_) => {}
            None => base = Some(p),
        }
    }
    Some(base.map_or(PrimaryBase::Any, PrimaryBase::Prime))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::is_admissible;

    fn seq(v: &[u64]) -> FSequence {
        FSequence::new(v.iter().copied()).unwrap()
    }

    fn exps(p: u32, v: &[u64]) -> ExponentSequence {
        ExponentSequence::new(p.into(), v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_composite_prime() {
        assert_eq!(
            ExponentSequence::new(6u32.into(), vec![1]),
            Err(Error::NotPrime(6u32.into()))
        );
        assert!(ExponentSequence::new(1u32.into(), vec![]).is_err());
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&seq(&[2, 6, 4])).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(
            d.primes().cloned().collect::<Vec<_>>(),
            vec![2u32.into(), 3u32.into()]
        );
        assert_eq!(d.component(&2u32.into()).unwrap().exponents(), &[1, 1, 2]);
        assert_eq!(d.component(&3u32.into()).unwrap().exponents(), &[0, 1, 0]);

        let d = decompose(&seq(&[1, 1, 1])).unwrap();
        assert!(d.is_empty());
        assert_eq!(d.len(), 3);

        let d = decompose(&seq(&[8])).unwrap();
        assert_eq!(d.component(&2u32.into()).unwrap().exponents(), &[3]);
    }

    #[test]
    fn reconstruct_examples() {
        let d =
            PrimaryDecomposition::from_components(3, [exps(2, &[1, 1, 2]), exps(3, &[0, 1, 0])])
                .unwrap();
        assert_eq!(reconstruct(&d), seq(&[2, 6, 4]));
        assert_eq!(reconstruct(&PrimaryDecomposition::empty(2)), seq(&[1, 1]));
        let d = PrimaryDecomposition::from_components(2, [exps(5, &[0, 2])]).unwrap();
        assert_eq!(reconstruct(&d), seq(&[1, 25]));
    }

    #[test]
    fn from_components_canonicalizes() {
        let d = PrimaryDecomposition::from_components(
            2,
            [exps(3, &[0, 0]), exps(2, &[1, 0]), exps(2, &[0, 1])],
        )
        .unwrap();
        assert_eq!(d.primes().count(), 1);
        assert_eq!(d.component(&2u32.into()).unwrap().exponents(), &[1, 1]);
        assert_eq!(
            PrimaryDecomposition::from_components(2, [exps(2, &[1])]),
            Err(Error::LengthMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn lemma1_examples() {
        assert!(lemma1_admissible(&exps(2, &[0, 0, 0, 0])).admissible);
        let r = lemma1_admissible(&exps(2, &[2, 1]));
        assert!(!r.admissible);
        assert_eq!(r.first_failure, Some((2, 1)));
        assert_eq!(r.witness_value.unwrap().to_string(), "1/2");
        assert!(lemma1_admissible(&exps(2, &[1, 1, 2])).admissible);
    }

    #[test]
    fn lemma1_agrees_with_direct_scan_on_small_tuples() {
        for p in [2u32, 3] {
            for len in 0..=5usize {
                for code in 0..3usize.pow(len as u32) {
                    let v: Vec<u64> = (0..len)
                        .map(|i| (code / 3usize.pow(i as u32) % 3) as u64)
                        .collect();
                    let e = exps(p, &v);
                    assert_eq!(
                        lemma1_admissible(&e),
                        is_admissible(&primary_to_sequence(&e))
                    );
                }
            }
        }
    }

    #[test]
    fn primary_rendering() {
        assert_eq!(primary_to_sequence(&exps(3, &[0, 1, 2])), seq(&[1, 3, 9]));
        assert!(primary_to_sequence(&exps(2, &[])).is_empty());
        assert_eq!(primary_to_sequence(&exps(2, &[1, 1, 2])), seq(&[2, 2, 4]));
    }

    #[test]
    fn primary_detection() {
        assert_eq!(
            is_primary(&seq(&[1, 2, 4, 2])),
            Some(PrimaryBase::Prime(2u32.into()))
        );
        assert_eq!(is_primary(&seq(&[2, 6])), None);
        assert_eq!(is_primary(&seq(&[2, 3])), None);
        assert_eq!(is_primary(&seq(&[1, 1])), Some(PrimaryBase::Any));
        assert_eq!(
            is_primary(&seq(&[1, 9, 27])),
            Some(PrimaryBase::Prime(3u32.into()))
        );
    }
}
