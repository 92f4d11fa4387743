//! Finite sequence prefixes and exact F-nomial coefficients.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::One;

use crate::error::{Error, Result};
use crate::ratio::ExactRatio;

/// The terms `1_F, 2_F, ..., N_F` of a positive-integer sequence.
///
/// Index 0 is never stored: no F-nomial coefficient reads `0_F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FSequence {
    terms: Vec<BigUint>,
}

impl FSequence {
    /// Builds a sequence from signed values, rejecting any term `<= 0`.
    pub fn new<I, T>(values: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let terms = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| match v.into().into_parts() {
                (Sign::Plus, mag) => Ok(mag),
                _ => Err(Error::NonPositiveTerm(i + 1)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { terms })
    }

    /// Builds a sequence from unsigned magnitudes, rejecting zero terms.
    pub fn from_terms(terms: Vec<BigUint>) -> Result<Self> {
        if let Some(i) = terms.iter().position(|t| t.bits() == 0) {
            return Err(Error::NonPositiveTerm(i + 1));
        }
        Ok(Self { terms })
    }

    /// The all-ones sequence of length `n`.
    pub fn ones(n: usize) -> Self {
        Self {
            terms: vec![BigUint::one(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The term `n_F` for `1 <= n <= len`.
    pub fn term(&self, n: usize) -> Option<&BigUint> {
        n.checked_sub(1).and_then(|i| self.terms.get(i))
    }

    pub fn terms(&self) -> &[BigUint] {
        &self.terms
    }

    /// The first `n` terms (or the whole sequence if shorter).
    pub fn prefix(&self, n: usize) -> FSequence {
        FSequence {
            terms: self.terms[..n.min(self.len())].to_vec(),
        }
    }

    /// Termwise product with a sequence of the same length.
    pub fn pointwise_product(&self, other: &FSequence) -> Result<FSequence> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(FSequence {
            terms: self
                .terms
                .iter()
                .zip(&other.terms)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }
}

/// Builds an [`FSequence`] from a slice of signed values.
pub fn make_sequence(values: &[BigInt]) -> Result<FSequence> {
    FSequence::new(values.iter().cloned())
}

/// Evaluates `C(n, k)_F` exactly.
///
/// `k = 0` and `k = n` give 1; `k > n` gives 0.
pub fn f_binomial(seq: &FSequence, n: usize, k: usize) -> Result<ExactRatio> {
    if n > seq.len() {
        return Err(Error::IndexOutOfRange {
            index: n,
            len: seq.len(),
        });
    }
    if k > n {
        return Ok(ExactRatio::zero());
    }
    let mut value = ExactRatio::one();
    for i in 1..=k {
        value.scale(&seq.terms[n - i], &seq.terms[i - 1]);
    }
    Ok(value)
}

/// Result of an admissibility scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    /// Least failing `(n, k)`, scanning `n` ascending then `k` ascending.
    pub first_failure: Option<(usize, usize)>,
    /// The non-integer coefficient at `first_failure`.
    pub witness_value: Option<ExactRatio>,
    pub checked_depth: usize,
}

impl AdmissibilityReport {
    pub(crate) fn pass(checked_depth: usize) -> Self {
        Self {
            admissible: true,
            first_failure: None,
            witness_value: None,
            checked_depth,
        }
    }

    pub(crate) fn fail(checked_depth: usize, n: usize, k: usize, witness: ExactRatio) -> Self {
        Self {
            admissible: false,
            first_failure: Some((n, k)),
            witness_value: Some(witness),
            checked_depth,
        }
    }
}

/// Decides admissibility by scanning `2 <= n <= N`, `1 <= k <= n/2`.
///
/// `C(n, k)_F = C(n, n-k)_F` as exact ratios, so the upper half of every
/// row adds nothing.
pub fn is_admissible(seq: &FSequence) -> AdmissibilityReport {
    scan(seq, |n| n / 2)
}

/// Same decision as [`is_admissible`] but scanning every `1 <= k < n`.
/// The witness, if any, is the least failing `(n, k)` in that order.
pub fn is_admissible_full_range(seq: &FSequence) -> AdmissibilityReport {
    scan(seq, |n| n.saturating_sub(1))
}

fn scan(seq: &FSequence, k_max: impl Fn(usize) -> usize) -> AdmissibilityReport {
    let terms = seq.terms();
    for n in 2..=terms.len() {
        // C(n, k) = C(n, k-1) * (n-k+1)_F / k_F
        let mut value = ExactRatio::one();
        for k in 1..=k_max(n) {
            value.scale(&terms[n - k], &terms[k - 1]);
            if !value.is_integer() {
                return AdmissibilityReport::fail(terms.len(), n, k, value);
            }
        }
    }
    AdmissibilityReport::pass(terms.len())
}

/// Rows `0..=depth` of the F-nomial triangle; row `n` holds `C(n, k)_F` for `k = 0..=n`.
pub fn binomial_triangle(seq: &FSequence, depth: usize) -> Result<Vec<Vec<ExactRatio>>> {
    if depth > seq.len() {
        return Err(Error::IndexOutOfRange {
            index: depth,
            len: seq.len(),
        });
    }
    let terms = seq.terms();
    let rows = (0..=depth)
        .map(|n| {
            let mut row = Vec::with_capacity(n + 1);
            let mut value = ExactRatio::one();
            row.push(value.clone());
            for k in 1..=n {
                value.scale(&terms[n - k], &terms[k - 1]);
                row.push(value.clone());
            }
            row
        })
        .collect();
    Ok(rows)
}
