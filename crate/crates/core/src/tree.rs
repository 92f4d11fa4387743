//! The weighted tree of primary admissible exponent sequences.
//!
//! A root path `(d1, ..., dn)` is admissible when for every `2 <= m <= n` and
//! `1 <= k <= m/2` the last `k` weights of the first `m` sum to at least the
//! first `k` weights. Appending a weight `w` to a length `n-1` path only adds
//! the constraints for `m = n`, which reduce to
//!
//! ```text
//! w >= max_k ( K_k - N_{n-1,k-1} ),   k = 1..=n/2
//! ```
//!
//! where `K_k` sums the first `k` weights and `N_{n-1,k-1}` sums the last
//! `k-1`. Successor sets are therefore `{m, m+1, ...}`. The tree does not
//! depend on the prime; a prime only enters when a path is rendered.

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Geometric};

use crate::error::{Error, Result};
use crate::factor::TrialDivision;
use crate::primary::{first_exponent_violation, primary_to_sequence, ExponentSequence};
use crate::sequence::FSequence;

/// An admissible root path, stored as its weights `d1..dn` (the root's weight 0 is implicit).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TreePath {
    weights: Vec<u64>,
}

impl TreePath {
    /// The root: the empty path.
    pub fn root() -> Self {
        Self::default()
    }

    pub fn from_weights(weights: Vec<u64>) -> Result<Self> {
        match first_exponent_violation(&weights) {
            Some((n, k, _)) => Err(Error::InadmissiblePath { n, k }),
            None => Ok(Self { weights }),
        }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn successors(&self) -> SuccessorSet {
        SuccessorSet {
            min_exponent: min_successor_exponent(self),
        }
    }

    /// Appends `exponent`, failing with [`Error::BelowMinimum`] below the least successor.
    pub fn extend(&self, exponent: u64) -> Result<TreePath> {
        let m = min_successor_exponent(self);
        if exponent < m {
            return Err(Error::BelowMinimum(m));
        }
        let mut weights = Vec::with_capacity(self.len() + 1);
        weights.extend_from_slice(&self.weights);
        weights.push(exponent);
        Ok(TreePath { weights })
    }
}

/// The admissible next weights `{min_exponent, min_exponent + 1, ...}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuccessorSet {
    pub min_exponent: u64,
}

impl SuccessorSet {
    pub fn contains(&self, weight: u64) -> bool {
        weight >= self.min_exponent
    }

    /// The (unbounded) weights in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u64> {
        self.min_exponent..
    }
}

/// Least weight that keeps `path` admissible when appended.
pub fn min_successor_exponent(path: &TreePath) -> u64 {
    min_successor(&path.weights)
}

pub(crate) fn min_successor(weights: &[u64]) -> u64 {
    let n = weights.len() + 1;
    if n < 2 {
        return 0;
    }
    let mut head = 0u128; // K_k
    let mut tail = 0u128; // N_{n-1,k-1}
    let mut m = 0u128;
    for k in 1..=n / 2 {
        head += u128::from(weights[k - 1]);
        if k >= 2 {
            tail += u128::from(weights[n - k]);
        }
        m = m.max(head.saturating_sub(tail));
    }
    u64::try_from(m).expect("successor weight exceeds u64")
}

/// Free-standing form of [`TreePath::extend`].
pub fn extend(path: &TreePath, exponent: u64) -> Result<TreePath> {
    path.extend(exponent)
}

/// Window onto the tree: paths of exactly `depth` weights, each at most `exponent_cap`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EnumerationConfig {
    pub depth: usize,
    pub exponent_cap: u64,
    /// Only used to render paths as sequences.
    pub prime: Option<BigUint>,
}

impl EnumerationConfig {
    pub fn new(depth: usize, exponent_cap: u64) -> Self {
        Self {
            depth,
            exponent_cap,
            prime: None,
        }
    }

    pub fn with_prime(mut self, prime: BigUint) -> Self {
        self.prime = Some(prime);
        self
    }
}

pub(crate) type SuccessorRule = fn(&[u64]) -> u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Start,
    Running,
    Done,
}

/// Depth-first, lexicographically ordered stream of capped paths.
#[derive(Debug, Clone)]
pub struct Paths {
    depth: usize,
    cap: u64,
    rule: SuccessorRule,
    stack: Vec<u64>,
    state: State,
}

impl Paths {
    pub(crate) fn with_rule(config: &EnumerationConfig, rule: SuccessorRule) -> Self {
        Self {
            depth: config.depth,
            cap: config.exponent_cap,
            rule,
            stack: Vec::with_capacity(config.depth),
            state: State::Start,
        }
    }

    /// Completes the current prefix with minimal successors. False if a minimum exceeds the cap.
    fn fill(&mut self) -> bool {
        while self.stack.len() < self.depth {
            let m = (self.rule)(&self.stack);
            if m > self.cap {
                return false;
            }
            self.stack.push(m);
        }
        true
    }

    /// Moves to the next sibling of the deepest bumpable node. False when exhausted.
    fn bump(&mut self) -> bool {
        while let Some(w) = self.stack.pop() {
            // successor sets are upward closed, so w + 1 is always a valid sibling
            if w < self.cap {
                self.stack.push(w + 1);
                return true;
            }
        }
        false
    }
}

impl Iterator for Paths {
    type Item = TreePath;

    fn next(&mut self) -> Option<TreePath> {
        match self.state {
            State::Done => return None,
            State::Start => {
                self.state = State::Running;
                if self.fill() {
                    return Some(TreePath {
                        weights: self.stack.clone(),
                    });
                }
            }
            State::Running => {}
        }
        loop {
            if !self.bump() {
                self.state = State::Done;
                return None;
            }
            if self.fill() {
                return Some(TreePath {
                    weights: self.stack.clone(),
                });
            }
        }
    }
}

impl std::iter::FusedIterator for Paths {}

/// All admissible paths of length `config.depth` with weights `<= config.exponent_cap`.
pub fn enumerate(config: &EnumerationConfig) -> Paths {
    Paths::with_rule(config, min_successor)
}

/// Number of paths [`enumerate`] yields, without materializing the leaves.
pub fn count_paths(config: &EnumerationConfig) -> u128 {
    if config.depth == 0 {
        return 1;
    }
    let cap = config.exponent_cap;
    let leaf_count = |prefix: &[u64]| -> u128 {
        let m = min_successor(prefix);
        if m > cap {
            0
        } else {
            u128::from(cap - m) + 1
        }
    };
    let parents = EnumerationConfig::new(config.depth - 1, cap);
    enumerate(&parents).map(|p| leaf_count(&p.weights)).sum()
}

/// Builds a random admissible path: each weight is the minimal successor plus
/// a geometric offset with the given mean. Deterministic per seed.
pub fn sample_random(depth: usize, offset_mean: f64, rng_seed: u64) -> Result<TreePath> {
    if !(offset_mean.is_finite() && offset_mean > 0.0) {
        return Err(Error::InvalidMean);
    }
    // failures before the first success: mean (1 - q) / q
    let offset = Geometric::new(1.0 / (1.0 + offset_mean)).map_err(|_| Error::InvalidMean)?;
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut weights = Vec::with_capacity(depth);
    for _ in 0..depth {
        let m = min_successor(&weights);
        weights.push(m.saturating_add(offset.sample(&mut rng)));
    }
    Ok(TreePath { weights })
}

/// Renders `p^d1, ..., p^dn`.
pub fn path_to_sequence(path: &TreePath, p: &BigUint) -> Result<FSequence> {
    if !TrialDivision::default().is_prime(p)? {
        return Err(Error::NotPrime(p.clone()));
    }
    Ok(primary_to_sequence(&ExponentSequence::new_unchecked(
        p.clone(),
        path.weights.clone(),
    )))
}
