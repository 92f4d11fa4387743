//! Cross-check suites that bind the exponent criterion, the tree and the
//! decomposition back to the direct admissibility scan.

use std::fmt;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::primary::{
    decompose, first_exponent_violation, lemma1_admissible, primary_to_sequence, reconstruct,
    ExponentSequence, PrimaryDecomposition,
};
use crate::sequence::{f_binomial, is_admissible, FSequence};
use crate::tree::{min_successor, sample_random, EnumerationConfig, Paths, SuccessorRule};

/// Deliberate faults used to check that the suites catch them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutant {
    /// The successor minimum is reported one too high.
    SuccessorOffByOne,
}

fn mutant_off_by_one(weights: &[u64]) -> u64 {
    min_successor(weights) + 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_depth: usize,
    pub max_cap: u64,
    /// Random cases per randomized suite; 0 skips those suites.
    pub trials: usize,
    pub seed: u64,
    pub mutant: Option<Mutant>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_depth: 6,
            max_cap: 2,
            trials: 100,
            seed: 0,
            mutant: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SuiteStatus {
    Passed { cases: usize },
    Failed { counterexample: String },
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub status: SuiteStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySummary {
    pub suites: Vec<SuiteOutcome>,
}

impl VerifySummary {
    pub fn passed(&self) -> usize {
        self.count(|s| matches!(s, SuiteStatus::Passed { .. }))
    }

    pub fn failed(&self) -> usize {
        self.count(|s| matches!(s, SuiteStatus::Failed { .. }))
    }

    pub fn skipped(&self) -> usize {
        self.count(|s| matches!(s, SuiteStatus::Skipped))
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    fn count(&self, f: impl Fn(&SuiteStatus) -> bool) -> usize {
        self.suites.iter().filter(|s| f(&s.status)).count()
    }
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            match &s.status {
                SuiteStatus::Passed { cases } => writeln!(f, "PASS {} ({cases} cases)", s.name)?,
                SuiteStatus::Failed { counterexample } => {
                    writeln!(f, "FAIL {}: {counterexample}", s.name)?
                }
                SuiteStatus::Skipped => writeln!(f, "SKIP {}", s.name)?,
            }
        }
        let ran = self.passed() + self.failed();
        write!(f, "{}/{} suites passed", self.passed(), ran)?;
        if self.skipped() > 0 {
            write!(f, " ({} skipped)", self.skipped())?;
        }
        Ok(())
    }
}

type Outcome = std::result::Result<usize, String>;

/// Runs every suite and collects the outcomes in a fixed order.
pub fn run_suites(config: &VerifyConfig) -> VerifySummary {
    let rule: SuccessorRule = match config.mutant {
        None => min_successor,
        Some(Mutant::SuccessorOffByOne) => mutant_off_by_one,
    };
    let randomized = config.trials > 0;
    let mut suites = Vec::new();
    let mut record = |name: &'static str, outcome: Option<Outcome>| {
        let status = match outcome {
            None => SuiteStatus::Skipped,
            Some(Ok(cases)) => SuiteStatus::Passed { cases },
            Some(Err(counterexample)) => SuiteStatus::Failed { counterexample },
        };
        suites.push(SuiteOutcome { name, status });
    };

    record("criterion-equivalence", Some(criterion_equivalence(config)));
    record(
        "enumeration-completeness",
        Some(enumeration_completeness(config, rule)),
    );
    record(
        "successor-exactness",
        Some(successor_exactness(config, rule)),
    );
    record("roundtrip", randomized.then(|| roundtrip(config)));
    record(
        "multiplicativity",
        randomized.then(|| multiplicativity(config)),
    );
    VerifySummary { suites }
}

/// All tuples in `{0..=cap}^len` in lexicographic order.
fn tuples(len: usize, cap: u64) -> impl Iterator<Item = Vec<u64>> {
    let base = cap + 1;
    let total = base.checked_pow(len as u32).expect("tuple space too large");
    (0..total).map(move |code| {
        (0..len)
            .map(|i| code / base.pow((len - 1 - i) as u32) % base)
            .collect()
    })
}

fn render(p: u32, weights: &[u64]) -> FSequence {
    let p = BigUint::from(p);
    FSequence::from_terms(weights.iter().map(|&e| p.pow(e as u32)).collect())
        .expect("prime powers are positive")
}

fn criterion_equivalence(config: &VerifyConfig) -> Outcome {
    let mut cases = 0;
    for len in 0..=config.max_depth {
        for t in tuples(len, config.max_cap) {
            for p in [2u32, 3] {
                let exps = ExponentSequence::new_unchecked(p.into(), t.clone());
                let by_sums = lemma1_admissible(&exps);
                let direct = is_admissible(&primary_to_sequence(&exps));
                if by_sums != direct {
                    return Err(format!(
                        "p={p} exponents {t:?}: exponent sums give {:?}, direct scan gives {:?}",
                        by_sums.first_failure, direct.first_failure
                    ));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn enumeration_completeness(config: &VerifyConfig, rule: SuccessorRule) -> Outcome {
    let mut cases = 0;
    for depth in 0..=config.max_depth {
        for cap in 0..=config.max_cap {
            let enumerated: Vec<Vec<u64>> =
                Paths::with_rule(&EnumerationConfig::new(depth, cap), rule)
                    .map(|p| p.weights().to_vec())
                    .collect();
            let oracle: Vec<Vec<u64>> = tuples(depth, cap)
                .filter(|t| is_admissible(&render(2, t)).admissible)
                .collect();
            if enumerated != oracle {
                let missing = oracle.iter().find(|t| !enumerated.contains(t));
                let extra = enumerated.iter().find(|t| !oracle.contains(t));
                return Err(match (missing, extra) {
                    (Some(t), _) => format!("depth={depth} cap={cap}: path {t:?} not enumerated"),
                    (None, Some(t)) => {
                        format!("depth={depth} cap={cap}: inadmissible path {t:?} enumerated")
                    }
                    (None, None) => format!("depth={depth} cap={cap}: order differs"),
                });
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn admissible_weights(weights: &[u64]) -> bool {
    first_exponent_violation(weights).is_none()
}

fn check_successor(weights: &[u64], rule: SuccessorRule) -> std::result::Result<(), String> {
    let m = rule(weights);
    let with = |e: u64| {
        let mut w = weights.to_vec();
        w.push(e);
        admissible_weights(&w)
    };
    if !with(m) {
        return Err(format!("path {weights:?}: minimum {m} is not admissible"));
    }
    if m >= 1 && with(m - 1) {
        return Err(format!(
            "path {weights:?}: {} is admissible below minimum {m}",
            m - 1
        ));
    }
    if let Some(j) = (1..=10).find(|&j| !with(m + j)) {
        return Err(format!(
            "path {weights:?}: {} above minimum {m} is rejected",
            m + j
        ));
    }
    Ok(())
}

fn successor_exactness(config: &VerifyConfig, rule: SuccessorRule) -> Outcome {
    let mut cases = 0;
    for depth in 0..=config.max_depth {
        for path in Paths::with_rule(
            &EnumerationConfig::new(depth, config.max_cap),
            min_successor,
        ) {
            check_successor(path.weights(), rule)?;
            cases += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.trials {
        let depth = rng.gen_range(0..=config.max_depth.max(1) * 2);
        let path = sample_random(depth, 1.0, rng.gen()).expect("mean is positive");
        check_successor(path.weights(), rule)?;
        cases += 1;
    }
    Ok(cases)
}

fn roundtrip(config: &VerifyConfig) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x5eed_0001);
    for _ in 0..config.trials {
        let depth = rng.gen_range(0..=config.max_depth.max(1));
        let components: Vec<ExponentSequence> = [2u32, 3, 5]
            .iter()
            .map(|&p| {
                let path = sample_random(depth, 1.0, rng.gen()).expect("mean is positive");
                ExponentSequence::new_unchecked(p.into(), path.weights().to_vec())
            })
            .collect();
        let d = PrimaryDecomposition::from_components(depth, components)
            .expect("components share a length");
        let seq = reconstruct(&d);
        let back = decompose(&seq).map_err(|e| format!("{:?}: {e}", seq.terms()))?;
        if back != d {
            return Err(format!(
                "{:?}: decompose does not invert reconstruct",
                seq.terms()
            ));
        }
        if reconstruct(&back) != seq {
            return Err(format!(
                "{:?}: reconstruct does not invert decompose",
                seq.terms()
            ));
        }
        if let Some((n, k)) = is_admissible(&seq).first_failure {
            return Err(format!(
                "{:?}: product rejected at (n={n},k={k})",
                seq.terms()
            ));
        }
        let bad = back.components().find(|c| !lemma1_admissible(c).admissible);
        if let Some(c) = bad {
            return Err(format!(
                "{:?}: component p={} inadmissible",
                seq.terms(),
                c.prime()
            ));
        }
    }
    Ok(config.trials)
}

fn multiplicativity(config: &VerifyConfig) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x5eed_0002);
    for _ in 0..config.trials {
        let len = rng.gen_range(0..=config.max_depth.max(1));
        let mut draw = || {
            FSequence::new((0..len).map(|_| rng.gen_range(1u64..=60)))
                .expect("drawn terms are positive")
        };
        let (f, g) = (draw(), draw());
        let h = f.pointwise_product(&g).expect("equal lengths");
        for n in 0..=len {
            for k in 0..=n + 1 {
                let lhs = f_binomial(&h, n, k).expect("n in range");
                let rhs = &f_binomial(&f, n, k).expect("n in range")
                    * &f_binomial(&g, n, k).expect("n in range");
                if lhs != rhs {
                    return Err(format!(
                        "F={:?} G={:?} at (n={n},k={k}): {lhs} != {rhs}",
                        f.terms(),
                        g.terms()
                    ));
                }
            }
        }
    }
    Ok(config.trials)
}
