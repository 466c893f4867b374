//! Seeded experiment harness for the step-count conjecture: if
//! `(JH)^g = 0` then the sequence of every coordinate should vanish by
//! index `(3^(g-1) + 1) / 2` and `deg F^{-1} <= 3^(g-1)`.
//!
//! The cases `g <= 3` are theorems, so any non-`CONSISTENT` verdict there
//! exposes an engine bug; `g >= 4` is open territory and a
//! `COUNTEREXAMPLE` record is a headline result, so records keep the
//! coefficient matrix for reproducer dumps.
//!
//! Everything is deterministic given `(config, trials)`: trial `k` uses
//! the `k`-th SplitMix64 output of the experiment seed as its own seed,
//! so any single trial can be reproduced in isolation.

use std::fmt;
use std::time::Instant;

use crate::druzkowski::{generate_leveled, DruzkowskiMap, GeneratorConfig};
use crate::inversion::{default_cap, invert_with, InvertOptions, Termination};
use crate::polymap::NilpotencyIndex;
use crate::rational::Rational;
use crate::rng::nth_output;

/// Default cap on stored terms per polynomial; exceeding it marks the
/// trial `INCONCLUSIVE` instead of exhausting memory.
pub const DEFAULT_TERM_BUDGET: usize = 2_000_000;

/// Step bound `(3^(g-1) + 1) / 2` claimed by the conjecture (the same
/// expression as the inversion engine's default cap, as a function of the
/// nilpotency index instead of the dimension).
pub fn step_bound(g: usize) -> usize {
    default_cap(g)
}

/// Degree bound `3^(g-1)` claimed by the conjecture.
pub fn degree_bound(g: usize) -> u64 {
    3u64.saturating_pow((g as u32).saturating_sub(1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    Counterexample,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Consistent => write!(f, "CONSISTENT"),
            Verdict::Counterexample => write!(f, "COUNTEREXAMPLE"),
            Verdict::Inconclusive => write!(f, "INCONCLUSIVE"),
        }
    }
}

/// Why a trial could not be classified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InconclusiveReason {
    /// `JH` is not nilpotent within the dimension cap, so the conjecture
    /// does not apply.
    NotNilpotent,
    /// The term budget was exhausted mid-sequence.
    BudgetExceeded,
    /// A cap override stopped the sequence before the conjectured bound.
    CapTooSmall,
}

impl InconclusiveReason {
    fn label(self) -> &'static str {
        match self {
            InconclusiveReason::NotNilpotent => "not_nilpotent",
            InconclusiveReason::BudgetExceeded => "budget",
            InconclusiveReason::CapTooSmall => "cap",
        }
    }
}

/// Outcome of testing the conjecture on one map.
#[derive(Debug, Clone)]
pub struct TrialRecord {
    pub seed: u64,
    pub dimension: usize,
    /// Level count requested from the generator, when known.
    pub target_levels: Option<usize>,
    /// Measured nilpotency index of `JH`.
    pub measured_index: NilpotencyIndex,
    pub step_bound: Option<usize>,
    pub degree_bound: Option<u64>,
    /// Per-coordinate termination index; `None` entries did not resolve.
    pub termination_indices: Option<Vec<Option<usize>>>,
    /// `max deg G_i` when the map inverted.
    pub inverse_degree: Option<u32>,
    pub verdict: Verdict,
    pub reason: Option<InconclusiveReason>,
    /// Coefficient matrix, retained on `COUNTEREXAMPLE` for reproducers.
    pub matrix: Option<Vec<Vec<Rational>>>,
}

impl TrialRecord {
    fn report_line(&self, index: usize) -> String {
        let g_star = self.measured_index.to_string();
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".to_string());
        let m = self.termination_indices.as_ref().map(|ms| {
            ms.iter()
                .map(|m| m.map_or_else(|| "?".to_string(), |v| v.to_string()))
                .collect::<Vec<_>>()
                .join(",")
        });
        let mut line = format!(
            "trial {index} seed={} g_star={} step_bound={} degree_bound={} m={} deg_g={} verdict={}",
            self.seed,
            g_star,
            opt(self.step_bound.map(|v| v.to_string())),
            opt(self.degree_bound.map(|v| v.to_string())),
            opt(m),
            opt(self.inverse_degree.map(|v| v.to_string())),
            self.verdict,
        );
        if let Some(reason) = self.reason {
            line.push_str(&format!(" reason={}", reason.label()));
        }
        line
    }
}

/// Knobs for a single trial.
#[derive(Debug, Clone, Copy)]
pub struct TrialOptions {
    /// Recorded in the output; not consumed by the computation.
    pub seed_label: u64,
    pub target_levels: Option<usize>,
    /// Overrides the conjectured step bound as the iteration cap.
    pub cap_override: Option<usize>,
    pub term_budget: Option<usize>,
}

impl Default for TrialOptions {
    fn default() -> Self {
        TrialOptions {
            seed_label: 0,
            target_levels: None,
            cap_override: None,
            term_budget: Some(DEFAULT_TERM_BUDGET),
        }
    }
}

/// Measures the nilpotency index, runs the sequences up to the
/// conjectured step bound, and classifies the outcome.
pub fn run_trial(map: &DruzkowskiMap, options: TrialOptions) -> TrialRecord {
    let d = map.dimension();
    let base = TrialRecord {
        seed: options.seed_label,
        dimension: d,
        target_levels: options.target_levels,
        measured_index: NilpotencyIndex::NotNilpotent,
        step_bound: None,
        degree_bound: None,
        termination_indices: None,
        inverse_degree: None,
        verdict: Verdict::Inconclusive,
        reason: None,
        matrix: None,
    };

    let jh = map.cubic_part().jacobian();
    let g_star = match jh.nilpotency_index(d.max(1)) {
        NilpotencyIndex::NotNilpotent => {
            return TrialRecord {
                reason: Some(InconclusiveReason::NotNilpotent),
                ..base
            };
        }
        NilpotencyIndex::Index(g) => g,
    };
    let bound = step_bound(g_star);
    let deg_bound = degree_bound(g_star);
    let cap = options.cap_override.unwrap_or(bound);

    let result = invert_with(
        map.map(),
        InvertOptions {
            cap: Some(cap),
            term_budget: options.term_budget,
        },
    )
    .expect("cubic-linear maps always have the required form");

    let base = TrialRecord {
        measured_index: NilpotencyIndex::Index(g_star),
        step_bound: Some(bound),
        degree_bound: Some(deg_bound),
        termination_indices: Some(
            result
                .trace
                .coordinates
                .iter()
                .map(|c| c.termination.resolved())
                .collect(),
        ),
        ..base
    };

    if result
        .trace
        .coordinates
        .iter()
        .any(|c| c.termination == Termination::BudgetExceeded)
    {
        return TrialRecord {
            reason: Some(InconclusiveReason::BudgetExceeded),
            ..base
        };
    }

    if let Some(inverse) = &result.inverse {
        let m_max = result
            .trace
            .coordinates
            .iter()
            .map(|c| c.termination.resolved().unwrap())
            .max()
            .unwrap_or(1);
        let deg = inverse.degree().as_finite().unwrap_or(0);
        let verdict = if m_max > bound || u64::from(deg) > deg_bound {
            Verdict::Counterexample
        } else {
            Verdict::Consistent
        };
        return TrialRecord {
            inverse_degree: Some(deg),
            verdict,
            matrix: (verdict == Verdict::Counterexample).then(|| map.matrix().to_vec()),
            ..base
        };
    }

    // some coordinate ran to the cap without resolving
    if cap >= bound {
        // P at the conjectured index is nonzero
        TrialRecord {
            verdict: Verdict::Counterexample,
            matrix: Some(map.matrix().to_vec()),
            ..base
        }
    } else {
        TrialRecord {
            reason: Some(InconclusiveReason::CapTooSmall),
            ..base
        }
    }
}

/// Knobs for a whole experiment.
#[derive(Debug, Clone, Copy)]
pub struct ExperimentOptions {
    pub trials: usize,
    pub term_budget: usize,
    pub cap_override: Option<usize>,
}

impl ExperimentOptions {
    pub fn new(trials: usize) -> Self {
        ExperimentOptions {
            trials,
            term_budget: DEFAULT_TERM_BUDGET,
            cap_override: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentReport {
    pub config: GeneratorConfig,
    pub options: ExperimentOptions,
    pub records: Vec<TrialRecord>,
    pub walltime_ms: u128,
}

impl ExperimentReport {
    /// `(consistent, counterexample, inconclusive)` counts.
    pub fn counts(&self) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for r in &self.records {
            match r.verdict {
                Verdict::Consistent => c.0 += 1,
                Verdict::Counterexample => c.1 += 1,
                Verdict::Inconclusive => c.2 += 1,
            }
        }
        c
    }

    pub fn summary_line(&self) -> String {
        let (c, x, i) = self.counts();
        format!("{c} CONSISTENT, {x} COUNTEREXAMPLE, {i} INCONCLUSIVE")
    }

    /// Counterexample records with their trial indices.
    pub fn counterexamples(&self) -> impl Iterator<Item = (usize, &TrialRecord)> {
        self.records
            .iter()
            .enumerate()
            .filter(|(_, r)| r.verdict == Verdict::Counterexample)
    }

    /// Machine-readable report; identical runs agree byte-for-byte except
    /// for the final `walltime_ms` line.
    pub fn to_report_text(&self) -> String {
        let (c, x, i) = self.counts();
        let pool: Vec<String> = self.config.pool.iter().map(Rational::to_string).collect();
        let mut out = format!(
            "conjecture-report v1\n\
             seed {}\n\
             dim {}\n\
             levels {}\n\
             trials {}\n\
             density {}\n\
             pool {}\n\
             budget {}\n\
             counts CONSISTENT={c} COUNTEREXAMPLE={x} INCONCLUSIVE={i}\n",
            self.config.seed,
            self.config.dimension,
            self.config.levels,
            self.options.trials,
            self.config.density,
            pool.join(" "),
            self.options.term_budget,
        );
        for (index, record) in self.records.iter().enumerate() {
            out.push_str(&record.report_line(index));
            out.push('\n');
        }
        out.push_str(&format!("walltime_ms {}\n", self.walltime_ms));
        out
    }
}

/// Strips the wall-time line, leaving the deterministic part of a report.
pub fn deterministic_part(report_text: &str) -> String {
    report_text
        .lines()
        .filter(|l| !l.starts_with("walltime_ms"))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Runs `options.trials` independent trials; trial `k` generates its map
/// from seed `nth_output(config.seed, k)`.
pub fn run_experiment(config: &GeneratorConfig, options: ExperimentOptions) -> ExperimentReport {
    let start = Instant::now();
    let records = (0..options.trials)
        .map(|k| {
            let trial_seed = nth_output(config.seed, k as u64);
            let trial_config = GeneratorConfig {
                seed: trial_seed,
                ..config.clone()
            };
            let map = generate_leveled(&trial_config);
            run_trial(
                &map,
                TrialOptions {
                    seed_label: trial_seed,
                    target_levels: Some(config.levels),
                    cap_override: options.cap_override,
                    term_budget: Some(options.term_budget),
                },
            )
        })
        .collect();
    ExperimentReport {
        config: config.clone(),
        options,
        records,
        walltime_ms: start.elapsed().as_millis(),
    }
}
