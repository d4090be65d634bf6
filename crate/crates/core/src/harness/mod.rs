//! Property suites that run the semantic and proof-theoretic results of the
//! library as executable checks over seeded random inputs and exhaustive
//! grids.
//!
//! Every suite is reproducible from its name, options and seed range; cases
//! may run concurrently but reports list failures in seed order.

mod oracle;
mod random;
mod suites;

use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::logic::LogicConfig;

pub use oracle::lukasiewicz_value;
pub use random::{Sampler, MAX_DEPTH};

/// A failed case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteFailure {
    /// The case seed; `None` for grid and corpus cases.
    pub seed: Option<u64>,
    pub inputs: String,
    pub expected: String,
    pub observed: String,
}

impl SuiteFailure {
    pub fn new(
        seed: Option<u64>,
        inputs: impl Into<String>,
        expected: impl Into<String>,
        observed: impl Into<String>,
    ) -> Self {
        SuiteFailure { seed, inputs: inputs.into(), expected: expected.into(), observed: observed.into() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<SuiteFailure>,
    #[serde(rename = "wall_time_secs", serialize_with = "as_secs")]
    pub wall_time: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Everything except the wall time; equal for equal inputs.
    pub fn outcome(&self) -> (&str, u64, &[SuiteFailure]) {
        (&self.suite, self.cases, &self.failures)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        writeln!(
            f,
            "{verdict} {}: {} cases, {} failures, {:.2}s",
            self.suite,
            self.cases,
            self.failures.len(),
            self.wall_time.as_secs_f64()
        )?;
        for x in &self.failures {
            let seed = x.seed.map_or_else(|| "-".to_string(), |s| s.to_string());
            writeln!(f, "  seed {seed}: {}", x.inputs)?;
            writeln!(f, "    expected: {}", x.expected)?;
            writeln!(f, "    observed: {}", x.observed)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Adjunction,
    TNormAxioms,
    PropositionalTheorems,
    LukasiewiczResiduum,
    GradedTheorems,
    GradedSemantics,
    Soundness,
    Milnikel,
    Frames,
    Crisp,
    Conservativity,
    Lifting,
    Degrees,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Adjunction,
        Suite::TNormAxioms,
        Suite::PropositionalTheorems,
        Suite::LukasiewiczResiduum,
        Suite::GradedTheorems,
        Suite::GradedSemantics,
        Suite::Soundness,
        Suite::Milnikel,
        Suite::Frames,
        Suite::Crisp,
        Suite::Conservativity,
        Suite::Lifting,
        Suite::Degrees,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Adjunction => "adjunction",
            Suite::TNormAxioms => "tnorm-axioms",
            Suite::PropositionalTheorems => "propositional-theorems",
            Suite::LukasiewiczResiduum => "lukasiewicz-residuum",
            Suite::GradedTheorems => "graded-theorems",
            Suite::GradedSemantics => "graded-semantics",
            Suite::Soundness => "soundness",
            Suite::Milnikel => "milnikel",
            Suite::Frames => "frames",
            Suite::Crisp => "crisp",
            Suite::Conservativity => "conservativity",
            Suite::Lifting => "lifting",
            Suite::Degrees => "degrees",
        }
    }

    /// Seeds per logic (or per variant) when none are requested. Grid and
    /// corpus suites ignore it.
    pub fn default_seeds(self) -> u64 {
        match self {
            Suite::Soundness => 500,
            Suite::Lifting => 100,
            _ => 200,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Restricts suites that range over several logics to this one.
    pub logic: Option<LogicConfig>,
    /// First seed of the range.
    pub seed: u64,
    /// Number of seeds; the suite default when `None`.
    pub seeds: Option<u64>,
}

impl SuiteOptions {
    pub fn seed_range(&self, suite: Suite) -> Range<u64> {
        let n = self.seeds.unwrap_or_else(|| suite.default_seeds());
        self.seed..self.seed.saturating_add(n)
    }
}

pub fn run_suite(suite: Suite, options: &SuiteOptions) -> SuiteReport {
    let start = Instant::now();
    let (cases, failures) = suites::run(suite, options);
    SuiteReport { suite: suite.name().to_string(), cases, failures, wall_time: start.elapsed() }
}

/// Every suite, in the order of [`Suite::ALL`].
pub fn run_all(options: &SuiteOptions) -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|s| run_suite(*s, options)).collect()
}

/// Runs `case` for every seed, concurrently, and concatenates the failures
/// in seed order.
pub(crate) fn per_seed<F>(seeds: Range<u64>, case: F) -> (u64, Vec<SuiteFailure>)
where
    F: Fn(u64) -> Vec<SuiteFailure> + Send + Sync,
{
    let n = seeds.end - seeds.start;
    let failures: Vec<Vec<SuiteFailure>> = seeds.into_par_iter().map(case).collect();
    (n, failures.into_iter().flatten().collect())
}
