//! Randomized and exhaustive property suites behind `gtable verify`.

mod cochain;
mod gallery;
mod linalg;
mod oracle;

use std::thread;

use clap::ValueEnum;

pub use cochain::{random_lie_algebra, SUPERCOCHAIN_CASES};
pub use gallery::gln_axioms;
pub use oracle::{random_case, OracleCase, ORACLE_CASES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Exactla,
    Repkit,
    Supercochain,
    Gtable,
    Gallery,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Exactla,
        Suite::Repkit,
        Suite::Supercochain,
        Suite::Gtable,
        Suite::Gallery,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Exactla => "exactla",
            Suite::Repkit => "repkit",
            Suite::Supercochain => "supercochain",
            Suite::Gtable => "gtable",
            Suite::Gallery => "gallery",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub cases: usize,
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn line(&self) -> String {
        match &self.failure {
            None => format!("{}/{}: ok ({} cases)", self.suite.name(), self.name, self.cases),
            Some(why) => format!(
                "{}/{}: FAILED after {} cases: {}",
                self.suite.name(),
                self.name,
                self.cases,
                why
            ),
        }
    }
}

/// Runs `case(0..cases)` and stops at the first failure.
pub(crate) fn check(
    suite: Suite,
    name: &str,
    cases: usize,
    mut case: impl FnMut(usize) -> Result<(), String>,
) -> CheckResult {
    for i in 0..cases {
        if let Err(why) = case(i) {
            return CheckResult {
                suite,
                name: name.to_string(),
                cases: i + 1,
                failure: Some(format!("case {i}: {why}")),
            };
        }
    }
    CheckResult {
        suite,
        name: name.to_string(),
        cases,
        failure: None,
    }
}

/// Seed of the random corpus for a suite; fixed so reports are reproducible.
pub fn seed(suite: Suite) -> u64 {
    0x6774_6162_6c65_0000 + suite as u64
}

pub fn run_suite(suite: Suite) -> Vec<CheckResult> {
    match suite {
        Suite::Exactla => linalg::exactla_suite(seed(suite)),
        Suite::Repkit => linalg::repkit_suite(),
        Suite::Supercochain => cochain::suite(seed(suite)),
        Suite::Gtable => oracle::suite(seed(suite)),
        Suite::Gallery => gallery::suite(),
    }
}

/// Worker count: `GTABLE_THREADS` if set and positive, else the available
/// parallelism.
pub fn thread_count() -> usize {
    std::env::var("GTABLE_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

/// Runs the suites on up to `threads` workers; results come back in suite
/// order regardless of scheduling.
pub fn run_suites(suites: &[Suite], threads: usize) -> Vec<CheckResult> {
    let threads = threads.clamp(1, suites.len().max(1));
    let mut slots: Vec<Option<Vec<CheckResult>>> = vec![None; suites.len()];
    let chunks: Vec<Vec<(usize, Suite)>> = (0..threads)
        .map(|w| suites.iter().copied().enumerate().skip(w).step_by(threads).collect())
        .collect();
    thread::scope(|s| {
        let handles: Vec<_> = chunks
            .into_iter()
            .map(|chunk| {
                s.spawn(move || {
                    chunk
                        .into_iter()
                        .map(|(i, suite)| (i, run_suite(suite)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("suite worker panicked") {
                slots[i] = Some(r);
            }
        }
    });
    slots.into_iter().flatten().flatten().collect()
}
