//! Corpus-quantified checks of the Δ-quasipolar theory.
//!
//! Each check `C01`..`C31` pairs a hypothesis (which rings it applies to) with
//! an assertion evaluated by brute force. A ring outside the hypothesis gets
//! `NOT-APPLICABLE`; a check whose hypothesis can never be met on a ring where
//! it was expected to apply reports `VACUOUS`. Passing checks only say the
//! statement was not falsified on this corpus.

mod checks;
mod corpus;
mod report;

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::error::RingError;
use crate::ring::FiniteRing;

pub use checks::{check_dorroh, check_h_ring_equivalence, Profile, CHECKS};
pub use corpus::{default_corpus, Corpus, CorpusEntry, DEFAULT_MANIFEST};
pub use report::render_markdown;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("manifest line {line}: {source}")]
    Manifest { line: usize, source: RingError },
    #[error(transparent)]
    Ring(#[from] RingError),
}

impl HarnessError {
    pub fn ring_error(&self) -> Option<&RingError> {
        match self {
            HarnessError::Manifest { source, .. } => Some(source),
            HarnessError::Ring(e) => Some(e),
            HarnessError::UnknownCheck(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "NOT-APPLICABLE")]
    NotApplicable,
    #[serde(rename = "VACUOUS")]
    Vacuous,
}

/// What a check body returns before bookkeeping is attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass(Option<String>),
    Fail(String),
    NotApplicable(String),
    Vacuous(String),
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome::Pass(None)
    }

    pub fn pass_with(note: impl Into<String>) -> Self {
        Outcome::Pass(Some(note.into()))
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        Outcome::Fail(witness.into())
    }

    pub fn na(why: impl Into<String>) -> Self {
        Outcome::NotApplicable(why.into())
    }

    pub fn vacuous(why: impl Into<String>) -> Self {
        Outcome::Vacuous(why.into())
    }

    /// `Pass` if `holds`, else `Fail` with the lazily built witness.
    pub fn check(holds: bool, witness: impl FnOnce() -> String) -> Self {
        if holds {
            Outcome::pass()
        } else {
            Outcome::Fail(witness())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub ring: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl CheckResult {
    fn new(check: &str, ring: &FiniteRing, outcome: Outcome) -> Self {
        let (verdict, witness, note) = match outcome {
            Outcome::Pass(note) => (Verdict::Pass, None, note),
            Outcome::Fail(w) => (Verdict::Fail, Some(w), None),
            Outcome::NotApplicable(n) => (Verdict::NotApplicable, None, Some(n)),
            Outcome::Vacuous(n) => (Verdict::Vacuous, None, Some(n)),
        };
        CheckResult {
            check: check.to_string(),
            ring: ring.descriptor().to_string(),
            verdict,
            witness,
            note,
            millis: None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub na: usize,
    pub vacuous: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub corpus: Vec<String>,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn verdict(&self, check: &str, ring: &str) -> Option<&CheckResult> {
        self.results
            .iter()
            .find(|r| r.check == check && r.ring == ring)
    }
}

/// Pseudo-check id for ring-axiom validation, run before the math checks.
pub const AXIOM_CHECK: &str = "AXIOMS";

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    /// Restrict to these check ids (all when empty).
    pub checks: Vec<String>,
    /// Record per-result wall-clock milliseconds.
    pub timing: bool,
}

fn lookup(id: &str) -> Result<&'static checks::Check, HarnessError> {
    CHECKS
        .iter()
        .find(|c| c.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| HarnessError::UnknownCheck(id.to_string()))
}

/// Runs one check on one ring.
pub fn run_check(id: &str, ring: &Arc<FiniteRing>) -> Result<CheckResult, HarnessError> {
    let check = lookup(id)?;
    let profile = Profile::new(ring.clone());
    Ok(CheckResult::new(check.id, ring, (check.run)(&profile)))
}

/// Runs every selected check on every corpus ring. Rings failing axiom
/// validation get a single failing `AXIOMS` result instead.
pub fn run_suite(corpus: &Corpus, opts: &SuiteOptions) -> Result<SuiteReport, HarnessError> {
    let selected: Vec<&'static checks::Check> = if opts.checks.is_empty() {
        CHECKS.iter().collect()
    } else {
        opts.checks
            .iter()
            .map(|id| lookup(id))
            .collect::<Result<_, _>>()?
    };

    let per_ring: Vec<Vec<CheckResult>> = corpus
        .rings
        .par_iter()
        .map(|entry| {
            let ring = &entry.ring;
            let started = Instant::now();
            let validation = ring.validate();
            if !validation.is_ring() {
                let v = &validation.violations[0];
                let mut result = CheckResult::new(
                    AXIOM_CHECK,
                    ring,
                    Outcome::fail(format!("{:?} fails at {:?}", v.axiom, v.witness)),
                );
                if opts.timing {
                    result.millis = Some(started.elapsed().as_millis() as u64);
                }
                return vec![result];
            }
            let profile = Profile::new(ring.clone());
            selected
                .par_iter()
                .map(|check| {
                    let started = Instant::now();
                    let mut result = CheckResult::new(check.id, ring, (check.run)(&profile));
                    if opts.timing {
                        result.millis = Some(started.elapsed().as_millis() as u64);
                    }
                    result
                })
                .collect()
        })
        .collect();

    let results: Vec<CheckResult> = per_ring.into_iter().flatten().collect();
    let mut summary = Summary::default();
    for r in &results {
        match r.verdict {
            Verdict::Pass => summary.pass += 1,
            Verdict::Fail => summary.fail += 1,
            Verdict::NotApplicable => summary.na += 1,
            Verdict::Vacuous => summary.vacuous += 1,
        }
    }
    Ok(SuiteReport {
        corpus: corpus
            .rings
            .iter()
            .map(|e| e.ring.descriptor().to_string())
            .collect(),
        results,
        summary,
    })
}
