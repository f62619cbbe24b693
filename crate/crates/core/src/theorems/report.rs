use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use super::{Outcome, TheoremId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub case: String,
    pub passed: bool,
}

/// Outcome of one theorem check. Passes iff `failures` is empty.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
    pub cases: Vec<CaseRecord>,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl VerificationReport {
    pub(crate) fn from_outcomes(theorem: TheoremId, outcomes: Vec<Outcome>, elapsed: Duration) -> Self {
        let cases = outcomes.iter().map(|(case, f)| CaseRecord { case: case.clone(), passed: f.is_none() }).collect();
        let failures = outcomes
            .into_iter()
            .filter_map(|(case, f)| f.map(|(expected, got)| Failure { case, expected, got }))
            .collect::<Vec<_>>();
        Self { theorem, cases_run: 0, failures, elapsed, cases }.counted()
    }

    fn counted(mut self) -> Self {
        self.cases_run = self.cases.len();
        self
    }

    /// Appends the cases and failures of `other` under this theorem id.
    pub(crate) fn merge(mut self, other: VerificationReport) -> Self {
        self.cases.extend(other.cases);
        self.failures.extend(other.failures);
        self.elapsed += other.elapsed;
        self.counted()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Summary line followed by one indented line per failure. Timing is
    /// left out so identical runs print identical text.
    pub fn to_text(&self) -> String {
        self.text(false)
    }

    /// As [`to_text`](Self::to_text), with the elapsed time on the summary line.
    pub fn to_timed_text(&self) -> String {
        self.text(true)
    }

    fn text(&self, timed: bool) -> String {
        let timing = if timed { format!(" elapsed_ms={:.1}", self.elapsed.as_secs_f64() * 1e3) } else { String::new() };
        let mut out = format!(
            "{:<6} {} cases={} failures={}{timing}  {}\n",
            self.theorem.name(),
            if self.passed() { "PASS" } else { "FAIL" },
            self.cases_run,
            self.failures.len(),
            self.theorem.claim(),
        );
        for f in &self.failures {
            writeln!(out, "       case={} expected={} got={}", f.case, f.expected, f.got).unwrap();
        }
        out
    }
}
