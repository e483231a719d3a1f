//! Helpers for the acceptance harness: a verdict per criterion, rendered as
//! one `PASS` or `FAIL` line.

use std::fmt;
use std::time::{Duration, Instant};

use vincular::verify::VerificationReport;

#[derive(Clone, Debug)]
pub struct Verdict {
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    pub fn pass(detail: impl Into<String>) -> Self {
        Verdict {
            passed: true,
            detail: detail.into(),
        }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        Verdict {
            passed: false,
            detail: detail.into(),
        }
    }

    /// Fails with the first few failing check ids.
    pub fn from_report(report: &VerificationReport) -> Self {
        let s = &report.summary;
        let counts = format!(
            "{} checks, {} passed, {} skipped",
            report.checks.len(),
            s.pass,
            s.skipped
        );
        if report.passed() && s.pass > 0 {
            return Verdict::pass(counts);
        }
        let failing: Vec<String> = report
            .failures()
            .take(5)
            .map(|c| format!("{} ({} vs {})", c.id, c.lhs, c.rhs))
            .collect();
        Verdict::fail(format!("{counts}; {} failed: {}", s.fail, failing.join(", ")))
    }

    /// Conjunction, keeping both details.
    pub fn and(self, other: Verdict) -> Verdict {
        Verdict {
            passed: self.passed && other.passed,
            detail: format!("{}; {}", self.detail, other.detail),
        }
    }
}

/// A verdict with its criterion number, title and wall time.
pub struct Outcome {
    pub number: usize,
    pub title: &'static str,
    pub verdict: Verdict,
    pub elapsed: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} criterion {}: {} [{}] ({:.1}s)",
            if self.verdict.passed { "PASS" } else { "FAIL" },
            self.number,
            self.title,
            self.verdict.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

pub fn timed(number: usize, title: &'static str, check: impl FnOnce() -> Verdict) -> Outcome {
    let start = Instant::now();
    let verdict = check();
    Outcome {
        number,
        title,
        verdict,
        elapsed: start.elapsed(),
    }
}
