//! Uniform result records for verification runs.
//!
//! Every check performed by a suite produces one `VerificationResult`. A
//! result passes exactly when its `expected` and `computed` strings are
//! equal; the constructors enforce this, so a rendered report can be
//! audited by eye. Report-only results record comparisons against sources
//! that are themselves unproved or suspected of typos; they never fail a
//! run.

use std::fmt;

/// How the expected value of a case was obtained.
///
/// `Published` values are quoted from the literature, `Derived` values were
/// recomputed here along an independent route and frozen, `Trivial` values
/// follow from definitions alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Published,
    Derived,
    Trivial,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Provenance::Published => "published",
            Provenance::Derived => "derived",
            Provenance::Trivial => "trivial",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    ReportOnly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ReportOnly => "report-only",
        };
        f.write_str(s)
    }
}

/// One verified comparison. `status` is `Pass` iff `expected == computed`,
/// except for report-only records, which carry the comparison without
/// judging it.
#[derive(Debug, Clone)]
pub struct VerificationResult {
    pub suite: &'static str,
    pub case: String,
    pub expected: String,
    pub computed: String,
    pub provenance: Provenance,
    pub status: Status,
}

impl VerificationResult {
    /// Builds a pass/fail record; the status comes from exact string
    /// equality of the two sides.
    pub fn check(
        suite: &'static str,
        case: impl Into<String>,
        provenance: Provenance,
        expected: impl Into<String>,
        computed: impl Into<String>,
    ) -> Self {
        let expected = expected.into();
        let computed = computed.into();
        let status = if expected == computed {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationResult {
            suite,
            case: case.into(),
            expected,
            computed,
            provenance,
            status,
        }
    }

    /// Builds a record that reports a comparison without failing the run.
    pub fn report_only(
        suite: &'static str,
        case: impl Into<String>,
        provenance: Provenance,
        expected: impl Into<String>,
        computed: impl Into<String>,
    ) -> Self {
        VerificationResult {
            suite,
            case: case.into(),
            expected: expected.into(),
            computed: computed.into(),
            provenance,
            status: Status::ReportOnly,
        }
    }

    /// Builds a hard failure from an error raised while computing a case.
    pub fn from_error(
        suite: &'static str,
        case: impl Into<String>,
        provenance: Provenance,
        expected: impl Into<String>,
        error: impl fmt::Display,
    ) -> Self {
        VerificationResult {
            suite,
            case: case.into(),
            expected: expected.into(),
            computed: format!("error: {error}"),
            provenance,
            status: Status::Fail,
        }
    }

    pub fn is_hard_failure(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Counts by status over a finished run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ReportSummary {
    pub pass: usize,
    pub fail: usize,
    pub report_only: usize,
}

impl ReportSummary {
    pub fn of(results: &[VerificationResult]) -> Self {
        let mut s = ReportSummary::default();
        for r in results {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::ReportOnly => s.report_only += 1,
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.fail == 0
    }
}

impl fmt::Display for ReportSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "passed {}, failed {}, report-only {}",
            self.pass, self.fail, self.report_only
        )
    }
}
