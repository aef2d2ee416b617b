//! Batch verification of the inter-family identities, engine
//! cross-validation, OEIS fixture checks and exact asymptotics.
//!
//! Every check carries both sides verbatim, so a failed report is
//! self-documenting. Known misprints in the source tables are kept
//! side-by-side with the oracle-confirmed values in [`table2`], and the
//! [`SuiteId::Thm4AsPrinted`] suite deliberately fails to document one
//! of them.

mod asymptotics;
mod cross;
mod fixtures;
mod suites;
pub mod table2;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::Int;

pub use asymptotics::{asymptotics_rows, AsymptoticsRow};
pub use cross::{cross_validate, DP_BUDGET};
pub use fixtures::{
    fixture_check, fixture_check_bound, parse_fixture, registered_fixtures, FixtureBinding,
    SequenceFixture,
};

/// One verified equation instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: String,
    pub n: i64,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
}

/// Result of running a suite over an index range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub suite: String,
    pub n_min: i64,
    pub n_max: i64,
    pub checks: Vec<IdentityCheck>,
    pub all_passed: bool,
}

impl IdentityReport {
    pub(crate) fn new(suite: impl Into<String>, n_min: i64, n_max: i64) -> Self {
        IdentityReport {
            suite: suite.into(),
            n_min,
            n_max,
            checks: Vec::new(),
            all_passed: true,
        }
    }

    pub(crate) fn push(
        &mut self,
        identity: &str,
        n: i64,
        passed: bool,
        lhs: impl ToString,
        rhs: impl ToString,
    ) {
        self.all_passed &= passed;
        self.checks.push(IdentityCheck {
            identity: identity.to_string(),
            n,
            passed,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }

    pub(crate) fn push_eq(&mut self, identity: &str, n: i64, lhs: &Int, rhs: &Int) {
        self.push(identity, n, lhs == rhs, lhs, rhs);
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// The verification suites. `Thm4AsPrinted` is a documented negative:
/// it runs a misprinted identity and is expected to fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteId {
    Thm4,
    Thm5,
    Consequence,
    Problem1,
    Problem2,
    Thm6Rec,
    ClosedVsRec,
    Fixtures,
    Asymptotics,
    Thm4AsPrinted,
}

impl SuiteId {
    pub const ALL: [SuiteId; 10] = [
        SuiteId::Thm4,
        SuiteId::Thm5,
        SuiteId::Consequence,
        SuiteId::Problem1,
        SuiteId::Problem2,
        SuiteId::Thm6Rec,
        SuiteId::ClosedVsRec,
        SuiteId::Fixtures,
        SuiteId::Asymptotics,
        SuiteId::Thm4AsPrinted,
    ];

    /// Suites that are expected to pass (everything but the documented
    /// negative).
    pub const PASSING: [SuiteId; 9] = [
        SuiteId::Thm4,
        SuiteId::Thm5,
        SuiteId::Consequence,
        SuiteId::Problem1,
        SuiteId::Problem2,
        SuiteId::Thm6Rec,
        SuiteId::ClosedVsRec,
        SuiteId::Fixtures,
        SuiteId::Asymptotics,
    ];

    pub fn token(&self) -> &'static str {
        match self {
            SuiteId::Thm4 => "thm4",
            SuiteId::Thm5 => "thm5",
            SuiteId::Consequence => "consequence",
            SuiteId::Problem1 => "problem1",
            SuiteId::Problem2 => "problem2",
            SuiteId::Thm6Rec => "thm6rec",
            SuiteId::ClosedVsRec => "closed-vs-rec",
            SuiteId::Fixtures => "fixtures",
            SuiteId::Asymptotics => "asymptotics",
            SuiteId::Thm4AsPrinted => "thm4-as-printed",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "closedVsRec" {
            return Ok(SuiteId::ClosedVsRec);
        }
        SuiteId::ALL
            .into_iter()
            .find(|k| k.token() == s)
            .ok_or_else(|| Error::domain(format!("unknown suite '{s}'")))
    }
}

/// Runs one suite for all valid instance indices whose referenced
/// sequence indices stay within `n_max`.
pub fn run_suite(suite: SuiteId, n_max: i64) -> Result<IdentityReport> {
    if n_max < 3 {
        return Err(Error::domain(format!(
            "suites need n_max >= 3, got {n_max}"
        )));
    }
    Ok(match suite {
        SuiteId::Thm4 => suites::thm4(n_max),
        SuiteId::Thm5 => suites::thm5(n_max),
        SuiteId::Consequence => suites::consequence(n_max),
        SuiteId::Problem1 => suites::problem1(n_max),
        SuiteId::Problem2 => suites::problem2(n_max),
        SuiteId::Thm6Rec => suites::thm6rec(n_max),
        SuiteId::ClosedVsRec => suites::closed_vs_rec(n_max),
        SuiteId::Fixtures => fixtures::fixtures_suite(),
        SuiteId::Asymptotics => asymptotics::asymptotics_suite(n_max),
        SuiteId::Thm4AsPrinted => suites::thm4_as_printed(n_max),
    })
}

/// Deterministic plain-text rendering shared by the CLI and tests.
pub fn format_report(report: &IdentityReport) -> String {
    let failed = report.failures().count();
    let mut out = format!(
        "suite {}: n <= {}, {} checks, {}\n",
        report.suite,
        report.n_max,
        report.checks.len(),
        if failed == 0 {
            "all passed".to_string()
        } else {
            format!("{failed} FAILED")
        }
    );
    const SHOWN: usize = 25;
    for check in report.failures().take(SHOWN) {
        out.push_str(&format!(
            "  FAIL {} n={}: lhs {}, rhs {}\n",
            check.identity, check.n, check.lhs, check.rhs
        ));
    }
    if failed > SHOWN {
        out.push_str(&format!("  ... and {} more\n", failed - SHOWN));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    #[test]
    fn passing_suites_pass_at_12() {
        for suite in SuiteId::PASSING {
            let report = run_suite(suite, 12).unwrap();
            assert!(report.all_passed, "{}", format_report(&report));
            assert!(!report.checks.is_empty(), "{suite} ran nothing");
        }
    }

    #[test]
    fn thm5_contains_the_square_identity_instance() {
        // H_3² = 49 = A_5 = B_5 - 1.
        let report = run_suite(SuiteId::Thm5, 12).unwrap();
        let check = report
            .checks
            .iter()
            .find(|c| c.identity == "thm5.4a" && c.n == 1)
            .unwrap();
        assert_eq!((check.lhs.as_str(), check.rhs.as_str()), ("49", "49"));
    }

    #[test]
    fn thm4_contains_the_sum_identity_instance() {
        // A_2 + A_1 = 5 = P_3.
        let report = run_suite(SuiteId::Thm4, 12).unwrap();
        let check = report
            .checks
            .iter()
            .find(|c| c.identity == "thm4.3a" && c.n == 3)
            .unwrap();
        assert_eq!((check.lhs.as_str(), check.rhs.as_str()), ("5", "5"));
    }

    #[test]
    fn printed_variant_fails_first_at_n_3() {
        let report = run_suite(SuiteId::Thm4AsPrinted, 12).unwrap();
        assert!(!report.all_passed);
        let first = report.failures().next().unwrap();
        assert_eq!(first.identity, "thm4.8-as-printed");
        assert_eq!(first.n, 3);
        assert_eq!((first.lhs.as_str(), first.rhs.as_str()), ("5", "9"));
    }

    #[test]
    fn small_n_max_is_rejected() {
        assert!(run_suite(SuiteId::Thm4, 2).is_err());
    }

    #[test]
    fn suite_tokens_round_trip() {
        for suite in SuiteId::ALL {
            assert_eq!(SuiteId::from_str(suite.token()).unwrap(), suite);
        }
        assert_eq!(
            SuiteId::from_str("closedVsRec").unwrap(),
            SuiteId::ClosedVsRec
        );
        assert!(SuiteId::from_str("thm99").is_err());
    }
}
