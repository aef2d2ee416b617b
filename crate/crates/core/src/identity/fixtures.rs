//! Locally shipped sequence listings and their alignment checks.
//!
//! Fixture file format (UTF-8, `#` comments):
//!
//! ```text
//! name A000129
//! align 0
//! values 0 1 2 5 12 29 70
//! ```
//!
//! `align` shifts the listing against the sequence domain: listing entry
//! k is compared to the sequence at `stride·k - align + domain_start`.
//! The stride (for bisected listings) and a halving flag (for `q/2`)
//! live in the code-side registry, not in the files.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sequences::{seq_value, SeqId};
use crate::Int;

use super::IdentityReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceFixture {
    pub name: String,
    pub align: i64,
    pub values: Vec<Int>,
}

/// How a fixture maps onto a sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixtureBinding {
    pub id: SeqId,
    /// Index step per listing entry (2 for bisected listings).
    pub stride: i64,
    /// The listing holds half the sequence value.
    pub halved: bool,
}

impl FixtureBinding {
    pub fn plain(id: SeqId) -> Self {
        FixtureBinding {
            id,
            stride: 1,
            halved: false,
        }
    }
}

pub fn parse_fixture(text: &str) -> Result<SequenceFixture> {
    let mut name: Option<String> = None;
    let mut align: Option<i64> = None;
    let mut values: Option<Vec<Int>> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (directive, arg) = content
            .split_once(char::is_whitespace)
            .map(|(d, a)| (d, a.trim()))
            .unwrap_or((content, ""));
        match directive {
            "name" => name = Some(arg.to_string()),
            "align" => {
                align = Some(
                    arg.parse()
                        .map_err(|_| Error::parse(line, format!("bad align '{arg}'")))?,
                )
            }
            "values" => {
                let parsed: Result<Vec<Int>> = arg
                    .split_whitespace()
                    .map(|tok| {
                        Int::from_str(tok)
                            .map_err(|_| Error::parse(line, format!("bad integer '{tok}'")))
                    })
                    .collect();
                values = Some(parsed?);
            }
            other => return Err(Error::parse(line, format!("unknown directive '{other}'"))),
        }
    }
    let name = name.ok_or_else(|| Error::parse(0, "missing name line"))?;
    let align = align.ok_or_else(|| Error::parse(0, "missing align line"))?;
    let values = values.ok_or_else(|| Error::parse(0, "missing values line"))?;
    if values.is_empty() {
        return Err(Error::parse(0, "values line is empty"));
    }
    Ok(SequenceFixture {
        name,
        align,
        values,
    })
}

/// Checks every listing entry against the aligned sequence value.
pub fn fixture_check(fixture: &SequenceFixture, id: SeqId) -> Result<IdentityReport> {
    fixture_check_bound(fixture, &FixtureBinding::plain(id))
}

pub fn fixture_check_bound(
    fixture: &SequenceFixture,
    binding: &FixtureBinding,
) -> Result<IdentityReport> {
    let start = binding.id.domain_start();
    let mut report = IdentityReport::new(
        format!("fixture-{}", fixture.name),
        start,
        start + binding.stride * (fixture.values.len() as i64 - 1) - fixture.align,
    );
    for (k, listed) in fixture.values.iter().enumerate() {
        let n = binding.stride * k as i64 - fixture.align + start;
        if n < start {
            return Err(Error::domain(format!(
                "fixture {} entry {k} maps to {}_{n}, below the domain",
                fixture.name, binding.id
            )));
        }
        let engine: Int = seq_value(binding.id, n)?;
        let expected = if binding.halved {
            Int::from(2) * listed
        } else {
            listed.clone()
        };
        report.push_eq(&format!("{}[{k}]", fixture.name), n, &engine, &expected);
    }
    Ok(report)
}

const FIXTURE_FILES: &[(&str, SeqId, i64, bool)] = &[
    (
        include_str!("../../fixtures/a000129.txt"),
        SeqId::P,
        1,
        false,
    ),
    (
        include_str!("../../fixtures/a001333.txt"),
        SeqId::H,
        1,
        false,
    ),
    (
        include_str!("../../fixtures/a097076.txt"),
        SeqId::A,
        1,
        false,
    ),
    (
        include_str!("../../fixtures/a097075.txt"),
        SeqId::B,
        1,
        false,
    ),
    (
        include_str!("../../fixtures/a046090.txt"),
        SeqId::A,
        2,
        false,
    ),
    (
        include_str!("../../fixtures/a001108.txt"),
        SeqId::A,
        2,
        false,
    ),
    (
        include_str!("../../fixtures/a001652.txt"),
        SeqId::B,
        2,
        false,
    ),
    (
        include_str!("../../fixtures/a055997.txt"),
        SeqId::B,
        2,
        false,
    ),
    (
        include_str!("../../fixtures/a084159.txt"),
        SeqId::C,
        1,
        false,
    ),
    (
        include_str!("../../fixtures/a364553.txt"),
        SeqId::LargeP,
        1,
        false,
    ),
    (
        include_str!("../../fixtures/a006645.txt"),
        SeqId::LargeH,
        1,
        true,
    ),
    (
        include_str!("../../fixtures/problem2_d.txt"),
        SeqId::D,
        1,
        false,
    ),
];

/// All shipped fixtures with their bindings.
pub fn registered_fixtures() -> Vec<(SequenceFixture, FixtureBinding)> {
    FIXTURE_FILES
        .iter()
        .map(|&(text, id, stride, halved)| {
            let fixture = parse_fixture(text).expect("shipped fixture parses");
            (fixture, FixtureBinding { id, stride, halved })
        })
        .collect()
}

/// Positive checks for every shipped fixture, plus the documented
/// negative: `D` matches no OEIS listing we ship, so every cross-check
/// of an OEIS fixture against `D` must find a mismatch.
pub(super) fn fixtures_suite() -> IdentityReport {
    let mut report = IdentityReport::new("fixtures", 0, 0);
    for (fixture, binding) in registered_fixtures() {
        let sub = fixture_check_bound(&fixture, &binding).expect("shipped fixture aligns");
        report.push(
            &format!("fixture.{}", fixture.name),
            0,
            sub.all_passed,
            format!("{} entries", sub.checks.len()),
            "all aligned",
        );
        for check in sub.checks {
            report.all_passed &= check.passed;
            report.checks.push(check);
        }
        if fixture.name.starts_with('A') {
            // Same listing re-aimed at D must fail somewhere.
            let against_d = FixtureBinding {
                id: SeqId::D,
                ..binding
            };
            let mismatch = fixture_check_bound(&fixture, &against_d)
                .map(|r| !r.all_passed)
                .unwrap_or(true);
            report.push(
                &format!("fixture.D-differs-from-{}", fixture.name),
                0,
                mismatch,
                "D",
                fixture.name.clone(),
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture_by_name(name: &str) -> (SequenceFixture, FixtureBinding) {
        registered_fixtures()
            .into_iter()
            .find(|(f, _)| f.name == name)
            .unwrap()
    }

    #[test]
    fn every_shipped_fixture_aligns() {
        for (fixture, binding) in registered_fixtures() {
            let report = fixture_check_bound(&fixture, &binding).unwrap();
            assert!(report.all_passed, "{}: {report:?}", fixture.name);
        }
    }

    #[test]
    fn c_counts_match_a084159() {
        let (fixture, _) = fixture_by_name("A084159");
        let report = fixture_check(&fixture, SeqId::C).unwrap();
        assert!(report.all_passed);
    }

    #[test]
    fn halved_large_tile_counts_match_a006645() {
        let (fixture, binding) = fixture_by_name("A006645");
        assert!(binding.halved);
        let report = fixture_check_bound(&fixture, &binding).unwrap();
        assert!(report.all_passed);
    }

    #[test]
    fn wrong_alignment_names_the_first_mismatch() {
        let (mut fixture, _) = fixture_by_name("A000129");
        fixture.align = -1; // listing[k] against P_{k+1}
        let report = fixture_check(&fixture, SeqId::P).unwrap();
        assert!(!report.all_passed);
        let first = report.failures().next().unwrap();
        assert_eq!(first.identity, "A000129[0]");
        assert_eq!((first.lhs.as_str(), first.rhs.as_str()), ("1", "0"));
    }

    #[test]
    fn alignment_below_domain_is_an_error() {
        let (mut fixture, _) = fixture_by_name("A000129");
        fixture.align = 1; // listing[0] would be P_{-1}
        assert!(matches!(
            fixture_check(&fixture, SeqId::P),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn d_matches_no_oeis_fixture() {
        for (fixture, binding) in registered_fixtures() {
            if !fixture.name.starts_with('A') {
                continue;
            }
            let against_d = FixtureBinding {
                id: SeqId::D,
                ..binding
            };
            let fails = fixture_check_bound(&fixture, &against_d)
                .map(|r| !r.all_passed)
                .unwrap_or(true);
            assert!(fails, "{} unexpectedly matches D", fixture.name);
        }
    }

    #[test]
    fn parse_rejects_malformed_fixtures() {
        assert!(parse_fixture("align 0\nvalues 1 2").is_err()); // no name
        assert!(parse_fixture("name x\nvalues 1 2").is_err()); // no align
        assert!(parse_fixture("name x\nalign 0\nvalues 1 two").is_err());
        assert!(parse_fixture("name x\nalign 0\nvalues").is_err());
    }

    #[test]
    fn suite_passes_and_is_deterministic() {
        let a = fixtures_suite();
        let b = fixtures_suite();
        assert!(a.all_passed);
        assert_eq!(a, b);
    }
}
