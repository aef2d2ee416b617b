use crate::engine::{count_tilings, tile_stats, Method, TileStats};
use crate::error::{Error, Result};
use crate::lattice::{build_family, FamilyId};
use crate::sequences::{seq_value, SeqId};
use crate::Int;

use super::IdentityReport;

/// Largest n the profile DP is asked for during cross-validation.
pub const DP_BUDGET: u32 = 400;

fn count_sequence(family: FamilyId) -> SeqId {
    match family {
        FamilyId::H => SeqId::H,
        FamilyId::P => SeqId::P,
        FamilyId::X => SeqId::X,
        FamilyId::Y => SeqId::Y,
        FamilyId::Z => SeqId::Z,
        FamilyId::A => SeqId::A,
        FamilyId::B => SeqId::B,
    }
}

/// Checks engine counts against the sequence engine for `1 ..= n_max`,
/// using DFS up to `dfs_max` and the profile DP beyond. For `H` and `P`
/// the full tile statistics are checked against the h/phi/q and
/// p/theta/r sequences.
pub fn cross_validate(family: FamilyId, n_max: u32, dfs_max: u32) -> Result<IdentityReport> {
    if n_max > DP_BUDGET {
        return Err(Error::domain(format!(
            "cross-validation budget is {DP_BUDGET}, got {n_max}"
        )));
    }
    let id = count_sequence(family);
    let mut report = IdentityReport::new(format!("cross-{family}"), 1, i64::from(n_max));
    for n in 1..=n_max {
        let complex = build_family(family, n)?;
        let method = if n <= dfs_max {
            Method::Dfs
        } else {
            Method::Dp
        };
        let expected: Int = seq_value(id, i64::from(n))?;
        let name = format!("cross.count.{family}.{method}");
        match family {
            FamilyId::H | FamilyId::P => {
                let stats: TileStats<Int> = tile_stats(&complex, method);
                report.push_eq(&name, i64::from(n), &stats.tilings, &expected);
                let (total, small, large) = if family == FamilyId::H {
                    (SeqId::TotalH, SeqId::SmallH, SeqId::LargeH)
                } else {
                    (SeqId::TotalP, SeqId::SmallP, SeqId::LargeP)
                };
                report.push_eq(
                    &format!("cross.total.{family}"),
                    i64::from(n),
                    &stats.total_tiles,
                    &seq_value(total, i64::from(n))?,
                );
                report.push_eq(
                    &format!("cross.small.{family}"),
                    i64::from(n),
                    &stats.small_tiles,
                    &seq_value(small, i64::from(n))?,
                );
                report.push_eq(
                    &format!("cross.large.{family}"),
                    i64::from(n),
                    &stats.large_tiles,
                    &seq_value(large, i64::from(n))?,
                );
            }
            _ => {
                let count: Int = count_tilings(&complex, method);
                report.push_eq(&name, i64::from(n), &count, &expected);
            }
        }
    }
    Ok(report)
}
