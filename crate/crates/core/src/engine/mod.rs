//! Tiling counters and statistics.
//!
//! A tiling is represented by its set of pairwise-disjoint large
//! placements; every uncovered cell implicitly carries one small tile.
//! Enumeration therefore reduces to independent sets of the placement
//! conflict graph. Three methods count them:
//!
//! * [`count_tilings_dfs`] — branch on the first available placement in
//!   canonical order (the reference path for moderate sizes);
//! * [`count_tilings_dp`] — boundary-profile sweep over cells in
//!   (index, row) order, linear in the number of cells;
//! * [`exact_cover_count`] — cell-level exact-cover backtracking over
//!   pieces {single cell} ∪ {placement}, a structurally independent
//!   oracle for small complexes.

mod cover;
mod dfs;
mod dp;
mod enumerate;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::StripComplex;
use crate::scalar::Count;

pub use cover::{exact_cover_count, ORACLE_CELL_LIMIT};
pub use dfs::{count_tilings_dfs, count_tilings_dfs_parallel};
pub use dp::count_tilings_dp;
pub use enumerate::{enumerate_tilings, Tiling};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Dfs,
    Dp,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Dfs => "dfs",
            Method::Dp => "dp",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dfs" => Ok(Method::Dfs),
            "dp" => Ok(Method::Dp),
            other => Err(Error::domain(format!("unknown method '{other}'"))),
        }
    }
}

pub fn count_tilings<T: Count>(complex: &StripComplex, method: Method) -> T {
    match method {
        Method::Dfs => count_tilings_dfs(complex),
        Method::Dp => count_tilings_dp(complex),
    }
}

/// Exact sums over all tilings of a complex.
///
/// `large_tiles` is the sum of placement counts over every tiling;
/// `small_tiles` follows from conservation: every cell of every tiling
/// carries either a small tile or a quarter of a large one, so
/// `small + 4·large = cells · tilings`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileStats<T> {
    pub tilings: T,
    pub total_tiles: T,
    pub small_tiles: T,
    pub large_tiles: T,
}

impl<T: Count> TileStats<T> {
    pub(crate) fn from_aggregates(cell_count: usize, tilings: T, large_tiles: T) -> Self {
        let cells = T::from_int(cell_count as i64);
        let small_tiles = cells * tilings.clone() - T::from_int(4) * large_tiles.clone();
        let total_tiles = small_tiles.clone() + large_tiles.clone();
        let stats = TileStats {
            tilings,
            total_tiles,
            small_tiles,
            large_tiles,
        };
        debug_assert!(stats.conserved(cell_count));
        stats
    }

    /// Conservation identity: small + 4·large = cells·tilings and
    /// total = small + large.
    pub fn conserved(&self, cell_count: usize) -> bool {
        let cells = T::from_int(cell_count as i64);
        self.small_tiles.clone() + T::from_int(4) * self.large_tiles.clone()
            == cells * self.tilings.clone()
            && self.total_tiles == self.small_tiles.clone() + self.large_tiles.clone()
    }
}

pub fn tile_stats<T: Count>(complex: &StripComplex, method: Method) -> TileStats<T> {
    let (tilings, larges) = match method {
        Method::Dfs => dfs::dfs_aggregates(complex),
        Method::Dp => dp::dp_aggregates(complex),
    };
    TileStats::from_aggregates(complex.cell_count(), tilings, larges)
}
