//! Exact tilings of two-row triangular strip lattices.
//!
//! A strip is a finite set of unit triangular cells arranged in two
//! horizontal rows. It can be tiled by *small* tiles (one cell) and
//! *large* tiles (a side-2 triangle covering four cells). Because small
//! tiles always fill whatever the large tiles leave open, a tiling is
//! fully determined by its set of pairwise-disjoint large placements —
//! counting tilings is counting independent sets in the placement
//! conflict graph. Everything in this crate builds on that reduction:
//!
//! * [`lattice`] — cell geometry, the built-in lattice families
//!   (`H`, `P`, `X`, `Y`, `Z`, `A`, `B`), placement generation and a text
//!   format for custom complexes;
//! * [`engine`] — three mutually checking counters (canonical DFS,
//!   linear-time boundary-profile DP, and a cell-level exact-cover
//!   oracle) plus exact tile statistics and tiling enumeration;
//! * [`zroot2`] — exact arithmetic in the ring of numbers `a + b√2`;
//! * [`sequences`] — every sequence attached to the families (Pell and
//!   half-companion Pell numbers among them) by recurrence, closed form,
//!   generating function and bisection, all in exact integers;
//! * [`identity`] — batch verification of the inter-family identities,
//!   cross-validation of formulas against the tiling engine, OEIS
//!   fixture checks and exact asymptotics;
//! * [`render`] — deterministic SVG drawings of individual tilings.
//!
//! All kernels are generic over an integer scalar (see [`Count`]);
//! the crate-root aliases [`Int`] and [`Rat`] pick arbitrary precision.
//!
//! ```
//! use tristrip::{build_family, count_tilings_dfs, count_tilings_dp, FamilyId, Int};
//!
//! let strip = build_family(FamilyId::H, 4)?;
//! assert_eq!(count_tilings_dfs::<i64>(&strip), 17);
//! assert_eq!(count_tilings_dp::<Int>(&strip), Int::from(17));
//! # Ok::<(), tristrip::Error>(())
//! ```

pub mod engine;
mod error;
pub mod identity;
pub mod lattice;
pub mod render;
mod scalar;
pub mod sequences;
pub mod zroot2;

pub use engine::{
    count_tilings, count_tilings_dfs, count_tilings_dfs_parallel, count_tilings_dp,
    enumerate_tilings, exact_cover_count, tile_stats, Method, TileStats, Tiling, ORACLE_CELL_LIMIT,
};
pub use error::{Error, Result};
pub use identity::{
    asymptotics_rows, cross_validate, fixture_check, fixture_check_bound, format_report,
    parse_fixture, registered_fixtures, run_suite, AsymptoticsRow, FixtureBinding, IdentityCheck,
    IdentityReport, SequenceFixture, SuiteId,
};
pub use lattice::{
    build_family, conflict_graph, large_placements, parse_complex, serialize_complex,
    ConflictGraph, FamilyId, LargePlacement, Orientation, StripComplex, TriCell,
};
pub use render::{render_svg, RenderSpec};
pub use scalar::Count;
pub use sequences::{
    gf_expand, lin_rec, seq_range, seq_value, seq_value_route, Inhom, RationalGf, SeqId, SeqRoute,
};
pub use zroot2::ZRoot2;

/// Arbitrary-precision integer used by the command-line tools and tests.
pub type Int = num_bigint::BigInt;

/// Exact rational over [`Int`], for the asymptotics reports.
pub type Rat = num_rational::BigRational;
