//! Cells, placements and the built-in strip lattice families.

mod cell;
mod complex;
mod format;
mod placement;

pub use cell::TriCell;
pub use complex::{
    build_family, conflict_graph, large_placements, ConflictGraph, FamilyId, StripComplex,
};
pub use format::{parse_complex, serialize_complex};
pub use placement::{LargePlacement, Orientation};
