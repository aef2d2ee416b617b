use std::cmp::Ordering;
use std::fmt;

use super::TriCell;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Up,
    Down,
}

/// A side-2 triangle position: four cells anchored at an even index.
///
/// An up placement anchored at `(0, i)` covers `(0,i) (0,i+1) (0,i+2)
/// (1,i+1)`; a down placement anchored at `(1, j)` covers `(1,j) (1,j+1)
/// (1,j+2) (0,j+1)`. Placements compare by (anchor index, anchor row);
/// that order is the engine's only tie-break.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LargePlacement {
    anchor_row: u8,
    anchor_index: u32,
}

impl LargePlacement {
    pub fn up(anchor_index: u32) -> Self {
        assert!(anchor_index.is_multiple_of(2), "placement anchors are even");
        LargePlacement {
            anchor_row: 0,
            anchor_index,
        }
    }

    pub fn down(anchor_index: u32) -> Self {
        assert!(anchor_index.is_multiple_of(2), "placement anchors are even");
        LargePlacement {
            anchor_row: 1,
            anchor_index,
        }
    }

    pub fn anchor_row(&self) -> u8 {
        self.anchor_row
    }

    pub fn anchor_index(&self) -> u32 {
        self.anchor_index
    }

    pub fn orientation(&self) -> Orientation {
        if self.anchor_row == 0 {
            Orientation::Up
        } else {
            Orientation::Down
        }
    }

    pub fn cells(&self) -> [TriCell; 4] {
        let i = self.anchor_index;
        match self.orientation() {
            Orientation::Up => [
                TriCell::new(0, i),
                TriCell::new(0, i + 1),
                TriCell::new(0, i + 2),
                TriCell::new(1, i + 1),
            ],
            Orientation::Down => [
                TriCell::new(1, i),
                TriCell::new(1, i + 1),
                TriCell::new(1, i + 2),
                TriCell::new(0, i + 1),
            ],
        }
    }

    /// Corners of the side-2 triangle the four cells tile.
    pub fn hull(&self) -> [(i64, i64); 3] {
        let i = i64::from(self.anchor_index);
        match self.orientation() {
            Orientation::Up => [(i, 0), (i + 4, 0), (i + 2, 2)],
            Orientation::Down => [(i + 2, 0), (i + 4, 2), (i, 2)],
        }
    }

    pub fn overlaps(&self, other: &LargePlacement) -> bool {
        let mine = self.cells();
        other.cells().iter().any(|c| mine.contains(c))
    }
}

impl Ord for LargePlacement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.anchor_index, self.anchor_row).cmp(&(other.anchor_index, other.anchor_row))
    }
}

impl PartialOrd for LargePlacement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LargePlacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.orientation() {
            Orientation::Up => "up",
            Orientation::Down => "down",
        };
        write!(f, "{tag}@{}", self.anchor_index)
    }
}
