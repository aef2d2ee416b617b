use std::cmp::Ordering;
use std::fmt;

/// One unit triangular cell, addressed by row (0 = bottom, 1 = top) and
/// a horizontal index within the row.
///
/// Orientation is derived, never stored: a row-0 cell points up iff its
/// index is even, a row-1 cell points up iff its index is odd. The
/// geometric embedding measures x in half-units and y in units, so all
/// vertex coordinates stay integral.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriCell {
    row: u8,
    index: u32,
}

impl TriCell {
    pub fn new(row: u8, index: u32) -> Self {
        assert!(row < 2, "cell row must be 0 or 1");
        TriCell { row, index }
    }

    pub fn row(&self) -> u8 {
        self.row
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn is_up(&self) -> bool {
        self.index.is_multiple_of(2) == (self.row == 0)
    }

    /// Embedded vertices as (x in half-units, y in units), counterclockwise.
    pub fn vertices(&self) -> [(i64, i64); 3] {
        let i = i64::from(self.index);
        match (self.row, self.is_up()) {
            (0, true) => [(i, 0), (i + 2, 0), (i + 1, 1)],
            (0, false) => [(i + 1, 0), (i + 2, 1), (i, 1)],
            (1, true) => [(i, 1), (i + 2, 1), (i + 1, 2)],
            (1, false) => [(i + 1, 1), (i + 2, 2), (i, 2)],
            _ => unreachable!(),
        }
    }

    /// Combinatorial edge adjacency: same row at distance 1, or the
    /// row-0 down cell under the row-1 up cell at the same odd index.
    pub fn shares_edge(&self, other: &TriCell) -> bool {
        if self.row == other.row {
            self.index.abs_diff(other.index) == 1
        } else {
            self.index == other.index && self.index % 2 == 1
        }
    }
}

// Canonical cell order is (index, row): the sweep order of the profile DP.
impl Ord for TriCell {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.index, self.row).cmp(&(other.index, other.row))
    }
}

impl PartialOrd for TriCell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for TriCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_parity() {
        assert!(TriCell::new(0, 0).is_up());
        assert!(!TriCell::new(0, 1).is_up());
        assert!(!TriCell::new(1, 0).is_up());
        assert!(TriCell::new(1, 1).is_up());
    }

    #[test]
    fn embedding_matches_orientation() {
        // An up cell has its apex above the base line, a down cell below.
        for row in 0..2u8 {
            for index in 0..40u32 {
                let c = TriCell::new(row, index);
                let ys: Vec<i64> = c.vertices().iter().map(|&(_, y)| y).collect();
                let base_y = ys
                    .iter()
                    .find(|&&y| ys.iter().filter(|&&z| z == y).count() == 2)
                    .copied()
                    .unwrap();
                let apex_y = ys.iter().find(|&&y| y != base_y).copied().unwrap();
                assert_eq!(apex_y > base_y, c.is_up(), "cell {c:?}");
            }
        }
    }

    #[test]
    fn geometric_and_combinatorial_adjacency_agree() {
        // Sharing an edge means sharing exactly two embedded vertices.
        let cells: Vec<TriCell> = (0..2u8)
            .flat_map(|r| (0..12u32).map(move |i| TriCell::new(r, i)))
            .collect();
        for a in &cells {
            for b in &cells {
                if a == b {
                    continue;
                }
                let shared = a
                    .vertices()
                    .iter()
                    .filter(|v| b.vertices().contains(v))
                    .count();
                assert_eq!(shared == 2, a.shares_edge(b), "{a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn canonical_order_is_index_then_row() {
        let mut cells = vec![
            TriCell::new(1, 0),
            TriCell::new(0, 1),
            TriCell::new(0, 0),
            TriCell::new(1, 1),
        ];
        cells.sort();
        assert_eq!(
            cells,
            vec![
                TriCell::new(0, 0),
                TriCell::new(1, 0),
                TriCell::new(0, 1),
                TriCell::new(1, 1),
            ]
        );
    }
}
