//! Tile-statistics reference table for `H_n` and `P_n`, n = 1..=8.
//!
//! [`PRINTED`] reproduces the table as it circulates in print. Nine of
//! its entries contradict the table's own column identities
//! (`h = phi + q`, `p = theta + r`) and the second-order recurrences;
//! [`CORRECTED`] repairs them (phi and theta for n = 5..=8, and h_8).
//! Every corrected entry is confirmed independently by brute-force
//! enumeration; the corrected table is the normative fixture.

/// Row layout: (h, phi, q, p, theta, r) for n = row index + 1.
pub type StatRow = [i64; 6];

pub const PRINTED: [StatRow; 8] = [
    [2, 2, 0, 1, 1, 0],
    [12, 10, 2, 7, 6, 1],
    [46, 38, 8, 30, 25, 5],
    [154, 126, 28, 102, 84, 18],
    [474, 390, 88, 319, 257, 58],
    [1392, 1138, 262, 945, 762, 175],
    [3958, 3226, 752, 2704, 2177, 507],
    [10692, 8942, 2104, 7548, 6072, 1428],
];

pub const CORRECTED: [StatRow; 8] = [
    [2, 2, 0, 1, 1, 0],
    [12, 10, 2, 7, 6, 1],
    [46, 38, 8, 30, 25, 5],
    [154, 126, 28, 102, 84, 18],
    [474, 386, 88, 319, 261, 58],
    [1392, 1130, 262, 945, 770, 175],
    [3958, 3206, 752, 2704, 2197, 507],
    [10998, 8894, 2104, 7548, 6120, 1428],
];

/// (row, column) cells where the printed table disagrees with the
/// corrected one; columns are indices into [`StatRow`].
pub fn disputed_cells() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (r, (printed, corrected)) in PRINTED.iter().zip(CORRECTED.iter()).enumerate() {
        for c in 0..printed.len() {
            if printed[c] != corrected[c] {
                out.push((r, c));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{seq_value, SeqId};

    #[test]
    fn corrected_table_is_internally_consistent() {
        for (i, [h, phi, q, p, theta, r]) in CORRECTED.iter().copied().enumerate() {
            assert_eq!(h, phi + q, "row {}", i + 1);
            assert_eq!(p, theta + r, "row {}", i + 1);
        }
    }

    #[test]
    fn printed_table_is_not() {
        let bad: Vec<usize> = PRINTED
            .iter()
            .enumerate()
            .filter(|(_, [h, phi, q, p, theta, r])| h != &(phi + q) || p != &(theta + r))
            .map(|(i, _)| i + 1)
            .collect();
        assert_eq!(bad, vec![5, 6, 7, 8]);
    }

    #[test]
    fn exactly_nine_cells_are_disputed() {
        let cells = disputed_cells();
        assert_eq!(cells.len(), 9);
        // phi (col 1) and theta (col 4) for n = 5..=8, plus h_8 (col 0).
        assert!(cells.contains(&(7, 0)));
        for row in 4..8 {
            assert!(cells.contains(&(row, 1)));
            assert!(cells.contains(&(row, 4)));
        }
    }

    #[test]
    fn corrected_table_matches_the_sequences() {
        let ids = [
            SeqId::TotalH,
            SeqId::SmallH,
            SeqId::LargeH,
            SeqId::TotalP,
            SeqId::SmallP,
            SeqId::LargeP,
        ];
        for (row, values) in CORRECTED.iter().enumerate() {
            let n = row as i64 + 1;
            for (col, id) in ids.iter().enumerate() {
                assert_eq!(
                    seq_value::<i64>(*id, n).unwrap(),
                    values[col],
                    "{id} at n={n}"
                );
            }
        }
    }

    #[test]
    fn each_disputed_printed_cell_differs_from_the_engine() {
        let ids = [
            SeqId::TotalH,
            SeqId::SmallH,
            SeqId::LargeH,
            SeqId::TotalP,
            SeqId::SmallP,
            SeqId::LargeP,
        ];
        for (row, col) in disputed_cells() {
            let n = row as i64 + 1;
            let engine = seq_value::<i64>(ids[col], n).unwrap();
            assert_ne!(engine, PRINTED[row][col], "row {n} col {col}");
            assert_eq!(engine, CORRECTED[row][col], "row {n} col {col}");
        }
    }
}
