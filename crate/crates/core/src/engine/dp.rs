//! Boundary-profile dynamic programming over the two-row strip.
//!
//! Cells are processed in (index, row) order. The state is a 6-bit mask
//! recording which cells within the width-3 index window are already
//! covered by a committed placement; bit `2*offset + row` marks the
//! cell at `current_index + offset`. At each present, uncovered cell the
//! sweep either drops a small tile or commits the placement anchored
//! there (anchors are even, so the placement's minimal cell in the sweep
//! order is exactly the anchor). Cells missing from the complex are
//! skipped; placements needing them fail the presence check. Runtime is
//! linear in the index span times a bounded state count.

use crate::lattice::{StripComplex, TriCell};
use crate::scalar::Count;

const STATES: usize = 64;

#[inline]
fn bit(offset: u32, row: u8) -> usize {
    1 << (2 * offset + u32::from(row))
}

type StateMap<T> = Vec<Option<(T, T)>>;

fn bump<T: Count>(map: &mut StateMap<T>, mask: usize, count: T, larges: T) {
    match &mut map[mask] {
        Some((c, s)) => {
            *c = c.clone() + count;
            *s = s.clone() + larges;
        }
        slot => *slot = Some((count, larges)),
    }
}

pub fn count_tilings_dp<T: Count>(complex: &StripComplex) -> T {
    dp_aggregates::<T>(complex).0
}

/// (tilings, sum of placement counts over all tilings).
pub(crate) fn dp_aggregates<T: Count>(complex: &StripComplex) -> (T, T) {
    let Some((lo, hi)) = complex.index_range() else {
        return (T::one(), T::zero());
    };
    let mut states: StateMap<T> = vec![None; STATES];
    states[0] = Some((T::one(), T::zero()));

    for i in lo..=hi {
        for row in 0..2u8 {
            if !complex.contains(TriCell::new(row, i)) {
                continue;
            }
            let mut next: StateMap<T> = vec![None; STATES];
            for (mask, slot) in states.iter_mut().enumerate() {
                let Some((count, larges)) = slot.take() else {
                    continue;
                };
                if mask & bit(0, row) != 0 {
                    // Covered by an earlier placement; nothing to decide.
                    bump(&mut next, mask, count, larges);
                    continue;
                }
                // Small tile on this cell.
                bump(&mut next, mask, count.clone(), larges.clone());
                if i % 2 != 0 {
                    continue;
                }
                // Placement anchored at this cell: needs the three
                // remaining cells present and uncovered.
                let (needed, future) = if row == 0 {
                    (
                        bit(1, 0) | bit(1, 1) | bit(2, 0),
                        [
                            TriCell::new(0, i + 1),
                            TriCell::new(1, i + 1),
                            TriCell::new(0, i + 2),
                        ],
                    )
                } else {
                    (
                        bit(1, 0) | bit(1, 1) | bit(2, 1),
                        [
                            TriCell::new(1, i + 1),
                            TriCell::new(0, i + 1),
                            TriCell::new(1, i + 2),
                        ],
                    )
                };
                if mask & needed == 0 && future.iter().all(|c| complex.contains(*c)) {
                    bump(&mut next, mask | needed, count.clone(), larges + count);
                }
            }
            states = next;
        }
        // Slide the window: drop the two offset-0 bits.
        let mut shifted: StateMap<T> = vec![None; STATES];
        for (mask, slot) in states.iter_mut().enumerate() {
            if let Some((count, larges)) = slot.take() {
                bump(&mut shifted, mask >> 2, count, larges);
            }
        }
        states = shifted;
    }

    let mut total = (T::zero(), T::zero());
    for entry in states.into_iter().flatten() {
        total.0 = total.0 + entry.0;
        total.1 = total.1 + entry.1;
    }
    total
}
