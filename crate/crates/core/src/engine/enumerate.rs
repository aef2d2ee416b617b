use crate::lattice::{LargePlacement, StripComplex, TriCell};

/// One tiling: its large placements in canonical order. Small tiles are
/// implicit — every cell not covered by a placement carries one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tiling {
    larges: Vec<LargePlacement>,
}

impl Tiling {
    pub fn larges(&self) -> &[LargePlacement] {
        &self.larges
    }

    pub fn large_count(&self) -> usize {
        self.larges.len()
    }

    /// Cells of the host complex not covered by any placement.
    pub fn small_cells(&self, complex: &StripComplex) -> Vec<TriCell> {
        complex
            .cells()
            .iter()
            .filter(|c| !self.larges.iter().any(|p| p.cells().contains(c)))
            .copied()
            .collect()
    }
}

/// First `limit` tilings in canonical order.
///
/// The order is by ascending indicator bitmask: placement k in the
/// canonical placement list is bit k, and tilings sort by the resulting
/// integer. The empty tiling always comes first, and the order is a
/// pure function of the complex.
pub fn enumerate_tilings(complex: &StripComplex, limit: usize) -> Vec<Tiling> {
    let placements = complex.placements();
    let mut out = Vec::new();
    if limit > 0 {
        let mut chosen: Vec<usize> = Vec::new();
        descend(
            placements,
            placements.len() as isize - 1,
            &mut chosen,
            &mut out,
            limit,
        );
    }
    out
}

// Decides bits from the highest placement index down, visiting the
// 0-branch before the 1-branch, so leaves appear in ascending mask
// order. Returns false once the limit is reached.
fn descend(
    placements: &[LargePlacement],
    next_bit: isize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Tiling>,
    limit: usize,
) -> bool {
    if next_bit < 0 {
        let mut larges: Vec<LargePlacement> = chosen.iter().rev().map(|&k| placements[k]).collect();
        larges.sort();
        out.push(Tiling { larges });
        return out.len() < limit;
    }
    if !descend(placements, next_bit - 1, chosen, out, limit) {
        return false;
    }
    let k = next_bit as usize;
    if chosen
        .iter()
        .all(|&used| !placements[used].overlaps(&placements[k]))
    {
        chosen.push(k);
        let keep_going = descend(placements, next_bit - 1, chosen, out, limit);
        chosen.pop();
        if !keep_going {
            return false;
        }
    }
    true
}
