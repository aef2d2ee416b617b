use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lattice::StripComplex;
use crate::scalar::Count;

/// Reference scale of the exact-cover oracle.
pub const ORACLE_CELL_LIMIT: usize = 40;

/// Counts exact covers of the cell set by pieces {each single cell} ∪
/// {each placement}, backtracking on the lowest-ordered uncovered cell.
///
/// This reasons about cells, not the conflict graph, so it checks the
/// placement-set reformulation from the outside. Refuses complexes over
/// [`ORACLE_CELL_LIMIT`] cells.
pub fn exact_cover_count<T: Count>(complex: &StripComplex) -> Result<T> {
    let cell_count = complex.cell_count();
    if cell_count > ORACLE_CELL_LIMIT {
        return Err(Error::OracleTooLarge {
            cells: cell_count,
            limit: ORACLE_CELL_LIMIT,
        });
    }
    let position: HashMap<_, _> = complex
        .cells()
        .iter()
        .enumerate()
        .map(|(i, c)| (*c, i))
        .collect();
    let quads: Vec<[usize; 4]> = complex
        .placements()
        .iter()
        .map(|p| p.cells().map(|c| position[&c]))
        .collect();
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); cell_count];
    for (qi, quad) in quads.iter().enumerate() {
        for &c in quad {
            containing[c].push(qi);
        }
    }
    let mut covered = vec![false; cell_count];
    Ok(cover(&mut covered, 0, &quads, &containing))
}

fn cover<T: Count>(
    covered: &mut [bool],
    from: usize,
    quads: &[[usize; 4]],
    containing: &[Vec<usize>],
) -> T {
    let Some(cell) = (from..covered.len()).find(|&i| !covered[i]) else {
        return T::one();
    };
    // Single-cell piece.
    covered[cell] = true;
    let mut total: T = cover(covered, cell + 1, quads, containing);
    covered[cell] = false;
    // Any placement through this cell with all four cells free.
    for &qi in &containing[cell] {
        let quad = quads[qi];
        if quad.iter().all(|&c| !covered[c]) {
            for &c in &quad {
                covered[c] = true;
            }
            total = total + cover(covered, cell + 1, quads, containing);
            for &c in &quad {
                covered[c] = false;
            }
        }
    }
    total
}
