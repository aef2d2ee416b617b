use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::{LargePlacement, TriCell};

/// The built-in two-row families. `Z` is an alias of `H` (the same
/// abstract cell set), `Y` is the mirror image of `P`; their tiling
/// counts coincide accordingly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    H,
    P,
    X,
    Y,
    Z,
    A,
    B,
}

impl FamilyId {
    pub const ALL: [FamilyId; 7] = [
        FamilyId::H,
        FamilyId::P,
        FamilyId::X,
        FamilyId::Y,
        FamilyId::Z,
        FamilyId::A,
        FamilyId::B,
    ];
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyId::H => "H",
            FamilyId::P => "P",
            FamilyId::X => "X",
            FamilyId::Y => "Y",
            FamilyId::Z => "Z",
            FamilyId::A => "A",
            FamilyId::B => "B",
        })
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" | "h" => Ok(FamilyId::H),
            "P" | "p" => Ok(FamilyId::P),
            "X" | "x" => Ok(FamilyId::X),
            "Y" | "y" => Ok(FamilyId::Y),
            "Z" | "z" => Ok(FamilyId::Z),
            "A" | "a" => Ok(FamilyId::A),
            "B" | "b" => Ok(FamilyId::B),
            other => Err(Error::domain(format!("unknown family '{other}'"))),
        }
    }
}

/// A finite set of cells together with its cached placement list.
///
/// The placement cache is recomputed whenever a complex is built, so it
/// is always exactly `large_placements(cells)`. Cell sets may be empty
/// or disconnected; the tiling count simply multiplies over components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripComplex {
    name: String,
    cells: BTreeSet<TriCell>,
    placements: Vec<LargePlacement>,
}

impl StripComplex {
    pub fn new(name: impl Into<String>, cells: BTreeSet<TriCell>) -> Self {
        let placements = large_placements(&cells);
        StripComplex {
            name: name.into(),
            cells,
            placements,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn cells(&self) -> &BTreeSet<TriCell> {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn contains(&self, cell: TriCell) -> bool {
        self.cells.contains(&cell)
    }

    /// Cached placements in canonical (anchor index, anchor row) order.
    pub fn placements(&self) -> &[LargePlacement] {
        &self.placements
    }

    /// Smallest and largest cell index, if any cells exist.
    pub fn index_range(&self) -> Option<(u32, u32)> {
        let min = self.cells.iter().map(|c| c.index()).min()?;
        let max = self.cells.iter().map(|c| c.index()).max()?;
        Some((min, max))
    }

    /// Same cells under the reflection `index -> span - index` on both
    /// rows, with `span` rounded up to even: an even span keeps index
    /// parity, hence orientation, so the image is a congruent complex
    /// and placements map to placements.
    pub fn mirrored(&self) -> StripComplex {
        let Some((min, max)) = self.index_range() else {
            return self.clone();
        };
        let span = (min + max).next_multiple_of(2);
        let cells = self
            .cells
            .iter()
            .map(|c| TriCell::new(c.row(), span - c.index()))
            .collect();
        StripComplex::new(format!("{}-mirror", self.name), cells)
    }
}

/// All and only the placements whose four cells are present, sorted by
/// (anchor index, anchor row).
pub fn large_placements(cells: &BTreeSet<TriCell>) -> Vec<LargePlacement> {
    let mut out = Vec::new();
    let Some(max) = cells.iter().map(|c| c.index()).max() else {
        return out;
    };
    let mut anchor = 0u32;
    while anchor <= max {
        for p in [LargePlacement::up(anchor), LargePlacement::down(anchor)] {
            if p.cells().iter().all(|c| cells.contains(c)) {
                out.push(p);
            }
        }
        anchor += 2;
    }
    out
}

/// Placements as vertices, overlaps as edges. Tilings of the host
/// complex are exactly the independent sets of this graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConflictGraph {
    pub vertices: Vec<LargePlacement>,
    /// Index pairs (i, j) with i < j, lexicographically sorted.
    pub edges: Vec<(usize, usize)>,
}

impl ConflictGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }
}

pub fn conflict_graph(complex: &StripComplex) -> ConflictGraph {
    let vertices = complex.placements().to_vec();
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in (i + 1)..vertices.len() {
            // Placements span three indices; farther pairs cannot touch.
            if vertices[j].anchor_index() > vertices[i].anchor_index() + 2 {
                break;
            }
            if vertices[i].overlaps(&vertices[j]) {
                edges.push((i, j));
            }
        }
    }
    ConflictGraph { vertices, edges }
}

fn row_interval(cells: &mut BTreeSet<TriCell>, row: u8, range: std::ops::RangeInclusive<u32>) {
    for index in range {
        cells.insert(TriCell::new(row, index));
    }
}

/// Builds the canonical cell set of a family member.
///
/// Row index intervals (inclusive), for n >= 1:
///
/// | family | row 0        | row 1        | cells  |
/// |--------|--------------|--------------|--------|
/// | H, Z   | 0 ..= 2n-2   | 0 ..= 2n-2   | 4n - 2 |
/// | P      | 0 ..= 2n-2   | 0 ..= 2n-3   | 4n - 3 |
/// | Y      | 0 ..= 2n-2   | 1 ..= 2n-2   | 4n - 3 |
/// | X      | 0 ..= 2n-3   | 0 ..= 2n-3   | 4n - 4 |
/// | A      | 0 ..= 2n-1   | 1 ..= 2n     | 4n     |
/// | B      | 0 ..= 2n     | 1 ..= 2n-1   | 4n     |
///
/// `X_1` is the empty complex (one vacuous tiling).
pub fn build_family(family: FamilyId, n: u32) -> Result<StripComplex> {
    if n < 1 {
        return Err(Error::domain(format!(
            "family {family} is defined for n >= 1, got {n}"
        )));
    }
    let mut cells = BTreeSet::new();
    match family {
        FamilyId::H | FamilyId::Z => {
            row_interval(&mut cells, 0, 0..=(2 * n - 2));
            row_interval(&mut cells, 1, 0..=(2 * n - 2));
        }
        FamilyId::P => {
            row_interval(&mut cells, 0, 0..=(2 * n - 2));
            if n >= 2 {
                row_interval(&mut cells, 1, 0..=(2 * n - 3));
            }
        }
        FamilyId::Y => {
            row_interval(&mut cells, 0, 0..=(2 * n - 2));
            if 2 * n - 2 >= 1 {
                row_interval(&mut cells, 1, 1..=(2 * n - 2));
            }
        }
        FamilyId::X => {
            if n >= 2 {
                row_interval(&mut cells, 0, 0..=(2 * n - 3));
                row_interval(&mut cells, 1, 0..=(2 * n - 3));
            }
        }
        FamilyId::A => {
            row_interval(&mut cells, 0, 0..=(2 * n - 1));
            row_interval(&mut cells, 1, 1..=(2 * n));
        }
        FamilyId::B => {
            row_interval(&mut cells, 0, 0..=(2 * n));
            row_interval(&mut cells, 1, 1..=(2 * n - 1));
        }
    }
    Ok(StripComplex::new(format!("{family}_{n}"), cells))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cellset(pairs: &[(u8, u32)]) -> BTreeSet<TriCell> {
        pairs.iter().map(|&(r, i)| TriCell::new(r, i)).collect()
    }

    #[test]
    fn h1_is_two_cells_without_placements() {
        let c = build_family(FamilyId::H, 1).unwrap();
        assert_eq!(c.cells(), &cellset(&[(0, 0), (1, 0)]));
        assert!(c.placements().is_empty());
    }

    #[test]
    fn x1_is_empty() {
        let c = build_family(FamilyId::X, 1).unwrap();
        assert_eq!(c.cell_count(), 0);
        assert!(c.placements().is_empty());
    }

    #[test]
    fn b1_is_one_side2_triangle() {
        let c = build_family(FamilyId::B, 1).unwrap();
        assert_eq!(c.cells(), &cellset(&[(0, 0), (0, 1), (0, 2), (1, 1)]));
        assert_eq!(c.placements(), &[LargePlacement::up(0)]);
    }

    #[test]
    fn a3_has_four_placements() {
        let c = build_family(FamilyId::A, 3).unwrap();
        assert_eq!(c.cell_count(), 12);
        assert_eq!(
            c.placements(),
            &[
                LargePlacement::up(0),
                LargePlacement::up(2),
                LargePlacement::down(2),
                LargePlacement::down(4),
            ]
        );
    }

    #[test]
    fn n_zero_is_a_domain_error() {
        assert!(matches!(
            build_family(FamilyId::H, 0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn cell_count_contract() {
        for n in 1..=100u32 {
            let m = u64::from(n);
            let counts = [
                (FamilyId::H, 4 * m - 2),
                (FamilyId::Z, 4 * m - 2),
                (FamilyId::P, 4 * m - 3),
                (FamilyId::Y, 4 * m - 3),
                (FamilyId::X, 4 * m - 4),
                (FamilyId::A, 4 * m),
                (FamilyId::B, 4 * m),
            ];
            for (fam, want) in counts {
                let c = build_family(fam, n).unwrap();
                assert_eq!(c.cell_count() as u64, want, "{fam}_{n}");
            }
        }
    }

    #[test]
    fn h2_placements_overlap() {
        let c = build_family(FamilyId::H, 2).unwrap();
        assert_eq!(
            c.placements(),
            &[LargePlacement::up(0), LargePlacement::down(0)]
        );
        let shared: Vec<TriCell> = LargePlacement::up(0)
            .cells()
            .iter()
            .filter(|c| LargePlacement::down(0).cells().contains(c))
            .copied()
            .collect();
        assert_eq!(shared, vec![TriCell::new(0, 1), TriCell::new(1, 1)]);
    }

    #[test]
    fn b3_placements() {
        let c = build_family(FamilyId::B, 3).unwrap();
        assert_eq!(
            c.placements(),
            &[
                LargePlacement::up(0),
                LargePlacement::up(2),
                LargePlacement::down(2),
                LargePlacement::up(4),
            ]
        );
        let disjoint = [
            LargePlacement::up(0),
            LargePlacement::down(2),
            LargePlacement::up(4),
        ];
        for a in &disjoint {
            for b in &disjoint {
                if a != b {
                    assert!(!a.overlaps(b));
                }
            }
        }
    }

    #[test]
    fn conflict_graphs_match_hand_checks() {
        let h2 = conflict_graph(&build_family(FamilyId::H, 2).unwrap());
        assert_eq!((h2.vertex_count(), h2.edge_count()), (2, 1));

        let x1 = conflict_graph(&build_family(FamilyId::X, 1).unwrap());
        assert_eq!((x1.vertex_count(), x1.edge_count()), (0, 0));

        let z3 = conflict_graph(&build_family(FamilyId::Z, 3).unwrap());
        assert_eq!((z3.vertex_count(), z3.edge_count()), (4, 4));
        let disjoint_pairs = (0..4)
            .flat_map(|i| ((i + 1)..4).map(move |j| (i, j)))
            .filter(|&(i, j)| !z3.vertices[i].overlaps(&z3.vertices[j]))
            .count();
        assert_eq!(disjoint_pairs, 2);
    }

    #[test]
    fn mirror_maps_p_to_y() {
        for n in 1..=12u32 {
            let p = build_family(FamilyId::P, n).unwrap();
            let y = build_family(FamilyId::Y, n).unwrap();
            let h = build_family(FamilyId::H, n).unwrap();
            assert_eq!(p.mirrored().cells(), y.cells(), "P_{n} mirror");
            assert_eq!(h.mirrored().cells(), h.cells(), "H_{n} self-mirror");
            // Placement sets map bijectively under the reflection.
            assert_eq!(p.placements().len(), y.placements().len());
        }
    }

    #[test]
    fn orientation_parity_of_builtins() {
        for fam in FamilyId::ALL {
            for n in 1..=20u32 {
                let c = build_family(fam, n).unwrap();
                for cell in c.cells() {
                    let expect_up = (cell.index() % 2 == 0) == (cell.row() == 0);
                    assert_eq!(cell.is_up(), expect_up);
                }
            }
        }
    }
}
