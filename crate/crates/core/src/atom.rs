//! The atom of a diagram: its frame is the 4-valent graph of classical
//! crossings, and 2-cells are glued along the corners of each crossing.
//!
//! With slots 0..3 clockwise and slots 0, 2 under, the black corners are
//! `c0 = (0, 1)` and `c2 = (2, 3)`; the white corners are `c1 = (1, 2)` and
//! `c3 = (3, 0)`. A black cell is an orbit of darts under the arc pairing and
//! the black corner involution, which is exactly a loop of the state that
//! smooths every crossing inside its black corners. White cells likewise.

use serde::Serialize;

use crate::diagram::{Dart, Diagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Black,
    White,
}

impl Colour {
    /// Partner of the slot across this colour's corner at the same crossing.
    #[inline]
    pub fn corner_mate(self, slot: usize) -> usize {
        match (self, slot) {
            (Colour::Black, s) => s ^ 1,
            (Colour::White, s) => match s {
                0 => 3,
                1 => 2,
                2 => 1,
                _ => 0,
            },
        }
    }

    pub fn swapped(self) -> Self {
        match self {
            Colour::Black => Colour::White,
            Colour::White => Colour::Black,
        }
    }
}

/// Cells of one colour, each identified by its smallest dart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellPartition {
    /// Boundary darts of each cell, in alternating arc/corner walk order.
    pub cells: Vec<Vec<Dart>>,
    /// Index into `cells` for each dart.
    pub cell_of: Vec<usize>,
    /// Parity of each dart's position along its cell walk.
    parity: Vec<u8>,
}

impl CellPartition {
    fn trace(d: &Diagram, colour: Colour) -> Self {
        let darts = d.dart_count();
        let mut cell_of = vec![usize::MAX; darts];
        let mut parity = vec![0u8; darts];
        let mut cells = Vec::new();
        for start in d.darts() {
            if cell_of[start.index()] != usize::MAX {
                continue;
            }
            let id = cells.len();
            let mut walk = Vec::new();
            let mut x = start;
            loop {
                // arc step
                cell_of[x.index()] = id;
                parity[x.index()] = (walk.len() % 2) as u8;
                walk.push(x);
                let y = d.partner(x);
                cell_of[y.index()] = id;
                parity[y.index()] = (walk.len() % 2) as u8;
                walk.push(y);
                // corner step
                let p = d.place(y);
                x = d.dart_at(p.crossing, colour.corner_mate(p.slot));
                if x == start {
                    break;
                }
            }
            cells.push(walk);
        }
        Self {
            cells,
            cell_of,
            parity,
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Canonical id of the cell containing `d`: its smallest dart.
    pub fn cell_id(&self, d: Dart) -> Dart {
        self.cells[self.cell_of[d.index()]][0]
    }
}

#[derive(Clone, Debug)]
pub struct Atom {
    crossings: usize,
    pub black: CellPartition,
    pub white: CellPartition,
    orientable: bool,
}

/// Flat summary record of an atom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtomSummary {
    #[serde(rename = "V")]
    pub vertices: usize,
    #[serde(rename = "E")]
    pub edges: usize,
    #[serde(rename = "F_black")]
    pub black_cells: usize,
    #[serde(rename = "F_white")]
    pub white_cells: usize,
    pub chi: i64,
    pub orientable: bool,
    pub genus: Option<i64>,
    pub good: bool,
    pub witnesses: Vec<Witness>,
}

/// A crossing where both corners of one colour lie in the same cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub crossing: usize,
    pub colour: Colour,
    pub cell: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodnessReport {
    pub good: bool,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surface {
    Orientable { genus: i64 },
    NonOrientable { crosscaps: i64 },
}

impl Atom {
    pub fn build(d: &Diagram) -> Self {
        let black = CellPartition::trace(d, Colour::Black);
        let white = CellPartition::trace(d, Colour::White);
        let orientable = orientable(d, &black, &white);
        Self {
            crossings: d.crossing_count(),
            black,
            white,
            orientable,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.crossings
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings
    }

    /// Black cell count. The crossingless circle bounds one cell of each
    /// colour on the sphere.
    pub fn black_cell_count(&self) -> usize {
        self.black.len().max(1)
    }

    pub fn white_cell_count(&self) -> usize {
        self.white.len().max(1)
    }

    pub fn cell_count(&self) -> usize {
        self.black_cell_count() + self.white_cell_count()
    }

    pub fn cells(&self, colour: Colour) -> &CellPartition {
        match colour {
            Colour::Black => &self.black,
            Colour::White => &self.white,
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.cell_count() as i64
    }

    pub fn is_orientable(&self) -> bool {
        self.orientable
    }

    pub fn surface(&self) -> Surface {
        let chi = self.euler_characteristic();
        if self.orientable {
            Surface::Orientable {
                genus: (2 - chi) / 2,
            }
        } else {
            Surface::NonOrientable { crosscaps: 2 - chi }
        }
    }

    pub fn genus(&self) -> Option<i64> {
        match self.surface() {
            Surface::Orientable { genus } => Some(genus),
            Surface::NonOrientable { .. } => None,
        }
    }

    pub fn goodness(&self, d: &Diagram) -> GoodnessReport {
        let mut witnesses = Vec::new();
        for c in 0..d.crossing_count() {
            for (colour, a, b) in [(Colour::Black, 0, 2), (Colour::White, 1, 3)] {
                let cells = self.cells(colour);
                let (x, y) = (d.dart_at(c, a), d.dart_at(c, b));
                if cells.cell_of[x.index()] == cells.cell_of[y.index()] {
                    witnesses.push(Witness {
                        crossing: c,
                        colour,
                        cell: cells.cell_id(x).0,
                    });
                }
            }
        }
        GoodnessReport {
            good: witnesses.is_empty(),
            witnesses,
        }
    }

    pub fn summary(&self, d: &Diagram) -> AtomSummary {
        let report = self.goodness(d);
        AtomSummary {
            vertices: self.vertex_count(),
            edges: self.edge_count(),
            black_cells: self.black_cell_count(),
            white_cells: self.white_cell_count(),
            chi: self.euler_characteristic(),
            orientable: self.orientable,
            genus: self.genus(),
            good: report.good,
            witnesses: report.witnesses,
        }
    }
}

/// Orient one cell and propagate: across every arc, the black and the white
/// cell on either side must run along it in opposite directions.
fn orientable(d: &Diagram, black: &CellPartition, white: &CellPartition) -> bool {
    let nb = black.len();
    let total = nb + white.len();
    if total == 0 {
        return true;
    }
    // Edge list: (black cell, white cell, required xor of orientations).
    let mut adj: Vec<Vec<(usize, u8)>> = vec![Vec::new(); total];
    for x in d.darts() {
        let b = black.cell_of[x.index()];
        let w = nb + white.cell_of[x.index()];
        let need = black.parity[x.index()] ^ white.parity[x.index()] ^ 1;
        adj[b].push((w, need));
        adj[w].push((b, need));
    }
    let mut orient: Vec<Option<u8>> = vec![None; total];
    for root in 0..total {
        if orient[root].is_some() {
            continue;
        }
        orient[root] = Some(0);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let ou = orient[u].unwrap();
            for &(v, need) in &adj[u] {
                let want = ou ^ need;
                match orient[v] {
                    None => {
                        orient[v] = Some(want);
                        stack.push(v);
                    }
                    Some(o) if o != want => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

pub fn build_atom(d: &Diagram) -> Atom {
    Atom::build(d)
}

pub fn is_good(d: &Diagram) -> GoodnessReport {
    Atom::build(d).goodness(d)
}

pub fn euler_characteristic(d: &Diagram) -> i64 {
    Atom::build(d).euler_characteristic()
}
