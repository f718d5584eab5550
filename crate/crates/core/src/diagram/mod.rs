//! Knot and link diagrams as abstract rotation systems.
//!
//! A [`Diagram`] stores, for every classical crossing, its four darts in
//! clockwise order. Slots 0 and 2 carry the understrand and slots 1 and 3 the
//! overstrand. Darts are glued into arcs by a fixed-point-free involution.
//! Virtual crossings are never stored: a rotation system that does not embed
//! in the sphere is simply a virtual diagram, see [`Diagram::is_classical`].

mod braid;
mod gauss;
mod long;
mod pd;
mod surgery;

use std::fmt;

use crate::error::DiagramError;
use crate::union_find::UnionFind;

pub use braid::{braid_closure, BraidLetter, BraidWord};
pub use gauss::parse_gauss;
pub use long::{parse_long_pd, LongDiagram};
pub use pd::{parse_pd, serialize_pd};
pub use surgery::{cable, connected_sum, mirror};

/// A half-edge of the diagram graph, attached to one crossing slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub u32);

impl Dart {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Where a dart sits: crossing index and clockwise slot 0..3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Place {
    pub crossing: usize,
    pub slot: usize,
}

#[derive(Clone, Debug)]
pub struct Diagram {
    crossings: Vec<[Dart; 4]>,
    partner: Vec<Dart>,
    place: Vec<Place>,
    provenance: Vec<String>,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings && self.partner == other.partner
    }
}

impl Eq for Diagram {}

impl Diagram {
    /// The crossingless diagram of the unknot.
    pub fn unknot() -> Self {
        Self {
            crossings: Vec::new(),
            partner: Vec::new(),
            place: Vec::new(),
            provenance: Vec::new(),
        }
    }

    /// Build a diagram from clockwise dart slots and a dart pairing.
    ///
    /// Darts must be exactly `0..4n`, each used once. `partner[d]` is the dart
    /// at the other end of the arc leaving `d`. Each crossing is rotated by a
    /// half turn if needed so that slot 0 holds the smaller under dart; this
    /// keeps the representation unique without changing the geometry.
    pub fn from_parts(crossings: Vec<[u32; 4]>, partner: Vec<u32>) -> Result<Self, DiagramError> {
        let darts = crossings.len() * 4;
        if partner.len() != darts {
            return Err(DiagramError::BadPairing(partner.len() as u32));
        }
        let mut place = vec![None; darts];
        for (c, slots) in crossings.iter().enumerate() {
            for (s, &d) in slots.iter().enumerate() {
                let entry = place
                    .get_mut(d as usize)
                    .ok_or(DiagramError::DartRange(d))?;
                if entry.is_some() {
                    return Err(DiagramError::DuplicateDart(d));
                }
                *entry = Some(Place {
                    crossing: c,
                    slot: s,
                });
            }
        }
        for (d, &p) in partner.iter().enumerate() {
            let back = partner.get(p as usize).copied();
            if p as usize == d || back != Some(d as u32) {
                return Err(DiagramError::BadPairing(d as u32));
            }
        }
        let crossings: Vec<[Dart; 4]> = crossings
            .into_iter()
            .map(|s| {
                let s = if s[2] < s[0] {
                    [s[2], s[3], s[0], s[1]]
                } else {
                    s
                };
                s.map(Dart)
            })
            .collect();
        let mut place = vec![
            Place {
                crossing: 0,
                slot: 0
            };
            darts
        ];
        for (c, slots) in crossings.iter().enumerate() {
            for (s, d) in slots.iter().enumerate() {
                place[d.index()] = Place {
                    crossing: c,
                    slot: s,
                };
            }
        }
        let diagram = Self {
            crossings,
            partner: partner.into_iter().map(Dart).collect(),
            place,
            provenance: Vec::new(),
        };
        let pieces = diagram.shadow_pieces();
        if pieces > 1 {
            return Err(DiagramError::Split(pieces));
        }
        Ok(diagram)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn dart_count(&self) -> usize {
        self.partner.len()
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> {
        (0..self.partner.len() as u32).map(Dart)
    }

    /// Clockwise slots of one crossing.
    pub fn crossing(&self, c: usize) -> [Dart; 4] {
        self.crossings[c]
    }

    pub fn crossings(&self) -> &[[Dart; 4]] {
        &self.crossings
    }

    #[inline]
    pub fn partner(&self, d: Dart) -> Dart {
        self.partner[d.index()]
    }

    #[inline]
    pub fn place(&self, d: Dart) -> Place {
        self.place[d.index()]
    }

    #[inline]
    pub fn dart_at(&self, crossing: usize, slot: usize) -> Dart {
        self.crossings[crossing][slot % 4]
    }

    /// The dart that continues the same strand straight through the crossing.
    #[inline]
    pub fn opposite(&self, d: Dart) -> Dart {
        let p = self.place(d);
        self.dart_at(p.crossing, p.slot + 2)
    }

    /// Next dart clockwise around the same crossing.
    #[inline]
    pub fn clockwise(&self, d: Dart) -> Dart {
        let p = self.place(d);
        self.dart_at(p.crossing, p.slot + 1)
    }

    #[inline]
    pub fn counterclockwise(&self, d: Dart) -> Dart {
        let p = self.place(d);
        self.dart_at(p.crossing, p.slot + 3)
    }

    #[inline]
    pub fn is_over(&self, d: Dart) -> bool {
        self.place(d).slot % 2 == 1
    }

    /// Notes recorded by operations that made arbitrary choices.
    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn with_provenance(mut self, note: impl Into<String>) -> Self {
        self.provenance.push(note.into());
        self
    }

    /// Renumber darts so that dart `4c + s` sits at crossing `c`, slot `s`.
    pub fn canonical(&self) -> Self {
        let n = self.crossing_count();
        let new_id = |d: Dart| {
            let p = self.place(d);
            (4 * p.crossing + p.slot) as u32
        };
        let crossings = (0..n)
            .map(|c| [0, 1, 2, 3].map(|s| (4 * c + s) as u32))
            .collect();
        let mut partner = vec![0; 4 * n];
        for d in self.darts() {
            partner[new_id(d) as usize] = new_id(self.partner(d));
        }
        let mut out = Self::from_parts(crossings, partner).expect("renumbering keeps invariants");
        out.provenance = self.provenance.clone();
        out
    }

    fn shadow_pieces(&self) -> usize {
        if self.crossings.is_empty() {
            return 1;
        }
        let mut uf = UnionFind::new(self.crossing_count());
        for d in self.darts() {
            uf.union(self.place(d).crossing, self.place(self.partner(d)).crossing);
        }
        uf.set_count()
    }

    /// Closed strands, each given as its entering darts in traversal order.
    ///
    /// A strand enters a crossing at dart `d`, leaves through the opposite
    /// slot and continues along the arc to the partner dart. A component
    /// enters slot 0 at the first crossing where it passes under, matching
    /// the PD convention that a term starts at its incoming understrand. A
    /// component that only passes over enters its first crossing one slot
    /// clockwise after the understrand's entry there.
    pub fn components(&self) -> Vec<Vec<Dart>> {
        let n = self.crossing_count();
        // Unoriented strands, keyed by the crossings they pass.
        let mut strand_of = vec![usize::MAX; 2 * n];
        let mut strands: Vec<Dart> = Vec::new();
        for c in 0..n {
            for pair in 0..2 {
                if strand_of[2 * c + pair] != usize::MAX {
                    continue;
                }
                let id = strands.len();
                let start = self.dart_at(c, pair);
                strands.push(start);
                let mut d = start;
                loop {
                    let p = self.place(d);
                    strand_of[2 * p.crossing + p.slot % 2] = id;
                    d = self.partner(self.opposite(d));
                    if d == start {
                        break;
                    }
                }
            }
        }
        let mut entry: Vec<Option<Dart>> = vec![None; strands.len()];
        for c in 0..n {
            let id = strand_of[2 * c];
            if entry[id].is_none() {
                entry[id] = Some(self.dart_at(c, 0));
            }
        }
        let trace = |e: Dart| {
            let mut path = Vec::new();
            let mut d = e;
            loop {
                path.push(d);
                d = self.partner(self.opposite(d));
                if d == e {
                    break;
                }
            }
            path
        };
        let mut under_in = vec![0usize; n];
        for e in entry.iter().flatten() {
            for d in trace(*e) {
                let p = self.place(d);
                if p.slot.is_multiple_of(2) {
                    under_in[p.crossing] = p.slot;
                }
            }
        }
        for (id, start) in strands.iter().enumerate() {
            if entry[id].is_none() {
                let c = self.place(*start).crossing;
                entry[id] = Some(self.dart_at(c, (under_in[c] + 1) % 4));
            }
        }
        entry
            .into_iter()
            .map(|e| trace(e.expect("every strand oriented")))
            .collect()
    }

    pub fn component_count(&self) -> usize {
        if self.crossings.is_empty() {
            1
        } else {
            self.components().len()
        }
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    /// Sign of every crossing under the orientation of [`Diagram::components`].
    ///
    /// A crossing is positive when the overstrand enters one slot clockwise
    /// after the understrand's entry, i.e. the understrand passes from right
    /// to left beneath it.
    pub fn crossing_signs(&self) -> Vec<i8> {
        let entering = self.entering();
        self.crossings
            .iter()
            .map(|slots| {
                let under_in = if entering[slots[0].index()] { 0 } else { 2 };
                let over_in = if entering[slots[1].index()] { 1 } else { 3 };
                if over_in == (under_in + 1) % 4 {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }

    /// Whether each dart is an entering dart of its component.
    pub(crate) fn entering(&self) -> Vec<bool> {
        let mut entering = vec![false; self.dart_count()];
        for comp in self.components() {
            for d in comp {
                entering[d.index()] = true;
            }
        }
        entering
    }

    pub fn writhe(&self) -> i64 {
        self.crossing_signs().iter().map(|&s| s as i64).sum()
    }

    /// Faces of the rotation system, traced by following an arc and then
    /// turning to the next dart clockwise.
    pub fn shadow_faces(&self) -> Vec<Vec<Dart>> {
        let mut seen = vec![false; self.dart_count()];
        let mut faces = Vec::new();
        for start in self.darts() {
            if seen[start.index()] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            while !seen[d.index()] {
                seen[d.index()] = true;
                face.push(d);
                d = self.clockwise(self.partner(d));
            }
            faces.push(face);
        }
        faces
    }

    /// V - E + F of the shadow's rotation-system surface.
    pub fn shadow_euler_characteristic(&self) -> i64 {
        if self.crossings.is_empty() {
            return 2;
        }
        let v = self.crossing_count() as i64;
        v - 2 * v + self.shadow_faces().len() as i64
    }

    /// True when the rotation system embeds in the sphere.
    pub fn is_classical(&self) -> bool {
        self.shadow_euler_characteristic() == 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> Diagram {
        parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap()
    }

    #[test]
    fn unknot_basics() {
        let u = Diagram::unknot();
        assert_eq!(u.crossing_count(), 0);
        assert_eq!(u.component_count(), 1);
        assert!(u.is_classical());
        assert_eq!(u.writhe(), 0);
    }

    #[test]
    fn rejects_bad_pairing() {
        assert_eq!(
            Diagram::from_parts(vec![[0, 1, 2, 3]], vec![0, 2, 1, 3]),
            Err(DiagramError::BadPairing(0))
        );
        assert_eq!(
            Diagram::from_parts(vec![[0, 1, 2, 2]], vec![1, 0, 3, 2]),
            Err(DiagramError::DuplicateDart(2))
        );
        assert_eq!(
            Diagram::from_parts(vec![[0, 1, 2, 9]], vec![1, 0, 3, 2]),
            Err(DiagramError::DartRange(9))
        );
    }

    #[test]
    fn rejects_split_diagram() {
        let err = Diagram::from_parts(
            vec![[0, 1, 2, 3], [4, 5, 6, 7]],
            vec![1, 0, 3, 2, 5, 4, 7, 6],
        );
        assert_eq!(err, Err(DiagramError::Split(2)));
    }

    #[test]
    fn half_turn_normalisation() {
        let a = Diagram::from_parts(vec![[2, 3, 0, 1]], vec![1, 0, 3, 2]).unwrap();
        assert_eq!(a.crossing(0), [Dart(0), Dart(1), Dart(2), Dart(3)]);
    }

    #[test]
    fn trefoil_traversal() {
        let t = trefoil();
        assert_eq!(t.component_count(), 1);
        let comps = t.components();
        assert_eq!(comps[0].len(), 6);
        assert_eq!(comps[0][0], Dart(0));
        assert!(t.is_classical());
        assert_eq!(t.shadow_faces().len(), 5);
    }

    #[test]
    fn every_dart_on_one_face() {
        let t = trefoil();
        let mut all: Vec<Dart> = t.shadow_faces().concat();
        all.sort();
        assert_eq!(all, t.darts().collect::<Vec<_>>());
    }

    #[test]
    fn canonical_is_stable() {
        let t = mirror(&trefoil());
        let c = t.canonical();
        assert_eq!(c.canonical(), c);
        assert_eq!(serialize_pd(&c), serialize_pd(&t));
    }
}
