//! Local Reidemeister patterns, read off the faces of the shadow.
//!
//! Faces are traced as in [`Diagram::shadow_faces`]: from a dart along its
//! arc, then one step clockwise. A side of a face is over at an end when its
//! dart there sits in an odd slot.
//!
//! - R1 (always decreasing): a monogon face. A kink bounds two monogons on
//!   the sphere when nothing else is nearby, so sites are listed per crossing.
//! - R2 decreasing: a bigon on two distinct crossings whose sides are each
//!   over at both ends or under at both ends.
//! - R3 applicable: a triangle on three distinct crossings that is not
//!   alternating around its boundary, i.e. one side passes over both of its
//!   crossings (and so another passes under both).

use serde::Serialize;

use crate::diagram::{Dart, Diagram};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoveSite {
    /// Crossings around the face, in face order.
    pub crossings: Vec<usize>,
    /// Face boundary darts, one per side.
    pub face: Vec<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReducingMoves {
    pub r1_decreasing: Vec<MoveSite>,
    pub r2_decreasing: Vec<MoveSite>,
    pub r3_applicable: Vec<MoveSite>,
}

impl ReducingMoves {
    pub fn is_empty(&self) -> bool {
        self.r1_decreasing.is_empty()
            && self.r2_decreasing.is_empty()
            && self.r3_applicable.is_empty()
    }
}

fn distinct(xs: &[usize]) -> bool {
    xs.iter().enumerate().all(|(i, x)| !xs[..i].contains(x))
}

/// Side from `x` to its partner keeps the same level at both ends.
fn level_side(d: &Diagram, x: Dart) -> bool {
    d.is_over(x) == d.is_over(d.partner(x))
}

pub fn detect_reducing_moves(d: &Diagram) -> ReducingMoves {
    let mut out = ReducingMoves::default();
    for face in d.shadow_faces() {
        let crossings: Vec<usize> = face.iter().map(|&x| d.place(x).crossing).collect();
        let site = || MoveSite {
            crossings: crossings.clone(),
            face: face.iter().map(|x| x.0).collect(),
        };
        match face.len() {
            1 if !out.r1_decreasing.iter().any(|s| s.crossings == crossings) => {
                out.r1_decreasing.push(site())
            }
            2 if distinct(&crossings) && level_side(d, face[0]) => out.r2_decreasing.push(site()),
            3 if distinct(&crossings) && face.iter().any(|&x| level_side(d, x)) => {
                out.r3_applicable.push(site())
            }
            _ => {}
        }
    }
    out
}
