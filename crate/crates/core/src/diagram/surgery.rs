use super::{Dart, Diagram};
use crate::error::DiagramError;

/// Switch every crossing. The shadow and its rotation are untouched; each
/// crossing's slots are shifted by one so over and under trade parity.
pub fn mirror(d: &Diagram) -> Diagram {
    let crossings = d
        .crossings()
        .iter()
        .map(|s| [s[1].0, s[2].0, s[3].0, s[0].0])
        .collect();
    let partner = d.darts().map(|x| d.partner(x).0).collect();
    let mut out = Diagram::from_parts(crossings, partner).expect("mirror keeps invariants");
    out.provenance = d.provenance.clone();
    out
}

/// Cut the arc through `arc1` in `d1` and the arc through `arc2` in `d2`,
/// then cross-splice the four loose ends.
///
/// Darts of `d2` are shifted by `4 * n1`. `arc1` is joined to the partner of
/// `arc2` and vice versa, so when both chosen darts play the same role
/// (both leaving or both entering a crossing) each summand keeps its
/// orientation. The choice of arcs is recorded in the provenance.
pub fn connected_sum(
    d1: &Diagram,
    arc1: Dart,
    d2: &Diagram,
    arc2: Dart,
) -> Result<Diagram, DiagramError> {
    if arc1.index() >= d1.dart_count() {
        return Err(DiagramError::DartRange(arc1.0));
    }
    if arc2.index() >= d2.dart_count() {
        return Err(DiagramError::DartRange(arc2.0));
    }
    let offset = d1.dart_count() as u32;
    let mut crossings: Vec<[u32; 4]> = d1.crossings().iter().map(|s| s.map(|x| x.0)).collect();
    crossings.extend(d2.crossings().iter().map(|s| s.map(|x| x.0 + offset)));
    let mut partner: Vec<u32> = d1.darts().map(|x| d1.partner(x).0).collect();
    partner.extend(d2.darts().map(|x| d2.partner(x).0 + offset));

    let (x1, y1) = (arc1.0, d1.partner(arc1).0);
    let (x2, y2) = (arc2.0 + offset, d2.partner(arc2).0 + offset);
    partner[x1 as usize] = y2;
    partner[y2 as usize] = x1;
    partner[y1 as usize] = x2;
    partner[x2 as usize] = y1;

    let mut out = Diagram::from_parts(crossings, partner)?;
    out.provenance = d1.provenance.clone();
    out.provenance.extend(d2.provenance.iter().cloned());
    out.provenance.push(format!(
        "connected sum: left arc {x1}-{y1} spliced with right arc {}-{}",
        arc2.0,
        y2 - offset
    ));
    Ok(out)
}

/// Blackboard-framed `k`-cable: every arc becomes `k` parallel arcs and every
/// crossing a `k` by `k` grid of crossings with the same over/under roles.
pub fn cable(d: &Diagram, k: usize) -> Result<Diagram, DiagramError> {
    if k == 0 {
        return Err(DiagramError::ZeroCable);
    }
    if d.crossing_count() == 0 {
        return if k == 1 {
            Ok(d.clone())
        } else {
            Err(DiagramError::Split(k))
        };
    }
    let n = d.crossing_count();
    // Local frame at each parent crossing: slot 0 is south, then west,
    // north, east. Understrand copies are indexed by p (west to east) and
    // overstrand copies by q (south to north).
    let dart = |c: usize, p: usize, q: usize, slot: usize| -> u32 {
        (4 * (c * k * k + p * k + q) + slot) as u32
    };
    // Loose end number t (clockwise around the parent crossing) on side `slot`.
    let end = |c: usize, slot: usize, t: usize| -> u32 {
        match slot {
            0 => dart(c, k - 1 - t, 0, 0),
            1 => dart(c, 0, t, 1),
            2 => dart(c, t, k - 1, 2),
            _ => dart(c, k - 1, k - 1 - t, 3),
        }
    };
    let total = n * k * k;
    let crossings = (0..total)
        .map(|i| [0, 1, 2, 3].map(|s| (4 * i + s) as u32))
        .collect();
    let mut partner = vec![0u32; 4 * total];
    let mut join = |a: u32, b: u32| {
        partner[a as usize] = b;
        partner[b as usize] = a;
    };
    for c in 0..n {
        for p in 0..k {
            for q in 0..k {
                if q + 1 < k {
                    join(dart(c, p, q, 2), dart(c, p, q + 1, 0));
                }
                if p + 1 < k {
                    join(dart(c, p, q, 3), dart(c, p + 1, q, 1));
                }
            }
        }
    }
    for x in d.darts() {
        let y = d.partner(x);
        if x > y {
            continue;
        }
        let (px, py) = (d.place(x), d.place(y));
        for t in 0..k {
            join(
                end(px.crossing, px.slot, t),
                end(py.crossing, py.slot, k - 1 - t),
            );
        }
    }
    let mut out = Diagram::from_parts(crossings, partner)?;
    out.provenance = d.provenance.clone();
    Ok(out)
}
