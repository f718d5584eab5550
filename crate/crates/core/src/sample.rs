//! Random diagrams for property checks: a uniform perfect matching of the
//! darts with independently shuffled slots at every crossing. Most such
//! rotation systems are virtual.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::Diagram;

/// One random attempt; `None` when the shadow came out split.
pub fn random_diagram<R: Rng + ?Sized>(rng: &mut R, crossings: usize) -> Option<Diagram> {
    let mut darts: Vec<u32> = (0..4 * crossings as u32).collect();
    darts.shuffle(rng);
    let mut partner = vec![0u32; darts.len()];
    for pair in darts.chunks(2) {
        partner[pair[0] as usize] = pair[1];
        partner[pair[1] as usize] = pair[0];
    }
    let slots = (0..crossings as u32)
        .map(|c| {
            let mut s = [4 * c, 4 * c + 1, 4 * c + 2, 4 * c + 3];
            s.shuffle(rng);
            s
        })
        .collect();
    Diagram::from_parts(slots, partner).ok()
}

/// Retry until the shadow is connected.
pub fn random_connected_diagram<R: Rng + ?Sized>(rng: &mut R, crossings: usize) -> Diagram {
    if crossings == 0 {
        return Diagram::unknot();
    }
    loop {
        if let Some(d) = random_diagram(rng, crossings) {
            return d;
        }
    }
}
