//! Cables of the trefoil: cell counts, goodness and the span identity.

use knot_atoms::diagram::parse_pd;
use knot_atoms::minimality::{cabling_consistency, chi_gap_lower_bound};

fn main() {
    let trefoil = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
    for m in 1..=3 {
        let r = cabling_consistency(&trefoil, m).unwrap();
        println!(
            "m={m}: V={} E={} F={} chi_m={} good={} predicted span={} measured={:?}",
            r.vertices, r.edges, r.cells, r.chi_m, r.cable_good, r.predicted_span, r.measured_span
        );
    }
    // A hypothetical 2-crossing diagram of the trefoil would need its atom
    // Euler characteristic to grow this much to keep pace under cabling.
    for m in [1, 5, 50] {
        println!("m={m}: chi gap needed >= {}", chi_gap_lower_bound(m, 3, 2));
    }
}
