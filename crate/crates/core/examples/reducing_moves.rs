//! Reidemeister patterns that shrink a diagram, and goodness failing there.

use knot_atoms::diagram::parse_pd;
use knot_atoms::is_good;
use knot_atoms::minimality::detect_reducing_moves;

fn main() {
    let cases = [
        (
            "kinked trefoil",
            "X(1,2,3,4) X(5,6,2,7) X(4,3,6,5) X(7,1,8,8)",
        ),
        ("overlapping circles", "X(1,3,2,4) X(2,3,1,4)"),
        ("trefoil", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"),
    ];
    for (name, pd) in cases {
        let d = parse_pd(pd).unwrap();
        let moves = detect_reducing_moves(&d);
        println!(
            "{name}: R1 {:?} R2 {:?} R3 {:?} good={}",
            moves
                .r1_decreasing
                .iter()
                .map(|s| &s.crossings)
                .collect::<Vec<_>>(),
            moves
                .r2_decreasing
                .iter()
                .map(|s| &s.crossings)
                .collect::<Vec<_>>(),
            moves
                .r3_applicable
                .iter()
                .map(|s| &s.crossings)
                .collect::<Vec<_>>(),
            is_good(&d).good
        );
    }
}
