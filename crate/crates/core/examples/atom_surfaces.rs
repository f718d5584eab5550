//! Atom cells, Euler characteristic, surface type and goodness witnesses.

use knot_atoms::atom::{Atom, Surface};
use knot_atoms::diagram::{parse_gauss, parse_pd};

fn main() {
    let cases = [
        (
            "trefoil",
            parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap(),
        ),
        (
            "10-crossing positive braid",
            "3: s1^3 s2^2 s1^2 s2^3"
                .parse()
                .map(|w| knot_atoms::diagram::braid_closure(&w).unwrap())
                .unwrap(),
        ),
        ("kinked unknot", parse_pd("X(1,2,2,1)").unwrap()),
        ("virtual trefoil", parse_gauss("O1+O2+U1+U2+").unwrap()),
    ];
    for (name, d) in &cases {
        let atom = Atom::build(d);
        let surface = match atom.surface() {
            Surface::Orientable { genus } => format!("orientable, genus {genus}"),
            Surface::NonOrientable { crosscaps } => {
                format!("non-orientable, crosscaps {crosscaps}")
            }
        };
        println!(
            "{name}: V={} E={} black={} white={} chi={} ({surface})",
            atom.vertex_count(),
            atom.edge_count(),
            atom.black_cell_count(),
            atom.white_cell_count(),
            atom.euler_characteristic(),
        );
        for w in atom.goodness(d).witnesses {
            println!(
                "  crossing {} meets {:?} cell {} twice",
                w.crossing, w.colour, w.cell
            );
        }
    }
}
