//! The same knot read from PD, Gauss and braid notation.

use knot_atoms::diagram::{braid_closure, parse_gauss, parse_pd, serialize_pd, BraidWord};

fn main() {
    let from_pd = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]").unwrap();
    let from_gauss = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
    let word: BraidWord = "2: s1^3".parse().unwrap();
    let from_braid = braid_closure(&word).unwrap();

    for (name, d) in [
        ("pd", &from_pd),
        ("gauss", &from_gauss),
        ("braid", &from_braid),
    ] {
        println!(
            "{name:>5}: n={} writhe={:+} classical={} -> {}",
            d.crossing_count(),
            d.writhe(),
            d.is_classical(),
            serialize_pd(d)
        );
    }

    // A signed Gauss code that no planar diagram realises.
    let virtual_trefoil = parse_gauss("O1+O2+U1+U2+").unwrap();
    println!(
        "virtual trefoil classical: {}",
        virtual_trefoil.is_classical()
    );

    match parse_pd("X(1,2,3,4") {
        Err(e) => println!("parse error: {e}"),
        Ok(_) => unreachable!(),
    }
}
