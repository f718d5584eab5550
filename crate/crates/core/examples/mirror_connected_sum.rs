//! Mirror images and the square knot as trefoil # mirror trefoil.

use knot_atoms::diagram::{connected_sum, mirror, parse_pd, serialize_pd, Dart};
use knot_atoms::{is_good, kauffman_bracket, Atom};

fn main() {
    let t = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
    let m = mirror(&t);
    let bt = kauffman_bracket(&t).unwrap();
    println!("<T>  = {bt}");
    println!("<mT> = {}", kauffman_bracket(&m).unwrap());
    println!(
        "inverted variable matches: {}",
        kauffman_bracket(&m).unwrap() == bt.invert_variable()
    );

    let square = connected_sum(&t, Dart(0), &m, Dart(0)).unwrap();
    println!("square knot: {}", serialize_pd(&square));
    println!(
        "n={} writhe={} chi={} good={}",
        square.crossing_count(),
        square.writhe(),
        Atom::build(&square).euler_characteristic(),
        is_good(&square).good
    );
    let product = &bt * &kauffman_bracket(&m).unwrap();
    println!(
        "bracket is the product: {}",
        kauffman_bracket(&square).unwrap() == product
    );
    for note in square.provenance() {
        println!("  {note}");
    }
}
