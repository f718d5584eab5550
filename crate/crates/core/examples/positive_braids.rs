//! Closures of positive braids with all exponents at least 2.

use knot_atoms::bracket::span_bound_report;
use knot_atoms::minimality::generate_positive_braid;

fn main() {
    let shapes: [(usize, &[i32]); 5] = [
        (2, &[3]),
        (2, &[5]),
        (3, &[3, 3]),
        (3, &[2, 2]),
        (3, &[3, 2, 2, 3]),
    ];
    for (strands, exps) in shapes {
        let b = generate_positive_braid(strands, exps).unwrap();
        let r = span_bound_report(&b.diagram).unwrap();
        println!(
            "{}: n={} knot={} good={} span={} bound={}",
            b.word,
            b.diagram.crossing_count(),
            b.knot,
            b.good,
            r.span,
            r.bound
        );
    }
    println!("{}", generate_positive_braid(2, &[1]).unwrap_err());
}
