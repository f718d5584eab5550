//! Kauffman bracket and the span bound on a few diagrams.

use knot_atoms::diagram::{parse_gauss, parse_pd};
use knot_atoms::{kauffman_bracket, span_bound_report};

fn main() {
    let cases = [
        (
            "trefoil",
            parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap(),
        ),
        (
            "figure eight",
            parse_pd("X(1,2,3,4) X(2,5,6,7) X(8,6,5,1) X(7,8,4,3)").unwrap(),
        ),
        ("kinked unknot", parse_pd("X(1,2,2,1)").unwrap()),
        ("virtual trefoil", parse_gauss("O1+O2+U1+U2+").unwrap()),
    ];
    for (name, d) in &cases {
        let poly = kauffman_bracket(d).unwrap();
        let r = span_bound_report(d).unwrap();
        println!("{name}: <D> = {poly}");
        println!(
            "  span {} vs 4n+2(chi-2) = {} (n={}, chi={}), equality {}",
            r.span, r.bound, r.n, r.chi, r.equality
        );
    }
}
