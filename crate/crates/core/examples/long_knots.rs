//! Long knots: read with two free ends, certified through their closure.

use knot_atoms::diagram::{parse_long_pd, LongDiagram};
use knot_atoms::minimality::{certify_long, CertifyOptions};

fn main() {
    let opts = CertifyOptions::default();
    let cases = [
        (
            "long trefoil",
            parse_long_pd("X(1,4,2,5) X(3,6,4,7) X(5,2,6,3)").unwrap(),
        ),
        ("long kink", parse_long_pd("X(1,2,3,1)").unwrap()),
        ("straight arc", LongDiagram::trivial()),
    ];
    for (name, long) in &cases {
        let c = certify_long(long, &opts);
        println!("{name}: ends={:?} verdict={:?}", long.ends(), c.verdict);
    }
}
