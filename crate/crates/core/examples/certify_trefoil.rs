//! Certify the trefoil as a minimal classical diagram and print the JSON.

use knot_atoms::diagram::parse_pd;
use knot_atoms::minimality::{certify_classical, CertifyOptions};

fn main() {
    let trefoil = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").expect("valid PD");
    let cert = certify_classical(&trefoil, &CertifyOptions::default());
    println!("{}", cert.to_json());
    println!("verdict: {:?}", cert.verdict);
}
