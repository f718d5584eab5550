//! Minimality certificates and the checks that support them.
//!
//! A good diagram of a classical knot is minimal among classical diagrams of
//! that knot. A good diagram of a framed (possibly virtual) link is minimal in
//! the framed category, and a long virtual knot whose closure is good is
//! minimal among long diagrams. The certificates here check the hypotheses;
//! they do not search for smaller diagrams.

mod braids;
mod cabling;
mod certificate;
mod moves;

pub use braids::{generate_positive_braid, PositiveBraid};
pub use cabling::{
    cabling_consistency, cabling_consistency_with_limit, chi_gap_lower_bound, CablingReport,
};
pub use certificate::{
    certify_classical, certify_framed, certify_long, input_digest, Category, Certificate,
    CertifyOptions, Predicate, Theorem, Verdict,
};
pub use moves::{detect_reducing_moves, MoveSite, ReducingMoves};
