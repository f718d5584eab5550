//! Crossing-number certificates for knot diagrams from the combinatorics of
//! their atoms.
//!
//! A diagram is *good* when, at every crossing, the four corners belong to
//! four different cells of the atom (the checkerboard surface spanned by the
//! diagram's two extreme smoothings). Good classical knot diagrams are
//! minimal. This crate builds atoms, decides goodness, computes the Kauffman
//! bracket exactly to check the span bound `4n + 2(chi - 2)`, and provides
//! the diagram surgery (mirror, connected sum, cabling, braid closure) the
//! argument is built from.
//!
//! ```
//! use knot_atoms::diagram::parse_pd;
//! use knot_atoms::minimality::{certify_classical, CertifyOptions, Verdict};
//!
//! let trefoil = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
//! let cert = certify_classical(&trefoil, &CertifyOptions::default());
//! assert_eq!(cert.verdict, Verdict::MinimalClassical);
//! assert_eq!(cert.span, Some(12));
//! ```

pub mod atom;
pub mod bracket;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod minimality;
pub mod sample;
mod union_find;

pub use atom::{build_atom, is_good, Atom, Colour, GoodnessReport};
pub use bracket::{kauffman_bracket, span_bound_report, LaurentPoly, SpanReport};
pub use diagram::{Dart, Diagram};
