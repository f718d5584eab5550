//! The counting behind the cabling argument.
//!
//! For a good diagram with `N` crossings and atom Euler characteristic `chi`,
//! the `m`-cable has `m^2 N` vertices, `2 m^2 N` edges and `m (N + chi)`
//! cells, stays good, and so its bracket span is exactly
//! `4 m^2 N + 2 (chi_m - 2)`, which rewrites to `2 (m^2 + m) N + 2 m chi - 4`.
//! A competitor diagram of the same knot with `N'` crossings can only match
//! that span if `chi' - chi >= (m + 1)(N - N')`; see [`chi_gap_lower_bound`].

use serde::Serialize;

use crate::atom::Atom;
use crate::bracket::{kauffman_bracket_with_limit, DEFAULT_STATE_LIMIT};
use crate::diagram::{cable, Diagram};
use crate::error::DiagramError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CablingReport {
    pub m: usize,
    pub n: usize,
    pub chi: i64,
    /// Whether the base diagram is good; the counts are only predicted then.
    pub applicable: bool,
    pub vertices: usize,
    pub edges: usize,
    pub cells: usize,
    pub chi_m: i64,
    pub cable_good: bool,
    pub counts_ok: bool,
    /// `4 m^2 N + 2 (chi_m - 2)` from the measured cable.
    pub span_from_cable: i64,
    /// `2 (m^2 + m) N + 2 m chi - 4` from the base diagram alone.
    pub predicted_span: i64,
    pub identity_ok: bool,
    /// Bracket span of the cable, when the state sum is within the limit.
    pub measured_span: Option<i64>,
}

impl CablingReport {
    /// All checks that could be run passed.
    pub fn consistent(&self) -> bool {
        self.applicable
            && self.cable_good
            && self.counts_ok
            && self.identity_ok
            && self.measured_span.is_none_or(|s| s == self.predicted_span)
    }
}

pub fn cabling_consistency(d: &Diagram, m: usize) -> Result<CablingReport, DiagramError> {
    cabling_consistency_with_limit(d, m, DEFAULT_STATE_LIMIT)
}

pub fn cabling_consistency_with_limit(
    d: &Diagram,
    m: usize,
    limit: usize,
) -> Result<CablingReport, DiagramError> {
    let cabled = cable(d, m)?;
    let base = Atom::build(d);
    let n = d.crossing_count();
    let chi = base.euler_characteristic();
    let applicable = base.goodness(d).good;

    let atom = Atom::build(&cabled);
    let (vertices, edges, cells) = (atom.vertex_count(), atom.edge_count(), atom.cell_count());
    let chi_m = atom.euler_characteristic();

    let (mi, ni) = (m as i64, n as i64);
    let counts_ok = vertices as i64 == mi * mi * ni
        && edges as i64 == 2 * mi * mi * ni
        && cells as i64 == mi * (ni + chi);
    let span_from_cable = 4 * mi * mi * ni + 2 * (chi_m - 2);
    let predicted_span = 2 * (mi * mi + mi) * ni + 2 * mi * chi - 4;
    let measured_span = kauffman_bracket_with_limit(&cabled, limit)
        .ok()
        .map(|p| p.span().expect("bracket is nonzero"));

    Ok(CablingReport {
        m,
        n,
        chi,
        applicable,
        vertices,
        edges,
        cells,
        chi_m,
        cable_good: atom.goodness(&cabled).good,
        counts_ok,
        span_from_cable,
        predicted_span,
        identity_ok: span_from_cable == predicted_span,
        measured_span,
    })
}

/// Smallest `chi' - chi` a diagram with `competitor` crossings would need so
/// its `m`-cable could reach the span of the good diagram's `m`-cable.
pub fn chi_gap_lower_bound(m: usize, crossings: usize, competitor: usize) -> i64 {
    (m as i64 + 1) * (crossings as i64 - competitor as i64)
}
