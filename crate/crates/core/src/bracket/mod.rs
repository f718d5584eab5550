//! Kauffman bracket by exhaustive state sum.
//!
//! At a crossing the black smoothing joins slots 0-1 and 2-3 and carries a
//! factor `a`; the white smoothing joins 1-2 and 3-0 and carries `a^-1`. A
//! state with `g` loops contributes `(-a^2 - a^-2)^(g - 1)`, so the
//! crossingless circle has bracket 1. Compared with tables that weight the
//! other smoothing, values differ by `a -> a^-1`.

mod poly;

use std::ops::Range;

use rayon::prelude::*;
use serde::Serialize;

use crate::atom::{Atom, Colour};
use crate::diagram::Diagram;
use crate::error::BracketError;
use crate::union_find::UnionFind;

pub use poly::{LaurentPoly, PolyParseError};

pub const DEFAULT_STATE_LIMIT: usize = 24;

/// Environment variable that overrides [`DEFAULT_STATE_LIMIT`] in the CLI.
pub const STATE_LIMIT_ENV: &str = "KNOT_ATOMS_STATE_LIMIT";

/// One smoothing choice per crossing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothingState(pub Vec<Colour>);

impl SmoothingState {
    pub fn uniform(colour: Colour, crossings: usize) -> Self {
        Self(vec![colour; crossings])
    }

    /// Bit `c` set means crossing `c` takes the black smoothing.
    pub fn from_bits(bits: u64, crossings: usize) -> Self {
        Self(
            (0..crossings)
                .map(|c| {
                    if bits >> c & 1 == 1 {
                        Colour::Black
                    } else {
                        Colour::White
                    }
                })
                .collect(),
        )
    }

    pub fn loop_count(&self, d: &Diagram) -> usize {
        if d.crossing_count() == 0 {
            return 1;
        }
        let mut counter = LoopCounter::new(d);
        counter.count(|c| self.0[c] == Colour::Black)
    }
}

/// Loop counting over arcs: every smoothing joins the arcs at two corners.
struct LoopCounter {
    arc_of: Vec<[usize; 4]>,
    uf: UnionFind,
}

impl LoopCounter {
    fn new(d: &Diagram) -> Self {
        let mut arc_id = vec![usize::MAX; d.dart_count()];
        let mut next = 0;
        for x in d.darts() {
            if arc_id[x.index()] == usize::MAX {
                arc_id[x.index()] = next;
                arc_id[d.partner(x).index()] = next;
                next += 1;
            }
        }
        let arc_of = (0..d.crossing_count())
            .map(|c| [0, 1, 2, 3].map(|s| arc_id[d.dart_at(c, s).index()]))
            .collect();
        Self {
            arc_of,
            uf: UnionFind::new(next),
        }
    }

    fn count(&mut self, black: impl Fn(usize) -> bool) -> usize {
        self.uf.reset();
        for (c, a) in self.arc_of.iter().enumerate() {
            if black(c) {
                self.uf.union(a[0], a[1]);
                self.uf.union(a[2], a[3]);
            } else {
                self.uf.union(a[1], a[2]);
                self.uf.union(a[3], a[0]);
            }
        }
        self.uf.set_count()
    }
}

/// Number of states with a given count of black smoothings and loops.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Tally {
    crossings: usize,
    width: usize,
    counts: Vec<u64>,
}

impl Tally {
    fn new(crossings: usize) -> Self {
        let width = 2 * crossings + 2;
        Self {
            crossings,
            width,
            counts: vec![0; (crossings + 1) * width],
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self
    }

    fn into_poly(self) -> LaurentPoly {
        let n = self.crossings as i64;
        let delta = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
        let mut powers = vec![LaurentPoly::one()];
        for _ in 1..self.width {
            let next = powers.last().unwrap() * &delta;
            powers.push(next);
        }
        let mut total = LaurentPoly::zero();
        for black in 0..=self.crossings {
            for loops in 1..self.width {
                let count = self.counts[black * self.width + loops];
                if count == 0 {
                    continue;
                }
                let shift = 2 * black as i64 - n;
                for (e, c) in powers[loops - 1].terms() {
                    total.add_term(c * count as i128, e + shift);
                }
            }
        }
        total
    }
}

fn tally_states(d: &Diagram, states: impl Iterator<Item = u64>) -> Tally {
    let n = d.crossing_count();
    let mut tally = Tally::new(n);
    let mut counter = LoopCounter::new(d);
    for s in states {
        let loops = counter.count(|c| s >> c & 1 == 1);
        let black = s.count_ones() as usize;
        tally.counts[black * tally.width + loops] += 1;
    }
    tally
}

fn check_limit(d: &Diagram, limit: usize) -> Result<(), BracketError> {
    let n = d.crossing_count();
    if n > limit || n >= 64 {
        return Err(BracketError::TooLarge {
            crossings: n,
            limit,
        });
    }
    Ok(())
}

/// Bracket with the default crossing limit, evaluated in parallel.
pub fn kauffman_bracket(d: &Diagram) -> Result<LaurentPoly, BracketError> {
    kauffman_bracket_with_limit(d, DEFAULT_STATE_LIMIT)
}

pub fn kauffman_bracket_with_limit(d: &Diagram, limit: usize) -> Result<LaurentPoly, BracketError> {
    let n = d.crossing_count();
    check_limit(d, limit)?;
    let total = 1u64 << n;
    let parts = (rayon::current_num_threads() as u64 * 4).clamp(1, total);
    let step = total.div_ceil(parts);
    let ranges: Vec<Range<u64>> = (0..parts)
        .map(|i| (i * step).min(total)..((i + 1) * step).min(total))
        .collect();
    bracket_over_partition(d, &ranges, limit)
}

/// Evaluate the state sum over the given ranges of state indices in
/// parallel. The ranges must tile `0..2^n` exactly once; any tiling gives the
/// same exact result.
pub fn bracket_over_partition(
    d: &Diagram,
    ranges: &[Range<u64>],
    limit: usize,
) -> Result<LaurentPoly, BracketError> {
    let n = d.crossing_count();
    check_limit(d, limit)?;
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let tally = ranges
        .par_iter()
        .map(|r| tally_states(d, r.clone()))
        .reduce(|| Tally::new(n), Tally::merge);
    Ok(tally.into_poly())
}

/// Evaluate the state sum visiting states in the given order, sequentially.
pub fn bracket_over_states(
    d: &Diagram,
    states: &[u64],
    limit: usize,
) -> Result<LaurentPoly, BracketError> {
    check_limit(d, limit)?;
    if d.crossing_count() == 0 {
        return Ok(LaurentPoly::one());
    }
    Ok(tally_states(d, states.iter().copied()).into_poly())
}

/// Span of the bracket set against `4n + 2(chi - 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanReport {
    pub span: i64,
    pub n: usize,
    pub chi: i64,
    pub bound: i64,
    pub holds: bool,
    pub equality: bool,
}

pub fn span_bound(n: usize, chi: i64) -> i64 {
    4 * n as i64 + 2 * (chi - 2)
}

pub fn span_bound_report(d: &Diagram) -> Result<SpanReport, BracketError> {
    span_bound_report_with_limit(d, DEFAULT_STATE_LIMIT)
}

pub fn span_bound_report_with_limit(d: &Diagram, limit: usize) -> Result<SpanReport, BracketError> {
    let poly = kauffman_bracket_with_limit(d, limit)?;
    Ok(span_report_from(d, &poly))
}

pub fn span_report_from(d: &Diagram, poly: &LaurentPoly) -> SpanReport {
    let n = d.crossing_count();
    let chi = Atom::build(d).euler_characteristic();
    let span = poly
        .span()
        .expect("bracket of a connected diagram is nonzero");
    let bound = span_bound(n, chi);
    SpanReport {
        span,
        n,
        chi,
        bound,
        holds: span <= bound,
        equality: span == bound,
    }
}
