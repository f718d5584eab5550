use std::collections::BTreeMap;

use super::{parse_pd, Dart, Diagram};
use crate::error::{DiagramError, ParseError};

/// A knot diagram with two fixed endpoints.
///
/// Stored as its closure together with the arc that closes it: `ends` holds
/// `(tail, head)`, the dart where the long strand starts and the dart where
/// it stops. In the closure these two darts are partners. A crossingless long
/// arc has no ends to record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongDiagram {
    closure: Diagram,
    ends: Option<(Dart, Dart)>,
}

impl LongDiagram {
    /// The crossingless long arc.
    pub fn trivial() -> Self {
        Self {
            closure: Diagram::unknot(),
            ends: None,
        }
    }

    /// Open a knot diagram at the arc through `head`; the strand starts at
    /// the partner of `head` and ends at `head`.
    pub fn cut(d: &Diagram, head: Dart) -> Result<Self, DiagramError> {
        if head.index() >= d.dart_count() {
            return Err(DiagramError::DartRange(head.0));
        }
        let comps = d.component_count();
        if comps != 1 {
            return Err(DiagramError::LongComponents(comps));
        }
        Ok(Self {
            closure: d.clone(),
            ends: Some((d.partner(head), head)),
        })
    }

    /// Closure `Cl`: join the two endpoints by an arc.
    pub fn closure(&self) -> &Diagram {
        &self.closure
    }

    pub fn ends(&self) -> Option<(Dart, Dart)> {
        self.ends
    }

    pub fn crossing_count(&self) -> usize {
        self.closure.crossing_count()
    }
}

/// Parse a PD code in which exactly two labels occur once; those are the
/// free ends. The end listed first in the text is the tail.
pub fn parse_long_pd(text: &str) -> Result<LongDiagram, ParseError> {
    let trimmed = text.trim();
    if trimmed == "PD[]" {
        return Ok(LongDiagram::trivial());
    }
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    let mut order = Vec::new();
    for tok in trimmed
        .split(|c: char| !c.is_ascii_digit())
        .filter(|t| !t.is_empty())
    {
        let label: u32 = tok.parse().map_err(|_| ParseError::Syntax {
            line: 1,
            column: 1,
            message: format!("bad label {tok}"),
        })?;
        *counts.entry(label).or_default() += 1;
        order.push(label);
    }
    let free: Vec<u32> = order.iter().copied().filter(|l| counts[l] == 1).collect();
    if free.len() != 2 {
        return Err(DiagramError::LongEnds(free.len()).into());
    }
    // Rename the head label to the tail label and parse the closure.
    let (tail, head) = (free[0], free[1]);
    let mut closed = String::with_capacity(trimmed.len());
    let mut rest = trimmed;
    let mut tail_dart = None;
    let mut head_dart = None;
    let mut seen = 0usize;
    while let Some(start) = rest.find(|c: char| c.is_ascii_digit()) {
        closed.push_str(&rest[..start]);
        let len = rest[start..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len() - start);
        let label: u32 = rest[start..start + len].parse().expect("digits");
        // Darts are numbered 4c + slot; position p within a term maps to
        // slot [0, 3, 2, 1][p].
        let dart = Dart((4 * (seen / 4) + [0, 3, 2, 1][seen % 4]) as u32);
        if label == tail {
            tail_dart = Some(dart);
        }
        if label == head {
            head_dart = Some(dart);
            closed.push_str(&tail.to_string());
        } else {
            closed.push_str(&rest[start..start + len]);
        }
        seen += 1;
        rest = &rest[start + len..];
    }
    closed.push_str(rest);
    let closure = parse_pd(&closed)?;
    let comps = closure.component_count();
    if comps != 1 {
        return Err(DiagramError::LongComponents(comps).into());
    }
    Ok(LongDiagram {
        closure,
        ends: Some((tail_dart.expect("tail seen"), head_dart.expect("head seen"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn long_trefoil_closes_to_trefoil() {
        let long = parse_long_pd("X(1,4,2,5) X(3,6,4,7) X(5,2,6,3)").unwrap();
        let t = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        assert_eq!(long.closure(), &t);
        let (tail, head) = long.ends().unwrap();
        assert_eq!(t.partner(tail), head);
    }

    #[test]
    fn cut_and_close() {
        let t = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let long = LongDiagram::cut(&t, Dart(5)).unwrap();
        assert_eq!(long.closure(), &t);
        assert_eq!(long.crossing_count(), 3);
    }

    #[test]
    fn rejects_bad_long_codes() {
        assert_eq!(
            parse_long_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"),
            Err(ParseError::Diagram(DiagramError::LongEnds(0)))
        );
        let hopf = parse_pd("X(1,3,2,4) X(3,1,4,2)").unwrap();
        assert_eq!(
            LongDiagram::cut(&hopf, Dart(0)),
            Err(DiagramError::LongComponents(2))
        );
        assert_eq!(LongDiagram::trivial().crossing_count(), 0);
    }
}
