//! Planar diagram (PD) codes.
//!
//! A crossing term `X(i,j,k,l)` lists four arc labels counterclockwise,
//! starting from the incoming understrand. Internally slots run clockwise, so
//! the term maps to slots `[i, l, k, j]`. Square brackets and an optional
//! `PD[...]` wrapper are accepted; `PD[]` is the crossingless unknot.

use std::collections::BTreeMap;

use super::Diagram;
use crate::error::ParseError;

/// Listing position (counterclockwise) to clockwise slot.
const POSITION_SLOT: [usize; 4] = [0, 3, 2, 1];

pub(crate) struct Scanner<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Self { text, pos: 0 }
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> ParseError {
        let before = &self.text[..self.pos];
        let line = before.matches('\n').count() + 1;
        let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
        ParseError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn skip_space(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    pub(crate) fn number(&mut self) -> Result<u32, ParseError> {
        let rest = &self.text[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected a number"));
        }
        let value = rest[..len]
            .parse()
            .map_err(|_| self.error("number out of range"))?;
        self.pos += len;
        Ok(value)
    }
}

fn parse_terms(text: &str) -> Result<Vec<Vec<u32>>, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let mut sc = Scanner::new(text);
    sc.skip_space();
    let wrapped = sc.text[sc.pos..].starts_with("PD[");
    if wrapped {
        sc.pos += 3;
    }
    let mut terms = Vec::new();
    loop {
        sc.skip_space();
        if wrapped && sc.eat(']') {
            sc.skip_space();
            if !sc.at_end() {
                return Err(sc.error("trailing text after PD[...]"));
            }
            break;
        }
        if sc.at_end() {
            if wrapped {
                return Err(sc.error("unterminated PD["));
            }
            break;
        }
        if !sc.eat('X') {
            return Err(sc.error("expected a crossing term X(...)"));
        }
        let close = if sc.eat('(') {
            ')'
        } else if sc.eat('[') {
            ']'
        } else {
            return Err(sc.error("expected '(' after X"));
        };
        let mut labels = Vec::new();
        loop {
            sc.skip_space();
            if sc.eat(close) {
                break;
            }
            if !labels.is_empty() && !sc.eat(',') {
                return Err(sc.error("expected ',' between labels"));
            }
            sc.skip_space();
            let label = sc.number()?;
            if label == 0 {
                return Err(sc.error("arc labels must be positive"));
            }
            labels.push(label);
        }
        terms.push(labels);
        sc.skip_space();
        sc.eat(',');
    }
    Ok(terms)
}

/// Parse whitespace-separated `X(a,b,c,d)` terms into a diagram.
pub fn parse_pd(text: &str) -> Result<Diagram, ParseError> {
    let terms = parse_terms(text)?;
    let mut ends: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    let mut crossings = Vec::with_capacity(terms.len());
    for (c, labels) in terms.iter().enumerate() {
        if labels.len() != 4 {
            return Err(ParseError::CrossingArity {
                crossing: c,
                found: labels.len(),
            });
        }
        for (p, &label) in labels.iter().enumerate() {
            let dart = (4 * c + POSITION_SLOT[p]) as u32;
            ends.entry(label).or_default().push(dart);
        }
        crossings.push([0, 1, 2, 3].map(|s| (4 * c + s) as u32));
    }
    let mut partner = vec![0; 4 * terms.len()];
    for (&label, darts) in &ends {
        if darts.len() != 2 {
            return Err(ParseError::LabelCount {
                label,
                count: darts.len(),
            });
        }
        partner[darts[0] as usize] = darts[1];
        partner[darts[1] as usize] = darts[0];
    }
    Ok(Diagram::from_parts(crossings, partner)?)
}

/// Deterministic PD text: crossings in index order, each term starting at
/// its incoming understrand under the orientation of
/// [`Diagram::components`], arcs labelled 1, 2, ... in order of first
/// appearance.
pub fn serialize_pd(d: &Diagram) -> String {
    if d.crossing_count() == 0 {
        return "PD[]".to_string();
    }
    let entering = d.entering();
    let mut label: Vec<u32> = vec![0; d.dart_count()];
    let mut next = 1;
    let mut terms = Vec::with_capacity(d.crossing_count());
    for c in 0..d.crossing_count() {
        let start = if entering[d.dart_at(c, 0).index()] {
            0
        } else {
            2
        };
        let listed: Vec<u32> = POSITION_SLOT
            .iter()
            .map(|&s| {
                let dart = d.dart_at(c, (s + start) % 4);
                if label[dart.index()] == 0 {
                    label[dart.index()] = next;
                    label[d.partner(dart).index()] = next;
                    next += 1;
                }
                label[dart.index()]
            })
            .collect();
        terms.push(format!(
            "X({},{},{},{})",
            listed[0], listed[1], listed[2], listed[3]
        ));
    }
    terms.join(" ")
}
