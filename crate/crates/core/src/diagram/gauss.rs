//! Signed Gauss codes for knot diagrams, e.g. `O1+U2+O3+U1+O2+U3+`.
//!
//! Each crossing id must occur once as `O` (passing over) and once as `U`,
//! both times with the crossing's sign. The rotation at every crossing is
//! recovered from the sign alone, so any code yields a diagram; codes that are
//! not planar give virtual diagrams.

use std::collections::BTreeMap;

use super::pd::Scanner;
use super::Diagram;
use crate::error::ParseError;

#[derive(Clone, Copy)]
struct Passage {
    id: u32,
    over: bool,
    positive: bool,
}

fn tokens(text: &str) -> Result<Vec<Passage>, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let mut sc = Scanner::new(text);
    let mut out = Vec::new();
    loop {
        sc.skip_space();
        sc.eat(',');
        sc.skip_space();
        let over = match sc.peek() {
            None => break,
            Some('O') | Some('o') => true,
            Some('U') | Some('u') => false,
            Some(_) => return Err(sc.error("expected O or U")),
        };
        sc.bump();
        let id = sc.number()?;
        let positive = match sc.bump() {
            Some('+') => true,
            Some('-') | Some('\u{2212}') => false,
            _ => return Err(sc.error("expected crossing sign + or -")),
        };
        out.push(Passage { id, over, positive });
    }
    Ok(out)
}

pub fn parse_gauss(text: &str) -> Result<Diagram, ParseError> {
    let seq = tokens(text)?;
    let mut index: BTreeMap<u32, usize> = BTreeMap::new();
    let mut seen: Vec<(u32, [u8; 2], bool)> = Vec::new();
    for p in &seq {
        let next = index.len();
        let c = *index.entry(p.id).or_insert(next);
        if c == seen.len() {
            seen.push((p.id, [0, 0], p.positive));
        }
        let entry = &mut seen[c];
        entry.1[p.over as usize] += 1;
        if entry.2 != p.positive {
            return Err(ParseError::SignMismatch { crossing: p.id });
        }
    }
    for &(id, counts, _) in &seen {
        if counts != [1, 1] {
            return Err(ParseError::GaussOccurrence {
                crossing: id,
                message: format!("{} over and {} under passages", counts[1], counts[0]),
            });
        }
    }

    // (in, out) slots for each kind of passage.
    let slots = |p: &Passage| -> (usize, usize) {
        match (p.over, p.positive) {
            (false, _) => (0, 2),
            (true, true) => (1, 3),
            (true, false) => (3, 1),
        }
    };
    let n = seen.len();
    let crossings = (0..n)
        .map(|c| [0, 1, 2, 3].map(|s| (4 * c + s) as u32))
        .collect();
    let mut partner = vec![0; 4 * n];
    let len = seq.len();
    for (t, p) in seq.iter().enumerate() {
        let q = &seq[(t + 1) % len];
        let out = 4 * index[&p.id] + slots(p).1;
        let inn = 4 * index[&q.id] + slots(q).0;
        partner[out] = inn as u32;
        partner[inn] = out as u32;
    }
    Ok(Diagram::from_parts(crossings, partner)?)
}
