use std::fmt;
use std::str::FromStr;

use super::Diagram;
use crate::error::{DiagramError, ParseError};

/// One letter `s_i^j` of a braid word: generator `i` (1-based) raised to `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidLetter {
    pub generator: usize,
    pub exponent: i32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self, ParseError> {
        for l in &letters {
            if l.generator == 0 || l.generator >= strands {
                return Err(ParseError::GeneratorRange {
                    index: l.generator,
                    strands,
                });
            }
            if l.exponent == 0 {
                return Err(ParseError::ZeroExponent);
            }
        }
        Ok(Self { strands, letters })
    }

    /// Parse tokens such as `s1^3 s2^-1 s1` for a braid on `strands` strands.
    pub fn parse(strands: usize, text: &str) -> Result<Self, ParseError> {
        let mut letters = Vec::new();
        for (i, tok) in text.split_whitespace().enumerate() {
            let bad = || ParseError::Syntax {
                line: 1,
                column: i + 1,
                message: format!("bad braid token {tok:?}"),
            };
            let body = tok
                .strip_prefix('s')
                .or_else(|| tok.strip_prefix('\u{3c3}'))
                .ok_or_else(bad)?;
            let (gen, exp) = match body.split_once('^') {
                Some((g, e)) => (g, e.parse::<i32>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let generator = gen.parse::<usize>().map_err(|_| bad())?;
            letters.push(BraidLetter {
                generator,
                exponent: exp,
            });
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn crossing_count(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.exponent.unsigned_abs() as usize)
            .sum()
    }

    /// Permutation of strand positions induced by the word.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            if l.exponent % 2 != 0 {
                at.swap(l.generator - 1, l.generator);
            }
        }
        at
    }

    pub fn cycle_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for s in 0..perm.len() {
            if !seen[s] {
                cycles += 1;
                let mut t = s;
                while !seen[t] {
                    seen[t] = true;
                    t = perm[t];
                }
            }
        }
        cycles
    }
}

impl FromStr for BraidWord {
    type Err = ParseError;

    /// `<strands>: s1^3 s2^-1`
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (strands, word) = s.split_once(':').ok_or(ParseError::Syntax {
            line: 1,
            column: 1,
            message: "expected '<strands>: <word>'".into(),
        })?;
        let strands = strands.trim().parse().map_err(|_| ParseError::Syntax {
            line: 1,
            column: 1,
            message: "bad strand count".into(),
        })?;
        Self::parse(strands, word)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " s{}^{}", l.generator, l.exponent)?;
        }
        Ok(())
    }
}

/// Closure of a braid drawn with strands running upward.
///
/// A positive generator `s_i` carries the strand at position `i` over the
/// strand at `i + 1`, which makes a positive crossing. Errors only when some
/// strand position is never touched, since its closure would be a split
/// circle.
pub fn braid_closure(word: &BraidWord) -> Result<Diagram, DiagramError> {
    let n = word.crossing_count();
    if n == 0 && word.strands() == 1 {
        return Ok(Diagram::unknot());
    }
    let mut crossings = Vec::with_capacity(n);
    let mut partner = vec![0u32; 4 * n];
    let mut pending: Vec<Option<u32>> = vec![None; word.strands()];
    let mut first_in: Vec<Option<u32>> = vec![None; word.strands()];
    let mut connect = |pending: &mut Vec<Option<u32>>, pos: usize, dart: u32| match pending[pos] {
        Some(out) => {
            partner[out as usize] = dart;
            partner[dart as usize] = out;
        }
        None => first_in[pos] = Some(dart),
    };
    let mut c = 0u32;
    for letter in word.letters() {
        let left = letter.generator - 1;
        for _ in 0..letter.exponent.unsigned_abs() {
            let base = 4 * c;
            crossings.push([base, base + 1, base + 2, base + 3]);
            // Slots clockwise; the geometric corner of each slot is noted.
            let (bottom_left, bottom_right, top_left, top_right) = if letter.exponent > 0 {
                // 0 SE under-in, 1 SW over-in, 2 NW under-out, 3 NE over-out
                (base + 1, base, base + 2, base + 3)
            } else {
                // 0 SW under-in, 1 NW over-out, 2 NE under-out, 3 SE over-in
                (base, base + 3, base + 1, base + 2)
            };
            connect(&mut pending, left, bottom_left);
            connect(&mut pending, left + 1, bottom_right);
            pending[left] = Some(top_left);
            pending[left + 1] = Some(top_right);
            c += 1;
        }
    }
    let untouched = pending.iter().filter(|p| p.is_none()).count();
    if untouched > 0 {
        return Err(DiagramError::Split(untouched + 1));
    }
    for pos in 0..word.strands() {
        let (out, inn) = (pending[pos].unwrap(), first_in[pos].unwrap());
        partner[out as usize] = inn;
        partner[inn as usize] = out;
    }
    Diagram::from_parts(crossings, partner)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_tokens() {
        let w: BraidWord = "3: s1^3 s2^-1 s1".parse().unwrap();
        assert_eq!(w.crossing_count(), 5);
        assert_eq!(w.to_string(), "3: s1^3 s2^-1 s1^1");
        assert_eq!(
            BraidWord::parse(2, "s2"),
            Err(ParseError::GeneratorRange {
                index: 2,
                strands: 2
            })
        );
        assert_eq!(BraidWord::parse(2, "s1^0"), Err(ParseError::ZeroExponent));
    }

    #[test]
    fn trefoil_closure() {
        let w = BraidWord::parse(2, "s1^3").unwrap();
        let d = braid_closure(&w).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert!(d.is_knot());
        assert!(d.is_classical());
        assert_eq!(d.writhe(), 3);
    }

    #[test]
    fn negative_letters() {
        let w = BraidWord::parse(2, "s1^-3").unwrap();
        let d = braid_closure(&w).unwrap();
        assert!(d.is_classical());
        assert_eq!(d.writhe(), -3);
    }

    #[test]
    fn granny_and_link() {
        let granny = braid_closure(&BraidWord::parse(3, "s1^3 s2^3").unwrap()).unwrap();
        assert_eq!(granny.crossing_count(), 6);
        assert!(granny.is_knot());
        let link = BraidWord::parse(3, "s1^2 s2^2").unwrap();
        assert_eq!(link.cycle_count(), 3);
        let d = braid_closure(&link).unwrap();
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(d.component_count(), 3);
    }

    #[test]
    fn unused_strand_is_split() {
        let w = BraidWord::parse(3, "s1^3").unwrap();
        assert!(matches!(braid_closure(&w), Err(DiagramError::Split(_))));
    }

    #[test]
    fn mixed_word_is_classical() {
        let w = BraidWord::parse(3, "s1 s2^-1 s1 s2^-1").unwrap();
        let d = braid_closure(&w).unwrap();
        assert!(d.is_classical());
        assert_eq!(d.component_count(), w.cycle_count());
    }
}
