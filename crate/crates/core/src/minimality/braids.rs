use crate::atom::is_good;
use crate::diagram::{braid_closure, BraidLetter, BraidWord, Diagram};
use crate::error::GenerateError;

/// Closure of a positive braid with every exponent at least 2.
#[derive(Clone, Debug)]
pub struct PositiveBraid {
    pub word: BraidWord,
    pub diagram: Diagram,
    pub knot: bool,
    pub good: bool,
}

/// Close `s_1^e1 s_2^e2 ...`, cycling through the generators
/// `s_1 .. s_{strands-1}` when there are more exponents than generators.
pub fn generate_positive_braid(
    strands: usize,
    exponents: &[i32],
) -> Result<PositiveBraid, GenerateError> {
    if strands < 2 || exponents.len() < strands - 1 {
        return Err(GenerateError::Shape {
            strands,
            exponents: exponents.len(),
        });
    }
    if let Some(&e) = exponents.iter().find(|&&e| e < 2) {
        return Err(GenerateError::ExponentTooSmall(e));
    }
    let letters = exponents
        .iter()
        .enumerate()
        .map(|(i, &exponent)| BraidLetter {
            generator: i % (strands - 1) + 1,
            exponent,
        })
        .collect();
    let word = BraidWord::new(strands, letters)?;
    let diagram = braid_closure(&word)?;
    Ok(PositiveBraid {
        knot: diagram.is_knot(),
        good: is_good(&diagram).good,
        word,
        diagram,
    })
}
