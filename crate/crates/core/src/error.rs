use thiserror::Error;

/// Errors raised while reading a diagram from text or building one from parts.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("crossing {crossing} lists {found} labels, expected 4")]
    CrossingArity { crossing: usize, found: usize },
    #[error("arc label {label} appears {count} times, expected 2")]
    LabelCount { label: u32, count: usize },
    #[error("crossing {crossing}: {message}")]
    GaussOccurrence { crossing: u32, message: String },
    #[error("sign mismatch for crossing {crossing}")]
    SignMismatch { crossing: u32 },
    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorRange { index: usize, strands: usize },
    #[error("zero exponent in braid word")]
    ZeroExponent,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Violations of the structural invariants of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("dart {0} is out of range")]
    DartRange(u32),
    #[error("dart {0} is used by more than one crossing slot")]
    DuplicateDart(u32),
    #[error("dart pairing is not a fixed-point-free involution at dart {0}")]
    BadPairing(u32),
    #[error("diagram is split: the shadow has {0} connected pieces")]
    Split(usize),
    #[error("cable multiplicity must be at least 1")]
    ZeroCable,
    #[error("long diagram must have a single component, found {0}")]
    LongComponents(usize),
    #[error("long diagram needs exactly two free ends, found {0}")]
    LongEnds(usize),
}

/// Refusals from the Kauffman bracket state sum.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error("diagram too large: {crossings} crossings exceeds the state-sum limit of {limit}")]
    TooLarge { crossings: usize, limit: usize },
    #[error("empty polynomial has no span")]
    EmptyPolynomial,
}

/// Rejections from the positive-braid example generator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("exponent {0} is below 2")]
    ExponentTooSmall(i32),
    #[error("need at least 2 strands and an exponent for every generator, got {strands} strands and {exponents} exponents")]
    Shape { strands: usize, exponents: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
