use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::BracketError;

/// Integer Laurent polynomial in one variable `a`. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i128>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i128, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, exp);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i128)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(c, e);
        }
        p
    }

    pub fn add_term(&mut self, coeff: i128, exp: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i128 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// (exponent, coefficient) pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i128)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn span(&self) -> Result<i64, BracketError> {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => Ok(hi - lo),
            _ => Err(BracketError::EmptyPolynomial),
        }
    }

    /// Substitute `a -> a^-1`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(c, e);
        }
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

/// Terms `coeff*a^exp` in increasing exponent order joined by `+`; the
/// constant term is written as a bare coefficient and the zero polynomial as
/// `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            if e == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*a^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed polynomial term {0:?}")]
pub struct PolyParseError(pub String);

impl FromStr for LaurentPoly {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut p = Self::zero();
        if s == "0" {
            return Ok(p);
        }
        // Split on '+' that is not an exponent or coefficient sign.
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 0..bytes.len() {
            if bytes[i] == b'+' && i > start && bytes[i - 1] != b'^' {
                terms.push(&s[start..i]);
                start = i + 1;
            }
        }
        terms.push(&s[start..]);
        for t in terms {
            let bad = || PolyParseError(t.to_string());
            let (c, e) = match t.split_once("*a^") {
                Some((c, e)) => (c, e.parse::<i64>().map_err(|_| bad())?),
                None => (t, 0),
            };
            p.add_term(c.parse::<i128>().map_err(|_| bad())?, e);
        }
        Ok(p)
    }
}
