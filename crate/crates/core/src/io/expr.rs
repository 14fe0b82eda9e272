//! Text form of multivectors and exterior forms.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := rational ['*' blade] | blade
//! blade    := 'e' digit+ | '1'
//! rational := integer ['/' positive-integer]
//! ```
//!
//! Blade digits are single generator indices `1..=9`, strictly increasing.
//! Whitespace may separate tokens. Like terms are combined.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{Blade, Multivector, Scalar, Signature};
use crate::exterior::ExteriorForm;
use crate::ideal::{Generator, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("expected a term")]
    ExpectedTerm,
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("blade indices not increasing")]
    NonIncreasing,
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("trailing input")]
    TrailingInput,
}

/// A parse failure at a character offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Clifford,
    Form,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Clifford => "clifford",
            Kind::Form => "form",
        }
    }
}

/// A parsed value, tagged by kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Clifford(Multivector),
    Form(ExteriorForm),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Clifford(x) => x.fmt(f),
            Value::Form(x) => x.fmt(f),
        }
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    dim: usize,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, dim: usize) -> Self {
        Parser { chars: src.chars().collect(), pos: 0, dim, _src: src }
    }

    fn err<T>(&self, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError { position: self.pos, kind })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn blade(&mut self) -> Result<Blade, ParseError> {
        match self.peek() {
            Some('1') => {
                self.pos += 1;
                Ok(Blade::SCALAR)
            }
            Some('e') => {
                self.pos += 1;
                let mut bits = 0u16;
                let mut last = 0usize;
                let start = self.pos;
                while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
                    let d = d as usize;
                    if d == 0 || d > self.dim {
                        return self.err(ParseErrorKind::IndexOutOfRange { index: d, dim: self.dim });
                    }
                    if d <= last {
                        return self.err(ParseErrorKind::NonIncreasing);
                    }
                    last = d;
                    bits |= 1 << (d - 1);
                    self.pos += 1;
                }
                if self.pos == start {
                    return self.err(ParseErrorKind::ExpectedTerm);
                }
                Ok(Blade::from_bits(bits))
            }
            Some(c) => self.err(ParseErrorKind::UnexpectedChar(c)),
            None => self.err(ParseErrorKind::ExpectedTerm),
        }
    }

    fn term(&mut self) -> Result<(Blade, Scalar), ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().unwrap().parse().expect("ascii digits");
                let mut coef = Scalar::from_integer(num);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    self.skip_ws();
                    let Some(den) = self.digits() else {
                        return match self.chars.get(self.pos) {
                            Some(&c) => self.err(ParseErrorKind::UnexpectedChar(c)),
                            None => self.err(ParseErrorKind::ExpectedTerm),
                        };
                    };
                    let den: BigInt = den.parse().expect("ascii digits");
                    if den.is_zero() {
                        self.pos -= 1;
                        return self.err(ParseErrorKind::ZeroDenominator);
                    }
                    coef /= Scalar::from_integer(den);
                }
                if self.peek() == Some('*') {
                    self.pos += 1;
                    let blade = self.blade()?;
                    Ok((blade, coef))
                } else {
                    Ok((Blade::SCALAR, coef))
                }
            }
            Some('e') => Ok((self.blade()?, Scalar::one())),
            Some(c) => self.err(ParseErrorKind::UnexpectedChar(c)),
            None => self.err(ParseErrorKind::ExpectedTerm),
        }
    }

    fn expr(&mut self) -> Result<Vec<(Blade, Scalar)>, ParseError> {
        if self.peek().is_none() {
            return self.err(ParseErrorKind::Empty);
        }
        let mut out = Vec::new();
        let mut negate = false;
        if self.peek() == Some('-') {
            self.pos += 1;
            negate = true;
        }
        loop {
            let (b, c) = self.term()?;
            out.push((b, if negate { -c } else { c }));
            match self.peek() {
                Some('+') => negate = false,
                Some('-') => negate = true,
                Some(_) => return self.err(ParseErrorKind::TrailingInput),
                None => return Ok(out),
            }
            self.pos += 1;
        }
    }
}

/// Parses raw `(blade, coefficient)` terms with indices bounded by `dim`.
pub fn parse_terms(text: &str, dim: usize) -> Result<Vec<(Blade, Scalar)>, ParseError> {
    Parser::new(text, dim.min(9)).expr()
}

pub fn parse_multivector(text: &str, sig: Signature) -> Result<Multivector, ParseError> {
    let terms = parse_terms(text, sig.dim())?;
    Ok(Multivector::from_terms(sig, terms).expect("indices bounded by the parser"))
}

pub fn parse_form(text: &str, dim: usize) -> Result<ExteriorForm, ParseError> {
    let terms = parse_terms(text, dim)?;
    Ok(ExteriorForm::from_terms(dim, terms).expect("indices bounded by the parser"))
}

pub fn parse(text: &str, sig: Signature, kind: Kind) -> Result<Value, ParseError> {
    match kind {
        Kind::Clifford => parse_multivector(text, sig).map(Value::Clifford),
        Kind::Form => parse_form(text, sig.dim()).map(Value::Form),
    }
}

/// Parses `"+e135,-e146,-e236"`. A missing sign means `+`.
pub fn parse_generators(text: &str, sig: Signature) -> Result<Vec<Generator>, ParseError> {
    let mut p = Parser::new(text, sig.dim().min(9));
    if p.peek().is_none() {
        return p.err(ParseErrorKind::Empty);
    }
    let mut gens = Vec::new();
    loop {
        let sign = match p.peek() {
            Some('+') => {
                p.pos += 1;
                Sign::Plus
            }
            Some('-') => {
                p.pos += 1;
                Sign::Minus
            }
            _ => Sign::Plus,
        };
        gens.push(Generator::new(sign, p.blade()?));
        match p.peek() {
            Some(',') => p.pos += 1,
            Some(_) => return p.err(ParseErrorKind::TrailingInput),
            None => return Ok(gens),
        }
    }
}

fn format_scalar(c: &Scalar) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text: grade then lexicographic order, reduced rationals, signs
/// folded into the separators, unit coefficients omitted on non-scalar blades.
pub fn format_terms<'a>(terms: impl Iterator<Item = (Blade, &'a Scalar)>) -> String {
    let mut out = String::new();
    for (i, (blade, coef)) in terms.enumerate() {
        let negative = coef.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = coef.abs();
        if blade.is_scalar() {
            out.push_str(&format_scalar(&mag));
        } else if mag.is_one() {
            out.push_str(&blade.to_string());
        } else {
            out.push_str(&format_scalar(&mag));
            out.push('*');
            out.push_str(&blade.to_string());
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn print_canonical(x: &Multivector) -> String {
    format_terms(x.iter())
}

pub fn print_form(x: &ExteriorForm) -> String {
    format_terms(x.iter())
}

pub(crate) fn format_coefficient(c: &Scalar) -> String {
    format_scalar(c)
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_canonical(self))
    }
}

impl fmt::Display for ExteriorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_form(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{integer, rational};
    use crate::ideal::{build_idempotent, reference::su3_spec};

    fn s6() -> Signature {
        Signature::euclidean(6).unwrap()
    }

    #[test]
    fn parses_the_normalized_su3_element() {
        let w = parse_multivector("1 + e135 - e146 - e236 - e245 - e3456 - e1234 - e1256", s6()).unwrap();
        let f = build_idempotent(&su3_spec()).unwrap();
        assert_eq!(w, f.scale(&integer(8)));
    }

    #[test]
    fn prints_the_su3_idempotent() {
        let f = build_idempotent(&su3_spec()).unwrap();
        assert_eq!(
            print_canonical(&f),
            "1/8 + 1/8*e135 - 1/8*e146 - 1/8*e236 - 1/8*e245 - 1/8*e1234 - 1/8*e1256 - 1/8*e3456"
        );
    }

    #[test]
    fn zero_prints_as_zero() {
        assert_eq!(print_canonical(&Multivector::zero(s6())), "0");
        assert!(parse_multivector("0", s6()).unwrap().is_zero());
    }

    #[test]
    fn like_terms_combine() {
        let x = parse_multivector("1/2*e12 + 1/2*e12", s6()).unwrap();
        assert_eq!(print_canonical(&x), "e12");
        let y = parse_multivector("2/4*e12 - e12 + 3*1", s6()).unwrap();
        assert_eq!(print_canonical(&y), "3 - 1/2*e12");
        assert_eq!(y.coefficient(Blade::from_indices(&[1, 2]).unwrap()), rational(-1, 2));
    }

    #[test]
    fn errors() {
        let kind = |s: &str| parse_multivector(s, s6()).unwrap_err().kind;
        assert_eq!(kind("e21"), ParseErrorKind::NonIncreasing);
        assert_eq!(kind("e11"), ParseErrorKind::NonIncreasing);
        assert_eq!(kind("e17"), ParseErrorKind::IndexOutOfRange { index: 7, dim: 6 });
        assert_eq!(kind("e0"), ParseErrorKind::IndexOutOfRange { index: 0, dim: 6 });
        assert_eq!(kind("1/0"), ParseErrorKind::ZeroDenominator);
        assert_eq!(kind(""), ParseErrorKind::Empty);
        assert_eq!(kind("   "), ParseErrorKind::Empty);
        assert_eq!(kind("e12 e3"), ParseErrorKind::TrailingInput);
        assert_eq!(kind("e12 +"), ParseErrorKind::ExpectedTerm);
        assert_eq!(kind("+e1"), ParseErrorKind::UnexpectedChar('+'));
        assert_eq!(kind("e"), ParseErrorKind::ExpectedTerm);
        assert_eq!(kind("2*"), ParseErrorKind::ExpectedTerm);
        assert_eq!(kind("1/-2"), ParseErrorKind::UnexpectedChar('-'));
        let e = parse_multivector("e1 + e21", s6()).unwrap_err();
        assert_eq!(e.position, 7);
    }

    #[test]
    fn forms_parse_with_same_grammar() {
        let omega = parse_form("e12 + e34 + e56", 6).unwrap();
        assert_eq!(omega.len(), 3);
        assert_eq!(print_form(&omega), "e12 + e34 + e56");
        match parse("e12", s6(), Kind::Form).unwrap() {
            Value::Form(f) => assert_eq!(f.dim(), 6),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn generator_lists() {
        let gens = parse_generators("+e135, -e146,-e236", s6()).unwrap();
        assert_eq!(gens, su3_spec().generators);
        let one = parse_generators("e12", s6()).unwrap();
        assert_eq!(one[0].sign, Sign::Plus);
        assert!(parse_generators("", s6()).is_err());
        assert!(parse_generators("+e135;", s6()).is_err());
    }
}
