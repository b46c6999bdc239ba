//! Text form of vectors and matrix elements.
//!
//! ```text
//! vector = "0" / [sign] term *(sign term)
//! term   = [rational "*"] *osc "|0>"
//! osc    = "a(-" int ")"
//! uelem  = "0" / [sign] uterm *(sign uterm)
//! uterm  = [rational "*"] "[" vector "]" "{" nat "," nat "}"
//! ```
//!
//! Whitespace between tokens is ignored. Printing is canonical: terms are
//! sorted by weight and then by partition, coefficients print as `p/q` (or
//! `p`), unit coefficients are omitted.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{LambdaPoly, Partition, Rational};
use crate::fock::FockVector;
use crate::uinf::UElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: expected {}, found {}",
            self.line, self.column, self.expected, self.found
        )
    }
}

impl std::error::Error for ParseError {}

/// A parsed literal: either a vector of `M(1)` or a matrix element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Vector(FockVector),
    Matrix(UElement),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vector(v) => f.write_str(&format_vector(v)),
            Element::Matrix(a) => f.write_str(&format_uelement(a)),
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Self {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn location(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        (line, column)
    }

    fn error(&mut self, expected: &str) -> ParseError {
        self.skip_ws();
        let (line, column) = self.location(self.pos);
        let found = match self.chars.get(self.pos) {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        ParseError {
            line,
            column,
            expected: expected.to_string(),
            found,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("'{c}'")))
        }
    }

    fn expect_str(&mut self, s: &str) -> Result<(), ParseError> {
        for c in s.chars() {
            self.expect(c).map_err(|mut e| {
                e.expected = format!("\"{s}\"");
                e
            })?;
        }
        Ok(())
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("digit"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num = self.digits()?;
        if self.eat('/') {
            let den = self.digits()?;
            if den.is_zero() {
                self.pos -= 1;
                return Err(self.error("nonzero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn small_nat(&mut self, what: &str) -> Result<u32, ParseError> {
        let start = self.pos;
        let n = self.digits()?;
        u32::try_from(n).map_err(|_| {
            self.pos = start;
            self.error(what)
        })
    }

    /// Optional `rational "*"` prefix.
    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.rational()?;
            self.expect('*')?;
            Ok(c)
        } else {
            Ok(Rational::one())
        }
    }

    fn monomial(&mut self) -> Result<Partition, ParseError> {
        let mut parts = Vec::new();
        loop {
            match self.peek() {
                Some('a') => {
                    self.pos += 1;
                    self.expect('(')?;
                    self.expect('-').map_err(|mut e| {
                        e.expected = "negative mode index \"-n\"".into();
                        e
                    })?;
                    let n = self.small_nat("mode index")?;
                    if n == 0 {
                        self.pos -= 1;
                        return Err(self.error("positive mode index"));
                    }
                    self.expect(')')?;
                    parts.push(n);
                }
                Some('|') => {
                    self.expect_str("|0>")?;
                    return Ok(Partition::new(parts).expect("parts are positive"));
                }
                _ => return Err(self.error("\"a(-n)\" or \"|0>\"")),
            }
        }
    }

    fn sign(&mut self) -> Option<i64> {
        if self.eat('+') {
            Some(1)
        } else if self.eat('-') {
            Some(-1)
        } else {
            None
        }
    }

    fn is_zero_literal(&mut self) -> bool {
        self.skip_ws();
        if self.chars.get(self.pos) == Some(&'0') {
            let mut look = self.pos + 1;
            while look < self.chars.len() && self.chars[look].is_whitespace() {
                look += 1;
            }
            let next = self.chars.get(look).copied();
            if !matches!(next, Some(c) if c.is_ascii_digit() || c == '/' || c == '*') {
                self.pos += 1;
                return true;
            }
        }
        false
    }

    fn vector(&mut self) -> Result<FockVector, ParseError> {
        if self.is_zero_literal() {
            return Ok(FockVector::zero());
        }
        let mut out = FockVector::zero();
        let mut sign = self.sign().unwrap_or(1);
        loop {
            let c = self.coefficient()? * Rational::from_integer(sign.into());
            let p = self.monomial()?;
            out.add_term(p, LambdaPoly::constant(c));
            match self.peek() {
                Some('+') | Some('-') => sign = self.sign().expect("peeked"),
                _ => return Ok(out),
            }
        }
    }

    fn uelement(&mut self) -> Result<UElement, ParseError> {
        if self.is_zero_literal() {
            return Ok(UElement::zero());
        }
        let mut out = UElement::zero();
        let mut sign = self.sign().unwrap_or(1);
        loop {
            let c = self.coefficient()? * Rational::from_integer(sign.into());
            self.expect('[')?;
            let v = self.vector()?;
            self.expect(']')?;
            self.expect('{')?;
            let k = self.small_nat("row index")?;
            self.expect(',')?;
            let l = self.small_nat("column index")?;
            self.expect('}')?;
            out += UElement::single(v.scale(&c), k, l);
            match self.peek() {
                Some('+') | Some('-') => sign = self.sign().expect("peeked"),
                _ => return Ok(out),
            }
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.peek().is_some() {
            Err(self.error("'+', '-' or end of input"))
        } else {
            Ok(())
        }
    }

    /// Decides between vector and matrix syntax by looking past an optional sign and coefficient.
    fn looks_like_matrix(&self) -> bool {
        self.chars[self.pos..]
            .iter()
            .find(|c| !(c.is_whitespace() || c.is_ascii_digit() || matches!(c, '+' | '-' | '/' | '*')))
            == Some(&'[')
    }
}

pub fn parse_vector(text: &str) -> Result<FockVector, ParseError> {
    let mut p = Parser::new(text);
    let v = p.vector()?;
    p.finish()?;
    Ok(v)
}

pub fn parse_uelement(text: &str) -> Result<UElement, ParseError> {
    let mut p = Parser::new(text);
    let a = p.uelement()?;
    p.finish()?;
    Ok(a)
}

/// Parses either kind of literal.
pub fn parse_element(text: &str) -> Result<Element, ParseError> {
    let mut p = Parser::new(text);
    p.skip_ws();
    let e = if p.looks_like_matrix() {
        Element::Matrix(p.uelement()?)
    } else {
        Element::Vector(p.vector()?)
    };
    p.finish()?;
    Ok(e)
}

pub fn format_monomial(p: &Partition) -> String {
    let mut s = String::new();
    for part in p.parts() {
        s.push_str(&format!("a(-{part})"));
    }
    s.push_str("|0>");
    s
}

/// Canonical text of a vector; λ-dependent coefficients print in parentheses.
pub fn format_vector(v: &FockVector) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (i, (p, c)) in v.terms().enumerate() {
        let mono = format_monomial(p);
        if c.is_lambda_free() {
            let c = c.constant_term();
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let abs = c.abs();
            if !abs.is_one() {
                s.push_str(&format!("{abs} * "));
            }
        } else {
            if i > 0 {
                s.push_str(" + ");
            }
            s.push_str(&format!("({c}) * "));
        }
        s.push_str(&mono);
    }
    s
}

pub fn format_uelement(a: &UElement) -> String {
    if a.is_zero() {
        return "0".to_string();
    }
    a.entries()
        .map(|((k, l), v)| format!("[{}]{{{k},{l}}}", format_vector(v)))
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use crate::fock::tests::a;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_vector("a(-1)a(-1)|0>").unwrap(), a(&[1, 1]));
        assert_eq!(
            parse_element("[ a(-1)|0> ]{2,2}").unwrap(),
            Element::Matrix(UElement::single(a(&[1]), 2, 2))
        );
        assert_eq!(
            parse_vector("3/2 * a(-2)|0> + a(-1)|0>").unwrap(),
            a(&[2]).scale(&ratio(3, 2)) + a(&[1])
        );
        assert_eq!(parse_vector(" - 2*|0>").unwrap(), FockVector::vacuum().scale(&rat(-2)));
        assert_eq!(parse_vector("a(-1)a(-2)|0>").unwrap(), a(&[2, 1]));
        assert!(parse_vector("0").unwrap().is_zero());
        assert!(parse_vector("a(-1)|0> - a(-1)|0>").unwrap().is_zero());
        assert_eq!(
            parse_uelement("2 * [|0>]{0,1} - [a(-1)|0>]{1,1}").unwrap(),
            UElement::single(FockVector::vacuum().scale(&rat(2)), 0, 1)
                - UElement::single(a(&[1]), 1, 1)
        );
    }

    #[test]
    fn parse_errors_have_positions() {
        let e = parse_vector("a(-1)|0> +\n a(1)|0>").unwrap_err();
        assert_eq!((e.line, e.column), (2, 4));
        assert!(e.expected.contains("negative"));
        let e = parse_vector("a(-1)").unwrap_err();
        assert_eq!(e.found, "end of input");
        let e = parse_uelement("[|0>]{1}").unwrap_err();
        assert_eq!(e.expected, "','");
        assert!(parse_vector("a(-0)|0>").is_err());
        assert!(parse_vector("1/0 * |0>").is_err());
        assert!(parse_vector("|0> |0>").is_err());
    }

    #[test]
    fn canonical_printing() {
        let v = parse_vector("a(-2)|0> + 3/2*a(-1)a(-1)|0> - |0> + a(-1)|0>").unwrap();
        assert_eq!(format_vector(&v), "-|0> + a(-1)|0> + 3/2 * a(-1)a(-1)|0> + a(-2)|0>");
        let formal = FockVector::term(Partition::empty(), LambdaPoly::lambda() + LambdaPoly::one());
        assert_eq!(format_vector(&formal), "(lambda + 1) * |0>");
        let u = parse_uelement("[a(-1)|0>]{1,1} + [|0>]{0,2}").unwrap();
        assert_eq!(format_uelement(&u), "[|0>]{0,2} + [a(-1)|0>]{1,1}");
    }

    fn arb_vector() -> impl Strategy<Value = FockVector> {
        proptest::collection::vec(
            (proptest::collection::vec(1u32..4, 0..4), -5i64..5, 1i64..4),
            0..5,
        )
        .prop_map(|terms| {
            let mut v = FockVector::zero();
            for (parts, n, d) in terms {
                v.add_term(Partition::new(parts).unwrap(), LambdaPoly::constant(ratio(n, d)));
            }
            v
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(v in arb_vector(), w in arb_vector(), k in 0u32..4, l in 0u32..4) {
            prop_assert_eq!(parse_vector(&format_vector(&v)).unwrap(), v.clone());
            let u = UElement::single(v, k, l) + UElement::single(w, l, k + 1);
            prop_assert_eq!(parse_uelement(&format_uelement(&u)).unwrap(), u.clone());
            if !u.is_zero() {
                prop_assert_eq!(parse_element(&format_uelement(&u)).unwrap(), Element::Matrix(u));
            }
        }
    }
}
