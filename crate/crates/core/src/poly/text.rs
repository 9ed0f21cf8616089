//! Polynomial text format.
//!
//! The renderer emits a flat sum of terms in descending graded-lexicographic
//! order, e.g. `-2/3*x^2*z + y - 1`. The parser accepts that form and, more
//! generally, parenthesised sub-expressions raised to powers, so a
//! polynomial can be written unexpanded: `x + 2*y*(y^2+z*x) - z*(y^2+z*x)^2`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Polynomial, Rational};
use crate::error::{ParseError, ParseErrorKind, Result};

/// `x, y, z` for up to three variables, `x0, x1, …` beyond that.
pub fn default_var_names(var_count: usize) -> Vec<String> {
    if var_count <= 3 {
        ["x", "y", "z"][..var_count].iter().map(|s| s.to_string()).collect()
    } else {
        (0..var_count).map(|i| format!("x{i}")).collect()
    }
}

/// Parses a polynomial in the variables `x, y, z`.
pub fn parse(text: &str) -> Result<Polynomial> {
    parse_with(text, &["x", "y", "z"])
}

/// Parses a polynomial whose variables are named by `var_names`, in order.
pub fn parse_with<S: AsRef<str>>(text: &str, var_names: &[S]) -> Result<Polynomial> {
    let names: Vec<&str> = var_names.iter().map(AsRef::as_ref).collect();
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        names: &names,
    };
    let p = parser.expression()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.unexpected().into());
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [&'a str],
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { position: self.pos, kind }
    }

    fn unexpected(&self) -> ParseError {
        match std::str::from_utf8(&self.src[self.pos..]).ok().and_then(|s| s.chars().next()) {
            Some(c) => self.error(ParseErrorKind::UnexpectedChar(c)),
            None => self.error(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn zero(&self) -> Polynomial {
        Polynomial::zero(self.names.len())
    }

    fn expression(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.zero();
        let mut negate = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if negate { acc - t } else { acc + t };
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.power()?;
            acc = acc * f;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error(ParseErrorKind::Expected("an exponent")));
        }
        let exp: u32 = digits
            .parse()
            .map_err(|_| ParseError { position: start, kind: ParseErrorKind::ExponentTooLarge })?;
        Ok(base.pow(exp))
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        // ASCII digits only
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            None => Err(self.error(ParseErrorKind::UnexpectedEnd)),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expression()?;
                if self.peek() != Some(b')') {
                    return Err(match self.peek() {
                        None => self.error(ParseErrorKind::Expected("`)`")),
                        Some(_) => self.unexpected(),
                    });
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let numer: BigInt = self.digits().parse().unwrap();
                let mut value = Rational::from_integer(numer);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let start = self.pos;
                    let digits = self.digits();
                    if digits.is_empty() {
                        return Err(self.error(ParseErrorKind::Expected("a denominator")));
                    }
                    let denom: BigInt = digits.parse().unwrap();
                    if denom.is_zero() {
                        return Err(ParseError { position: start, kind: ParseErrorKind::ZeroDenominator });
                    }
                    value /= Rational::from_integer(denom);
                }
                Ok(Polynomial::constant(self.names.len(), value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.names.iter().position(|&n| n == name) {
                    Some(i) => Ok(Polynomial::var(self.names.len(), i)),
                    None => Err(ParseError {
                        position: start,
                        kind: ParseErrorKind::UnknownVariable(name.to_string()),
                    }),
                }
            }
            Some(_) => Err(self.unexpected()),
        }
    }
}

/// Renders with the default variable names.
pub fn render(p: &Polynomial) -> String {
    render_with(p, &default_var_names(p.var_count()))
}

/// Renders `p` naming variable `i` by `var_names[i]`.
///
/// Panics if fewer names than variables are supplied.
pub fn render_with<S: AsRef<str>>(p: &Polynomial, var_names: &[S]) -> String {
    assert!(var_names.len() >= p.var_count(), "not enough variable names");
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().enumerate() {
        let negative = c.is_negative();
        match (idx, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if m.is_one() || !abs.is_one() {
            factors.push(abs.to_string());
        }
        for (i, &e) in m.exponents().iter().enumerate() {
            let name = var_names[i].as_ref();
            match e {
                0 => {}
                1 => factors.push(name.to_string()),
                _ => factors.push(format!("{name}^{e}")),
            }
        }
        let _ = write!(out, "{}", factors.join("*"));
    }
    out
}
