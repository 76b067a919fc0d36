//! Element expression parser.
//!
//! Grammar: `elem := term (('+'|'-') term)*`, `term := [coef '*'] gen`,
//! `coef := scalar | '(' scalar ')'`, `gen := ('L'|'I'|'G'|'H') '[' integer ']'`.
//! Whitespace is insignificant between tokens. A bare coefficient must be a
//! real rational; complex coefficients need parentheses, e.g.
//! `(3/5+4/5i)*G[0]`. The single token `0` denotes the zero element.

use crate::algebra::{gen, Element, Family};
use crate::scalar::Scalar;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {pos}: expected {expected}")]
pub struct ParseError {
    pub pos: usize,
    pub expected: String,
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(found) if found == c => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(format!("'{}'", c as char))),
        }
    }

    fn err(&self, expected: impl fmt::Display) -> ParseError {
        ParseError {
            pos: self.pos,
            expected: expected.to_string(),
        }
    }

    /// Consumes `[sign] digits [/ digits]` without skipping interior spaces.
    fn integer(&mut self, signed: bool) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if signed && self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start || (self.pos == start + 1 && self.bytes[start] == b'-') {
            return Err(self.err("an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| ParseError {
                pos: start,
                expected: "an integer in range".into(),
            })
    }

    /// Real rational `p` or `p/q` (leading '-' allowed).
    fn real_scalar(&mut self) -> Result<Scalar, ParseError> {
        let num = self.integer(true)?;
        if self.bytes.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            let start = self.pos;
            let den = self.integer(false)?;
            if den == 0 {
                return Err(ParseError {
                    pos: start,
                    expected: "a nonzero denominator".into(),
                });
            }
            Ok(Scalar::ratio(num, den))
        } else {
            Ok(Scalar::from_int(num))
        }
    }

    /// Parenthesized full scalar in the textual scalar format.
    fn paren_scalar(&mut self) -> Result<Scalar, ParseError> {
        self.expect(b'(')?;
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos] != b')' {
            self.pos += 1;
        }
        if self.pos == self.bytes.len() {
            return Err(self.err("')'"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii");
        let value = Scalar::from_str(text.trim_end()).map_err(|e| ParseError {
            pos: start,
            expected: format!("a scalar ({})", e),
        })?;
        self.pos += 1;
        Ok(value)
    }

    fn generator(&mut self) -> Result<(Family, i64), ParseError> {
        let c = self
            .bump()
            .ok_or_else(|| self.err("a family letter L, I, G or H"))?;
        let family = Family::from_letter(c as char).ok_or_else(|| ParseError {
            pos: self.pos - 1,
            expected: format!("a family letter L, I, G or H (found '{}')", c as char),
        })?;
        self.expect(b'[')?;
        let degree = self.integer(true)?;
        self.expect(b']')?;
        Ok((family, degree))
    }

    fn term(&mut self) -> Result<(Scalar, Family, i64), ParseError> {
        let coef = match self.peek() {
            Some(b'(') => {
                let c = self.paren_scalar()?;
                self.expect(b'*')?;
                c
            }
            Some(c) if c.is_ascii_digit() || c == b'-' => {
                let c = self.real_scalar()?;
                self.expect(b'*')?;
                c
            }
            _ => Scalar::one(),
        };
        let (family, degree) = self.generator()?;
        Ok((coef, family, degree))
    }
}

pub fn parse_element(s: &str) -> Result<Element, ParseError> {
    if s.trim() == "0" {
        return Ok(Element::zero());
    }
    let mut cur = Cursor::new(s);
    let mut out = Element::zero();
    let (coef, family, degree) = cur.term()?;
    out.add_term(gen(family, degree), coef);
    loop {
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.pos += 1;
                let (coef, family, degree) = cur.term()?;
                out.add_term(gen(family, degree), coef);
            }
            Some(b'-') => {
                cur.pos += 1;
                let (coef, family, degree) = cur.term()?;
                out.add_term(gen(family, degree), -coef);
            }
            Some(_) => return Err(cur.err("'+', '-' or end of input")),
        }
    }
    Ok(out)
}
