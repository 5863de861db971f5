//! Deterministic text form: terms in descending graded-lex order, explicit
//! ` + ` / ` - ` separators, `*` between factors and `^` for exponents above
//! one, e.g. `3*u1^2*h - 2*c1 + 5`. The zero polynomial prints as `0`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Polynomial, VariableId};

/// Names of the variables of a ring, indexed by [`VariableId`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unexpected `{found}` at byte {pos}")]
    Unexpected { pos: usize, found: String },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("invalid number at byte {0}")]
    BadNumber(usize),
}

impl VarTable {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Self {
        VarTable {
            names: names.into_iter().map(Into::into).collect(),
        }
    }

    /// `x0, x1, ...`
    pub fn anonymous(arity: usize) -> Self {
        Self::new((0..arity).map(|i| format!("x{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: VariableId) -> Option<&str> {
        self.names.get(v.index()).map(String::as_str)
    }

    pub fn lookup(&self, name: &str) -> Option<VariableId> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| VariableId(i as u16))
    }

    fn write_name(&self, out: &mut String, v: VariableId) {
        match self.name(v) {
            Some(n) => out.push_str(n),
            None => {
                let _ = write!(out, "x{}", v.0);
            }
        }
    }
}

impl Polynomial {
    pub fn to_text(&self, names: &VarTable) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = c.abs();
            let mut first = true;
            if !mag.is_one() || m.is_one() {
                let _ = write!(out, "{mag}");
                first = false;
            }
            for (v, e) in m.iter() {
                if !first {
                    out.push('*');
                }
                first = false;
                names.write_name(&mut out, v);
                if e > 1 {
                    let _ = write!(out, "^{e}");
                }
            }
        }
        out
    }

    /// Parses the text form. Accepts any term order and repeated factors;
    /// whitespace is insignificant.
    pub fn parse(src: &str, names: &VarTable) -> Result<Polynomial, ParseError> {
        Parser {
            src: src.as_bytes(),
            pos: 0,
            names,
        }
        .polynomial()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a VarTable,
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

    fn unexpected(&self) -> ParseError {
        match self.src.get(self.pos) {
            None => ParseError::UnexpectedEnd,
            Some(&b) => ParseError::Unexpected {
                pos: self.pos,
                found: (b as char).to_string(),
            },
        }
    }

    fn polynomial(&mut self) -> Result<Polynomial, ParseError> {
        let mut p = Polynomial::zero();
        let mut negative = match self.peek() {
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
            let (m, c) = self.term()?;
            p.add_term(m, if negative { -c } else { c });
            match self.peek() {
                None => return Ok(p),
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(self.unexpected()),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigInt), ParseError> {
        let mut coeff = BigInt::one();
        let mut pairs: Vec<(VariableId, u32)> = Vec::new();
        let mut expect_factor = true;
        while expect_factor {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => coeff *= self.number()?,
                Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                    let v = self.variable()?;
                    let e = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        u32::try_from(self.number()?)
                            .map_err(|_| ParseError::BadNumber(self.pos))?
                    } else {
                        1
                    };
                    pairs.push((v, e));
                }
                _ => return Err(self.unexpected()),
            }
            expect_factor = self.peek() == Some(b'*');
            if expect_factor {
                self.pos += 1;
            }
        }
        if coeff.is_zero() {
            return Ok((Monomial::one(), coeff));
        }
        Ok((Monomial::from_pairs(pairs), coeff))
    }

    fn number(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos])
            .map_err(|_| ParseError::BadNumber(start))?;
        BigInt::parse_bytes(digits.as_bytes(), 10).ok_or(ParseError::BadNumber(start))
    }

    fn variable(&mut self) -> Result<VariableId, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = core::str::from_utf8(&self.src[start..self.pos])
            .map_err(|_| ParseError::BadNumber(start))?;
        self.names
            .lookup(name)
            .ok_or_else(|| ParseError::UnknownVariable(name.to_string()))
    }
}
