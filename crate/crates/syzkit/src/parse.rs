//! Text parser for homogeneous polynomials, plus the one-parameter
//! variant used by family files.
//!
//! Grammar (ASCII, whitespace ignored, `#` comments to end of line):
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := [coeff '*'] factor ('*' factor)*
//! factor := 'x' index ['^' exp]   |   't' ['^' exp]   (families only)
//! coeff  := int | int '/' posint
//! ```

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{HomogeneousPoly, Monomial, RingContext};
use crate::scalar::FieldElement;

/// Parse a homogeneous polynomial. `print ∘ parse` is the identity up to
/// term order; the parameter `t` is rejected.
pub fn parse_poly(text: &str, context: RingContext) -> Result<HomogeneousPoly> {
    let p = Parser::new(text, context, false).parse()?;
    let terms = p
        .terms
        .into_iter()
        .map(|(m, cs)| {
            debug_assert!(cs.len() == 1);
            (m, cs.into_iter().next().expect("constant coefficient"))
        })
        .collect::<Vec<_>>();
    HomogeneousPoly::from_terms(context, p.degree, terms)
}

/// A homogeneous polynomial in the x's whose coefficients are polynomials
/// in a single parameter t.
#[derive(Debug, Clone)]
pub struct ParametricPoly {
    pub context: RingContext,
    pub degree: usize,
    /// monomial -> coefficients of 1, t, t^2, ...
    terms: BTreeMap<Monomial, Vec<FieldElement>>,
}

impl ParametricPoly {
    /// Specialize at t = `value`.
    pub fn evaluate(&self, value: &FieldElement) -> Result<HomogeneousPoly> {
        let mut out = Vec::new();
        for (m, cs) in &self.terms {
            // Horner
            let mut acc = FieldElement::zero(self.context.field);
            for c in cs.iter().rev() {
                acc = acc.mul(value)?.add(c)?;
            }
            if !acc.is_zero() {
                out.push((m.clone(), acc));
            }
        }
        HomogeneousPoly::from_terms(self.context, self.degree, out)
    }

    pub fn uses_parameter(&self) -> bool {
        self.terms.values().any(|cs| cs.len() > 1)
    }
}

pub fn parse_parametric(text: &str, context: RingContext) -> Result<ParametricPoly> {
    Parser::new(text, context, true).parse()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    context: RingContext,
    allow_param: bool,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, context: RingContext, allow_param: bool) -> Parser<'a> {
        Parser { bytes: text.as_bytes(), pos: 0, context, allow_param }
    }

    fn err(&self, msg: &str) -> Error {
        Error::SyntaxError { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() {
            match self.bytes[self.pos] {
                b' ' | b'\t' | b'\r' | b'\n' => self.pos += 1,
                b'#' => {
                    while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                _ => break,
            }
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<ParametricPoly> {
        let mut terms: BTreeMap<Monomial, Vec<FieldElement>> = BTreeMap::new();
        let mut degree: Option<usize> = None;
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if first => return Err(self.err("empty polynomial")),
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(_) => return Err(self.err("expected '+' or '-' between terms")),
            };
            first = false;
            let (monomial, t_pow, coeff) = self.term()?;
            let coeff = if sign { coeff.neg() } else { coeff };
            let d = monomial.degree();
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => return Err(Error::InhomogeneousError(prev, d)),
                _ => {}
            }
            let slot = terms.entry(monomial).or_default();
            if slot.len() <= t_pow {
                slot.resize(t_pow + 1, FieldElement::zero(self.context.field));
            }
            slot[t_pow] = slot[t_pow].add(&coeff)?;
        }
        // canonicalize: strip zero coefficients
        let mut clean: BTreeMap<Monomial, Vec<FieldElement>> = BTreeMap::new();
        for (m, mut cs) in terms {
            while cs.last().map(|c| c.is_zero()).unwrap_or(false) {
                cs.pop();
            }
            if !cs.is_empty() {
                clean.insert(m, cs);
            }
        }
        Ok(ParametricPoly {
            context: self.context,
            degree: degree.expect("at least one term parsed"),
            terms: clean,
        })
    }

    // returns (x-monomial, power of t, coefficient)
    fn term(&mut self) -> Result<(Monomial, usize, FieldElement)> {
        let mut coeff = FieldElement::one(self.context.field);
        let mut saw_factor = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = self.coeff()?;
            if self.peek() != Some(b'*') {
                return Err(self.err("expected '*' after coefficient"));
            }
            self.pos += 1;
        }
        let mut exps = vec![0u32; self.context.num_vars];
        let mut t_pow = 0usize;
        loop {
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    let idx = self.integer_usize("variable index")?;
                    if idx >= self.context.num_vars {
                        return Err(Error::UnknownVariable(idx, self.context.top_var()));
                    }
                    let e = self.exponent()?;
                    exps[idx] = exps[idx]
                        .checked_add(e)
                        .ok_or_else(|| self.err("exponent overflow"))?;
                }
                Some(b't') if self.allow_param => {
                    self.pos += 1;
                    let e = self.exponent()?;
                    t_pow = t_pow
                        .checked_add(e as usize)
                        .ok_or_else(|| self.err("exponent overflow"))?;
                }
                Some(b't') => return Err(self.err("parameter 't' not allowed here")),
                _ if !saw_factor => return Err(self.err("expected a variable factor")),
                _ => break,
            }
            saw_factor = true;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::new(exps), t_pow, coeff))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer_usize("exponent")?;
            u32::try_from(e).map_err(|_| self.err("exponent overflow"))
        } else {
            Ok(1)
        }
    }

    fn integer_usize(&mut self, what: &str) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(&format!("expected {what}")));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse::<usize>()
            .map_err(|_| self.err(&format!("{what} out of range")))
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        s.parse::<BigInt>().map_err(|_| self.err("bad integer"))
    }

    fn coeff(&mut self) -> Result<FieldElement> {
        let num = self.digits()?;
        let den = if self.peek() == Some(b'/') {
            self.pos += 1;
            self.digits()?
        } else {
            BigInt::one()
        };
        FieldElement::from_ratio(num, den, self.context.field)
    }
}
