//! Homogeneous multivariate polynomials in x0..xN and their coordinates
//! with respect to the graded monomial basis.
//!
//! The monomial order is graded lexicographic with x0 > x1 > ... > xN;
//! every matrix downstream indexes its columns by this order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{FieldElement, FieldSpec};

/// The ambient polynomial ring: N+1 variables over an exact field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingContext {
    pub num_vars: usize,
    pub field: FieldSpec,
}

impl RingContext {
    pub fn new(num_vars: usize, field: FieldSpec) -> RingContext {
        assert!(num_vars >= 2, "need at least two variables");
        RingContext { num_vars, field }
    }

    /// N, where the ring has variables x0..xN.
    pub fn top_var(&self) -> usize {
        self.num_vars - 1
    }
}

/// A monomial, stored by its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    pub fn one(num_vars: usize) -> Monomial {
        Monomial { exps: vec![0; num_vars] }
    }

    pub fn var(i: usize, num_vars: usize) -> Monomial {
        let mut exps = vec![0; num_vars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps }
    }
}

// Ordering = position in the graded-lex basis listing: lower degree first,
// then x0-heavy monomials first within a degree.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// The ordered monomial basis of Sym^d, with an index for fast lookup.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    pub num_vars: usize,
    pub degree: usize,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(num_vars: usize, degree: usize) -> MonomialBasis {
        let mut monomials = Vec::new();
        let mut exps = vec![0u32; num_vars];
        enumerate(&mut monomials, &mut exps, 0, degree);
        let index = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        MonomialBasis { num_vars, degree, monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

fn enumerate(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, var: usize, remaining: usize) {
    if var == exps.len() - 1 {
        exps[var] = remaining as u32;
        out.push(Monomial::new(exps.clone()));
        exps[var] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[var] = e as u32;
        enumerate(out, exps, var + 1, remaining - e);
    }
    exps[var] = 0;
}

/// A homogeneous polynomial of a fixed degree. The zero polynomial keeps
/// an explicit degree tag; stored coefficients are always nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousPoly {
    pub context: RingContext,
    pub degree: usize,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl HomogeneousPoly {
    pub fn zero(context: RingContext, degree: usize) -> HomogeneousPoly {
        HomogeneousPoly { context, degree, terms: BTreeMap::new() }
    }

    /// Build from (monomial, coefficient) pairs, summing duplicates and
    /// dropping zeros. All monomials must have the same degree.
    pub fn from_terms<I>(context: RingContext, degree: usize, terms: I) -> Result<HomogeneousPoly>
    where
        I: IntoIterator<Item = (Monomial, FieldElement)>,
    {
        let mut map: BTreeMap<Monomial, FieldElement> = BTreeMap::new();
        for (m, c) in terms {
            if m.exps().len() != context.num_vars {
                return Err(Error::ContextMismatch);
            }
            if m.degree() != degree {
                return Err(Error::InhomogeneousError(degree, m.degree()));
            }
            if c.spec() != context.field {
                return Err(Error::FieldMismatch);
            }
            match map.remove(&m) {
                Some(prev) => {
                    let s = prev.add(&c)?;
                    if !s.is_zero() {
                        map.insert(m, s);
                    }
                }
                None => {
                    if !c.is_zero() {
                        map.insert(m, c);
                    }
                }
            }
        }
        Ok(HomogeneousPoly { context, degree, terms: map })
    }

    pub fn monomial(context: RingContext, m: Monomial, c: FieldElement) -> HomogeneousPoly {
        let degree = m.degree();
        HomogeneousPoly::from_terms(context, degree, [(m, c)]).expect("single term")
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(self.context.field))
    }

    fn check_context(&self, other: &HomogeneousPoly) -> Result<()> {
        if self.context == other.context {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn add(&self, other: &HomogeneousPoly) -> Result<HomogeneousPoly> {
        self.check_context(other)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::InhomogeneousError(self.degree, other.degree));
        }
        let degree = if self.is_zero() { other.degree } else { self.degree };
        HomogeneousPoly::from_terms(
            self.context,
            degree,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    pub fn sub(&self, other: &HomogeneousPoly) -> Result<HomogeneousPoly> {
        self.add(&other.scale(&FieldElement::one(self.context.field).neg())?)
    }

    pub fn scale(&self, c: &FieldElement) -> Result<HomogeneousPoly> {
        if c.spec() != self.context.field {
            return Err(Error::FieldMismatch);
        }
        HomogeneousPoly::from_terms(
            self.context,
            self.degree,
            self.terms
                .iter()
                .map(|(m, v)| Ok((m.clone(), v.mul(c)?)))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn multiply(&self, other: &HomogeneousPoly) -> Result<HomogeneousPoly> {
        self.check_context(other)?;
        let degree = self.degree + other.degree;
        let mut acc: BTreeMap<Monomial, FieldElement> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1.mul(c2)?;
                match acc.remove(&m) {
                    Some(prev) => {
                        let s = prev.add(&c)?;
                        if !s.is_zero() {
                            acc.insert(m, s);
                        }
                    }
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(HomogeneousPoly { context: self.context, degree, terms: acc })
    }

    pub fn mul_var(&self, i: usize) -> HomogeneousPoly {
        HomogeneousPoly {
            context: self.context,
            degree: self.degree + 1,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul_var(i), c.clone()))
                .collect(),
        }
    }

    /// Coefficient vector with respect to `monomial_basis(degree)`.
    pub fn coordinates(&self, basis: &MonomialBasis) -> Result<Vec<FieldElement>> {
        if basis.num_vars != self.context.num_vars || basis.degree != self.degree {
            return Err(Error::ContextMismatch);
        }
        let mut v = vec![FieldElement::zero(self.context.field); basis.len()];
        for (m, c) in &self.terms {
            let i = basis.position(m).expect("monomial of matching degree");
            v[i] = c.clone();
        }
        Ok(v)
    }

    /// Inverse of `coordinates`.
    pub fn from_coordinates(
        context: RingContext,
        basis: &MonomialBasis,
        v: &[FieldElement],
    ) -> Result<HomogeneousPoly> {
        if v.len() != basis.len() {
            return Err(Error::LengthMismatch { got: v.len(), expected: basis.len() });
        }
        HomogeneousPoly::from_terms(
            context,
            basis.degree,
            basis
                .monomials
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Leading (first in graded-lex order) coefficient scaled to 1.
    pub fn monic(&self) -> HomogeneousPoly {
        match self.terms.iter().next() {
            None => self.clone(),
            Some((_, lead)) => self
                .scale(&lead.inv().expect("stored coefficients are nonzero"))
                .expect("same field"),
        }
    }
}

impl fmt::Display for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}
