//! Homogeneous ideals presented by generators: graded pieces as
//! subspaces, Hilbert functions of the quotient, and degree-bounded
//! membership and generation checks.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::poly::{HomogeneousPoly, MonomialBasis, RingContext};

/// A homogeneous ideal given by generators. Graded pieces are computed by
/// brute enumeration (generator x monomial shifts) followed by RREF, and
/// cached per degree.
#[derive(Debug)]
pub struct GradedIdeal {
    context: RingContext,
    generators: Vec<HomogeneousPoly>,
    piece_cache: Mutex<HashMap<usize, Subspace>>,
}

impl Clone for GradedIdeal {
    fn clone(&self) -> Self {
        GradedIdeal {
            context: self.context,
            generators: self.generators.clone(),
            piece_cache: Mutex::new(self.piece_cache.lock().unwrap().clone()),
        }
    }
}

impl GradedIdeal {
    pub fn new(context: RingContext, generators: Vec<HomogeneousPoly>) -> Result<GradedIdeal> {
        for g in &generators {
            if g.context != context {
                return Err(Error::ContextMismatch);
            }
            if g.is_zero() {
                return Err(Error::FileFormat {
                    line: None,
                    msg: "zero generator in ideal".to_string(),
                });
            }
        }
        Ok(GradedIdeal { context, generators, piece_cache: Mutex::new(HashMap::new()) })
    }

    pub fn context(&self) -> RingContext {
        self.context
    }

    pub fn generators(&self) -> &[HomogeneousPoly] {
        &self.generators
    }

    pub fn max_generator_degree(&self) -> usize {
        self.generators.iter().map(|g| g.degree).max().unwrap_or(0)
    }

    /// I_d as a subspace of the coordinate space of Sym^d.
    pub fn graded_piece(&self, d: usize) -> Result<Subspace> {
        if let Some(s) = self.piece_cache.lock().unwrap().get(&d) {
            return Ok(s.clone());
        }
        let basis = MonomialBasis::new(self.context.num_vars, d);
        let mut vectors = Vec::new();
        for g in &self.generators {
            if g.degree > d {
                continue;
            }
            let shifts = MonomialBasis::new(self.context.num_vars, d - g.degree);
            for m in &shifts.monomials {
                let shifted = HomogeneousPoly::monomial(
                    self.context,
                    m.clone(),
                    crate::scalar::FieldElement::one(self.context.field),
                )
                .multiply(g)?;
                vectors.push(shifted.coordinates(&basis)?);
            }
        }
        let piece = if vectors.is_empty() {
            Subspace::zero(basis.len(), self.context.field)
        } else {
            Subspace::from_vectors(basis.len(), self.context.field, vectors)?
        };
        self.piece_cache.lock().unwrap().insert(d, piece.clone());
        Ok(piece)
    }

    /// dim Sym^d - dim I_d.
    pub fn hilbert_quotient(&self, d: usize) -> Result<usize> {
        let basis_len = MonomialBasis::new(self.context.num_vars, d).len();
        Ok(basis_len - self.graded_piece(d)?.dim())
    }

    /// Degree-bounded membership: f in I iff its coordinates lie in I_{deg f}.
    pub fn ideal_membership(&self, f: &HomogeneousPoly) -> Result<bool> {
        if f.context != self.context {
            return Err(Error::ContextMismatch);
        }
        if f.is_zero() {
            return Ok(true);
        }
        let basis = MonomialBasis::new(self.context.num_vars, f.degree);
        self.graded_piece(f.degree)?.contains_vector(&f.coordinates(&basis)?)
    }

    /// True iff I_{d+1} = V * I_d, i.e. no new generators are needed in
    /// degree d+1.
    pub fn generation_check(&self, d: usize) -> Result<bool> {
        let piece_d = self.graded_piece(d)?;
        let piece_d1 = self.graded_piece(d + 1)?;
        let basis_d = MonomialBasis::new(self.context.num_vars, d);
        let basis_d1 = MonomialBasis::new(self.context.num_vars, d + 1);
        let mut vectors = Vec::new();
        for row in piece_d.basis().row_vectors() {
            let f = HomogeneousPoly::from_coordinates(self.context, &basis_d, row)?;
            for i in 0..self.context.num_vars {
                vectors.push(f.mul_var(i).coordinates(&basis_d1)?);
            }
        }
        let shifted = if vectors.is_empty() {
            Subspace::zero(basis_d1.len(), self.context.field)
        } else {
            Subspace::from_vectors(basis_d1.len(), self.context.field, vectors)?
        };
        Ok(shifted == piece_d1)
    }
}
