//! Exterior-algebra bookkeeping, the Koszul differential, Koszul
//! cohomology dimensions by two independent routes, Betti tables, and
//! (N_p) checks.
//!
//! The sign convention is normalized so that
//! `delta(v_i ^ v_j (x) P) = v_i (x) v_j P - v_j (x) v_i P`,
//! which reproduces the twisted-cubic syzygy coefficient-for-coefficient.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::GradedIdeal;
use crate::linalg::{kernel_basis, rref, size_guard, ExactMatrix, Subspace};
use crate::poly::MonomialBasis;
use crate::scalar::FieldElement;

/// Strictly increasing index tuples of length p in [0, N], listed in
/// lexicographic order. These enumerate the wedge basis of Lambda^p V.
pub fn exterior_basis(num_vars: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(p);
    fn rec(out: &mut Vec<Vec<usize>>, current: &mut Vec<usize>, start: usize, n: usize, p: usize) {
        if current.len() == p {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(out, current, i + 1, n, p);
            current.pop();
        }
    }
    rec(&mut out, &mut current, 0, num_vars, p);
    out
}

/// Which graded slice W the differential acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slice {
    /// W_q = Sym^q V
    Ambient,
    /// W_q = I_q
    Ideal,
    /// W_q = Sym^q V / I_q, via the non-pivot coset representatives
    Quotient,
}

struct SliceBasis {
    dim: usize,
    /// dense Sym^q coordinate vectors of the basis elements
    vectors: Vec<Vec<FieldElement>>,
}

fn slice_basis(ideal: &GradedIdeal, q: usize, slice: Slice) -> Result<SliceBasis> {
    let ctx = ideal.context();
    let sym = MonomialBasis::new(ctx.num_vars, q);
    let unit = |i: usize| {
        let mut v = vec![FieldElement::zero(ctx.field); sym.len()];
        v[i] = FieldElement::one(ctx.field);
        v
    };
    match slice {
        Slice::Ambient => Ok(SliceBasis {
            dim: sym.len(),
            vectors: (0..sym.len()).map(unit).collect(),
        }),
        Slice::Ideal => {
            let piece = ideal.graded_piece(q)?;
            Ok(SliceBasis {
                dim: piece.dim(),
                vectors: piece.basis().row_vectors().map(|r| r.to_vec()).collect(),
            })
        }
        Slice::Quotient => {
            let piece = ideal.graded_piece(q)?;
            let pivots: Vec<usize> = piece.pivot_columns().to_vec();
            let vectors: Vec<Vec<FieldElement>> = (0..sym.len())
                .filter(|i| !pivots.contains(i))
                .map(unit)
                .collect();
            Ok(SliceBasis { dim: vectors.len(), vectors })
        }
    }
}

/// Expresses dense Sym^{q+1} vectors in the coordinates of W_{q+1}.
struct SliceTarget {
    dim: usize,
    slice: Slice,
    piece: Option<Subspace>,
    free_columns: Vec<usize>,
}

fn slice_target(ideal: &GradedIdeal, q1: usize, slice: Slice) -> Result<SliceTarget> {
    let ctx = ideal.context();
    let sym = MonomialBasis::new(ctx.num_vars, q1);
    match slice {
        Slice::Ambient => Ok(SliceTarget {
            dim: sym.len(),
            slice,
            piece: None,
            free_columns: Vec::new(),
        }),
        Slice::Ideal => {
            let piece = ideal.graded_piece(q1)?;
            Ok(SliceTarget { dim: piece.dim(), slice, piece: Some(piece), free_columns: Vec::new() })
        }
        Slice::Quotient => {
            let piece = ideal.graded_piece(q1)?;
            let pivots: Vec<usize> = piece.pivot_columns().to_vec();
            let free_columns: Vec<usize> =
                (0..sym.len()).filter(|i| !pivots.contains(i)).collect();
            Ok(SliceTarget { dim: free_columns.len(), slice, piece: Some(piece), free_columns })
        }
    }
}

impl SliceTarget {
    fn coordinatize(&self, dense: &[FieldElement]) -> Result<Vec<FieldElement>> {
        match self.slice {
            Slice::Ambient => Ok(dense.to_vec()),
            Slice::Ideal => {
                let piece = self.piece.as_ref().expect("ideal slice has a piece");
                match piece.coordinates_of(dense)? {
                    Some(c) => Ok(c),
                    // x * I_q must land in I_{q+1}
                    None => panic!("internal invariant violation: V*I_q not contained in I_(q+1)"),
                }
            }
            Slice::Quotient => {
                let piece = self.piece.as_ref().expect("quotient slice has a piece");
                let (_, rem) = piece.reduce(dense)?;
                Ok(self.free_columns.iter().map(|&c| rem[c].clone()).collect())
            }
        }
    }
}

/// The matrix of the Koszul differential
/// delta_{p,q}: Lambda^p V (x) W_q -> Lambda^{p-1} V (x) W_{q+1},
/// columns indexed by (wedge slot, W_q basis), rows by
/// (wedge slot, W_{q+1} basis), both lexicographic.
pub fn koszul_matrix(ideal: &GradedIdeal, p: usize, q: usize, slice: Slice) -> Result<ExactMatrix> {
    assert!(p >= 1, "koszul_matrix needs p >= 1");
    let ctx = ideal.context();
    let n = ctx.num_vars;
    let sym_q = MonomialBasis::new(n, q);
    let sym_q1 = MonomialBasis::new(n, q + 1);
    let src = slice_basis(ideal, q, slice)?;
    let tgt = slice_target(ideal, q + 1, slice)?;
    let ext_p = exterior_basis(n, p);
    let ext_p1 = exterior_basis(n, p - 1);
    let ext_p1_index: HashMap<Vec<usize>, usize> = ext_p1
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();

    let rows = ext_p1.len() * tgt.dim;
    let cols = ext_p.len() * src.dim;
    let guard = size_guard();
    if rows.saturating_mul(cols) > guard {
        return Err(Error::ComputationTooLarge { rows, cols, guard });
    }

    // shift table: position of x_i * m for every source monomial m
    let mut shift = vec![vec![0usize; sym_q.len()]; n];
    for (j, m) in sym_q.monomials.iter().enumerate() {
        for (i, row) in shift.iter_mut().enumerate() {
            row[j] = sym_q1
                .position(&m.mul_var(i))
                .expect("degree q+1 monomial");
        }
    }

    let mut matrix = ExactMatrix::zero(rows, cols, ctx.field);
    let mut dense = vec![FieldElement::zero(ctx.field); sym_q1.len()];
    for (wi, w) in ext_p.iter().enumerate() {
        for j in 0..src.dim {
            let col = wi * src.dim + j;
            for (k, &var) in w.iter().enumerate() {
                // delta(v_i ^ v_j (x) P) = v_i (x) v_j P - v_j (x) v_i P
                let negate = k % 2 == 0;
                let mut w_rest = w.clone();
                w_rest.remove(k);
                let w_rest_idx = ext_p1_index[&w_rest];
                for e in dense.iter_mut() {
                    *e = FieldElement::zero(ctx.field);
                }
                for (src_pos, c) in src.vectors[j].iter().enumerate() {
                    if !c.is_zero() {
                        dense[shift[var][src_pos]] =
                            if negate { c.neg() } else { c.clone() };
                    }
                }
                let coords = tgt.coordinatize(&dense)?;
                for (m, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        matrix.set(w_rest_idx * tgt.dim + m, col, c);
                    }
                }
            }
        }
    }
    Ok(matrix)
}

fn quotient_dim(ideal: &GradedIdeal, q: usize) -> Result<usize> {
    ideal.hilbert_quotient(q)
}

/// dim K_{p,q}(X): cohomology of the Koszul complex on the quotient
/// slices at the (p, q) spot.
pub fn koszul_group_dim(ideal: &GradedIdeal, p: usize, q: usize) -> Result<usize> {
    let ker_dim = if p == 0 {
        // delta_{0,q} maps to zero
        quotient_dim(ideal, q)?
    } else {
        let d = koszul_matrix(ideal, p, q, Slice::Quotient)?;
        d.cols() - rref(&d)?.rank
    };
    let im_dim = if q == 0 {
        0
    } else {
        let d = koszul_matrix(ideal, p + 1, q - 1, Slice::Quotient)?;
        rref(&d)?.rank
    };
    assert!(
        ker_dim >= im_dim,
        "internal invariant violation: Koszul complex not a complex"
    );
    Ok(ker_dim - im_dim)
}

/// K_{p,1}(X) in its ideal-theoretic form: the kernel subspace of
/// Lambda^{p-1} V (x) I_2 -> Lambda^{p-2} V (x) I_3. Coordinates are
/// (wedge slot) x (RREF basis of I_2).
pub fn k_p1_ideal_form(ideal: &GradedIdeal, p: usize) -> Result<Subspace> {
    assert!(p >= 2, "ideal form needs p >= 2");
    let m = koszul_matrix(ideal, p - 1, 2, Slice::Ideal)?;
    kernel_basis(&m)
}

/// Map (p, q) -> dim K_{p,q}(X). Absent entries mean "not computed".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub pmax: usize,
    pub qmax: usize,
    pub entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn get(&self, p: usize, q: usize) -> Option<usize> {
        self.entries.get(&(p, q)).copied()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "      ")?;
        for p in 1..=self.pmax {
            write!(f, "{:>6}", format!("p={p}"))?;
        }
        writeln!(f)?;
        for q in 1..=self.qmax {
            write!(f, "{:<6}", format!("q={q}"))?;
            for p in 1..=self.pmax {
                match self.get(p, q) {
                    Some(d) => write!(f, "{d:>6}")?,
                    None => write!(f, "{:>6}", ".")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Betti numbers dim K_{p,q} over the rectangle [1, pmax] x [1, qmax].
pub fn betti_table(ideal: &GradedIdeal, pmax: usize, qmax: usize) -> Result<BettiTable> {
    let mut entries = BTreeMap::new();
    for p in 1..=pmax {
        for q in 1..=qmax {
            entries.insert((p, q), koszul_group_dim(ideal, p, q)?);
        }
    }
    Ok(BettiTable { pmax, qmax, entries })
}

/// Outcome of an (N_p) check over a bounded window of q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NpCheck {
    /// K_{i,q} = 0 for 1 <= i <= p, 2 <= q <= qmax, and the ideal needs no
    /// new generators in degree 3. Not a certificate beyond qmax.
    Holds { p: usize, qmax: usize },
    /// First slot (in q-then-i order) where K_{i,q} is nonzero.
    FailsAt { i: usize, q: usize, dim: usize },
    /// The degree-2 generation check failed.
    NotQuadraticallyGenerated,
}

pub fn np_check(ideal: &GradedIdeal, p: usize, qmax: usize) -> Result<NpCheck> {
    assert!(p >= 1 && qmax >= 2);
    if !ideal.generation_check(2)? {
        return Ok(NpCheck::NotQuadraticallyGenerated);
    }
    for q in 2..=qmax {
        for i in 1..=p {
            let dim = koszul_group_dim(ideal, i, q)?;
            if dim != 0 {
                return Ok(NpCheck::FailsAt { i, q, dim });
            }
        }
    }
    Ok(NpCheck::Holds { p, qmax })
}
