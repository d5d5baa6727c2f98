//! Exact dense linear algebra: RREF, rank, kernel and image bases, and a
//! small subspace lattice (sum, intersection, membership, equality).
//!
//! Over the rationals, elimination is integer-preserving: rows are cleared
//! of denominators up front, elimination steps are cross-multiplications
//! followed by content removal, and pivots are scaled to 1 only at the
//! end. Pivot choice is the first nonzero entry in column order, so the
//! computation is deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{FieldElement, FieldSpec};

const DEFAULT_SIZE_GUARD: usize = 2_000_000;

/// Entry-count guard for elimination; `SYZKIT_SIZE_GUARD` overrides.
pub fn size_guard() -> usize {
    std::env::var("SYZKIT_SIZE_GUARD")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SIZE_GUARD)
}

/// Dense row-major matrix over one exact field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    spec: FieldSpec,
    data: Vec<FieldElement>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize, spec: FieldSpec) -> ExactMatrix {
        ExactMatrix { rows, cols, spec, data: vec![FieldElement::zero(spec); rows * cols] }
    }

    pub fn identity(n: usize, spec: FieldSpec) -> ExactMatrix {
        let mut m = ExactMatrix::zero(n, n, spec);
        for i in 0..n {
            m.set(i, i, FieldElement::one(spec));
        }
        m
    }

    pub fn from_rows(cols: usize, spec: FieldSpec, rows: Vec<Vec<FieldElement>>) -> Result<ExactMatrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch { got: row.len(), expected: cols });
            }
            for e in row {
                if e.spec() != spec {
                    return Err(Error::FieldMismatch);
                }
                data.push(e);
            }
        }
        Ok(ExactMatrix { rows: nrows, cols, spec, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElement {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        assert_eq!(v.spec(), self.spec);
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[FieldElement]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// m · v for a column vector v of length `cols`.
    pub fn mat_vec(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch { got: v.len(), expected: self.cols });
        }
        let mut out = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut acc = FieldElement::zero(self.spec);
            for c in 0..self.cols {
                let e = self.get(r, c);
                if !e.is_zero() && !v[c].is_zero() {
                    acc = acc.add(&e.mul(&v[c])?)?;
                }
            }
            out.push(acc);
        }
        Ok(out)
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zero(self.cols, self.rows, self.spec);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(c, r, self.get(r, c).clone());
            }
        }
        m
    }

    /// Stack `other` below `self`.
    pub fn stack(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch { got: other.cols, expected: self.cols });
        }
        if self.spec != other.spec {
            return Err(Error::FieldMismatch);
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(ExactMatrix { rows: self.rows + other.rows, cols: self.cols, spec: self.spec, data })
    }

    /// Entrywise reduction mod p (fails if a denominator is divisible by p).
    pub fn to_prime_field(&self, p: u64) -> Result<ExactMatrix> {
        let spec = FieldSpec::prime_field(p)?;
        let data = self
            .data
            .iter()
            .map(|e| e.to_prime_field(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix { rows: self.rows, cols: self.cols, spec, data })
    }
}

/// Result of row reduction.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: ExactMatrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

/// Reduced row echelon form, exact and deterministic.
pub fn rref(m: &ExactMatrix) -> Result<Rref> {
    let guard = size_guard();
    if m.rows.saturating_mul(m.cols) > guard {
        return Err(Error::ComputationTooLarge { rows: m.rows, cols: m.cols, guard });
    }
    match m.spec {
        FieldSpec::Rationals => rref_rational(m),
        FieldSpec::PrimeField(p) => rref_mod(m, p),
    }
}

fn rref_rational(m: &ExactMatrix) -> Result<Rref> {
    // Clear denominators row by row; elimination then stays in BigInt.
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(m.rows);
    for r in 0..m.rows {
        let mut lcm = BigInt::one();
        for c in 0..m.cols {
            if let Some(q) = m.get(r, c).as_rational() {
                lcm = lcm.lcm(q.denom());
            }
        }
        let row = (0..m.cols)
            .map(|c| {
                let q = m.get(r, c).as_rational().expect("rational matrix");
                q.numer() * (&lcm / q.denom())
            })
            .collect();
        rows.push(row);
    }

    let mut pivot_columns = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..m.cols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let pivot_val = rows[pivot_row][col].clone();
        for r in 0..rows.len() {
            if r == pivot_row || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in 0..m.cols {
                let v = &pivot_val * &rows[r][c] - &factor * &rows[pivot_row][c];
                rows[r][c] = v;
            }
            reduce_content(&mut rows[r]);
        }
        pivot_columns.push(col);
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }

    // Scale pivots to 1.
    let mut out: Vec<Vec<FieldElement>> = Vec::with_capacity(rows.len());
    for (k, &col) in pivot_columns.iter().enumerate() {
        let pivot = rows[k][col].clone();
        out.push(
            rows[k]
                .iter()
                .map(|v| {
                    FieldElement::from_ratio(v.clone(), pivot.clone(), FieldSpec::Rationals)
                        .expect("pivot nonzero")
                })
                .collect(),
        );
    }
    let rank = pivot_columns.len();
    for _ in rank..m.rows {
        out.push(vec![FieldElement::zero(FieldSpec::Rationals); m.cols]);
    }
    Ok(Rref {
        matrix: ExactMatrix::from_rows(m.cols, FieldSpec::Rationals, out)?,
        rank,
        pivot_columns,
    })
}

fn reduce_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = g.gcd(v);
        }
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    let g = g.abs();
    for v in row.iter_mut() {
        *v = &*v / &g;
    }
}

fn rref_mod(m: &ExactMatrix, p: u64) -> Result<Rref> {
    let spec = m.spec;
    let mut rows: Vec<Vec<FieldElement>> = (0..m.rows).map(|r| m.row(r).to_vec()).collect();
    let mut pivot_columns = Vec::new();
    let mut pivot_row = 0usize;
    let _ = p;
    for col in 0..m.cols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].inv()?;
        for c in 0..m.cols {
            rows[pivot_row][c] = rows[pivot_row][c].mul(&inv)?;
        }
        for r in 0..rows.len() {
            if r == pivot_row || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in 0..m.cols {
                let delta = factor.mul(&rows[pivot_row][c])?;
                rows[r][c] = rows[r][c].sub(&delta)?;
            }
        }
        pivot_columns.push(col);
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    // move zero rows to the bottom
    rows.sort_by_key(|row| row.iter().all(|e| e.is_zero()));
    let rank = pivot_columns.len();
    Ok(Rref { matrix: ExactMatrix::from_rows(m.cols, spec, rows)?, rank, pivot_columns })
}

/// Canonical basis of the right kernel {v : m·v = 0}.
pub fn kernel_basis(m: &ExactMatrix) -> Result<Subspace> {
    let r = rref(m)?;
    let mut vectors = Vec::new();
    let pivots = &r.pivot_columns;
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; m.cols];
        for &c in pivots {
            v[c] = true;
        }
        v
    };
    for free in 0..m.cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![FieldElement::zero(m.spec); m.cols];
        v[free] = FieldElement::one(m.spec);
        for (k, &pc) in pivots.iter().enumerate() {
            v[pc] = r.matrix.get(k, free).neg();
        }
        vectors.push(v);
    }
    Subspace::from_vectors(m.cols, m.spec, vectors)
}

/// A linear subspace in canonical form: its basis matrix is the RREF of
/// any spanning set, so two subspaces are equal as sets iff the values
/// compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    spec: FieldSpec,
    basis: ExactMatrix,
    pivot_columns: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize, spec: FieldSpec) -> Subspace {
        Subspace {
            ambient_dim,
            spec,
            basis: ExactMatrix::zero(0, ambient_dim, spec),
            pivot_columns: Vec::new(),
        }
    }

    pub fn from_vectors(
        ambient_dim: usize,
        spec: FieldSpec,
        vectors: Vec<Vec<FieldElement>>,
    ) -> Result<Subspace> {
        let m = ExactMatrix::from_rows(ambient_dim, spec, vectors)?;
        Subspace::from_matrix(&m)
    }

    pub fn from_matrix(m: &ExactMatrix) -> Result<Subspace> {
        let r = rref(m)?;
        let rows = (0..r.rank).map(|k| r.matrix.row(k).to_vec()).collect();
        Ok(Subspace {
            ambient_dim: m.cols(),
            spec: m.spec(),
            basis: ExactMatrix::from_rows(m.cols(), m.spec(), rows)?,
            pivot_columns: r.pivot_columns,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivot_columns
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        if self.spec != other.spec {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Reduce `v` against the basis: returns (coefficients on the basis
    /// rows, remainder). The remainder is zero iff v lies in the subspace.
    pub fn reduce(&self, v: &[FieldElement]) -> Result<(Vec<FieldElement>, Vec<FieldElement>)> {
        if v.len() != self.ambient_dim {
            return Err(Error::LengthMismatch { got: v.len(), expected: self.ambient_dim });
        }
        let mut rem = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.dim());
        for (k, &pc) in self.pivot_columns.iter().enumerate() {
            let c = rem[pc].clone();
            if !c.is_zero() {
                for j in 0..self.ambient_dim {
                    let b = self.basis.get(k, j);
                    if !b.is_zero() {
                        rem[j] = rem[j].sub(&c.mul(b)?)?;
                    }
                }
            }
            coeffs.push(c);
        }
        Ok((coeffs, rem))
    }

    pub fn contains_vector(&self, v: &[FieldElement]) -> Result<bool> {
        let (_, rem) = self.reduce(v)?;
        Ok(rem.iter().all(|e| e.is_zero()))
    }

    /// Coordinates of `v` in the basis, if it lies in the subspace.
    pub fn coordinates_of(&self, v: &[FieldElement]) -> Result<Option<Vec<FieldElement>>> {
        let (coeffs, rem) = self.reduce(v)?;
        if rem.iter().all(|e| e.is_zero()) {
            Ok(Some(coeffs))
        } else {
            Ok(None)
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Subspace::from_matrix(&self.basis.stack(&other.basis)?)
    }

    /// Intersection via the kernel of [A^T | -B^T].
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let a = self.dim();
        let b = other.dim();
        if a == 0 || b == 0 {
            return Ok(Subspace::zero(self.ambient_dim, self.spec));
        }
        let mut m = ExactMatrix::zero(self.ambient_dim, a + b, self.spec);
        for k in 0..a {
            for j in 0..self.ambient_dim {
                m.set(j, k, self.basis.get(k, j).clone());
            }
        }
        for k in 0..b {
            for j in 0..self.ambient_dim {
                m.set(j, a + k, other.basis.get(k, j).neg());
            }
        }
        let ker = kernel_basis(&m)?;
        let mut vectors = Vec::new();
        for u in ker.basis.row_vectors() {
            // v = sum_k u_k * (row k of A)
            let mut v = vec![FieldElement::zero(self.spec); self.ambient_dim];
            for k in 0..a {
                if u[k].is_zero() {
                    continue;
                }
                for j in 0..self.ambient_dim {
                    let e = self.basis.get(k, j);
                    if !e.is_zero() {
                        v[j] = v[j].add(&u[k].mul(e)?)?;
                    }
                }
            }
            vectors.push(v);
        }
        Subspace::from_vectors(self.ambient_dim, self.spec, vectors)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        for row in other.basis.row_vectors() {
            if !self.contains_vector(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
