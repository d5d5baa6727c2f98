//! One-parameter families of ideals and the sampled rank scan used to
//! observe lower semicontinuity of the syzygy-ideal dimension.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::GradedIdeal;
use crate::koszul::{koszul_matrix, Slice};
use crate::linalg::kernel_basis;
use crate::parse::ParametricPoly;
use crate::poly::RingContext;
use crate::scalar::FieldElement;
use crate::syzygy::phi_image;

/// An ideal whose generator coefficients are polynomials in one
/// parameter t.
#[derive(Debug, Clone)]
pub struct ParametricIdeal {
    pub context: RingContext,
    pub generators: Vec<ParametricPoly>,
}

impl ParametricIdeal {
    /// Specialize every generator at t = `value`. Fails if a generator
    /// vanishes identically there.
    pub fn specialize(&self, value: &FieldElement) -> Result<GradedIdeal> {
        let mut gens = Vec::with_capacity(self.generators.len());
        for (i, g) in self.generators.iter().enumerate() {
            let f = g.evaluate(value)?;
            if f.is_zero() {
                return Err(Error::SpecializationError(i + 1, value.to_string()));
            }
            gens.push(f);
        }
        GradedIdeal::new(self.context, gens)
    }
}

/// One sampled row of the scan.
#[derive(Debug, Clone)]
pub struct FamilyRow {
    pub t: FieldElement,
    pub random: bool,
    pub hilbert_2: usize,
    pub hilbert_3: usize,
    pub dim_k21: usize,
    pub dim_phi_image: usize,
}

/// The full scan, with the constancy observations the semicontinuity
/// statement is conditioned on.
#[derive(Debug, Clone)]
pub struct FamilyScan {
    pub rows: Vec<FamilyRow>,
    /// Hilbert values (h2, h3) and dim K_{2,1} constant across samples.
    pub betti_data_constant: bool,
    pub max_dim_phi_image: usize,
    /// Indices of rows where dim Im(phi) drops below the maximum.
    pub drops: Vec<usize>,
}

/// Evaluate the family at the given samples plus `random_samples` seeded
/// random integer parameters, and report (h2, h3, dim K_{2,1}, dim Im phi)
/// per sample. The tool reports observations; it does not certify the
/// semicontinuity theorem's hypotheses.
pub fn family_rank_scan(
    family: &ParametricIdeal,
    sample_points: &[FieldElement],
    random_samples: usize,
    seed: u64,
) -> Result<FamilyScan> {
    let field = family.context.field;
    let mut points: Vec<(FieldElement, bool)> =
        sample_points.iter().map(|t| (t.clone(), false)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut guard = 0;
    while points.iter().filter(|(_, r)| *r).count() < random_samples {
        let c: i64 = rng.gen_range(-1000..=1000);
        let t = FieldElement::from_int(c, field);
        if points.iter().any(|(p, _)| p == &t) {
            guard += 1;
            if guard > 10_000 {
                break;
            }
            continue;
        }
        points.push((t, true));
    }

    let mut rows = Vec::with_capacity(points.len());
    for (t, random) in points {
        let ideal = family.specialize(&t)?;
        let hilbert_2 = ideal.hilbert_quotient(2)?;
        let hilbert_3 = ideal.hilbert_quotient(3)?;
        let mu = koszul_matrix(&ideal, 1, 2, Slice::Ideal)?;
        let dim_k21 = kernel_basis(&mu)?.dim();
        let dim_phi_image = phi_image(&ideal)?.dim_image;
        rows.push(FamilyRow { t, random, hilbert_2, hilbert_3, dim_k21, dim_phi_image });
    }

    let betti_data_constant = rows
        .windows(2)
        .all(|w| {
            w[0].hilbert_2 == w[1].hilbert_2
                && w[0].hilbert_3 == w[1].hilbert_3
                && w[0].dim_k21 == w[1].dim_k21
        });
    let max_dim_phi_image = rows.iter().map(|r| r.dim_phi_image).max().unwrap_or(0);
    let drops = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| r.dim_phi_image < max_dim_phi_image)
        .map(|(i, _)| i)
        .collect();
    Ok(FamilyScan { rows, betti_data_constant, max_dim_phi_image, drops })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_parametric;
    use crate::scalar::FieldSpec;

    fn ctx() -> RingContext {
        RingContext::new(4, FieldSpec::Rationals)
    }

    fn tc_family() -> ParametricIdeal {
        let gens = ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2 + t*x0^2"]
            .iter()
            .map(|s| parse_parametric(s, ctx()).unwrap())
            .collect();
        ParametricIdeal { context: ctx(), generators: gens }
    }

    #[test]
    fn twisted_cubic_at_zero() {
        let fam = tc_family();
        let scan = family_rank_scan(
            &fam,
            &[FieldElement::zero(FieldSpec::Rationals)],
            0,
            0,
        )
        .unwrap();
        assert_eq!(scan.rows.len(), 1);
        assert_eq!(scan.rows[0].dim_phi_image, 3);
        assert_eq!(scan.rows[0].dim_k21, 2);
    }

    #[test]
    fn constant_family_rows_identical() {
        let gens = ["x0*x2 - x1^2", "x0*x3 - x1*x2"]
            .iter()
            .map(|s| parse_parametric(s, ctx()).unwrap())
            .collect();
        let fam = ParametricIdeal { context: ctx(), generators: gens };
        let samples: Vec<FieldElement> = [0i64, 1, 5]
            .iter()
            .map(|&n| FieldElement::from_int(n, FieldSpec::Rationals))
            .collect();
        let scan = family_rank_scan(&fam, &samples, 2, 42).unwrap();
        assert!(scan.betti_data_constant);
        let first = &scan.rows[0];
        for r in &scan.rows {
            assert_eq!(r.hilbert_2, first.hilbert_2);
            assert_eq!(r.dim_phi_image, first.dim_phi_image);
        }
    }

    #[test]
    fn vanishing_generator_is_an_error() {
        let gens = vec![parse_parametric("t*x0*x1", ctx()).unwrap()];
        let fam = ParametricIdeal { context: ctx(), generators: gens };
        let zero = FieldElement::zero(FieldSpec::Rationals);
        assert!(matches!(
            family_rank_scan(&fam, &[zero], 0, 0),
            Err(Error::SpecializationError(1, _))
        ));
    }

    #[test]
    fn scan_is_deterministic() {
        let fam = tc_family();
        let samples = vec![FieldElement::zero(FieldSpec::Rationals)];
        let a = family_rank_scan(&fam, &samples, 3, 9).unwrap();
        let b = family_rank_scan(&fam, &samples, 3, 9).unwrap();
        let ta: Vec<String> = a.rows.iter().map(|r| r.t.to_string()).collect();
        let tb: Vec<String> = b.rows.iter().map(|r| r.t.to_string()).collect();
        assert_eq!(ta, tb);
    }
}
