//! Second-syzygy machinery: syzygy elements, contraction, the quadrics
//! involved in a syzygy, the phi map and its image, Syz_2 verdicts, and
//! involvement witnesses.
//!
//! Everything here works at p = 2, where a linear syzygy is a relation
//! sum_j x_j * Q_j = 0 among quadrics of the ideal.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::GradedIdeal;
use crate::koszul::{koszul_matrix, Slice};
use crate::linalg::{kernel_basis, rref, ExactMatrix, Subspace};
use crate::poly::{HomogeneousPoly, MonomialBasis, RingContext};
use crate::scalar::FieldElement;

/// A linear syzygy delta(gamma) = sum_j x_j (x) Q_j, stored by its
/// quadric components (index j = variable). Only the class of gamma
/// matters, so the tensor itself is the canonical datum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyElement {
    pub context: RingContext,
    /// Q_j for j = 0..N; all of degree 2.
    pub quadrics: Vec<HomogeneousPoly>,
}

impl SyzygyElement {
    pub fn new(context: RingContext, quadrics: Vec<HomogeneousPoly>) -> Result<SyzygyElement> {
        if quadrics.len() != context.num_vars {
            return Err(Error::LengthMismatch {
                got: quadrics.len(),
                expected: context.num_vars,
            });
        }
        let s = SyzygyElement { context, quadrics };
        s.validate()?;
        Ok(s)
    }

    /// Check the defining relation sum_j x_j * Q_j = 0 exactly.
    pub fn validate(&self) -> Result<()> {
        let mut acc = HomogeneousPoly::zero(self.context, 3);
        for (j, q) in self.quadrics.iter().enumerate() {
            if q.context != self.context {
                return Err(Error::ContextMismatch);
            }
            acc = acc.add(&q.mul_var(j))?;
        }
        if acc.is_zero() {
            Ok(())
        } else {
            Err(Error::FileFormat {
                line: None,
                msg: "tensor is not a syzygy: sum x_j * Q_j != 0".to_string(),
            })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.quadrics.iter().all(|q| q.is_zero())
    }

    /// The contraction gamma-bar applied to a dual vector lambda:
    /// sum_j lambda_j * Q_j.
    pub fn contract(&self, lambda: &[FieldElement]) -> Result<HomogeneousPoly> {
        if lambda.len() != self.context.num_vars {
            return Err(Error::LengthMismatch {
                got: lambda.len(),
                expected: self.context.num_vars,
            });
        }
        let mut acc = HomogeneousPoly::zero(self.context, 2);
        for (q, l) in self.quadrics.iter().zip(lambda) {
            if !l.is_zero() {
                acc = acc.add(&q.scale(l)?)?;
            }
        }
        Ok(acc)
    }

    /// Im(gamma-bar): the span of the component quadrics inside Sym^2,
    /// i.e. the minimal W with delta(gamma) in V (x) W.
    pub fn involved_quadrics(&self) -> Result<Subspace> {
        let basis = MonomialBasis::new(self.context.num_vars, 2);
        let vectors = self
            .quadrics
            .iter()
            .filter(|q| !q.is_zero())
            .map(|q| q.coordinates(&basis))
            .collect::<Result<Vec<_>>>()?;
        if vectors.is_empty() {
            return Ok(Subspace::zero(basis.len(), self.context.field));
        }
        Subspace::from_vectors(basis.len(), self.context.field, vectors)
    }

    /// Linear combination of syzygies.
    pub fn combine(
        context: RingContext,
        parts: &[(FieldElement, &SyzygyElement)],
    ) -> Result<SyzygyElement> {
        let mut quadrics = vec![HomogeneousPoly::zero(context, 2); context.num_vars];
        for (c, s) in parts {
            for (j, q) in s.quadrics.iter().enumerate() {
                quadrics[j] = quadrics[j].add(&q.scale(c)?)?;
            }
        }
        Ok(SyzygyElement { context, quadrics })
    }
}

/// RREF basis of ker(V (x) I_2 -> I_3), each element validated against
/// the syzygy relation.
pub fn syzygy_basis(ideal: &GradedIdeal) -> Result<Vec<SyzygyElement>> {
    let ctx = ideal.context();
    let i2 = ideal.graded_piece(2)?;
    let basis2 = MonomialBasis::new(ctx.num_vars, 2);
    let m = koszul_matrix(ideal, 1, 2, Slice::Ideal)?;
    let ker = kernel_basis(&m)?;
    let dim_i2 = i2.dim();
    let mut out = Vec::with_capacity(ker.dim());
    for row in ker.basis().row_vectors() {
        let mut quadrics = Vec::with_capacity(ctx.num_vars);
        for j in 0..ctx.num_vars {
            let mut dense = vec![FieldElement::zero(ctx.field); basis2.len()];
            for k in 0..dim_i2 {
                let c = &row[j * dim_i2 + k];
                if c.is_zero() {
                    continue;
                }
                for (pos, b) in i2.basis().row(k).iter().enumerate() {
                    if !b.is_zero() {
                        dense[pos] = dense[pos].add(&c.mul(b)?)?;
                    }
                }
            }
            quadrics.push(HomogeneousPoly::from_coordinates(ctx, &basis2, &dense)?);
        }
        out.push(SyzygyElement::new(ctx, quadrics)?);
    }
    Ok(out)
}

/// The image of phi: K_{2,1}(X) (x) V^dual -> I_{X,2}, compared against I_2.
#[derive(Debug, Clone)]
pub struct PhiReport {
    pub dim_image: usize,
    pub dim_i2: usize,
    pub surjective: bool,
    /// Quadrics of I_2 outside Im(phi); empty iff surjective.
    pub complement_basis: Vec<HomogeneousPoly>,
    /// Im(phi) in Sym^2 coordinates.
    pub image: Subspace,
    /// I_2 in Sym^2 coordinates.
    pub i2: Subspace,
}

pub fn phi_image(ideal: &GradedIdeal) -> Result<PhiReport> {
    let ctx = ideal.context();
    let basis2 = MonomialBasis::new(ctx.num_vars, 2);
    let i2 = ideal.graded_piece(2)?;
    let syzygies = syzygy_basis(ideal)?;
    // Im(phi) is the span of all component quadrics over a basis of
    // K_{2,1}; by linearity this is the sum over all syzygies.
    let mut vectors = Vec::new();
    for s in &syzygies {
        for q in &s.quadrics {
            if !q.is_zero() {
                vectors.push(q.coordinates(&basis2)?);
            }
        }
    }
    let image = if vectors.is_empty() {
        Subspace::zero(basis2.len(), ctx.field)
    } else {
        Subspace::from_vectors(basis2.len(), ctx.field, vectors)?
    };
    let mut complement_basis = Vec::new();
    let mut span = image.clone();
    for row in i2.basis().row_vectors() {
        if !span.contains_vector(row)? {
            let extra = Subspace::from_vectors(basis2.len(), ctx.field, vec![row.to_vec()])?;
            span = span.sum(&extra)?;
            complement_basis
                .push(HomogeneousPoly::from_coordinates(ctx, &basis2, row)?.monic());
        }
    }
    let dim_image = image.dim();
    let dim_i2 = i2.dim();
    Ok(PhiReport {
        dim_image,
        dim_i2,
        surjective: dim_image == dim_i2,
        complement_basis,
        image,
        i2,
    })
}

/// Outcome of the Syz_2 decision at the degree-2 level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Syz2Kind {
    /// phi surjective, so Syz_2(X) = X.
    EqualsSelf,
    /// The containing-ideal configuration: Im(phi) spans exactly the
    /// quadrics of the context ideal (index into the supplied list).
    EqualsContaining { context_index: usize },
    /// Im(phi) is proper and no supplied context ideal explains it.
    Inconclusive,
}

#[derive(Debug, Clone)]
pub struct VerdictReport {
    pub kind: Syz2Kind,
    pub lemma: String,
    pub assumed_hypotheses: Vec<String>,
    /// Basis of Im(phi), monic, in graded-lex term order.
    pub syzygy_ideal_deg2: Vec<HomogeneousPoly>,
    pub phi: PhiReport,
}

pub fn syz2_verdict(ideal: &GradedIdeal, contexts: &[&GradedIdeal]) -> Result<VerdictReport> {
    let ctx = ideal.context();
    let basis2 = MonomialBasis::new(ctx.num_vars, 2);
    let phi = phi_image(ideal)?;
    let syzygy_ideal_deg2: Vec<HomogeneousPoly> = phi
        .image
        .basis()
        .row_vectors()
        .map(|r| Ok(HomogeneousPoly::from_coordinates(ctx, &basis2, r)?.monic()))
        .collect::<Result<_>>()?;
    if phi.surjective {
        return Ok(VerdictReport {
            kind: Syz2Kind::EqualsSelf,
            lemma: "phi-surjective".to_string(),
            assumed_hypotheses: vec![],
            syzygy_ideal_deg2,
            phi,
        });
    }
    for (idx, z) in contexts.iter().enumerate() {
        if z.context() != ctx {
            return Err(Error::ContextMismatch);
        }
        let z2 = z.graded_piece(2)?;
        // (a) Im(phi) inside I_{Z,2}, (b) all basis syzygies inside
        // V (x) I_{Z,2}, (c) phi_Z surjective
        if !z2.contains_subspace(&phi.image)? {
            continue;
        }
        if !syzygies_contained_in(ideal, z)? {
            continue;
        }
        let phi_z = phi_image(z)?;
        if !phi_z.surjective {
            continue;
        }
        return Ok(VerdictReport {
            kind: Syz2Kind::EqualsContaining { context_index: idx },
            lemma: "containing-ideal".to_string(),
            assumed_hypotheses: vec![
                "context ideal satisfies (N_2) (assumed by user, not certified)".to_string(),
                "X is cut out of the context scheme by a single quadric (assumed by user)"
                    .to_string(),
            ],
            syzygy_ideal_deg2,
            phi,
        });
    }
    Ok(VerdictReport {
        kind: Syz2Kind::Inconclusive,
        lemma: "none".to_string(),
        assumed_hypotheses: vec![],
        syzygy_ideal_deg2,
        phi,
    })
}

/// Result of the bounded involvement search for a quadric.
#[derive(Debug, Clone)]
pub enum InvolvementResult {
    /// A verified witness: contract(witness, functional) = Q exactly.
    WitnessFound {
        witness: SyzygyElement,
        functional: Vec<FieldElement>,
        trial: usize,
    },
    /// Q is outside Im(phi), which certifies non-involvement.
    NotInPhiImage,
    /// Budget exhausted; explicitly NOT a proof of non-involvement.
    NoWitnessFound { trials: usize },
}

/// Search for a syzygy involving `q`: first the basis syzygies, then
/// seeded random combinations with small integer coefficients.
pub fn involvement_witness(
    ideal: &GradedIdeal,
    q: &HomogeneousPoly,
    trials: usize,
    seed: u64,
) -> Result<InvolvementResult> {
    let ctx = ideal.context();
    if q.context != ctx || q.degree != 2 || q.is_zero() || !ideal.ideal_membership(q)? {
        return Err(Error::NotAQuadricInIdeal);
    }
    let basis2 = MonomialBasis::new(ctx.num_vars, 2);
    let q_coords = q.coordinates(&basis2)?;
    let phi = phi_image(ideal)?;
    if !phi.image.contains_vector(&q_coords)? {
        return Ok(InvolvementResult::NotInPhiImage);
    }
    let syzygies = syzygy_basis(ideal)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials.max(1) {
        let gamma = if trial < syzygies.len() {
            syzygies[trial].clone()
        } else {
            let bound: i64 = if trial < trials / 2 { 3 } else { 20 };
            let parts: Vec<(FieldElement, &SyzygyElement)> = syzygies
                .iter()
                .map(|s| {
                    let mut c = 0i64;
                    while c == 0 {
                        c = rng.gen_range(-bound..=bound);
                    }
                    (FieldElement::from_int(c, ctx.field), s)
                })
                .collect();
            SyzygyElement::combine(ctx, &parts)?
        };
        if gamma.is_zero() {
            continue;
        }
        if let Some(functional) = solve_functional(&gamma, &q_coords, &basis2)? {
            let check = gamma.contract(&functional)?;
            assert_eq!(&check, q, "internal invariant violation: unverified witness");
            return Ok(InvolvementResult::WitnessFound { witness: gamma, functional, trial });
        }
    }
    Ok(InvolvementResult::NoWitnessFound { trials })
}

/// Solve sum_j lambda_j * Q_j = q for lambda, if q is in the span.
fn solve_functional(
    gamma: &SyzygyElement,
    q_coords: &[FieldElement],
    basis2: &MonomialBasis,
) -> Result<Option<Vec<FieldElement>>> {
    let ctx = gamma.context;
    let n = ctx.num_vars;
    // augmented system [M | q], columns of M = component quadrics
    let mut m = ExactMatrix::zero(basis2.len(), n + 1, ctx.field);
    for (j, quadric) in gamma.quadrics.iter().enumerate() {
        for (pos, c) in quadric.coordinates(basis2)?.into_iter().enumerate() {
            if !c.is_zero() {
                m.set(pos, j, c);
            }
        }
    }
    for (pos, c) in q_coords.iter().enumerate() {
        m.set(pos, n, c.clone());
    }
    let r = rref(&m)?;
    if r.pivot_columns.contains(&n) {
        return Ok(None); // inconsistent
    }
    let mut lambda = vec![FieldElement::zero(ctx.field); n];
    for (k, &pc) in r.pivot_columns.iter().enumerate() {
        lambda[pc] = r.matrix.get(k, n).clone();
    }
    Ok(Some(lambda))
}

/// True iff every basis syzygy of Y lies in V (x) I_{Z,2}. Requires
/// I_{Z,2} to be a subspace of I_{Y,2}.
pub fn syzygies_contained_in(y: &GradedIdeal, z: &GradedIdeal) -> Result<bool> {
    if y.context() != z.context() {
        return Err(Error::ContextMismatch);
    }
    let y2 = y.graded_piece(2)?;
    let z2 = z.graded_piece(2)?;
    if !y2.contains_subspace(&z2)? {
        return Err(Error::NotASubideal);
    }
    let basis2 = MonomialBasis::new(y.context().num_vars, 2);
    for s in syzygy_basis(y)? {
        for q in &s.quadrics {
            if q.is_zero() {
                continue;
            }
            if !z2.contains_vector(&q.coordinates(&basis2)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::scalar::FieldSpec;

    fn ctx() -> RingContext {
        RingContext::new(4, FieldSpec::Rationals)
    }

    fn twisted_cubic() -> GradedIdeal {
        let gens = ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]
            .iter()
            .map(|s| parse_poly(s, ctx()).unwrap())
            .collect();
        GradedIdeal::new(ctx(), gens).unwrap()
    }

    /// The paper's twisted-cubic syzygy delta(gamma) = x0 (x) Q12 - x1 (x) Q02 + x2 (x) Q01.
    fn paper_syzygy() -> SyzygyElement {
        let q01 = parse_poly("x0*x2 - x1^2", ctx()).unwrap();
        let q02 = parse_poly("x0*x3 - x1*x2", ctx()).unwrap();
        let q12 = parse_poly("x1*x3 - x2^2", ctx()).unwrap();
        let minus_one = FieldElement::from_int(-1, FieldSpec::Rationals);
        SyzygyElement::new(
            ctx(),
            vec![
                q12,
                q02.scale(&minus_one).unwrap(),
                q01,
                HomogeneousPoly::zero(ctx(), 2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn paper_syzygy_validates() {
        paper_syzygy().validate().unwrap();
    }

    #[test]
    fn contraction_components() {
        let s = paper_syzygy();
        let one = FieldElement::one(FieldSpec::Rationals);
        let zero = FieldElement::zero(FieldSpec::Rationals);
        let e0 = vec![one.clone(), zero.clone(), zero.clone(), zero.clone()];
        assert_eq!(
            s.contract(&e0).unwrap(),
            parse_poly("x1*x3 - x2^2", ctx()).unwrap()
        );
        let e3 = vec![zero.clone(), zero.clone(), zero.clone(), one];
        assert!(s.contract(&e3).unwrap().is_zero());
        let all_zero = vec![zero.clone(); 4];
        assert!(s.contract(&all_zero).unwrap().is_zero());
    }

    #[test]
    fn involved_quadrics_of_paper_syzygy() {
        let s = paper_syzygy();
        let w = s.involved_quadrics().unwrap();
        assert_eq!(w.dim(), 3);
        let i2 = twisted_cubic().graded_piece(2).unwrap();
        assert_eq!(w, i2);
    }

    #[test]
    fn twisted_cubic_syzygy_basis() {
        let i = twisted_cubic();
        let basis = syzygy_basis(&i).unwrap();
        assert_eq!(basis.len(), 2);
        for s in &basis {
            s.validate().unwrap();
        }
    }

    #[test]
    fn single_quadric_has_no_syzygies() {
        let gens = vec![parse_poly("x0*x1 - x2*x3", ctx()).unwrap()];
        let i = GradedIdeal::new(ctx(), gens).unwrap();
        assert!(syzygy_basis(&i).unwrap().is_empty());
    }

    #[test]
    fn twisted_cubic_phi_surjective() {
        let phi = phi_image(&twisted_cubic()).unwrap();
        assert_eq!(phi.dim_image, 3);
        assert_eq!(phi.dim_i2, 3);
        assert!(phi.surjective);
        assert!(phi.complement_basis.is_empty());
    }

    #[test]
    fn twisted_cubic_verdict_equals_self() {
        let v = syz2_verdict(&twisted_cubic(), &[]).unwrap();
        assert_eq!(v.kind, Syz2Kind::EqualsSelf);
        assert_eq!(v.syzygy_ideal_deg2.len(), 3);
    }

    #[test]
    fn involvement_witness_found_for_q02() {
        let i = twisted_cubic();
        let q02 = parse_poly("x0*x3 - x1*x2", ctx()).unwrap();
        match involvement_witness(&i, &q02, 8, 1).unwrap() {
            InvolvementResult::WitnessFound { witness, functional, .. } => {
                assert_eq!(witness.contract(&functional).unwrap(), q02);
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn non_ideal_quadric_rejected() {
        let i = twisted_cubic();
        let q = parse_poly("x0^2", ctx()).unwrap();
        assert!(matches!(
            involvement_witness(&i, &q, 4, 0),
            Err(Error::NotAQuadricInIdeal)
        ));
    }

    #[test]
    fn containment_is_reflexive() {
        let i = twisted_cubic();
        assert!(syzygies_contained_in(&i, &i).unwrap());
    }

    #[test]
    fn twisted_cubic_not_contained_in_single_quadric() {
        let i = twisted_cubic();
        let z = GradedIdeal::new(ctx(), vec![parse_poly("x0*x2 - x1^2", ctx()).unwrap()]).unwrap();
        assert!(!syzygies_contained_in(&i, &z).unwrap());
    }
}
