//! Property-based invariants plus an arithmetic oracle for the catalog
//! Hilbert functions that never touches the linear algebra stack.

use std::collections::HashSet;

use proptest::prelude::*;

use syzkit::ideal::GradedIdeal;
use syzkit::koszul::betti_table;
use syzkit::linalg::{rref, ExactMatrix, Subspace};
use syzkit::parse::parse_poly;
use syzkit::poly::{HomogeneousPoly, MonomialBasis, RingContext};
use syzkit::scalar::{FieldElement, FieldSpec};
use syzkit::varieties::{generate, CatalogSpec};

const Q: FieldSpec = FieldSpec::Rationals;
const P: u64 = 1_000_003;

fn fp() -> FieldSpec {
    FieldSpec::prime_field(P).unwrap()
}

fn rat(n: i64, d: i64) -> FieldElement {
    FieldElement::from_ratio(n.into(), d.into(), Q).unwrap()
}

proptest! {
    #[test]
    fn field_axioms_rational(an in -50i64..50, ad in 1i64..20, bn in -50i64..50, bd in 1i64..20,
                             cn in -50i64..50, cd in 1i64..20) {
        let (a, b, c) = (rat(an, ad), rat(bn, bd), rat(cn, cd));
        // associativity + commutativity + distributivity
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        // inverses
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).unwrap().is_one());
        }
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn rational_prime_field_homomorphism(an in -50i64..50, ad in 1i64..20,
                                         bn in -50i64..50, bd in 1i64..20) {
        let (a, b) = (rat(an, ad), rat(bn, bd));
        let reduce = |x: &FieldElement| x.to_prime_field(P).unwrap();
        prop_assert_eq!(reduce(&a.add(&b).unwrap()), reduce(&a).add(&reduce(&b)).unwrap());
        prop_assert_eq!(reduce(&a.mul(&b).unwrap()), reduce(&a).mul(&reduce(&b)).unwrap());
    }

    #[test]
    fn poly_coordinates_are_linear(coeffs_a in prop::collection::vec(-9i64..=9, 10),
                                   coeffs_b in prop::collection::vec(-9i64..=9, 10),
                                   s in -5i64..=5) {
        let ctx = RingContext::new(4, Q);
        let basis = MonomialBasis::new(4, 2);
        let from = |cs: &[i64]| {
            let coords: Vec<FieldElement> =
                cs.iter().map(|&c| FieldElement::from_int(c, Q)).collect();
            HomogeneousPoly::from_coordinates(ctx, &basis, &coords).unwrap()
        };
        let (a, b) = (from(&coeffs_a), from(&coeffs_b));
        let s = FieldElement::from_int(s, Q);
        let lhs = a.add(&b.scale(&s).unwrap()).unwrap().coordinates(&basis).unwrap();
        let rhs: Vec<FieldElement> = a
            .coordinates(&basis)
            .unwrap()
            .iter()
            .zip(b.coordinates(&basis).unwrap())
            .map(|(x, y)| x.add(&y.mul(&s).unwrap()).unwrap())
            .collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rref_is_idempotent_and_permutation_invariant(
        entries in prop::collection::vec(-5i64..=5, 20),
        seed in 0u64..1000,
    ) {
        let rows: Vec<Vec<FieldElement>> = entries
            .chunks(5)
            .map(|ch| ch.iter().map(|&e| FieldElement::from_int(e, Q)).collect())
            .collect();
        let m = ExactMatrix::from_rows(5, Q, rows.clone()).unwrap();
        let r = rref(&m).unwrap();
        // idempotent
        let again = rref(&r.matrix).unwrap();
        prop_assert_eq!(&again.matrix, &r.matrix);
        // permutation invariant (pseudo-shuffle driven by the seed)
        let mut perm = rows;
        let n = perm.len();
        for i in 0..n {
            perm.swap(i, ((seed as usize) + 3 * i) % n);
        }
        let m2 = ExactMatrix::from_rows(5, Q, perm).unwrap();
        prop_assert_eq!(rref(&m2).unwrap().matrix, r.matrix);
        // rank over F_p never exceeds rank over Q
        let rp = rref(&m.to_prime_field(P).unwrap()).unwrap();
        prop_assert!(rp.rank <= r.rank);
    }

    #[test]
    fn subspace_dimension_law(ea in prop::collection::vec(-4i64..=4, 12),
                              eb in prop::collection::vec(-4i64..=4, 12)) {
        let mk = |es: &[i64]| {
            let vecs: Vec<Vec<FieldElement>> = es
                .chunks(6)
                .map(|ch| ch.iter().map(|&e| FieldElement::from_int(e, Q)).collect())
                .collect();
            Subspace::from_vectors(6, Q, vecs).unwrap()
        };
        let (a, b) = (mk(&ea), mk(&eb));
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), a.dim() + b.dim());
        prop_assert!(sum.contains_subspace(&a).unwrap());
        prop_assert!(a.contains_subspace(&meet).unwrap());
    }

    #[test]
    fn parser_round_trips_printed_polys(coeffs in prop::collection::vec(-9i64..=9, 10)) {
        let ctx = RingContext::new(4, Q);
        let basis = MonomialBasis::new(4, 2);
        let coords: Vec<FieldElement> =
            coeffs.iter().map(|&c| FieldElement::from_int(c, Q)).collect();
        let p = HomogeneousPoly::from_coordinates(ctx, &basis, &coords).unwrap();
        if !p.is_zero() {
            let reparsed = parse_poly(&p.to_string(), ctx).unwrap();
            prop_assert_eq!(reparsed, p);
        }
    }
}

#[test]
fn parser_round_trips_catalog_generators() {
    for spec in [
        CatalogSpec::TwistedCubic,
        CatalogSpec::Rnc(5),
        CatalogSpec::Scroll(1, 2),
        CatalogSpec::Veronese,
        CatalogSpec::HyperellipticG2(3),
        CatalogSpec::EllipticQuintic(3),
    ] {
        let c = generate(spec, Q).unwrap();
        for g in c.ideal.generators() {
            let reparsed = parse_poly(&g.to_string(), c.ideal.context()).unwrap();
            assert_eq!(&reparsed, g, "{spec:?}");
        }
    }
}

/// Oracle for the rational-normal-curve Hilbert function that bypasses
/// all linear algebra: substitute x_i -> s^(d-i) t^i and count distinct
/// exponents of the resulting (s,t)-monomials. dim(Sym^m / I_m) is the
/// number of distinct degree-(d*m) monomials in two variables hit by the
/// parameterization, and dim I_m = C(d+m, m) - that count.
fn rnc_quotient_dim_by_counting(d: usize, m: usize) -> usize {
    let basis = MonomialBasis::new(d + 1, m);
    let mut seen: HashSet<usize> = HashSet::new();
    for mono in &basis.monomials {
        // exponent of t in the image; the s-exponent is determined
        let t_exp: usize = mono
            .exps()
            .iter()
            .enumerate()
            .map(|(var, &e)| var * e as usize)
            .sum();
        seen.insert(t_exp);
    }
    seen.len()
}

#[test]
fn monomial_curve_oracle_pins_rnc_dimensions() {
    for d in 3..=6 {
        let spec = if d == 3 { CatalogSpec::TwistedCubic } else { CatalogSpec::Rnc(d) };
        let c = generate(spec, Q).unwrap();
        for m in 1..=3 {
            let oracle = rnc_quotient_dim_by_counting(d, m);
            assert_eq!(oracle, d * m + 1, "image of a degree-{d} RNC in degree {m}");
            assert_eq!(
                c.ideal.hilbert_quotient(m).unwrap(),
                oracle,
                "linear-algebra route disagrees with the counting oracle (d={d}, m={m})"
            );
        }
    }
}

#[test]
fn betti_table_is_basis_independent() {
    // replace the generators by an invertible linear recombination and
    // check the Betti numbers are unchanged
    let c = generate(CatalogSpec::TwistedCubic, Q).unwrap();
    let g = c.ideal.generators();
    let ctx = c.ideal.context();
    let two = FieldElement::from_int(2, Q);
    let recombined = vec![
        g[0].add(&g[1]).unwrap(),
        g[1].add(&g[2].scale(&two).unwrap()).unwrap(),
        g[0].add(&g[2]).unwrap(),
    ];
    let other = GradedIdeal::new(ctx, recombined).unwrap();
    let a = betti_table(&c.ideal, 3, 2).unwrap();
    let b = betti_table(&other, 3, 2).unwrap();
    assert_eq!(a.entries, b.entries);
}

#[test]
fn prime_field_pipeline_matches_rationals() {
    // the whole K_{p,q} pipeline over F_p agrees with Q on the catalog
    for spec in [CatalogSpec::TwistedCubic, CatalogSpec::Scroll(1, 2)] {
        let cq = generate(spec, Q).unwrap();
        let cp = generate(spec, fp()).unwrap();
        let a = betti_table(&cq.ideal, 3, 2).unwrap();
        let b = betti_table(&cp.ideal, 3, 2).unwrap();
        assert_eq!(a.entries, b.entries, "{spec:?}");
    }
}
