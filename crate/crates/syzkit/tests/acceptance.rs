//! Acceptance suite: one test per criterion, each ending in a single
//! pass line (the harness itself reports ok/FAILED per criterion).

use syzkit::koszul::{k_p1_ideal_form, koszul_group_dim, koszul_matrix, np_check, NpCheck, Slice};
use syzkit::linalg::{kernel_basis, rref, ExactMatrix, Subspace};
use syzkit::parse::{parse_parametric, parse_poly};
use syzkit::poly::MonomialBasis;
use syzkit::scalar::{FieldElement, FieldSpec};
use syzkit::syzygy::{
    involvement_witness, phi_image, syz2_verdict, syzygies_contained_in, InvolvementResult,
    Syz2Kind,
};
use syzkit::varieties::{generate, Catalog, CatalogSpec};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: FieldSpec = FieldSpec::Rationals;

fn catalog(spec: CatalogSpec) -> Catalog {
    generate(spec, Q).unwrap()
}

/// n choose k, used as the independent Eagon-Northcott oracle.
fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn criterion_1_twisted_cubic_golden() {
    let c = catalog(CatalogSpec::TwistedCubic);
    let gamma = c.gamma_wedge_tensor.clone().unwrap();
    let delta = koszul_matrix(&c.ideal, 2, 1, Slice::Ambient).unwrap();
    let image = delta.mat_vec(&gamma).unwrap();

    // expected delta(gamma) = x0 (x) Q12 - x1 (x) Q02 + x2 (x) Q01,
    // x3-component zero, built from scratch rather than from the bundle
    let ctx = c.ideal.context();
    let q01 = parse_poly("x0*x2 - x1^2", ctx).unwrap();
    let q02 = parse_poly("x0*x3 - x1*x2", ctx).unwrap();
    let q12 = parse_poly("x1*x3 - x2^2", ctx).unwrap();
    let basis2 = MonomialBasis::new(4, 2);
    let mut expected = Vec::new();
    expected.extend(q12.coordinates(&basis2).unwrap());
    expected.extend(q02.scale(&FieldElement::from_int(-1, Q)).unwrap().coordinates(&basis2).unwrap());
    expected.extend(q01.coordinates(&basis2).unwrap());
    expected.extend(vec![FieldElement::zero(Q); basis2.len()]);
    assert_eq!(image, expected, "delta(gamma) must match the golden value exactly");
    println!("criterion 1 (twisted-cubic golden delta(gamma)): pass");
}

#[test]
fn criterion_2_twisted_cubic_verdict() {
    let c = catalog(CatalogSpec::TwistedCubic);
    assert_eq!(c.ideal.graded_piece(2).unwrap().dim(), 3);
    let via_quotient = koszul_group_dim(&c.ideal, 2, 1).unwrap();
    let via_ideal = k_p1_ideal_form(&c.ideal, 2).unwrap().dim();
    assert_eq!(via_quotient, 2);
    assert_eq!(via_ideal, 2, "both K_{{2,1}} routes must agree");
    let report = syz2_verdict(&c.ideal, &[]).unwrap();
    assert!(report.phi.surjective, "Im(phi) = I_2");
    assert_eq!(report.phi.dim_image, 3);
    assert!(matches!(report.kind, Syz2Kind::EqualsSelf));
    println!("criterion 2 (twisted-cubic verdict EQUALS_SELF): pass");
}

#[test]
fn criterion_3_rational_normal_curves() {
    // d = 3 pinned independently at 2 (criterion 2 recomputes it; here we
    // also pin it against the Eagon-Northcott formula p*C(d,p+1) at p=2)
    assert_eq!(2 * binomial(3, 3), 2);
    let tc = catalog(CatalogSpec::TwistedCubic);
    assert_eq!(koszul_group_dim(&tc.ideal, 2, 1).unwrap(), 2);

    for d in [4usize, 5, 6] {
        let c = catalog(CatalogSpec::Rnc(d));
        assert!(
            matches!(np_check(&c.ideal, 2, 3).unwrap(), NpCheck::Holds { .. }),
            "(N_2) must hold for RNC d={d}"
        );
        assert!(phi_image(&c.ideal).unwrap().surjective, "phi surjective for d={d}");
        let k21 = koszul_group_dim(&c.ideal, 2, 1).unwrap();
        let oracle = 2 * binomial(d, 3); // Eagon-Northcott beta_{2,1}
        assert_eq!(k21, oracle, "dim K_{{2,1}} for d={d}");
        assert_eq!(oracle, [8, 20, 40][d - 4]);
    }
    println!("criterion 3 (RNC d=4,5,6: N_2, phi surjective, K_21 = 8/20/40): pass");
}

#[test]
fn criterion_4_hyperelliptic_remark_g2() {
    let c = catalog(CatalogSpec::HyperellipticG2(0));
    let s = catalog(CatalogSpec::Scroll(1, 2));
    assert_eq!(c.ideal.graded_piece(2).unwrap().dim(), 4);
    assert_eq!(s.ideal.graded_piece(2).unwrap().dim(), 3);
    assert_eq!(koszul_group_dim(&c.ideal, 2, 1).unwrap(), 2);
    assert_eq!(koszul_group_dim(&s.ideal, 2, 1).unwrap(), 2);
    assert!(syzygies_contained_in(&c.ideal, &s.ideal).unwrap());

    // Im(phi_C) = I_{S,2} as subspaces of Sym^2
    let phi_c = phi_image(&c.ideal).unwrap();
    let s2 = s.ideal.graded_piece(2).unwrap();
    assert_eq!(phi_c.image, s2, "Im(phi_C) must equal I_{{S,2}}");

    let report = syz2_verdict(&c.ideal, &[&s.ideal]).unwrap();
    assert!(matches!(report.kind, Syz2Kind::EqualsContaining { context_index: 0 }));

    // the extra quadric (the one generator outside the scroll ideal)
    let extra = c
        .ideal
        .generators()
        .iter()
        .find(|g| !s.ideal.ideal_membership(g).unwrap())
        .expect("one generator lies outside I_S");
    match involvement_witness(&c.ideal, extra, 32, 0).unwrap() {
        InvolvementResult::NotInPhiImage => {}
        other => panic!("extra quadric must be certified uninvolved, got {other:?}"),
    }
    println!("criterion 4 (hyperelliptic g=2 Remark, EQUALS_CONTAINING(S)): pass");
}

#[test]
fn criterion_5_green_lazarsfeld_spot_checks() {
    let e = catalog(CatalogSpec::EllipticQuintic(0));
    assert!(matches!(np_check(&e.ideal, 2, 3).unwrap(), NpCheck::Holds { .. }));
    assert!(phi_image(&e.ideal).unwrap().surjective);

    let h = catalog(CatalogSpec::HyperellipticG2(0));
    assert!(
        matches!(np_check(&h.ideal, 1, 3).unwrap(), NpCheck::Holds { .. }),
        "hyperelliptic g=2 satisfies (N_1)"
    );
    assert!(
        matches!(np_check(&h.ideal, 2, 3).unwrap(), NpCheck::FailsAt { .. }),
        "hyperelliptic g=2 fails (N_2)"
    );
    println!("criterion 5 (GL spot checks: quintic N_2 holds, hyperelliptic N_1/not N_2): pass");
}

#[test]
fn criterion_6_property_suites() {
    let tc = catalog(CatalogSpec::TwistedCubic);

    // delta o delta = 0 on 100 seeded random elements, (p,q) in {1,2,3}x{1,2}
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0;
    'outer: loop {
        for p in 1usize..=3 {
            for q in 1usize..=2 {
                let d1 = koszul_matrix(&tc.ideal, p, q, Slice::Quotient).unwrap();
                let v: Vec<FieldElement> =
                    (0..d1.cols()).map(|_| FieldElement::from_int(rng.gen_range(-9..=9), Q)).collect();
                let mid = d1.mat_vec(&v).unwrap();
                if p >= 2 {
                    let d2 = koszul_matrix(&tc.ideal, p - 1, q + 1, Slice::Quotient).unwrap();
                    let end = d2.mat_vec(&mid).unwrap();
                    assert!(end.iter().all(|c| c.is_zero()), "delta^2 != 0 at p={p}, q={q}");
                }
                // p = 1: the composite lands in wedge^{-1} = 0 by definition
                checked += 1;
                if checked >= 100 {
                    break 'outer;
                }
            }
        }
    }

    // route equivalence on every catalog variety, p = 2, 3
    for spec in [
        CatalogSpec::TwistedCubic,
        CatalogSpec::Rnc(4),
        CatalogSpec::Scroll(1, 2),
        CatalogSpec::Veronese,
        CatalogSpec::HyperellipticG2(0),
        CatalogSpec::EllipticQuintic(0),
    ] {
        let c = generate(spec, Q).unwrap();
        for p in [2usize, 3] {
            assert_eq!(
                k_p1_ideal_form(&c.ideal, p).unwrap().dim(),
                koszul_group_dim(&c.ideal, p, 1).unwrap(),
                "route mismatch for {spec:?} at p={p}"
            );
        }
    }

    // RREF determinism under row permutation
    let m = koszul_matrix(&tc.ideal, 2, 1, Slice::Quotient).unwrap();
    let rows: Vec<Vec<FieldElement>> = m.row_vectors().map(|r| r.to_vec()).collect();
    let mut perm = rows.clone();
    perm.reverse();
    perm.swap(0, 2);
    let m2 = ExactMatrix::from_rows(m.cols(), Q, perm).unwrap();
    assert_eq!(rref(&m).unwrap().matrix, rref(&m2).unwrap().matrix);
    assert_eq!(
        kernel_basis(&m).unwrap(),
        kernel_basis(&m2).unwrap(),
        "kernel must not depend on row order"
    );

    // F_p rank filter agrees with Q on all catalog matrices at p = 1000003
    for spec in [
        CatalogSpec::TwistedCubic,
        CatalogSpec::Rnc(4),
        CatalogSpec::Scroll(1, 2),
        CatalogSpec::Veronese,
        CatalogSpec::HyperellipticG2(0),
        CatalogSpec::EllipticQuintic(0),
    ] {
        let c = generate(spec, Q).unwrap();
        for (p, q, slice) in [(2, 1, Slice::Quotient), (1, 2, Slice::Ideal), (2, 1, Slice::Ideal)] {
            let m = koszul_matrix(&c.ideal, p, q, slice).unwrap();
            let mp = m.to_prime_field(1_000_003).unwrap();
            assert_eq!(
                rref(&m).unwrap().rank,
                rref(&mp).unwrap().rank,
                "rank filter mismatch for {spec:?} delta_{{{p},{q}}}"
            );
        }
    }
    println!("criterion 6 (property suites: delta^2, routes, RREF determinism, F_p filter): pass");
}

#[test]
fn criterion_7_semicontinuity_scan() {
    let ctx = syzkit::poly::RingContext::new(4, Q);
    let gens = ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2 + t*x0^2"]
        .iter()
        .map(|s| parse_parametric(s, ctx).unwrap())
        .collect();
    let family = syzkit::family::ParametricIdeal { context: ctx, generators: gens };
    let samples: Vec<FieldElement> =
        [0i64, 1, -1, 2, 5].iter().map(|&n| FieldElement::from_int(n, Q)).collect();
    let scan = syzkit::family::family_rank_scan(&family, &samples, 3, 7).unwrap();
    assert_eq!(scan.rows.len(), 8, "5 listed samples + 3 random");
    // t = 0 is the twisted cubic with the worked-example value dim phi = 3
    let at_zero = scan.rows.iter().find(|r| r.t.is_zero()).unwrap();
    assert_eq!(at_zero.dim_phi_image, 3);
    // K_{2,1} jumps at t = 0 (2 vs 0 at generic t), so the semicontinuity
    // theorem's constant-Betti hypothesis fails here and the inequality is
    // not asserted; the scan must flag that honestly.
    assert!(
        !scan.betti_data_constant,
        "the scan must report the failed constancy hypothesis"
    );

    // non-vacuous check on a family where the hypothesis does hold: the
    // twisted cubic under the coordinate change x0 -> x0 + t*x3, which is
    // projectively trivial, so all Betti data is constant
    let gens = [
        "x0*x2 + t*x2*x3 - x1^2",
        "x0*x3 + t*x3^2 - x1*x2",
        "x1*x3 - x2^2",
    ]
    .iter()
    .map(|s| parse_parametric(s, ctx).unwrap())
    .collect();
    let trivial = syzkit::family::ParametricIdeal { context: ctx, generators: gens };
    let scan = syzkit::family::family_rank_scan(&trivial, &samples, 3, 7).unwrap();
    assert!(scan.betti_data_constant);
    let max_random = scan
        .rows
        .iter()
        .filter(|r| r.random)
        .map(|r| r.dim_phi_image)
        .max()
        .unwrap();
    for r in scan.rows.iter().filter(|r| !r.random) {
        assert!(
            r.dim_phi_image <= max_random,
            "special sample t={} exceeds the generic value",
            r.t
        );
    }
    println!("criterion 7 (semicontinuity scan over Q12 + t*x0^2): pass");
}

#[test]
fn criterion_8_witness_search_soundness() {
    // every WitnessFound self-verifies against an external contraction
    let c = catalog(CatalogSpec::TwistedCubic);
    for gen in c.ideal.generators() {
        match involvement_witness(&c.ideal, gen, 16, 1).unwrap() {
            InvolvementResult::WitnessFound { witness, functional, .. } => {
                witness.validate().unwrap();
                let contracted = witness.contract(&functional).unwrap();
                assert_eq!(contracted, gen.clone(), "witness must reproduce Q exactly");
            }
            other => panic!("twisted-cubic quadric should be involved, got {other:?}"),
        }
    }

    // every NotInPhiImage is confirmed by independent subspace membership
    let h = catalog(CatalogSpec::HyperellipticG2(0));
    let s = catalog(CatalogSpec::Scroll(1, 2));
    let extra = h
        .ideal
        .generators()
        .iter()
        .find(|g| !s.ideal.ideal_membership(g).unwrap())
        .unwrap();
    match involvement_witness(&h.ideal, extra, 16, 1).unwrap() {
        InvolvementResult::NotInPhiImage => {
            let basis2_5 = MonomialBasis::new(5, 2);
            let coords = extra.coordinates(&basis2_5).unwrap();
            // confirmation path that never consults involvement_witness:
            // rebuild Im(phi) as a subspace and test membership directly
            let image: Subspace = phi_image(&h.ideal).unwrap().image;
            assert!(!image.contains_vector(&coords).unwrap());
        }
        other => panic!("expected a negative certificate, got {other:?}"),
    }
    println!("criterion 8 (witness search soundness): pass");
}
