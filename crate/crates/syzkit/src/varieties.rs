//! Deterministic generators for the catalog test varieties, plus
//! determinant/Pfaffian helpers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::GradedIdeal;
use crate::koszul::exterior_basis;
use crate::poly::{HomogeneousPoly, Monomial, MonomialBasis, RingContext};
use crate::scalar::{FieldElement, FieldSpec};
use crate::syzygy::SyzygyElement;

const RESAMPLE_BUDGET: u32 = 100;

/// Catalog entry descriptors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogSpec {
    TwistedCubic,
    /// Rational normal curve of degree d in P^d.
    Rnc(usize),
    /// Rational normal scroll S(e1, e2).
    Scroll(usize, usize),
    /// Veronese surface in P^5.
    Veronese,
    /// Genus-2 hyperelliptic curve of degree 6 in P^4: scroll quadrics
    /// plus one seeded quadric, filtered by the Hilbert function.
    HyperellipticG2(u64),
    /// Elliptic quintic in P^4: Pfaffians of a seeded skew matrix of
    /// linear forms, filtered by the Hilbert function.
    EllipticQuintic(u64),
}

impl CatalogSpec {
    /// Parse a CLI catalog name such as `twisted-cubic`, `rnc:5` or
    /// `scroll:1,2`. Seeds for the seeded entries are supplied separately.
    pub fn parse(name: &str, seed: u64) -> Result<CatalogSpec> {
        let bad = |msg: &str| Error::FileFormat { line: None, msg: msg.to_string() };
        match name {
            "twisted-cubic" => Ok(CatalogSpec::TwistedCubic),
            "veronese" => Ok(CatalogSpec::Veronese),
            "hyperelliptic-g2" => Ok(CatalogSpec::HyperellipticG2(seed)),
            "elliptic-quintic" => Ok(CatalogSpec::EllipticQuintic(seed)),
            _ => {
                if let Some(d) = name.strip_prefix("rnc:") {
                    let d: usize = d.parse().map_err(|_| bad("bad rnc degree"))?;
                    if d < 2 {
                        return Err(bad("rnc degree must be >= 2"));
                    }
                    Ok(CatalogSpec::Rnc(d))
                } else if let Some(es) = name.strip_prefix("scroll:") {
                    let parts: Vec<&str> = es.split(',').collect();
                    if parts.len() != 2 {
                        return Err(bad("scroll takes two degrees, e.g. scroll:1,2"));
                    }
                    let e1: usize = parts[0].parse().map_err(|_| bad("bad scroll degree"))?;
                    let e2: usize = parts[1].parse().map_err(|_| bad("bad scroll degree"))?;
                    if e1 < 1 || e2 < 1 {
                        return Err(bad("scroll degrees must be >= 1"));
                    }
                    Ok(CatalogSpec::Scroll(e1, e2))
                } else {
                    Err(bad(&format!(
                        "unknown catalog entry '{name}' (expected twisted-cubic, rnc:<d>, \
                         scroll:<e1>,<e2>, veronese, hyperelliptic-g2, elliptic-quintic)"
                    )))
                }
            }
        }
    }
}

/// A generated catalog ideal, with the paper's explicit syzygy for the
/// twisted cubic.
#[derive(Debug, Clone)]
pub struct Catalog {
    pub ideal: GradedIdeal,
    /// delta(gamma) for the twisted cubic.
    pub gamma_syzygy: Option<SyzygyElement>,
    /// gamma itself, as a coordinate vector in Lambda^2 V (x) V matching
    /// the column order of `koszul_matrix(_, 2, 1, Ambient)`.
    pub gamma_wedge_tensor: Option<Vec<FieldElement>>,
    /// Seed that passed the Hilbert filter, for seeded entries.
    pub seed_used: Option<u64>,
}

fn var_poly(ctx: RingContext, i: usize) -> HomogeneousPoly {
    HomogeneousPoly::monomial(ctx, Monomial::var(i, ctx.num_vars), FieldElement::one(ctx.field))
}

fn minor2x2(
    top: &[HomogeneousPoly],
    bottom: &[HomogeneousPoly],
    c1: usize,
    c2: usize,
) -> Result<HomogeneousPoly> {
    top[c1].multiply(&bottom[c2])?.sub(&top[c2].multiply(&bottom[c1])?)
}

fn minors_of_2xn(top: &[HomogeneousPoly], bottom: &[HomogeneousPoly]) -> Result<Vec<HomogeneousPoly>> {
    let n = top.len();
    let mut out = Vec::new();
    for c1 in 0..n {
        for c2 in c1 + 1..n {
            out.push(minor2x2(top, bottom, c1, c2)?);
        }
    }
    Ok(out)
}

pub fn generate(spec: CatalogSpec, field: FieldSpec) -> Result<Catalog> {
    match spec {
        CatalogSpec::TwistedCubic => twisted_cubic(field),
        CatalogSpec::Rnc(d) => {
            let ctx = RingContext::new(d + 1, field);
            let top: Vec<_> = (0..d).map(|i| var_poly(ctx, i)).collect();
            let bottom: Vec<_> = (1..=d).map(|i| var_poly(ctx, i)).collect();
            let ideal = GradedIdeal::new(ctx, minors_of_2xn(&top, &bottom)?)?;
            Ok(Catalog { ideal, gamma_syzygy: None, gamma_wedge_tensor: None, seed_used: None })
        }
        CatalogSpec::Scroll(e1, e2) => {
            let ctx = RingContext::new(e1 + e2 + 2, field);
            let mut top = Vec::new();
            let mut bottom = Vec::new();
            for i in 0..e1 {
                top.push(var_poly(ctx, i));
                bottom.push(var_poly(ctx, i + 1));
            }
            for i in 0..e2 {
                top.push(var_poly(ctx, e1 + 1 + i));
                bottom.push(var_poly(ctx, e1 + 2 + i));
            }
            let ideal = GradedIdeal::new(ctx, minors_of_2xn(&top, &bottom)?)?;
            Ok(Catalog { ideal, gamma_syzygy: None, gamma_wedge_tensor: None, seed_used: None })
        }
        CatalogSpec::Veronese => {
            let ctx = RingContext::new(6, field);
            let v = |i| var_poly(ctx, i);
            // symmetric matrix [[x0,x1,x2],[x1,x3,x4],[x2,x4,x5]]
            let m = [
                [v(0), v(1), v(2)],
                [v(1), v(3), v(4)],
                [v(2), v(4), v(5)],
            ];
            let mut gens = Vec::new();
            let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
            for (a, rows) in pairs.iter().enumerate() {
                for (b, cols) in pairs.iter().enumerate() {
                    if a > b {
                        continue; // M(I,J) = M(J,I) for a symmetric matrix
                    }
                    let det = m[rows.0][cols.0]
                        .multiply(&m[rows.1][cols.1])?
                        .sub(&m[rows.0][cols.1].multiply(&m[rows.1][cols.0])?)?;
                    gens.push(det);
                }
            }
            let ideal = GradedIdeal::new(ctx, gens)?;
            Ok(Catalog { ideal, gamma_syzygy: None, gamma_wedge_tensor: None, seed_used: None })
        }
        CatalogSpec::HyperellipticG2(seed) => hyperelliptic_g2(seed, field),
        CatalogSpec::EllipticQuintic(seed) => elliptic_quintic(seed, field),
    }
}

fn twisted_cubic(field: FieldSpec) -> Result<Catalog> {
    let ctx = RingContext::new(4, field);
    let parse = |s: &str| crate::parse::parse_poly(s, ctx);
    let q01 = parse("x0*x2 - x1^2")?;
    let q02 = parse("x0*x3 - x1*x2")?;
    let q12 = parse("x1*x3 - x2^2")?;
    let ideal = GradedIdeal::new(ctx, vec![q01.clone(), q02.clone(), q12.clone()])?;

    // delta(gamma) = x0 (x) Q12 - x1 (x) Q02 + x2 (x) Q01
    let minus_one = FieldElement::from_int(-1, field);
    let gamma_syzygy = SyzygyElement::new(
        ctx,
        vec![q12, q02.scale(&minus_one)?, q01, HomogeneousPoly::zero(ctx, 2)],
    )?;

    // gamma = 1/2 x0^x1 (x) x3 - x0^x2 (x) x2 + 1/2 x0^x3 (x) x1
    //         + x1^x2 (x) x1 - 1/2 x1^x3 (x) x0
    let ext2 = exterior_basis(4, 2);
    let wedge = |a: usize, b: usize| ext2.iter().position(|w| w == &[a, b]).unwrap();
    let half = |n: i64| {
        FieldElement::from_ratio(n.into(), 2.into(), field).expect("2 invertible")
    };
    let sym1 = MonomialBasis::new(4, 1).len();
    let mut gamma = vec![FieldElement::zero(field); ext2.len() * sym1];
    gamma[wedge(0, 1) * sym1 + 3] = half(1);
    gamma[wedge(0, 2) * sym1 + 2] = FieldElement::from_int(-1, field);
    gamma[wedge(0, 3) * sym1 + 1] = half(1);
    gamma[wedge(1, 2) * sym1 + 1] = FieldElement::one(field);
    gamma[wedge(1, 3) * sym1 + 0] = half(-1);

    Ok(Catalog {
        ideal,
        gamma_syzygy: Some(gamma_syzygy),
        gamma_wedge_tensor: Some(gamma),
        seed_used: None,
    })
}

fn scroll12_generators(ctx: RingContext) -> Result<Vec<HomogeneousPoly>> {
    let top = [var_poly(ctx, 0), var_poly(ctx, 2), var_poly(ctx, 3)];
    let bottom = [var_poly(ctx, 1), var_poly(ctx, 3), var_poly(ctx, 4)];
    minors_of_2xn(&top, &bottom)
}

fn hyperelliptic_g2(seed: u64, field: FieldSpec) -> Result<Catalog> {
    let ctx = RingContext::new(5, field);
    let scroll = scroll12_generators(ctx)?;
    let basis2 = MonomialBasis::new(5, 2);
    for s in 0..RESAMPLE_BUDGET {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(s as u64));
        let extra = random_poly(&mut rng, ctx, &basis2)?;
        if extra.is_zero() {
            continue;
        }
        let mut gens = scroll.clone();
        gens.push(extra);
        let ideal = GradedIdeal::new(ctx, gens)?;
        // degree-6 genus-2 Hilbert function: 6t - 1
        if (1..=4).all(|t| ideal.hilbert_quotient(t).unwrap_or(0) == 6 * t - 1) {
            return Ok(Catalog {
                ideal,
                gamma_syzygy: None,
                gamma_wedge_tensor: None,
                seed_used: Some(seed.wrapping_add(s as u64)),
            });
        }
    }
    Err(Error::GenerationFailed(RESAMPLE_BUDGET))
}

fn elliptic_quintic(seed: u64, field: FieldSpec) -> Result<Catalog> {
    let ctx = RingContext::new(5, field);
    let basis1 = MonomialBasis::new(5, 1);
    for s in 0..RESAMPLE_BUDGET {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(s as u64));
        // 5x5 skew matrix of random linear forms
        let mut m = vec![vec![HomogeneousPoly::zero(ctx, 1); 5]; 5];
        for i in 0..5 {
            for j in i + 1..5 {
                let f = random_poly(&mut rng, ctx, &basis1)?;
                m[j][i] = f.scale(&FieldElement::from_int(-1, field))?;
                m[i][j] = f;
            }
        }
        let gens = pfaffians(&m)?;
        if gens.iter().any(|g| g.is_zero()) {
            continue;
        }
        let ideal = GradedIdeal::new(ctx, gens)?;
        // elliptic quintic Hilbert function: 5t
        if ideal.graded_piece(2)?.dim() == 5
            && (1..=4).all(|t| ideal.hilbert_quotient(t).unwrap_or(0) == 5 * t)
        {
            return Ok(Catalog {
                ideal,
                gamma_syzygy: None,
                gamma_wedge_tensor: None,
                seed_used: Some(seed.wrapping_add(s as u64)),
            });
        }
    }
    Err(Error::GenerationFailed(RESAMPLE_BUDGET))
}

fn random_poly(
    rng: &mut ChaCha8Rng,
    ctx: RingContext,
    basis: &MonomialBasis,
) -> Result<HomogeneousPoly> {
    let terms: Vec<_> = basis
        .monomials
        .iter()
        .map(|m| {
            let c: i64 = rng.gen_range(-3..=3);
            (m.clone(), FieldElement::from_int(c, ctx.field))
        })
        .collect();
    HomogeneousPoly::from_terms(ctx, basis.degree, terms)
}

/// The Pfaffian of the 4x4 skew submatrix of `m` on the given indices:
/// m_ab m_cd - m_ac m_bd + m_ad m_bc.
pub fn pfaffian4(m: &[Vec<HomogeneousPoly>], keep: [usize; 4]) -> Result<HomogeneousPoly> {
    let [a, b, c, d] = keep;
    m[a][b]
        .multiply(&m[c][d])?
        .sub(&m[a][c].multiply(&m[b][d])?)?
        .add(&m[a][d].multiply(&m[b][c])?)
}

/// The five principal 4x4 Pfaffians of a 5x5 skew matrix of linear
/// forms; Pf_i is the Pfaffian with row/column i removed, times (-1)^i.
pub fn pfaffians(m: &[Vec<HomogeneousPoly>]) -> Result<Vec<HomogeneousPoly>> {
    if m.len() != 5 || m.iter().any(|row| row.len() != 5) {
        return Err(Error::NotSkew);
    }
    for i in 0..5 {
        if !m[i][i].is_zero() {
            return Err(Error::NotSkew);
        }
        for j in 0..5 {
            if !m[i][j].is_zero() && m[i][j].degree != 1 {
                return Err(Error::NotSkew);
            }
            if !m[i][j].add(&m[j][i])?.is_zero() {
                return Err(Error::NotSkew);
            }
        }
    }
    let mut out = Vec::with_capacity(5);
    for i in 0..5 {
        let keep: Vec<usize> = (0..5).filter(|&k| k != i).collect();
        let pf = pfaffian4(m, [keep[0], keep[1], keep[2], keep[3]])?;
        out.push(if i % 2 == 1 {
            pf.scale(&FieldElement::from_int(-1, m[0][1].context.field))?
        } else {
            pf
        });
    }
    Ok(out)
}
