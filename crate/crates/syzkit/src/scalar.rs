//! Exact field arithmetic: arbitrary-precision rationals and odd prime fields.
//!
//! Rationals are the ground truth for every dimension computed by the
//! toolkit; prime fields serve as a fast pre-filter for rank computations
//! (ranks can only drop under reduction mod p).

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default pre-filter prime.
pub const DEFAULT_PRIME: u64 = 1_000_003;

const MAX_PRIME: u64 = 1 << 62;

/// Which exact field scalars live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Construct a prime-field spec, verifying primality of `p`.
    pub fn prime_field(p: u64) -> Result<FieldSpec> {
        if p > 2 && p < MAX_PRIME && is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NotAPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

/// An exact scalar: a reduced fraction or a canonical residue in [0, p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rat(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl FieldElement {
    pub fn zero(spec: FieldSpec) -> FieldElement {
        match spec {
            FieldSpec::Rationals => FieldElement::Rat(BigRational::zero()),
            FieldSpec::PrimeField(p) => FieldElement::Mod { value: 0, modulus: p },
        }
    }

    pub fn one(spec: FieldSpec) -> FieldElement {
        match spec {
            FieldSpec::Rationals => FieldElement::Rat(BigRational::one()),
            FieldSpec::PrimeField(p) => FieldElement::Mod { value: 1, modulus: p },
        }
    }

    pub fn from_int(n: i64, spec: FieldSpec) -> FieldElement {
        match spec {
            FieldSpec::Rationals => FieldElement::Rat(BigRational::from(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let v = (n as i128).rem_euclid(p as i128) as u64;
                FieldElement::Mod { value: v, modulus: p }
            }
        }
    }

    /// Build `num/den` in the given field. For prime fields the denominator
    /// must be invertible mod p.
    pub fn from_ratio(num: BigInt, den: BigInt, spec: FieldSpec) -> Result<FieldElement> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match spec {
            FieldSpec::Rationals => Ok(FieldElement::Rat(BigRational::new(num, den))),
            FieldSpec::PrimeField(p) => {
                let n = bigint_mod(&num, p);
                let d = bigint_mod(&den, p);
                let di = mod_inv(d, p).ok_or(Error::DivisionByZero)?;
                Ok(FieldElement::Mod { value: mul_mod(n, di, p), modulus: p })
            }
        }
    }

    pub fn spec(&self) -> FieldSpec {
        match self {
            FieldElement::Rat(_) => FieldSpec::Rationals,
            FieldElement::Mod { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rat(r) => r.is_zero(),
            FieldElement::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rat(r) => r.is_one(),
            FieldElement::Mod { value, .. } => *value == 1,
        }
    }

    fn check_spec(&self, other: &FieldElement) -> Result<()> {
        if self.spec() == other.spec() {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_spec(other)?;
        Ok(match (self, other) {
            (FieldElement::Rat(a), FieldElement::Rat(b)) => FieldElement::Rat(a + b),
            (FieldElement::Mod { value: a, modulus: p }, FieldElement::Mod { value: b, .. }) => {
                let s = a + b;
                FieldElement::Mod { value: if s >= *p { s - p } else { s }, modulus: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_spec(other)?;
        Ok(match (self, other) {
            (FieldElement::Rat(a), FieldElement::Rat(b)) => FieldElement::Rat(a * b),
            (FieldElement::Mod { value: a, modulus: p }, FieldElement::Mod { value: b, .. }) => {
                FieldElement::Mod { value: mul_mod(*a, *b, *p), modulus: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Rat(a) => FieldElement::Rat(-a),
            FieldElement::Mod { value, modulus } => FieldElement::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rat(a) => FieldElement::Rat(a.recip()),
            FieldElement::Mod { value, modulus } => FieldElement::Mod {
                value: mod_inv(*value, *modulus).expect("nonzero residue mod prime"),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_spec(other)?;
        self.mul(&other.inv()?)
    }

    /// Reduce a rational scalar mod p. Fails if the denominator is
    /// divisible by p.
    pub fn to_prime_field(&self, p: u64) -> Result<FieldElement> {
        match self {
            FieldElement::Rat(r) => {
                let n = bigint_mod(r.numer(), p);
                let d = bigint_mod(r.denom(), p);
                let di = mod_inv(d, p).ok_or(Error::DivisionByZero)?;
                Ok(FieldElement::Mod { value: mul_mod(n, di, p), modulus: p })
            }
            FieldElement::Mod { modulus, .. } if *modulus == p => Ok(self.clone()),
            _ => Err(Error::FieldMismatch),
        }
    }

    /// Underlying rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rat(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let m = n % BigInt::from(p);
    let m = if m.sign() == Sign::Minus { m + BigInt::from(p) } else { m };
    m.to_u64().expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
