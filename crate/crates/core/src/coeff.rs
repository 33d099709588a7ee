//! Exact coefficient fields: the rationals (arbitrary precision) and prime fields.
//!
//! Elements are values; every operation returns a canonical element. Rationals are
//! kept reduced with a positive denominator, prime-field residues live in `[0, p)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Descriptor of a coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// The prime field of order `p`. Fails unless `p` is prime.
    pub fn prime(p: u64) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::InvalidLiteral(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        match *self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => FieldElement::PrimeField {
                residue: (v as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        match *self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                FieldElement::PrimeField {
                    residue: r.to_u64().expect("residue fits"),
                    modulus: p,
                }
            }
        }
    }

    /// The element `num/den` of this field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        match self {
            Field::Rational => normalize(num.clone(), den.clone()),
            Field::Prime(_) => {
                if den.is_zero() {
                    return Err(Error::InvalidLiteral("zero denominator".into()));
                }
                self.from_bigint(num).checked_div(&self.from_bigint(den))
            }
        }
    }

    /// Whether `e` belongs to this field.
    pub fn contains(&self, e: &FieldElement) -> bool {
        match (self, e) {
            (Field::Rational, FieldElement::Rational(_)) => true,
            (Field::Prime(p), FieldElement::PrimeField { modulus, .. }) => p == modulus,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp {p}"),
        }
    }
}

/// An element of ℚ or of 𝔽ₚ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    PrimeField { residue: u64, modulus: u64 },
}

/// Canonical rational `num/den`, reduced, sign on the numerator.
pub fn normalize(num: BigInt, den: BigInt) -> Result<FieldElement> {
    if den.is_zero() {
        return Err(Error::InvalidLiteral("zero denominator".into()));
    }
    Ok(FieldElement::Rational(BigRational::new(num, den)))
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::PrimeField { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::PrimeField { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::PrimeField { residue, .. } => *residue == 1,
        }
    }

    /// True for rationals with a negative numerator. Prime residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_negative(),
            FieldElement::PrimeField { .. } => false,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(r) => Some(r),
            FieldElement::PrimeField { .. } => None,
        }
    }

    fn mismatch(&self, other: &FieldElement) -> Error {
        Error::FieldMismatch(format!("{} vs {}", self.field(), other.field()))
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => Ok(FieldElement::Rational(a + b)),
            (
                FieldElement::PrimeField { residue: a, modulus: p },
                FieldElement::PrimeField { residue: b, modulus: q },
            ) if p == q => Ok(FieldElement::PrimeField {
                residue: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            }),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => Ok(FieldElement::Rational(a * b)),
            (
                FieldElement::PrimeField { residue: a, modulus: p },
                FieldElement::PrimeField { residue: b, modulus: q },
            ) if p == q => Ok(FieldElement::PrimeField {
                residue: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            }),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.checked_mul(&other.invert()?)
    }

    /// Multiplicative inverse; fails on zero.
    pub fn invert(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(r) => FieldElement::Rational(r.recip()),
            FieldElement::PrimeField { residue, modulus } => FieldElement::PrimeField {
                residue: inv_mod(*residue, *modulus),
                modulus: *modulus,
            },
        })
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i128) as u64
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let m = m as u128;
    let (mut acc, mut base) = (1u128, b as u128 % m);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl<'a> Add for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &'a FieldElement) -> FieldElement {
        self.checked_add(rhs).expect("mixed coefficient fields")
    }
}

impl<'a> Sub for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &'a FieldElement) -> FieldElement {
        self.checked_sub(rhs).expect("mixed coefficient fields")
    }
}

impl<'a> Mul for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &'a FieldElement) -> FieldElement {
        self.checked_mul(rhs).expect("mixed coefficient fields")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(-r),
            FieldElement::PrimeField { residue, modulus } => FieldElement::PrimeField {
                residue: if *residue == 0 { 0 } else { modulus - residue },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::PrimeField { residue, .. } => write!(f, "{residue}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> FieldElement {
        normalize(BigInt::from(n), BigInt::from(d)).unwrap()
    }

    #[test]
    fn normalize_reduces() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(0, -7).to_string(), "0");
        assert_eq!(q(-6, -4).to_string(), "3/2");
        let FieldElement::Rational(r) = q(-6, -4) else { unreachable!() };
        assert_eq!(r.numer(), &BigInt::from(3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert!(matches!(
            normalize(BigInt::from(1), BigInt::from(0)),
            Err(Error::InvalidLiteral(_))
        ));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(q(3, 2).invert().unwrap(), q(2, 3));
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.from_i64(2).invert().unwrap(), f5.from_i64(3));
        assert_eq!(q(0, 1).invert(), Err(Error::DivisionByZero));
        assert_eq!(f5.zero().invert(), Err(Error::DivisionByZero));
    }

    #[test]
    fn prime_field_construction() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(1_000_000_007).is_ok());
        assert!(Field::prime(18446744073709551557).is_ok());
        assert!(Field::prime(3215031751).is_err());
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.from_i64(-1), f7.from_i64(6));
        assert_eq!(
            f7.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap(),
            f7.from_i64(4)
        );
    }

    #[test]
    fn mixed_fields_rejected() {
        let f5 = Field::prime(5).unwrap();
        let f7 = Field::prime(7).unwrap();
        assert!(f5.one().checked_add(&f7.one()).is_err());
        assert!(f5.one().checked_mul(&Field::Rational.one()).is_err());
    }

    #[test]
    fn huge_rationals_do_not_overflow() {
        let big = Field::Rational.from_i64(i64::MAX);
        let mut acc = big.clone();
        for _ in 0..8 {
            acc = &acc * &acc;
        }
        assert!(!acc.is_zero());
        assert!(acc.to_string().len() > 4000);
    }

    fn rat() -> impl Strategy<Value = FieldElement> {
        (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| q(n, d))
    }

    fn fp() -> impl Strategy<Value = FieldElement> {
        (0i64..10007).prop_map(|v| Field::Prime(10007).from_i64(v))
    }

    fn axioms(a: &FieldElement, b: &FieldElement, c: &FieldElement) {
        assert_eq!(&(a + b) + c, a + &(b + c));
        assert_eq!(&(a * b) * c, a * &(b * c));
        assert_eq!(a + b, b + a);
        assert_eq!(a * b, b * a);
        assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        let zero = a + &(-a);
        assert!(zero.is_zero());
        if !a.is_zero() {
            assert!((a * &a.invert().unwrap()).is_one());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn rational_field_axioms(a in rat(), b in rat(), c in rat()) {
            axioms(&a, &b, &c);
        }

        #[test]
        fn prime_field_axioms(a in fp(), b in fp(), c in fp()) {
            axioms(&a, &b, &c);
        }
    }
}
