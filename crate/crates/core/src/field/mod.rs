//! Exact scalar fields: prime fields, their finite extensions, and cyclotomic fields.
//!
//! A [`Field`] is a cheap, clonable handle. Scalars are plain values and carry
//! no reference to their field; all arithmetic goes through the field handle.

mod cyclotomic;
pub(crate) mod finite;
mod rational;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use thiserror::Error;

pub use cyclotomic::{cyclotomic_polynomial, CycElem, CyclotomicField};
pub use finite::FiniteField;
pub use rational::Rational;

use crate::expr::{self, ExprRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NonPrimeP(u64),
    #[error("modulus polynomial is reducible")]
    ReducibleModulus,
    #[error("invalid cyclotomic order {0}")]
    InvalidN(i64),
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("field {p}^{e} exceeds the supported size")]
    TooLarge { p: u64, e: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}

/// Description of a field, as written in configuration files.
///
/// JSON forms: `{"prime":2}`, `{"prime":2,"power":2}`,
/// `{"prime":3,"power":2,"modulus":[2,2,1]}`, `{"cyclotomic":3}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged, try_from = "FieldSpecRaw")]
pub enum FieldSpec {
    PrimePower {
        prime: u32,
        #[serde(skip_serializing_if = "is_one_u32")]
        power: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        modulus: Option<Vec<u32>>,
    },
    Cyclotomic {
        cyclotomic: i64,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FieldSpecRaw {
    prime: Option<u32>,
    power: Option<u32>,
    modulus: Option<Vec<u32>>,
    cyclotomic: Option<i64>,
}

impl TryFrom<FieldSpecRaw> for FieldSpec {
    type Error = String;

    fn try_from(r: FieldSpecRaw) -> Result<FieldSpec, String> {
        match (r.prime, r.cyclotomic) {
            (Some(prime), None) => Ok(FieldSpec::PrimePower {
                prime,
                power: r.power.unwrap_or(1),
                modulus: r.modulus,
            }),
            (None, Some(cyclotomic)) if r.power.is_none() && r.modulus.is_none() => {
                Ok(FieldSpec::Cyclotomic { cyclotomic })
            }
            (None, Some(_)) => Err("`power` and `modulus` apply only to finite fields".into()),
            (Some(_), Some(_)) => Err("field has both `prime` and `cyclotomic`".into()),
            (None, None) => Err("field needs `prime` or `cyclotomic`".into()),
        }
    }
}

fn is_one_u32(x: &u32) -> bool {
    *x == 1
}

impl FieldSpec {
    pub fn prime(p: u32) -> Self {
        FieldSpec::PrimePower {
            prime: p,
            power: 1,
            modulus: None,
        }
    }

    pub fn prime_power(p: u32, e: u32) -> Self {
        FieldSpec::PrimePower {
            prime: p,
            power: e,
            modulus: None,
        }
    }

    pub fn cyclotomic(n: i64) -> Self {
        FieldSpec::Cyclotomic { cyclotomic: n }
    }
}

/// Exact field element. Finite-field elements are base-`p` packed digit
/// strings; cyclotomic elements are coefficient vectors of length `φ(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fin(u32),
    Cyc(CycElem),
}

#[derive(Debug)]
pub(crate) enum FieldKind {
    Finite(FiniteField),
    Cyclotomic(CyclotomicField),
}

#[derive(Debug)]
struct FieldInner {
    spec: FieldSpec,
    kind: FieldKind,
}

#[derive(Clone)]
pub struct Field {
    inner: Arc<FieldInner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.spec == other.inner.spec
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.name())
    }
}

/// Monomorphic arithmetic used by the dense kernels.
pub(crate) trait Arith: Sync {
    type E: Clone + PartialEq + Send + Sync + fmt::Debug;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    /// Panics on zero.
    fn inv(&self, a: &Self::E) -> Self::E;
    fn to_e(&self, s: &Scalar) -> Self::E;
    #[allow(clippy::wrong_self_convention)]
    fn from_e(&self, e: Self::E) -> Scalar;
}

impl Arith for FiniteField {
    type E = u32;
    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        FiniteField::add(self, *a, *b)
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        FiniteField::sub(self, *a, *b)
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        FiniteField::mul(self, *a, *b)
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        FiniteField::neg(self, *a)
    }
    #[inline]
    fn inv(&self, a: &u32) -> u32 {
        FiniteField::inv(self, *a)
    }
    #[inline]
    fn to_e(&self, s: &Scalar) -> u32 {
        match s {
            Scalar::Fin(x) => *x,
            Scalar::Cyc(_) => panic!("cyclotomic scalar in a finite field"),
        }
    }
    #[inline]
    fn from_e(&self, e: u32) -> Scalar {
        Scalar::Fin(e)
    }
}

impl Arith for CyclotomicField {
    type E = CycElem;
    fn zero(&self) -> CycElem {
        CyclotomicField::zero(self)
    }
    fn one(&self) -> CycElem {
        self.from_rational(Rational::ONE)
    }
    fn is_zero(&self, a: &CycElem) -> bool {
        CyclotomicField::is_zero(self, a)
    }
    fn add(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CyclotomicField::add(self, a, b)
    }
    fn sub(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CyclotomicField::sub(self, a, b)
    }
    fn mul(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CyclotomicField::mul(self, a, b)
    }
    fn neg(&self, a: &CycElem) -> CycElem {
        CyclotomicField::neg(self, a)
    }
    fn inv(&self, a: &CycElem) -> CycElem {
        CyclotomicField::inv(self, a).expect("inverse of zero")
    }
    fn to_e(&self, s: &Scalar) -> CycElem {
        match s {
            Scalar::Cyc(c) => c.clone(),
            Scalar::Fin(_) => panic!("finite-field scalar in a cyclotomic field"),
        }
    }
    fn from_e(&self, e: CycElem) -> Scalar {
        Scalar::Cyc(e)
    }
}

/// Runs `$body` with `$a` bound to the concrete arithmetic of `$field`.
macro_rules! with_arith {
    ($field:expr, $a:ident => $body:expr) => {
        match $field.kind() {
            $crate::field::FieldKind::Finite($a) => $body,
            $crate::field::FieldKind::Cyclotomic($a) => $body,
        }
    };
}
pub(crate) use with_arith;

impl Field {
    pub fn new(spec: &FieldSpec) -> Result<Field, FieldError> {
        let (kind, spec) = match spec {
            FieldSpec::PrimePower { prime, power, modulus } => {
                let ff = FiniteField::new(*prime, *power, modulus.clone())?;
                let resolved = FieldSpec::PrimePower {
                    prime: *prime,
                    power: *power,
                    modulus: if *power == 1 { None } else { Some(ff.modulus().to_vec()) },
                };
                (FieldKind::Finite(ff), resolved)
            }
            FieldSpec::Cyclotomic { cyclotomic } => {
                let cf = CyclotomicField::new(*cyclotomic)?;
                (FieldKind::Cyclotomic(cf), spec.clone())
            }
        };
        Ok(Field {
            inner: Arc::new(FieldInner { spec, kind }),
        })
    }

    pub fn prime(p: u32) -> Result<Field, FieldError> {
        Field::new(&FieldSpec::prime(p))
    }

    pub fn gf(p: u32, e: u32) -> Result<Field, FieldError> {
        Field::new(&FieldSpec::prime_power(p, e))
    }

    pub fn cyclotomic(n: i64) -> Result<Field, FieldError> {
        Field::new(&FieldSpec::cyclotomic(n))
    }

    pub(crate) fn kind(&self) -> &FieldKind {
        &self.inner.kind
    }

    /// The resolved spec (extension moduli filled in).
    pub fn spec(&self) -> &FieldSpec {
        &self.inner.spec
    }

    pub fn name(&self) -> String {
        match self.kind() {
            FieldKind::Finite(f) if f.degree() == 1 => format!("F_{}", f.characteristic()),
            FieldKind::Finite(f) => format!("F_{}", f.order()),
            FieldKind::Cyclotomic(c) => format!("Q(z_{})", c.order_of_root()),
        }
    }

    /// 0 for cyclotomic fields.
    pub fn characteristic(&self) -> u32 {
        match self.kind() {
            FieldKind::Finite(f) => f.characteristic(),
            FieldKind::Cyclotomic(_) => 0,
        }
    }

    /// Number of elements, `None` for infinite fields.
    pub fn order(&self) -> Option<u64> {
        match self.kind() {
            FieldKind::Finite(f) => Some(f.order() as u64),
            FieldKind::Cyclotomic(_) => None,
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self.kind(), FieldKind::Finite(f) if f.degree() == 1)
    }

    pub fn finite(&self) -> Option<&FiniteField> {
        match self.kind() {
            FieldKind::Finite(f) => Some(f),
            FieldKind::Cyclotomic(_) => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        with_arith!(self, a => a.from_e(Arith::zero(a)))
    }

    pub fn one(&self) -> Scalar {
        with_arith!(self, a => a.from_e(Arith::one(a)))
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self.kind() {
            FieldKind::Finite(f) => Scalar::Fin(f.from_int(n)),
            FieldKind::Cyclotomic(c) => Scalar::Cyc(c.from_rational(Rational::from_int(n))),
        }
    }

    pub fn from_rational(&self, r: &Rational) -> Result<Scalar, FieldError> {
        match self.kind() {
            FieldKind::Finite(f) => r
                .mod_prime(f.characteristic() as u64)
                .map(|v| Scalar::Fin(v as u32))
                .ok_or(FieldError::DivisionByZero),
            FieldKind::Cyclotomic(c) => Ok(Scalar::Cyc(c.from_rational(r.clone()))),
        }
    }

    pub fn is_zero(&self, x: &Scalar) -> bool {
        match x {
            Scalar::Fin(v) => *v == 0,
            Scalar::Cyc(c) => c.iter().all(Rational::is_zero),
        }
    }

    pub fn is_one(&self, x: &Scalar) -> bool {
        *x == self.one()
    }

    pub fn add(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (self.kind(), x, y) {
            (FieldKind::Finite(f), Scalar::Fin(a), Scalar::Fin(b)) => Scalar::Fin(f.add(*a, *b)),
            _ => with_arith!(self, a => a.from_e(Arith::add(a, &a.to_e(x), &a.to_e(y)))),
        }
    }

    pub fn sub(&self, x: &Scalar, y: &Scalar) -> Scalar {
        with_arith!(self, a => a.from_e(Arith::sub(a, &a.to_e(x), &a.to_e(y))))
    }

    pub fn mul(&self, x: &Scalar, y: &Scalar) -> Scalar {
        match (self.kind(), x, y) {
            (FieldKind::Finite(f), Scalar::Fin(a), Scalar::Fin(b)) => Scalar::Fin(f.mul(*a, *b)),
            _ => with_arith!(self, a => a.from_e(Arith::mul(a, &a.to_e(x), &a.to_e(y)))),
        }
    }

    pub fn neg(&self, x: &Scalar) -> Scalar {
        with_arith!(self, a => a.from_e(Arith::neg(a, &a.to_e(x))))
    }

    pub fn inv(&self, x: &Scalar) -> Result<Scalar, FieldError> {
        if self.is_zero(x) {
            return Err(FieldError::DivisionByZero);
        }
        Ok(with_arith!(self, a => a.from_e(Arith::inv(a, &a.to_e(x)))))
    }

    pub fn div(&self, x: &Scalar, y: &Scalar) -> Result<Scalar, FieldError> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    pub fn pow(&self, x: &Scalar, k: u64) -> Scalar {
        let mut acc = self.one();
        let mut base = x.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// The adjoined generator: `w` for `F_{p^e}` (1 when e = 1), `ζ_n` for `Q(ζ_n)`.
    pub fn generator(&self) -> Scalar {
        match self.kind() {
            FieldKind::Finite(f) => Scalar::Fin(f.generator()),
            FieldKind::Cyclotomic(c) => Scalar::Cyc(c.zeta()),
        }
    }

    /// ζ_n for a cyclotomic field.
    pub fn primitive_root_of_unity(&self) -> Option<Scalar> {
        match self.kind() {
            FieldKind::Cyclotomic(c) => Some(Scalar::Cyc(c.zeta())),
            FieldKind::Finite(_) => None,
        }
    }

    /// Order of the distinguished root of unity (cyclotomic fields only).
    pub fn root_of_unity_order(&self) -> Option<u32> {
        match self.kind() {
            FieldKind::Cyclotomic(c) => Some(c.order_of_root()),
            FieldKind::Finite(_) => None,
        }
    }

    /// A primitive `n`-th root of unity, if the field contains one.
    pub fn root_of_unity(&self, n: u32) -> Option<Scalar> {
        match self.kind() {
            FieldKind::Cyclotomic(c) => {
                let m = c.order_of_root();
                // ζ_m^{m/n} when n | m, and -ζ_m^{...} covers n = 2m for odd m
                if n == 0 {
                    return None;
                }
                let z = self.generator();
                if m % n == 0 {
                    return Some(self.pow(&z, (m / n) as u64));
                }
                if m % 2 == 1 && (2 * m) % n == 0 {
                    let minus_z = self.neg(&z);
                    return Some(self.pow(&minus_z, (2 * m / n) as u64));
                }
                None
            }
            FieldKind::Finite(f) => {
                let q = f.order() as u64;
                if n == 0 || !(q - 1).is_multiple_of(n as u64) {
                    return None;
                }
                // any element of multiplicative order n
                (1..f.order()).map(Scalar::Fin).find(|x| {
                    let x1 = self.pow(x, n as u64);
                    self.is_one(&x1) && (1..n).all(|k| !self.is_one(&self.pow(x, k as u64)))
                })
            }
        }
    }

    /// All elements of a finite field in encoding order.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        self.finite().map(|f| (0..f.order()).map(Scalar::Fin).collect())
    }

    pub fn frobenius(&self, x: &Scalar) -> Scalar {
        match self.kind() {
            FieldKind::Finite(f) => self.pow(x, f.characteristic() as u64),
            FieldKind::Cyclotomic(_) => x.clone(),
        }
    }

    /// Uniform element of a finite field; small integer coefficients for cyclotomic fields.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self.kind() {
            FieldKind::Finite(f) => Scalar::Fin(rng.gen_range(0..f.order())),
            FieldKind::Cyclotomic(c) => Scalar::Cyc(
                (0..c.degree())
                    .map(|_| Rational::from_int(rng.gen_range(-3..=3)))
                    .collect(),
            ),
        }
    }

    /// Maps a prime-subfield element of `from` into `self`. Finite fields of the
    /// same characteristic share the encoding of their prime subfield.
    pub fn embed(&self, from: &Field, x: &Scalar) -> Result<Scalar, FieldError> {
        if from == self {
            return Ok(x.clone());
        }
        match (from.kind(), self.kind(), x) {
            (FieldKind::Finite(a), FieldKind::Finite(b), Scalar::Fin(v))
                if a.characteristic() == b.characteristic() && *v < a.characteristic() =>
            {
                Ok(Scalar::Fin(*v))
            }
            _ => Err(FieldError::FieldMismatch(from.name(), self.name())),
        }
    }

    /// Whether every element of `from` can be embedded into `self` by [`Field::embed`].
    pub fn embeds(&self, from: &Field) -> bool {
        from == self
            || matches!((from.kind(), self.kind()), (FieldKind::Finite(a), FieldKind::Finite(b))
                if a.degree() == 1 && a.characteristic() == b.characteristic())
    }

    /// Canonical text form: `w` for the finite-field generator, `z` for ζ_n.
    pub fn format(&self, x: &Scalar) -> String {
        match (self.kind(), x) {
            (FieldKind::Finite(f), Scalar::Fin(v)) => {
                if f.degree() == 1 {
                    return v.to_string();
                }
                let coeffs = f.coefficients(*v);
                let terms: Vec<String> = coeffs
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| monomial_text(&c.to_string(), "w", i))
                    .collect();
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            }
            (FieldKind::Cyclotomic(_), Scalar::Cyc(c)) => {
                let mut out = String::new();
                for (i, r) in c.iter().enumerate().rev() {
                    if r.is_zero() {
                        continue;
                    }
                    let t = monomial_text(&r.to_string(), "z", i);
                    if !out.is_empty() && !t.starts_with('-') {
                        out.push('+');
                    }
                    out.push_str(&t);
                }
                if out.is_empty() {
                    "0".into()
                } else {
                    out
                }
            }
            _ => format!("{x:?}"),
        }
    }

    pub fn parse(&self, s: &str) -> Result<Scalar, FieldError> {
        let e = expr::parse(s).map_err(|e| FieldError::Parse(e.to_string()))?;
        expr::eval(&ScalarRing(self), &e).map_err(FieldError::Parse)
    }
}

fn monomial_text(coeff: &str, var: &str, power: usize) -> String {
    if power == 0 {
        return coeff.to_string();
    }
    let v = if power == 1 {
        var.to_string()
    } else {
        format!("{var}^{power}")
    };
    match coeff {
        "1" => v,
        "-1" => format!("-{v}"),
        c => format!("{c}*{v}"),
    }
}

pub(crate) struct ScalarRing<'a>(pub &'a Field);

impl ExprRing for ScalarRing<'_> {
    type Value = Scalar;

    fn int(&self, n: &BigInt) -> Result<Scalar, String> {
        match self.0.kind() {
            FieldKind::Finite(f) => {
                let p = BigInt::from(f.characteristic());
                Ok(Scalar::Fin(n.mod_floor(&p).to_u32().expect("residue fits")))
            }
            FieldKind::Cyclotomic(c) => Ok(Scalar::Cyc(
                c.from_rational(Rational::from_big(BigRational::from_integer(n.clone()))),
            )),
        }
    }

    fn var(&self, name: &str) -> Result<Scalar, String> {
        match (self.0.kind(), name) {
            (FieldKind::Finite(f), "w") if f.degree() > 1 => Ok(self.0.generator()),
            (FieldKind::Cyclotomic(_), "z") => Ok(self.0.generator()),
            _ => Err(format!("unknown symbol {name:?} in {}", self.0.name())),
        }
    }

    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.0.add(a, b)
    }

    fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.0.sub(a, b)
    }

    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.0.mul(a, b)
    }

    fn neg(&self, a: &Scalar) -> Scalar {
        self.0.neg(a)
    }

    fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, String> {
        self.0.div(a, b).map_err(|e| e.to_string())
    }

    fn one(&self) -> Scalar {
        self.0.one()
    }
}

/// Shorthand used by constructors: a cyclotomic coefficient vector from integers.
pub fn cyc_from_ints(coeffs: &[i64]) -> CycElem {
    coeffs.iter().map(|&c| Rational::from_int(c)).collect::<SmallVec<_>>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn all_fields_up_to_16() -> Vec<Field> {
        vec![
            Field::prime(2).unwrap(),
            Field::prime(3).unwrap(),
            Field::prime(5).unwrap(),
            Field::prime(7).unwrap(),
            Field::gf(2, 2).unwrap(),
            Field::gf(2, 3).unwrap(),
            Field::gf(2, 4).unwrap(),
            Field::gf(3, 2).unwrap(),
            Field::prime(11).unwrap(),
            Field::prime(13).unwrap(),
        ]
    }

    #[test]
    fn zeta3_relation() {
        let k = Field::cyclotomic(3).unwrap();
        let z = k.generator();
        let s = k.add(&k.add(&k.mul(&z, &z), &z), &k.one());
        assert!(k.is_zero(&s));
        assert!(k.is_one(&k.pow(&z, 3)));
        assert!(!k.is_one(&z));
    }

    #[test]
    fn characteristic_two() {
        let k = Field::prime(2).unwrap();
        assert!(k.is_zero(&k.add(&k.one(), &k.one())));
    }

    #[test]
    fn inverses_from_the_examples() {
        let f4 = Field::gf(2, 2).unwrap();
        let w = f4.generator();
        assert_eq!(f4.format(&f4.inv(&w).unwrap()), "w+1");
        let q3 = Field::cyclotomic(3).unwrap();
        let z = q3.generator();
        assert_eq!(q3.inv(&z).unwrap(), q3.pow(&z, 2));
        let f2 = Field::prime(2).unwrap();
        assert_eq!(f2.inv(&f2.one()).unwrap(), f2.one());
        assert_eq!(f2.inv(&f2.zero()), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn f4_multiplication_table_matches_brute_force() {
        // oracle: polynomial multiplication of (a1 w + a0)(b1 w + b0) with w^2 = w + 1
        let f4 = Field::gf(2, 2).unwrap();
        for a in 0..4u32 {
            for b in 0..4u32 {
                let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
                let c2 = a1 & b1;
                let c1 = (a1 & b0) ^ (a0 & b1) ^ c2;
                let c0 = (a0 & b0) ^ c2;
                assert_eq!(f4.mul(&Scalar::Fin(a), &Scalar::Fin(b)), Scalar::Fin(c0 | (c1 << 1)));
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small_fields() {
        for k in all_fields_up_to_16() {
            let els = k.elements().unwrap();
            for a in &els {
                if !k.is_zero(a) {
                    assert!(k.is_one(&k.mul(a, &k.inv(a).unwrap())));
                }
                assert!(k.is_zero(&k.add(a, &k.neg(a))));
                for b in &els {
                    assert_eq!(k.add(a, b), k.add(b, a));
                    assert_eq!(k.mul(a, b), k.mul(b, a));
                    // Frobenius is additive
                    assert_eq!(k.frobenius(&k.add(a, b)), k.add(&k.frobenius(a), &k.frobenius(b)));
                    for c in &els {
                        assert_eq!(k.mul(&k.mul(a, b), c), k.mul(a, &k.mul(b, c)));
                        assert_eq!(k.add(&k.add(a, b), c), k.add(a, &k.add(b, c)));
                        assert_eq!(k.mul(a, &k.add(b, c)), k.add(&k.mul(a, b), &k.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn field_axioms_random_large_fields() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
        for k in [
            Field::gf(3, 4).unwrap(),
            Field::gf(5, 3).unwrap(),
            Field::cyclotomic(5).unwrap(),
            Field::cyclotomic(12).unwrap(),
        ] {
            for _ in 0..1000 {
                let (a, b, c) = (k.random(&mut rng), k.random(&mut rng), k.random(&mut rng));
                assert_eq!(k.mul(&k.mul(&a, &b), &c), k.mul(&a, &k.mul(&b, &c)));
                assert_eq!(k.mul(&a, &k.add(&b, &c)), k.add(&k.mul(&a, &b), &k.mul(&a, &c)));
                if !k.is_zero(&a) {
                    assert!(k.is_one(&k.mul(&a, &k.inv(&a).unwrap())));
                }
            }
        }
    }

    #[test]
    fn roots_of_unity_have_exact_order() {
        for n in 1..=12 {
            let k = Field::cyclotomic(n).unwrap();
            let z = k.primitive_root_of_unity().unwrap();
            assert!(k.is_one(&k.pow(&z, n as u64)));
            for m in 1..n {
                assert!(!k.is_one(&k.pow(&z, m as u64)), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn format_and_parse_round_trip() {
        let q3 = Field::cyclotomic(3).unwrap();
        let x = q3.parse("z^2 + 1").unwrap();
        // z^2 + 1 = -z
        assert_eq!(q3.format(&x), "-z");
        let y = q3.parse("1/2*z - 3").unwrap();
        assert_eq!(q3.format(&y), "1/2*z-3");
        assert_eq!(q3.parse(&q3.format(&y)).unwrap(), y);
        let f4 = Field::gf(2, 2).unwrap();
        assert_eq!(f4.format(&f4.parse("w^2").unwrap()), "w+1");
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.format(&f5.parse("-1/2").unwrap()), "2");
        assert!(f5.parse("w").is_err());
    }

    #[test]
    fn spec_json_forms() {
        let s: FieldSpec = serde_json::from_str(r#"{"prime":2}"#).unwrap();
        assert_eq!(s, FieldSpec::prime(2));
        let s: FieldSpec = serde_json::from_str(r#"{"cyclotomic":3}"#).unwrap();
        assert_eq!(s, FieldSpec::cyclotomic(3));
        assert_eq!(serde_json::to_string(&FieldSpec::prime(2)).unwrap(), r#"{"prime":2}"#);
        assert!(matches!(Field::cyclotomic(0), Err(FieldError::InvalidN(0))));
    }
}
