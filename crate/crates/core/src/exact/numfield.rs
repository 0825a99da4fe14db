//! Arithmetic in quotient rings `Q[x]/(m)`.
//!
//! An element either carries a modulus or is a bare rational; bare rationals
//! promote into whatever ring they meet, so rational constants mix freely
//! with field elements. Mixing two different moduli is a programming error
//! for the operators (they panic) and a typed error for the `checked_*`
//! methods.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::error::ExactError;
use super::poly::Polynomial;
use super::rational::Rational;
use super::ring::{Domain, Field, Ring};

pub type QPoly = Polynomial<Rational>;

#[derive(Clone)]
pub struct NumberFieldElement {
    modulus: Option<Arc<QPoly>>,
    coeffs: Vec<Rational>,
}

/// Short alias used throughout the crate.
pub type Nf = NumberFieldElement;

impl NumberFieldElement {
    /// The class of `rep` in `Q[x]/(modulus)`. The modulus is made monic.
    pub fn new(modulus: &QPoly, rep: &QPoly) -> Result<Self, ExactError> {
        let m = modulus.monic()?;
        match m.degree() {
            None | Some(0) => return Err(ExactError::ZeroPolynomial),
            _ => {}
        }
        Ok(Self::from_parts(Arc::new(m), rep))
    }

    fn from_parts(modulus: Arc<QPoly>, rep: &QPoly) -> Self {
        let r = rep.rem(&modulus).expect("monic modulus");
        let n = modulus.degree().expect("nonconstant modulus");
        let mut coeffs = r.into_coeffs();
        coeffs.resize(n, Rational::zero());
        NumberFieldElement {
            modulus: Some(modulus),
            coeffs,
        }
    }

    /// The generator `x mod m`.
    pub fn generator(modulus: &QPoly) -> Result<Self, ExactError> {
        Self::new(modulus, &QPoly::x())
    }

    pub fn rational(q: Rational) -> Self {
        NumberFieldElement {
            modulus: None,
            coeffs: vec![q],
        }
    }

    pub fn modulus(&self) -> Option<&QPoly> {
        self.modulus.as_deref()
    }

    /// Reduced representative coefficients, low degree first.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn representative(&self) -> QPoly {
        QPoly::new(self.coeffs.clone())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Re-embeds `q` in the ring of `self`.
    pub fn lift(&self, q: Rational) -> Self {
        match &self.modulus {
            None => Self::rational(q),
            Some(m) => Self::from_parts(m.clone(), &QPoly::constant(q)),
        }
    }

    fn common(&self, other: &Self) -> Result<Option<Arc<QPoly>>, ExactError> {
        match (&self.modulus, &other.modulus) {
            (None, None) => Ok(None),
            (Some(m), None) | (None, Some(m)) => Ok(Some(m.clone())),
            (Some(a), Some(b)) => {
                if Arc::ptr_eq(a, b) || a == b {
                    Ok(Some(a.clone()))
                } else {
                    Err(ExactError::FieldMismatch {
                        left: a.to_string(),
                        right: b.to_string(),
                    })
                }
            }
        }
    }

    fn combine(
        &self,
        other: &Self,
        op: impl Fn(QPoly, QPoly) -> QPoly,
    ) -> Result<Self, ExactError> {
        let m = self.common(other)?;
        let r = op(self.representative(), other.representative());
        Ok(match m {
            None => Self::rational(r.coeff(0)),
            Some(m) => Self::from_parts(m, &r),
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.combine(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.combine(other, |a, b| a - b)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.combine(other, |a, b| a * b)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ExactError> {
        let inv = other.inverse()?;
        self.checked_mul(&inv)
    }

    /// Inverse via the extended Euclidean algorithm; fails when the
    /// representative shares a factor with the modulus.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        let Some(m) = &self.modulus else {
            return Ok(Self::rational(self.coeffs[0].recip()?));
        };
        let a = self.representative();
        if a.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let (g, s) = ext_gcd(&a, m)?;
        if g.degree_i() > 0 {
            return Err(ExactError::NotInvertible {
                modulus: m.to_string(),
            });
        }
        let s = s.scale(&g.coeff(0).recip()?);
        Ok(Self::from_parts(m.clone(), &s))
    }

    /// Applies a polynomial with rational coefficients.
    pub fn eval_poly(&self, p: &QPoly) -> Self {
        p.coeffs()
            .iter()
            .rev()
            .fold(self.lift(Rational::zero()), |acc, c| {
                acc * self + self.lift(c.clone())
            })
    }

    /// Galois conjugate in a quadratic ring `Q[x]/(x^2 + px + q)`, i.e. the
    /// image under `x -> -p - x`.
    pub fn quadratic_conjugate(&self) -> Option<Self> {
        let m = self.modulus.as_ref()?;
        if m.degree() != Some(2) {
            return None;
        }
        let sigma = QPoly::new(vec![-m.coeff(1), -Rational::one()]);
        Some(Self::from_parts(m.clone(), &self.representative().compose(&sigma)))
    }
}

/// Returns `(g, s)` with `g = gcd(a, m)` (not normalized) and `s*a = g mod m`.
fn ext_gcd(a: &QPoly, m: &QPoly) -> Result<(QPoly, QPoly), ExactError> {
    let (mut r0, mut r1) = (m.clone(), a.clone());
    let (mut s0, mut s1) = (QPoly::zero(), QPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1)?;
        let s2 = s0 - &(q * &s1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    Ok((r0, s0))
}

impl PartialEq for NumberFieldElement {
    fn eq(&self, other: &Self) -> bool {
        match (&self.modulus, &other.modulus) {
            (Some(a), Some(b)) => (Arc::ptr_eq(a, b) || a == b) && self.coeffs == other.coeffs,
            _ => self.is_rational() && other.is_rational() && self.coeffs[0] == other.coeffs[0],
        }
    }
}

impl Eq for NumberFieldElement {}

impl From<Rational> for NumberFieldElement {
    fn from(q: Rational) -> Self {
        Self::rational(q)
    }
}

impl From<i64> for NumberFieldElement {
    fn from(n: i64) -> Self {
        Self::rational(Rational::from_int(n))
    }
}

macro_rules! nf_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr for Nf {
            type Output = Nf;
            fn $m(self, rhs: Nf) -> Nf {
                self.$checked(&rhs).expect("number field mismatch")
            }
        }
        impl<'a> $tr<&'a Nf> for Nf {
            type Output = Nf;
            fn $m(self, rhs: &'a Nf) -> Nf {
                self.$checked(rhs).expect("number field mismatch")
            }
        }
        impl<'a, 'b> $tr<&'b Nf> for &'a Nf {
            type Output = Nf;
            fn $m(self, rhs: &'b Nf) -> Nf {
                self.$checked(rhs).expect("number field mismatch")
            }
        }
    };
}

nf_binop!(Add, add, checked_add);
nf_binop!(Sub, sub, checked_sub);
nf_binop!(Mul, mul, checked_mul);

impl Neg for Nf {
    type Output = Nf;
    fn neg(self) -> Nf {
        Nf {
            modulus: self.modulus,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Ring for Nf {
    fn zero() -> Self {
        Nf::rational(Rational::zero())
    }
    fn one() -> Self {
        Nf::rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn from_i64(n: i64) -> Self {
        Nf::from(n)
    }
}

impl Domain for Nf {
    fn div_exact(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.checked_div(rhs)
    }
}

impl Field for Nf {
    fn inv(&self) -> Result<Self, ExactError> {
        self.inverse()
    }
    fn from_rational(q: &Rational) -> Self {
        Nf::rational(q.clone())
    }
    fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }
}

impl fmt::Display for Nf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.modulus {
            None => write!(f, "{}", self.coeffs[0]),
            Some(m) => {
                let rep = self.representative();
                if rep.degree_i() <= 0 {
                    write!(f, "{}", rep.coeff(0))
                } else {
                    write!(f, "[{rep} mod {m}]")
                }
            }
        }
    }
}

impl fmt::Debug for Nf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct NfRecord {
    min_poly: Vec<Rational>,
    coeffs: Vec<Rational>,
}

impl Serialize for Nf {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match &self.modulus {
            Some(m) if !self.is_rational() => NfRecord {
                min_poly: m.coeffs().to_vec(),
                coeffs: self.coeffs.clone(),
            }
            .serialize(serializer),
            _ => self.coeffs[0].serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for Nf {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Record(NfRecord),
            Scalar(Rational),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Scalar(q) => Ok(Nf::rational(q)),
            Repr::Record(r) => {
                let m = QPoly::new(r.min_poly);
                Nf::new(&m, &QPoly::new(r.coeffs)).map_err(serde::de::Error::custom)
            }
        }
    }
}

/// Writes `n = k^2 * s` with `s` squarefree as far as trial division up to
/// `10^6` can certify; a leftover cofactor is folded into `k` if it is a
/// perfect square and into `s` otherwise.
pub fn square_split(n: &BigInt) -> (BigInt, BigInt) {
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut m = n.abs();
    let mut k = BigInt::one();
    let mut s = BigInt::one();
    let mut p = 2u64;
    while p <= 1_000_000 {
        let bp = BigInt::from(p);
        if &bp * &bp > m {
            break;
        }
        let mut e = 0u32;
        while m.is_multiple_of(&bp) {
            m /= &bp;
            e += 1;
        }
        if e > 0 {
            k *= num_traits::pow(bp.clone(), (e / 2) as usize);
            if e % 2 == 1 {
                s *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let r = m.sqrt();
    if &r * &r == m {
        k *= r;
    } else {
        s *= m;
    }
    (k, sign * s)
}

/// The quadratic field `Q(sqrt(d))` for an integer `d` that is not a square,
/// as `Q[x]/(x^2 - d)`.
pub fn quadratic_modulus(d: &BigInt) -> QPoly {
    QPoly::new(vec![-Rational::from_int(d.clone()), Rational::zero(), Rational::one()])
}

/// Roots of `a x^2 + b x + c`. When the discriminant is a rational square the
/// roots are rational; otherwise both live in `Q(sqrt(s))` with `s` the
/// squarefree kernel of the discriminant. The `+sqrt` root comes first.
pub fn nf_solve_quadratic(a: &Rational, b: &Rational, c: &Rational) -> Result<[Nf; 2], ExactError> {
    if a.is_zero() {
        return Err(ExactError::LeadingCoefficientZero);
    }
    let disc = b * b - Rational::from_int(4) * a * c;
    let two_a = Rational::from_int(2) * a;
    if let Some(r) = disc.sqrt_exact() {
        let r1 = (-b + &r) / two_a.clone();
        let r2 = (-b - &r) / two_a;
        return Ok([Nf::rational(r1), Nf::rational(r2)]);
    }
    // disc = p/q = p*q / q^2
    let pq = disc.numer() * disc.denom();
    let (k, s) = square_split(&pq);
    let scale = Rational::new(k, disc.denom().clone())?;
    let m = Arc::new(quadratic_modulus(&s));
    let re = -b / two_a.clone();
    let im = scale / two_a;
    let mk = |sign: &Rational| {
        Nf::from_parts(m.clone(), &QPoly::new(vec![re.clone(), sign * &im]))
    };
    Ok([mk(&Rational::one()), mk(&-Rational::one())])
}

/// Square root of a rational in the smallest quadratic field containing it.
pub fn nf_sqrt(q: &Rational) -> Result<Nf, ExactError> {
    let [r, _] = nf_solve_quadratic(&Rational::one(), &Rational::zero(), &-q)?;
    Ok(r)
}

/// `sqrt(d)` as an element of `Q[x]/(x^2 - d)` where `d` is used verbatim.
pub fn sqrt_in(d: i64) -> Result<Nf, ExactError> {
    Nf::generator(&quadratic_modulus(&BigInt::from(d)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn rational_roots_stay_rational() {
        let [r1, r2] = nf_solve_quadratic(&q(1, 1), &q(0, 1), &q(-1, 1)).unwrap();
        assert_eq!(r1.as_rational(), Some(q(1, 1)));
        assert_eq!(r2.as_rational(), Some(q(-1, 1)));
    }

    #[test]
    fn sqrt_minus_five_roots() {
        let [r1, r2] = nf_solve_quadratic(&q(16, 1), &q(-48, 1), &q(41, 1)).unwrap();
        assert_eq!(r1.modulus(), Some(&quadratic_modulus(&BigInt::from(-5))));
        assert_eq!(r1.coeffs(), &[q(3, 2), q(1, 4)]);
        assert_eq!(r2.coeffs(), &[q(3, 2), q(-1, 4)]);
        let p = QPoly::new(vec![q(41, 1), q(-48, 1), q(16, 1)]);
        assert!(r1.eval_poly(&p).is_zero());
        assert!(r2.eval_poly(&p).is_zero());
        assert_eq!(r1.quadratic_conjugate().unwrap(), r2);
    }

    #[test]
    fn square_split_extracts_squares() {
        assert_eq!(square_split(&BigInt::from(48)), (BigInt::from(4), BigInt::from(3)));
        assert_eq!(square_split(&BigInt::from(-20)), (BigInt::from(2), BigInt::from(-5)));
        assert_eq!(square_split(&BigInt::from(369)), (BigInt::from(3), BigInt::from(41)));
    }

    #[test]
    fn inverse_in_field_and_zero_divisor() {
        let s2 = sqrt_in(2).unwrap();
        let x = s2.clone() + Nf::from(3);
        let y = x.inverse().unwrap();
        assert_eq!(x * y, Nf::one());
        // Q[x]/(x^2 - 1) is not a field: x - 1 is a zero divisor
        let m = QPoly::new(vec![q(-1, 1), q(0, 1), q(1, 1)]);
        let g = Nf::generator(&m).unwrap();
        let zd = g - Nf::one();
        assert!(matches!(zd.inverse(), Err(ExactError::NotInvertible { .. })));
    }

    #[test]
    fn mismatched_fields_error() {
        let a = sqrt_in(2).unwrap();
        let b = sqrt_in(3).unwrap();
        assert!(matches!(a.checked_add(&b), Err(ExactError::FieldMismatch { .. })));
    }

    #[test]
    fn json_round_trip() {
        let [r, _] = nf_solve_quadratic(&q(1, 1), &q(-24, 1), &q(24, 1)).unwrap();
        let js = serde_json::to_string(&r).unwrap();
        assert_eq!(js, r#"{"min_poly":["-30","0","1"],"coeffs":["12","2"]}"#);
        let back: Nf = serde_json::from_str(&js).unwrap();
        assert_eq!(back, r);
        let ratjs = serde_json::to_string(&Nf::from(7)).unwrap();
        assert_eq!(ratjs, "\"7\"");
    }

    #[test]
    fn rational_mixes_with_field() {
        let s = sqrt_in(-5).unwrap();
        let v = Nf::from(2) * &s + Nf::rational(q(1, 3));
        assert_eq!(v.coeffs(), &[q(1, 3), q(2, 1)]);
        assert_eq!((s.clone() * &s).as_rational(), Some(q(-5, 1)));
    }
}
