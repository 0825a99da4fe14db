//! Dense univariate polynomials.
//!
//! Coefficients are stored low degree first and the vector never ends in a
//! zero, so the zero polynomial is the empty vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::error::ExactError;
use super::rational::Rational;
use super::ring::{Domain, Field, Ring};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound(serialize = "R: Serialize + Clone", deserialize = "R: Deserialize<'de> + Ring"))]
#[serde(from = "Vec<R>", into = "Vec<R>")]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> From<Vec<R>> for Polynomial<R> {
    fn from(coeffs: Vec<R>) -> Self {
        Polynomial::new(coeffs)
    }
}

impl<R> From<Polynomial<R>> for Vec<R> {
    fn from(p: Polynomial<R>) -> Self {
        p.coeffs
    }
}

impl<R: Ring> Polynomial<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `x - r`.
    pub fn linear_root(r: R) -> Self {
        Self::new(vec![-r, R::one()])
    }

    /// Product of `x - r` over the given roots.
    pub fn from_roots<'a, I>(roots: I) -> Self
    where
        I: IntoIterator<Item = &'a R>,
        R: 'a,
    {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| acc * Self::linear_root(r.clone()))
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`.
    pub fn degree_i(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn leading_coeff(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * &R::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self)
    }

    /// Coefficient-wise image under a ring map.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Polynomial<S> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// `p(q(x))`.
    pub fn compose(&self, q: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc * q + Self::constant(c.clone()))
    }

    /// Reverses the coefficient list as a polynomial of formal degree `n`,
    /// i.e. `x^n p(1/x)`.
    pub fn reversed(&self, n: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(n + 1, R::zero());
        c.reverse();
        Self::new(c)
    }
}

impl<R: Domain> Polynomial<R> {
    /// Pseudo-remainder: `lc(d)^(deg p - deg d + 1) * p mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Result<Self, ExactError> {
        let dd = d.degree().ok_or(ExactError::ZeroPolynomial)?;
        let lc = d.coeffs[dd].clone();
        let mut r = self.clone();
        let mut steps = match self.degree() {
            Some(n) if n >= dd => n - dd + 1,
            _ => return Ok(r),
        };
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let top = r.coeffs[rd].clone();
            let shift = rd - dd;
            let mut next: Vec<R> = r.coeffs.iter().map(|c| c.clone() * &lc).collect();
            for (i, c) in d.coeffs.iter().enumerate() {
                next[i + shift] = next[i + shift].clone() - c.clone() * &top;
            }
            r = Self::new(next);
            steps -= 1;
        }
        let fix = lc.pow(steps as u32);
        Ok(r.scale(&fix))
    }

    /// Divides every coefficient exactly by `c`.
    pub fn div_exact_scalar(&self, c: &R) -> Result<Self, ExactError> {
        Ok(Self::new(
            self.coeffs
                .iter()
                .map(|a| a.div_exact(c))
                .collect::<Result<_, _>>()?,
        ))
    }

    /// Resultant via the subresultant polynomial remainder sequence.
    ///
    /// The sign convention is that of the Sylvester determinant, so that
    /// `res(p, q) = lc(p)^deg(q) * prod q(alpha_i)` over the roots of `p`.
    pub fn resultant(&self, other: &Self) -> Result<R, ExactError> {
        let (Some(_), Some(_)) = (self.degree(), other.degree()) else {
            return Ok(R::zero());
        };
        let mut a = self.clone();
        let mut b = other.clone();
        let mut sign = false;
        let (da, db) = (a.degree_i(), b.degree_i());
        if da < db {
            std::mem::swap(&mut a, &mut b);
            if da % 2 == 1 && db % 2 == 1 {
                sign = !sign;
            }
        }
        if b.degree_i() == 0 {
            let r = b.coeffs[0].pow(a.degree_i() as u32);
            return Ok(if sign { -r } else { r });
        }
        let mut g = R::one();
        let mut h = R::one();
        loop {
            let (na, nb) = (a.degree_i(), b.degree_i());
            let delta = (na - nb) as u32;
            if na % 2 == 1 && nb % 2 == 1 {
                sign = !sign;
            }
            let r = a.pseudo_rem(&b)?;
            if r.is_zero() {
                return Ok(R::zero());
            }
            a = b;
            b = r.div_exact_scalar(&(g.clone() * &h.pow(delta)))?;
            g = a.leading_coeff().cloned().expect("nonzero");
            h = if delta == 0 {
                h
            } else {
                g.pow(delta).div_exact(&h.pow(delta - 1))?
            };
            if b.degree_i() == 0 {
                let da = a.degree_i() as u32;
                let lb = b.coeffs[0].pow(da);
                let res = lb.div_exact(&h.pow(da - 1))?;
                return Ok(if sign { -res } else { res });
            }
        }
    }

    /// Discriminant with the convention `res(p, p') = (-1)^(n(n-1)/2) lc(p) disc(p)`.
    pub fn discriminant(&self) -> Result<R, ExactError> {
        let n = self.degree().ok_or(ExactError::ZeroPolynomial)?;
        if n == 0 {
            return Err(ExactError::LeadingCoefficientZero);
        }
        let r = self.resultant(&self.derivative())?;
        let q = r.div_exact(self.leading_coeff().expect("nonzero"))?;
        Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
    }
}

impl<F: Field> Polynomial<F> {
    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), ExactError> {
        let dd = d.degree().ok_or(ExactError::DivisionByZero)?;
        let lc_inv = d.coeffs[dd].inv()?;
        let mut r = self.coeffs.clone();
        let n = match self.degree() {
            Some(n) if n >= dd => n,
            _ => return Ok((Self::zero(), self.clone())),
        };
        let mut q = vec![F::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = r[k + dd].clone() * &lc_inv;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k + i] = r[k + i].clone() - dc.clone() * &c;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self, ExactError> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact quotient; errors if the remainder is nonzero.
    pub fn div_exact_poly(&self, d: &Self) -> Result<Self, ExactError> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ExactError::InexactDivision)
        }
    }

    pub fn divides(&self, other: &Self) -> Result<bool, ExactError> {
        Ok(other.rem(self)?.is_zero())
    }

    pub fn monic(&self) -> Result<Self, ExactError> {
        match self.leading_coeff() {
            None => Ok(Self::zero()),
            Some(lc) => Ok(self.scale(&lc.inv()?)),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Result<Self, ExactError> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's squarefree decomposition: pairs `(g_i, i)` with each `g_i`
    /// monic, squarefree and pairwise coprime, and `p = lc * prod g_i^i`.
    /// Factors equal to 1 are omitted.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, usize)>, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        let mut out = Vec::new();
        let f = self.monic()?;
        let df = f.derivative();
        let a0 = f.gcd(&df)?;
        let mut b = f.div_exact_poly(&a0)?;
        let mut c = df.div_exact_poly(&a0)?;
        let mut d = c - b.derivative();
        let mut i = 1;
        while b.degree_i() > 0 {
            let a = b.gcd(&d)?;
            if a.degree_i() > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact_poly(&a)?;
            c = d.div_exact_poly(&a)?;
            d = c - b.derivative();
            i += 1;
        }
        Ok(out)
    }

    /// Multiset of root multiplicities over the algebraic closure, sorted
    /// in decreasing order.
    pub fn multiplicity_profile(&self) -> Result<Vec<usize>, ExactError> {
        let mut out = Vec::new();
        for (g, m) in self.squarefree_decomposition()? {
            out.extend(std::iter::repeat_n(m, g.degree().unwrap_or(0)));
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }

    /// Largest squarefree divisor, monic.
    pub fn squarefree_part(&self) -> Result<Self, ExactError> {
        let f = self.monic()?;
        f.div_exact_poly(&f.gcd(&f.derivative())?)
    }
}

impl Polynomial<Rational> {
    /// Clears denominators and content: the primitive integer polynomial with
    /// positive leading coefficient, returned as rationals.
    pub fn primitive_integer(&self) -> Self {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{One, Signed, Zero};
        if self.is_zero() {
            return Self::zero();
        }
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if ints.last().expect("nonzero").is_negative() {
            g = -g;
        }
        Self::new(ints.into_iter().map(|c| Rational::from_int(c / &g)).collect())
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<R: fmt::Debug> fmt::Debug for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Polynomial").field(&self.coeffs).finish()
    }
}

fn add_coeffs<R: Ring>(a: &[R], b: &[R], negate_b: bool) -> Vec<R> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(R::zero);
            match b.get(i) {
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
                None => x,
            }
        })
        .collect()
}

fn mul_coeffs<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![R::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y;
        }
    }
    out
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<R: Ring> $tr for Polynomial<R> {
            type Output = Polynomial<R>;
            fn $m(self, rhs: Polynomial<R>) -> Polynomial<R> {
                Polynomial::new($body(&self.coeffs, &rhs.coeffs))
            }
        }
        impl<'a, R: Ring> $tr<&'a Polynomial<R>> for Polynomial<R> {
            type Output = Polynomial<R>;
            fn $m(self, rhs: &'a Polynomial<R>) -> Polynomial<R> {
                Polynomial::new($body(&self.coeffs, &rhs.coeffs))
            }
        }
        impl<'a, 'b, R: Ring> $tr<&'b Polynomial<R>> for &'a Polynomial<R> {
            type Output = Polynomial<R>;
            fn $m(self, rhs: &'b Polynomial<R>) -> Polynomial<R> {
                Polynomial::new($body(&self.coeffs, &rhs.coeffs))
            }
        }
    };
}

poly_binop!(Add, add, |a: &[R], b: &[R]| add_coeffs(a, b, false));
poly_binop!(Sub, sub, |a: &[R], b: &[R]| add_coeffs(a, b, true));
poly_binop!(Mul, mul, |a: &[R], b: &[R]| mul_coeffs(a, b));

impl<R: Ring> Neg for Polynomial<R> {
    type Output = Polynomial<R>;
    fn neg(self) -> Polynomial<R> {
        Polynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<R: Ring> Ring for Polynomial<R> {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_i64(n: i64) -> Self {
        Polynomial::constant(R::from_i64(n))
    }
}

impl<F: Field> Domain for Polynomial<F> {
    fn div_exact(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.div_exact_poly(rhs)
    }
}

/// `gcd` as a free function over any field.
pub fn poly_gcd<F: Field>(p: &Polynomial<F>, q: &Polynomial<F>) -> Result<Polynomial<F>, ExactError> {
    p.gcd(q)
}

/// Resultant of two univariate polynomials (Sylvester-determinant convention).
pub fn resultant<R: Domain>(p: &Polynomial<R>, q: &Polynomial<R>) -> Result<R, ExactError> {
    p.resultant(q)
}

/// Root multiplicities of a nonzero polynomial.
pub fn multiplicity_profile<F: Field>(p: &Polynomial<F>) -> Result<Vec<usize>, ExactError> {
    p.multiplicity_profile()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn poly(c: &[i64]) -> Polynomial<Rational> {
        Polynomial::new(c.iter().map(|&n| q(n)).collect())
    }

    /// Sylvester determinant by fraction-arithmetic Gaussian elimination.
    fn sylvester_det(p: &Polynomial<Rational>, r: &Polynomial<Rational>) -> Rational {
        let (m, n) = (p.degree().unwrap(), r.degree().unwrap());
        let size = m + n;
        let mut mat = vec![vec![Rational::zero(); size]; size];
        for i in 0..n {
            for (k, c) in p.coeffs().iter().rev().enumerate() {
                mat[i][i + k] = c.clone();
            }
        }
        for i in 0..m {
            for (k, c) in r.coeffs().iter().rev().enumerate() {
                mat[n + i][i + k] = c.clone();
            }
        }
        let mut det = Rational::one();
        for col in 0..size {
            let Some(piv) = (col..size).find(|&r| !mat[r][col].is_zero()) else {
                return Rational::zero();
            };
            if piv != col {
                mat.swap(piv, col);
                det = -det;
            }
            let pv = mat[col][col].clone();
            det = det * &pv;
            for r2 in col + 1..size {
                let f = &mat[r2][col] / &pv;
                for c2 in col..size {
                    let v = &mat[col][c2] * &f;
                    mat[r2][c2] = &mat[r2][c2] - &v;
                }
            }
        }
        det
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(poly(&[-1, 0, 1]).gcd(&poly(&[-1, 1])).unwrap(), poly(&[-1, 1]));
        assert_eq!(poly(&[1, 0, 1]).gcd(&poly(&[-1, 0, 1])).unwrap(), poly(&[1]));
        assert!(Polynomial::<Rational>::zero().gcd(&Polynomial::zero()).unwrap().is_zero());
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(poly(&[-2, 1]).resultant(&poly(&[-3, 1])).unwrap(), q(-1));
        assert_eq!(poly(&[-1, 0, 1]).resultant(&poly(&[-1, 1])).unwrap(), q(0));
        // res(p, c) = c^deg p for constants
        assert_eq!(poly(&[1, 2, 3]).resultant(&poly(&[5])).unwrap(), q(25));
    }

    #[test]
    fn resultant_matches_sylvester_determinant() {
        let cases = [
            (poly(&[3, -1, 4, 1, -5]), poly(&[9, 2, -6, 5])),
            (poly(&[1, 0, 0, 0, 0, 7]), poly(&[-2, 1, 1])),
            (poly(&[2, 3]), poly(&[1, 1, 1, 1, 1, 1, 1])),
            (poly(&[0, 0, 1, 2]), poly(&[0, 5, 1])),
        ];
        for (a, b) in cases {
            assert_eq!(a.resultant(&b).unwrap(), sylvester_det(&a, &b), "{a:?} {b:?}");
            assert_eq!(b.resultant(&a).unwrap(), sylvester_det(&b, &a), "{b:?} {a:?}");
        }
    }

    #[test]
    fn discriminant_of_quadratic() {
        // b^2 - 4ac
        assert_eq!(poly(&[3, 5, 2]).discriminant().unwrap(), q(25 - 24));
        assert_eq!(poly(&[-1, 0, 0, 1]).discriminant().unwrap(), q(-27));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(poly(&[0, -1, 1]).multiplicity_profile().unwrap(), vec![1, 1]);
        // (x-3)^2 x
        assert_eq!(poly(&[0, 9, -6, 1]).multiplicity_profile().unwrap(), vec![2, 1]);
        assert!(Polynomial::<Rational>::zero().multiplicity_profile().is_err());
        // (x-1)^3 (x+2)^2 (x^2+1)
        let p = poly(&[-1, 1]).pow(3) * poly(&[2, 1]).pow(2) * poly(&[1, 0, 1]);
        assert_eq!(p.multiplicity_profile().unwrap(), vec![3, 2, 1, 1]);
    }

    #[test]
    fn lemma_cover_fiber_over_one() {
        // 16 x (x - 3/4)^2 - 1 = (x - 1)(4x - 1)^2
        let x = Polynomial::<Rational>::x();
        let f = x.clone()
            * (x.clone() - Polynomial::constant(Rational::frac(3, 4))).pow(2)
            * Polynomial::constant(q(16))
            - Polynomial::one();
        assert_eq!(f.multiplicity_profile().unwrap(), vec![2, 1]);
        let sqf = f.squarefree_decomposition().unwrap();
        assert_eq!(sqf[1].0, Polynomial::new(vec![Rational::frac(-1, 4), q(1)]));
    }

    #[test]
    fn primitive_integer_clears_content() {
        let p = Polynomial::new(vec![Rational::frac(1, 2), Rational::frac(-3, 4)]);
        assert_eq!(p.primitive_integer(), poly(&[-2, 3]));
    }

    #[test]
    fn division_identity() {
        let a = poly(&[5, -3, 0, 2, 7, 1]);
        let b = poly(&[1, 0, 3]);
        let (qq, r) = a.div_rem(&b).unwrap();
        assert_eq!(qq * &b + &r, a);
        assert!(r.degree_i() < 2);
    }
}
