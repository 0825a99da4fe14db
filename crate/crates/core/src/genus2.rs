//! Genus-2 curves `Y^2 = f(x)` and their invariants.
//!
//! Igusa invariants are computed from the binary sextic `F(x, y) = y^6 f(x/y)`
//! through the Clebsch invariants, which are transvectants of `F` and its
//! covariants. A quintic `f` becomes a sextic with a root at infinity.
//!
//! Normalization: `J10` is `disc(F)/4096`, i.e. for a sextic
//! `a6^10 prod (r_i - r_j)^2 / 4096`, and under `f(x) -> f(lambda x)` each
//! `J_{2k}` is multiplied by `lambda^{6k}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{ExactError, Field, Polynomial, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Genus2Error {
    #[error("f must have degree 5 or 6, found {0:?}")]
    BadDegree(Option<usize>),
    #[error("J2 = 0: the absolute-invariant criterion is inapplicable")]
    J2Zero,
    #[error("curve is singular: J10 = 0")]
    Singular,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// `Y^2 = f(x)` with `deg f` in {5, 6}.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "F: Serialize + Clone", deserialize = "F: Deserialize<'de> + Ring"))]
pub struct Genus2Curve<F> {
    pub f: Polynomial<F>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IgusaInvariants<F> {
    #[serde(rename = "J2")]
    pub j2: F,
    #[serde(rename = "J4")]
    pub j4: F,
    #[serde(rename = "J6")]
    pub j6: F,
    #[serde(rename = "J10")]
    pub j10: F,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AbsoluteInvariants<F> {
    pub i1: F,
    pub i2: F,
    pub i3: F,
}

/// The Igusa-Clebsch invariants `I2, I4, I6, I10`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IgusaClebsch<F> {
    pub i2: F,
    pub i4: F,
    pub i6: F,
    pub i10: F,
}

impl<F: Field> Genus2Curve<F> {
    pub fn new(f: Polynomial<F>) -> Result<Self, Genus2Error> {
        match f.degree() {
            Some(5) | Some(6) => Ok(Genus2Curve { f }),
            d => Err(Genus2Error::BadDegree(d)),
        }
    }

    /// Like [`Genus2Curve::new`] but also rejects `J10 = 0`.
    pub fn new_smooth(f: Polynomial<F>) -> Result<Self, Genus2Error> {
        let c = Self::new(f)?;
        if c.igusa_invariants()?.j10.is_zero() {
            return Err(Genus2Error::Singular);
        }
        Ok(c)
    }

    /// `Y^2 = prod (x - r)` over the given roots.
    pub fn from_roots(roots: &[F]) -> Result<Self, Genus2Error> {
        Self::new(Polynomial::from_roots(roots))
    }

    /// Coefficients `a_0..a_6` of the sextic `sum a_i x^i y^(6-i)`.
    pub fn sextic(&self) -> Vec<F> {
        (0..=6).map(|i| self.f.coeff(i)).collect()
    }

    pub fn igusa_clebsch(&self) -> Result<IgusaClebsch<F>, Genus2Error> {
        let [a, b, c, d] = clebsch(&self.sextic())?;
        let k = |n: i64| F::from_i64(n);
        let a2 = a.clone() * &a;
        let a3 = a2.clone() * &a;
        let i2 = k(-120) * &a;
        let i4 = k(-720) * &a2 + k(6750) * &b;
        let i6 = k(8640) * &a3 - k(108000) * &(a.clone() * &b) + k(202500) * &c;
        let i10 = k(-62208) * &(a3.clone() * &a2)
            + k(972000) * &(a3 * &b)
            + k(1620000) * &(a2.clone() * &c)
            - k(3037500) * &(a.clone() * &b * &b)
            - k(6075000) * &(b * &c)
            - k(4556250) * &d;
        Ok(IgusaClebsch { i2, i4, i6, i10 })
    }

    pub fn igusa_invariants(&self) -> Result<IgusaInvariants<F>, Genus2Error> {
        igusa_from_clebsch(&self.igusa_clebsch()?)
    }

    pub fn absolute_invariants(&self) -> Result<AbsoluteInvariants<F>, Genus2Error> {
        absolute_invariants(&self.igusa_invariants()?)
    }

    pub fn is_smooth(&self) -> Result<bool, Genus2Error> {
        Ok(!self.igusa_invariants()?.j10.is_zero())
    }

    /// The curve `Y^2 = (cx + d)^6 f((ax + b)/(cx + d))`.
    pub fn transform(&self, a: &F, b: &F, c: &F, d: &F) -> Result<Self, Genus2Error> {
        let num = Polynomial::new(vec![b.clone(), a.clone()]);
        let den = Polynomial::new(vec![d.clone(), c.clone()]);
        let mut g = Polynomial::zero();
        for (i, ai) in self.sextic().iter().enumerate() {
            let term = num.pow(i as u32) * den.pow(6 - i as u32);
            g = g + term.scale(ai);
        }
        Self::new(g)
    }
}

pub fn igusa_from_clebsch<F: Field>(ic: &IgusaClebsch<F>) -> Result<IgusaInvariants<F>, Genus2Error> {
    let k = |n: i64| F::from_i64(n);
    let j2 = ic.i2.div(&k(8))?;
    let j4 = (k(4) * &j2 * &j2 - ic.i4.clone()).div(&k(96))?;
    let j6 = (k(8) * &j2 * &j2 * &j2 - k(160) * &j2 * &j4 - ic.i6.clone()).div(&k(576))?;
    let j10 = ic.i10.div(&k(4096))?;
    Ok(IgusaInvariants { j2, j4, j6, j10 })
}

/// `i1 = 144 J4/J2^2`, `i2 = -1728 (J2 J4 - 3 J6)/J2^3`, `i3 = 486 J10/J2^5`.
pub fn absolute_invariants<F: Field>(j: &IgusaInvariants<F>) -> Result<AbsoluteInvariants<F>, Genus2Error> {
    if j.j2.is_zero() {
        return Err(Genus2Error::J2Zero);
    }
    let k = |n: i64| F::from_i64(n);
    let j2sq = j.j2.clone() * &j.j2;
    let j2cu = j2sq.clone() * &j.j2;
    let i1 = (k(144) * &j.j4).div(&j2sq)?;
    let i2 = (k(-1728) * &(j.j2.clone() * &j.j4 - k(3) * &j.j6)).div(&j2cu)?;
    let i3 = (k(486) * &j.j10).div(&(j2cu * &j2sq))?;
    Ok(AbsoluteInvariants { i1, i2, i3 })
}

/// Equal absolute invariants; only meaningful when both `J2` are nonzero.
pub fn is_isomorphic<F: Field>(c1: &Genus2Curve<F>, c2: &Genus2Curve<F>) -> Result<bool, Genus2Error> {
    Ok(c1.absolute_invariants()? == c2.absolute_invariants()?)
}

/// Convenience for rational curves.
pub fn igusa_invariants(c: &Genus2Curve<Rational>) -> Result<IgusaInvariants<Rational>, Genus2Error> {
    c.igusa_invariants()
}

// Binary forms: coefficient i belongs to x^i y^(d - i).

fn falling(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    ((n - k + 1)..=n).map(|v| v as i64).product()
}

fn partial<F: Field>(f: &[F], p: usize, q: usize) -> Vec<F> {
    let d = f.len() - 1;
    if p + q > d {
        return vec![F::zero()];
    }
    let nd = d - p - q;
    (0..=nd)
        .map(|j| {
            let i = j + p;
            f[i].clone() * &F::from_i64(falling(i, p) * falling(d - i, q))
        })
        .collect()
}

fn form_mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
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

fn binomial(n: usize, k: usize) -> i64 {
    falling(n, k) / falling(k, k)
}

/// The `k`-th transvectant `(f, g)_k`.
pub fn transvectant<F: Field>(f: &[F], g: &[F], k: usize) -> Result<Vec<F>, ExactError> {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let out_deg = m + n - 2 * k;
    let mut acc = vec![F::zero(); out_deg + 1];
    for i in 0..=k {
        let prod = form_mul(&partial(f, k - i, i), &partial(g, i, k - i));
        let c = F::from_i64(if i % 2 == 0 { 1 } else { -1 } * binomial(k, i));
        for (t, v) in prod.into_iter().enumerate() {
            acc[t] = acc[t].clone() + v * &c;
        }
    }
    let scale = Rational::new(
        falling(m - k, m - k) * falling(n - k, n - k),
        falling(m, m) * falling(n, n),
    )?;
    let s = F::from_rational(&scale);
    Ok(acc.into_iter().map(|v| v * &s).collect())
}

/// Clebsch invariants `A, B, C, D` of a binary sextic.
fn clebsch<F: Field>(f: &[F]) -> Result<[F; 4], ExactError> {
    let i = transvectant(f, f, 4)?;
    let delta = transvectant(&i, &i, 2)?;
    let y1 = transvectant(f, &i, 4)?;
    let y2 = transvectant(&i, &y1, 2)?;
    let y3 = transvectant(&i, &y2, 2)?;
    let a = transvectant(f, f, 6)?.remove(0);
    let b = transvectant(&i, &i, 4)?.remove(0);
    let c = transvectant(&i, &delta, 4)?.remove(0);
    let d = transvectant(&y3, &y1, 2)?.remove(0);
    Ok([a, b, c, d])
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

    #[test]
    fn x6_minus_1_igusa_clebsch() {
        let c = Genus2Curve::new(poly(&[-1, 0, 0, 0, 0, 0, 1])).unwrap();
        let ic = c.igusa_clebsch().unwrap();
        assert_eq!((ic.i2, ic.i4, ic.i6), (q(240), q(1620), q(119880)));
        assert_eq!(ic.i10, poly(&[-1, 0, 0, 0, 0, 0, 1]).discriminant().unwrap());
    }

    #[test]
    fn absolute_invariant_examples() {
        let j = IgusaInvariants { j2: q(1), j4: q(1), j6: q(1), j10: q(1) };
        let a = absolute_invariants(&j).unwrap();
        assert_eq!((a.i1, a.i2, a.i3), (q(144), q(3456), q(486)));
        let j0 = IgusaInvariants { j2: q(5), j4: q(0), j6: q(0), j10: q(1) };
        let a0 = absolute_invariants(&j0).unwrap();
        assert_eq!((a0.i1, a0.i2), (q(0), q(0)));
        let bad = IgusaInvariants { j2: q(0), j4: q(1), j6: q(1), j10: q(1) };
        assert_eq!(absolute_invariants(&bad), Err(Genus2Error::J2Zero));
    }

    #[test]
    fn repeated_root_kills_j10() {
        let f = poly(&[-1, 1]).pow(2) * poly(&[0, 1, 0, 1]);
        let c2 = Genus2Curve::new(f).unwrap();
        assert!(c2.igusa_invariants().unwrap().j10.is_zero());
        assert!(Genus2Curve::new_smooth(c2.f.clone()).is_err());
    }

    #[test]
    fn bad_degree_rejected() {
        assert_eq!(
            Genus2Curve::new(poly(&[1, 0, 0, 1])).unwrap_err(),
            Genus2Error::BadDegree(Some(3))
        );
    }

    #[test]
    fn translation_invariance() {
        let f = poly(&[3, -1, 4, 1, -5, 9]);
        let c = Genus2Curve::new(f.clone()).unwrap();
        let shifted = Genus2Curve::new(f.compose(&poly(&[1, 1]))).unwrap();
        assert_eq!(c.igusa_invariants().unwrap(), shifted.igusa_invariants().unwrap());
    }
}
