//! Elliptic curves as Legendre forms, branch-point quartics and short
//! Weierstrass equations, reduced to their j-invariants.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{ExactError, Field};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EllipticError {
    #[error("singular model: {0}")]
    Singular(&'static str),
    #[error("branch points {0} and {1} coincide")]
    CoincidentPoints(usize, usize),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A point of the projective line.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum P1Point<F> {
    Finite(F),
    Infinity,
}

impl<F: Field> P1Point<F> {
    fn homogeneous(&self) -> (F, F) {
        match self {
            P1Point::Finite(x) => (x.clone(), F::one()),
            P1Point::Infinity => (F::one(), F::zero()),
        }
    }

    /// Image under `x -> (ax + b)/(cx + d)`.
    pub fn mobius(&self, a: &F, b: &F, c: &F, d: &F) -> Result<Self, ExactError> {
        let (x, z) = self.homogeneous();
        let nx = a.clone() * &x + b.clone() * &z;
        let nz = c.clone() * &x + d.clone() * &z;
        if nz.is_zero() {
            Ok(P1Point::Infinity)
        } else {
            Ok(P1Point::Finite(nx.div(&nz)?))
        }
    }
}

impl<F> From<F> for P1Point<F> {
    fn from(x: F) -> Self {
        P1Point::Finite(x)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum EllipticModel<F> {
    /// `y^2 = z(z - 1)(z - t)`
    Legendre { t: F },
    /// `y^2 = prod (z - q_i)`, with `Infinity` allowed.
    BranchPoints { q: [P1Point<F>; 4] },
    /// `y^2 = x^3 + ax + b`
    ShortWeierstrass { a: F, b: F },
}

impl<F: Field> EllipticModel<F> {
    pub fn j_invariant(&self) -> Result<F, EllipticError> {
        match self {
            EllipticModel::Legendre { t } => j_from_lambda(t),
            EllipticModel::BranchPoints { q } => j_from_branch_points(q),
            EllipticModel::ShortWeierstrass { a, b } => j_from_short_weierstrass(a, b),
        }
    }
}

/// `256 (t^2 - t + 1)^3 / (t^2 (t - 1)^2)`.
pub fn j_from_lambda<F: Field>(t: &F) -> Result<F, EllipticError> {
    let one = F::one();
    let tm1 = t.clone() - &one;
    let den = t.clone() * t * &tm1 * &tm1;
    if den.is_zero() {
        return Err(EllipticError::Singular("t in {0, 1}"));
    }
    let u = t.clone() * t - t.clone() + one;
    let num = F::from_i64(256) * &u * &u * &u;
    Ok(num.div(&den)?)
}

/// Cross-ratio `(q3 - q1)(q4 - q2) / ((q3 - q2)(q4 - q1))`, computed with
/// homogeneous coordinates so that infinity needs no special casing.
pub fn cross_ratio<F: Field>(q: &[P1Point<F>; 4]) -> Result<F, EllipticError> {
    let h: Vec<(F, F)> = q.iter().map(P1Point::homogeneous).collect();
    for i in 0..4 {
        for k in i + 1..4 {
            if bracket(&h[i], &h[k]).is_zero() {
                return Err(EllipticError::CoincidentPoints(i, k));
            }
        }
    }
    let num = bracket(&h[2], &h[0]) * &bracket(&h[3], &h[1]);
    let den = bracket(&h[2], &h[1]) * &bracket(&h[3], &h[0]);
    Ok(num.div(&den)?)
}

fn bracket<F: Field>(p: &(F, F), q: &(F, F)) -> F {
    p.0.clone() * &q.1 - q.0.clone() * &p.1
}

/// j-invariant of the double cover of the line branched at four points.
pub fn j_from_branch_points<F: Field>(q: &[P1Point<F>; 4]) -> Result<F, EllipticError> {
    j_from_lambda(&cross_ratio(q)?)
}

/// `1728 * 4a^3 / (4a^3 + 27b^2)`.
pub fn j_from_short_weierstrass<F: Field>(a: &F, b: &F) -> Result<F, EllipticError> {
    let a3 = F::from_i64(4) * a * a * a;
    let den = a3.clone() + F::from_i64(27) * b * b;
    if den.is_zero() {
        return Err(EllipticError::Singular("4a^3 + 27b^2 = 0"));
    }
    Ok((F::from_i64(1728) * &a3).div(&den)?)
}
