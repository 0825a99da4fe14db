//! Degree-5 elliptic subcovers of 4-cycle type: the curve over the conic in
//! `(u, v)`, the Legendre parameter of `E1`, and the quadratic in `j` whose
//! roots are the j-invariants of `E1` and its complement.

use serde::Serialize;

use crate::degree3::three_plus_cubic;
use crate::elliptic::j_from_lambda;
use crate::error::{nonzero, Error, Result};
use crate::exact::{nf_solve_quadratic, ExactError, Field, Nf, QPoly, Rational, Ring};
use crate::formulas;
use crate::genus2::Genus2Curve;

/// Both roots `v` of the constraint at a rational `u`.
pub fn deg5_solve_v(u: &Rational) -> Result<[Nf; 2]> {
    let at = [("u", u.clone())];
    let c: Vec<Rational> = formulas::DEG5_CONIC
        .poly()
        .coefficients_in("v")
        .iter()
        .map(|p| p.eval(&at))
        .collect::<std::result::Result<_, _>>()?;
    Ok(nf_solve_quadratic(&c[2], &c[1], &c[0])?)
}

/// A rational `u` at which both `v` are rational, from a nonzero parameter
/// `k`: the `v`-discriminant is a square exactly when `(4u - 6)^2 + 5` is.
pub fn deg5_rational_u(k: &Rational) -> Result<Rational> {
    let five = Rational::from_int(5);
    let m = (five.checked_div(k)? - k.clone()) / Rational::from_int(2);
    Ok((m + Rational::from_int(6)) / Rational::from_int(4))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Degree5FamilyPoint {
    pub u: Nf,
    pub v: Nf,
    pub d: Nf,
    pub w: Nf,
    pub t: Nf,
    pub curve: Genus2Curve<Nf>,
}

/// `Y^2 = x(x - 1)(x - d)(x^3 - u x^2 + v x - w)` with `E1: y^2 = z(z-1)(z-t)`.
pub fn deg5_family(u: &Nf, v: &Nf) -> Result<Degree5FamilyPoint> {
    let at = [("u", u.clone()), ("v", v.clone())];
    if !formulas::DEG5_CONIC.eval(&at)?.is_zero() {
        return Err(Error::OffVariety("degree-5 constraint"));
    }
    let d0 = nonzero(formulas::DEG5_DEN[0].eval(&at)?, formulas::DEG5_DEN[0].name)?;
    let d1 = nonzero(formulas::DEG5_DEN[1].eval(&at)?, formulas::DEG5_DEN[1].name)?;
    let den = d0.clone() * &d1;
    let d = formulas::DEG5_D_NUM.eval(&at)?.div(&den)?;
    let w = formulas::DEG5_W_NUM.eval(&at)?.div(&(Nf::from(8) * &d0))?;
    let t = formulas::DEG5_T_NUM.eval(&at)?.div(&den)?;
    if t.is_zero() || t.is_one() {
        return Err(Error::Degenerate(format!("t = {t}")));
    }
    let curve = Genus2Curve::new_smooth(three_plus_cubic(&d, u, v, &w))?;
    Ok(Degree5FamilyPoint {
        u: u.clone(),
        v: v.clone(),
        d,
        w,
        t,
        curve,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JQuadratic {
    pub a: Nf,
    pub b: Nf,
    pub c: Nf,
    pub discriminant: Nf,
    /// Present unless the roots would need a second quadratic extension.
    pub roots: Option<[Nf; 2]>,
}

impl JQuadratic {
    pub fn residual(&self, j: &Nf) -> Nf {
        self.a.clone() * j * j + self.b.clone() * j + self.c.clone()
    }
}

/// `A(u) j^2 + B(u) j + C(u)`.
pub fn deg5_j_quadratic(u: &Nf) -> Result<JQuadratic> {
    let at = [("u", u.clone())];
    let a = nonzero(formulas::DEG5_A.eval(&at)?, "A(u)")?;
    let b = formulas::DEG5_B.eval(&at)?;
    let c = formulas::DEG5_C.eval(&at)?;
    let discriminant = b.clone() * &b - Nf::from(4) * &a * &c;
    let roots = if discriminant.is_zero() {
        let r = (-b.clone()).div(&(Nf::from(2) * &a))?;
        Some([r.clone(), r])
    } else {
        match (a.as_rational(), b.as_rational(), c.as_rational()) {
            (Some(a), Some(b), Some(c)) => Some(nf_solve_quadratic(&a, &b, &c)?),
            _ => None,
        }
    };
    Ok(JQuadratic {
        a,
        b,
        c,
        discriminant,
        roots,
    })
}

/// Whether `j(E1)` at the family point is a root of the quadratic.
pub fn deg5_membership(p: &Degree5FamilyPoint) -> Result<bool> {
    let j = j_from_lambda(&p.t)?;
    Ok(deg5_j_quadratic(&p.u)?.residual(&j).is_zero())
}

/// `B(u)^2 - 4 A(u) C(u)` as a polynomial in `u`.
pub fn deg5_discriminant_poly() -> Result<QPoly, ExactError> {
    let a = formulas::DEG5_A.poly().to_qpoly()?;
    let b = formulas::DEG5_B.poly().to_qpoly()?;
    let c = formulas::DEG5_C.poly().to_qpoly()?;
    Ok(b.clone() * b - (a * c).scale(&Rational::from_int(4)))
}

/// `16u^2 - 48u + 41`, where the two j-invariants coincide.
pub fn double_root_locus() -> QPoly {
    let k = |n: i64| Rational::from_int(n);
    QPoly::new(vec![k(41), k(-48), k(16)])
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DoubleRootReport {
    pub u: Nf,
    pub discriminant_vanishes: bool,
    pub root: Nf,
    pub locus_divides_discriminant: bool,
}

pub fn deg5_double_root() -> Result<DoubleRootReport> {
    let k = |n: i64| Rational::from_int(n);
    let [u, _] = nf_solve_quadratic(&k(16), &k(-48), &k(41))?;
    let q = deg5_j_quadratic(&u)?;
    let root = (-q.b.clone()).div(&(Nf::from(2) * &q.a))?;
    Ok(DoubleRootReport {
        u,
        discriminant_vanishes: q.discriminant.is_zero(),
        root,
        locus_divides_discriminant: double_root_locus().divides(&deg5_discriminant_poly()?)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn v_at_zero() {
        let [v1, v2] = deg5_solve_v(&r(0, 1)).unwrap();
        let s = crate::exact::sqrt_in(41).unwrap();
        let base = Nf::rational(r(-13, 8));
        let off = Nf::rational(r(3, 8)) * &s;
        assert_eq!(v1, base.clone() - off.clone());
        assert_eq!(v2, base + off);
        for v in [v1, v2] {
            let res = formulas::DEG5_CONIC
                .eval(&[("u", Nf::from(0)), ("v", v)])
                .unwrap();
            assert!(res.is_zero());
        }
    }

    #[test]
    fn membership_at_zero() {
        let [v1, v2] = deg5_solve_v(&r(0, 1)).unwrap();
        for v in [v1, v2] {
            let p = deg5_family(&Nf::from(0), &v).unwrap();
            assert!(deg5_membership(&p).unwrap());
        }
    }

    #[test]
    fn membership_at_rational_points() {
        let u = deg5_rational_u(&r(1, 1)).unwrap();
        assert_eq!(u, r(2, 1));
        let u = deg5_rational_u(&r(1, 2)).unwrap();
        assert_eq!(u, r(43, 16));
        let [v1, v2] = deg5_solve_v(&u).unwrap();
        assert!(v1.is_rational() && v2.is_rational());
        for v in [v1, v2] {
            let p = deg5_family(&Nf::rational(u.clone()), &v).unwrap();
            assert!(deg5_membership(&p).unwrap());
        }
    }

    #[test]
    fn off_conic_rejected() {
        assert_eq!(
            deg5_family(&Nf::from(0), &Nf::from(0)).unwrap_err(),
            Error::OffVariety("degree-5 constraint")
        );
    }

    #[test]
    fn a_vanishes_at_one() {
        assert_eq!(
            deg5_j_quadratic(&Nf::from(1)).unwrap_err(),
            Error::Vanishing("A(u)")
        );
    }

    #[test]
    fn double_root() {
        let rep = deg5_double_root().unwrap();
        assert!(rep.discriminant_vanishes);
        assert_eq!(rep.root, Nf::rational("28849701763/16941456".parse().unwrap()));
        assert!(rep.locus_divides_discriminant);
    }
}
