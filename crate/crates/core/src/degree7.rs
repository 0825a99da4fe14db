//! Degree-7 elliptic subcovers of 4-cycle type: the coefficients of the
//! curve as rational functions of `(d, t)` and the constraint they satisfy.

use serde::Serialize;

use crate::degree3::three_plus_cubic;
use crate::error::{nonzero, Error, Result};
use crate::exact::{solve_polynomial, Field, MPoly, Nf, QPoly, Rational, Ring, Root};
use crate::formulas;
use crate::genus2::{AbsoluteInvariants, Genus2Curve};
use crate::ramification::{enumerate_profiles, CaseLabel, RamificationProfile};

fn at<'a>(d: &Nf, t: &Nf) -> [(&'a str, Nf); 2] {
    [("d", d.clone()), ("t", t.clone())]
}

pub fn deg7_constraint(d: &Nf, t: &Nf) -> Result<Nf> {
    Ok(formulas::DEG7_CONSTRAINT.eval(&at(d, t))?)
}

/// The constraint as a polynomial in `t` at fixed `d`.
pub fn deg7_quartic(d: &Rational) -> Result<QPoly> {
    let q: QPoly = formulas::DEG7_CONSTRAINT
        .poly()
        .to_univariate("t", &[("d", d.clone())])?;
    if q.is_zero() {
        return Err(Error::Degenerate(format!("constraint vanishes identically at d = {d}")));
    }
    Ok(q)
}

/// Roots `t` of the constraint at fixed `d`. Blocks without rational roots
/// come back as generators of their quotient rings.
pub fn deg7_solve_t(d: &Rational) -> Result<Vec<Root>> {
    Ok(solve_polynomial(&deg7_quartic(d)?)?)
}

/// `A(t, d)`, checking each factor.
pub fn deg7_denominator(d: &Nf, t: &Nf) -> Result<Nf> {
    let p = at(d, t);
    let mut acc = Nf::one();
    for f in &formulas::DEG7_DEN {
        acc = acc * nonzero(f.eval(&p)?, f.name)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Degree7Coefficients {
    pub a: Nf,
    pub b: Nf,
    pub c: Nf,
}

pub fn deg7_coefficients(d: &Nf, t: &Nf) -> Result<Degree7Coefficients> {
    if !deg7_constraint(d, t)?.is_zero() {
        return Err(Error::OffVariety("degree-7 constraint"));
    }
    let den = deg7_denominator(d, t)?;
    let p = at(d, t);
    let a = (-formulas::DEG7_A_NUM.eval(&p)?).div(&(Nf::from(4) * &den))?;
    let b = formulas::DEG7_B_NUM.eval(&p)?.div(&(Nf::from(16) * &den))?;
    let inner = formulas::DEG7_C_INNER.eval(&p)?;
    let c = (-(inner.clone() * &inner)).div(&(Nf::from(448) * &den))?;
    Ok(Degree7Coefficients { a, b, c })
}

/// Recovers the polynomial squared in `c` from its expanded square.
pub fn deg7_c_is_square() -> bool {
    let inner = formulas::DEG7_C_INNER.poly();
    let sq: MPoly = inner.clone() * inner.clone();
    match sq.sqrt_exact() {
        Some(r) => r == *inner || r == -inner.clone(),
        None => false,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Degree7Point {
    pub d: Nf,
    pub t: Nf,
    pub coefficients: Degree7Coefficients,
    pub constraint_residual: Nf,
    pub curve: Genus2Curve<Nf>,
    pub j10_nonzero: bool,
    pub absolute: Option<AbsoluteInvariants<Nf>>,
}

/// The curve `Y^2 = x(x - 1)(x - d)(x^3 - a x^2 + b x - c)`.
pub fn deg7_point(d: &Nf, t: &Nf) -> Result<Degree7Point> {
    let coefficients = deg7_coefficients(d, t)?;
    let f = three_plus_cubic(d, &coefficients.a, &coefficients.b, &coefficients.c);
    let curve = Genus2Curve::new(f)?;
    let igusa = curve.igusa_invariants()?;
    let absolute = curve.absolute_invariants().ok();
    Ok(Degree7Point {
        d: d.clone(),
        t: t.clone(),
        constraint_residual: deg7_constraint(d, t)?,
        coefficients,
        j10_nonzero: !igusa.j10.is_zero(),
        absolute,
        curve,
    })
}

/// Fibers forced by the shape `z = k x P1(x)^2 / (x^3 - a x^2 + b x - c)`
/// with infinity of index 4: three double points over 0 and a single
/// index-4 point over infinity.
pub fn deg7_shape_fibers() -> (usize, Vec<usize>, Vec<usize>) {
    let degree = 1 + 2 * 3;
    (degree, vec![2, 2, 2], vec![4])
}

/// Labels of the degree-7 cases whose profile contains both forced fibers.
pub fn deg7_case_labels() -> Result<Vec<CaseLabel>> {
    let (n, zero, inf) = deg7_shape_fibers();
    let report = enumerate_profiles(n)?;
    let has = |p: &RamificationProfile, f: &Vec<usize>| p.fibers.iter().any(|x| x == f);
    Ok(report
        .cases
        .iter()
        .filter(|c| has(&c.profile, &zero) && has(&c.profile, &inf))
        .map(|c| c.case)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn constraint_values() {
        let z = Nf::from(0);
        assert!(deg7_constraint(&z, &z).unwrap().is_zero());
        let q = deg7_quartic(&r(1)).unwrap();
        assert_eq!(q.degree(), Some(4));
        assert!(q.leading_coeff().unwrap().is_one());
        assert!(!deg7_constraint(&Nf::from(2), &Nf::from(3)).unwrap().is_zero());
    }

    #[test]
    fn specializations() {
        let k = |v: &[i64]| QPoly::new(v.iter().map(|&x| r(x)).collect());
        assert_eq!(deg7_quartic(&r(2)).unwrap(), k(&[65536, -131072, 71424, -5888, 1]));
        assert_eq!(deg7_quartic(&r(-1)).unwrap(), k(&[1, 5884, 53766, 5884, 1]));
        assert_eq!(deg7_quartic(&r(1)).unwrap(), k(&[1, -4, 6, -4, 1]));
        let roots = deg7_solve_t(&r(0)).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity, 4);
        assert!(roots[0].value.is_zero());
    }

    #[test]
    fn point_at_d_2() {
        let roots = deg7_solve_t(&r(2)).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].conjugates, 4);
        let p = deg7_point(&Nf::from(2), &roots[0].value).unwrap();
        assert!(p.constraint_residual.is_zero());
        assert!(p.j10_nonzero);
    }

    #[test]
    fn c_is_a_square() {
        assert!(deg7_c_is_square());
    }

    #[test]
    fn shape_matches_ii_i() {
        let names: Vec<&str> = deg7_case_labels().unwrap().iter().map(|c| c.name).collect();
        assert_eq!(names, vec!["II.i"]);
    }
}
