//! Genus-2 curves with degree-3 elliptic subcovers: the generic family with
//! its closed-form j-invariants, the degenerate family where one Weierstrass
//! point is totally ramified, the relation between the two j-invariants in
//! that case, and the table of curves where both covers are degenerate.

use serde::Serialize;

use crate::elliptic::{j_from_lambda, EllipticModel, P1Point};
use crate::error::{nonzero, Error, Result};
use crate::exact::{
    nf_solve_quadratic, solve_polynomial, Field, MPoly, Nf, Polynomial, QPoly, Rational, Ring, Root,
};
use crate::formulas::{self, Formula};
use crate::genus2::{is_isomorphic, AbsoluteInvariants, Genus2Curve};
use crate::ramification::{enumerate_profiles, verify_cover, CoverReport, RationalMap};

fn at_ac<'a>(a: &Nf, c: &Nf) -> [(&'a str, Nf); 2] {
    [("a", a.clone()), ("c", c.clone())]
}

fn at_w<'a>(w1: &Nf, w2: &Nf) -> [(&'a str, Nf); 2] {
    [("w_1", w1.clone()), ("w_2", w2.clone())]
}

fn product(fs: &[Formula], at: &[(&str, Nf)]) -> Result<Nf> {
    let mut acc = Nf::one();
    for f in fs {
        acc = acc * nonzero(f.eval(at)?, f.name)?;
    }
    Ok(acc)
}

fn distinct(points: &[(&str, &Nf)]) -> Result<()> {
    for (i, (ni, pi)) in points.iter().enumerate() {
        for (nk, pk) in &points[i + 1..] {
            if pi == pk {
                return Err(Error::Degenerate(format!("{ni} collides with {nk}")));
            }
        }
    }
    Ok(())
}

/// `x(x - 1)(x - d) (x^3 - a x^2 + b x - c)`.
pub fn three_plus_cubic(d: &Nf, a: &Nf, b: &Nf, c: &Nf) -> Polynomial<Nf> {
    let lin = Polynomial::from_roots([Nf::zero(), Nf::one(), d.clone()].iter());
    lin * Polynomial::new(vec![-c.clone(), b.clone(), -a.clone(), Nf::one()])
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenericFamilyPoint {
    pub a: Nf,
    pub b: Nf,
    pub c: Nf,
    pub d: Nf,
    pub t: Nf,
    pub s: Nf,
    pub curve: Genus2Curve<Nf>,
}

impl GenericFamilyPoint {
    /// `y^2 = z(z - 1)(z - t)(z - s)`.
    pub fn e1(&self) -> EllipticModel<Nf> {
        EllipticModel::BranchPoints {
            q: [
                P1Point::Finite(Nf::zero()),
                P1Point::Finite(Nf::one()),
                P1Point::Finite(self.t.clone()),
                P1Point::Finite(self.s.clone()),
            ],
        }
    }
}

/// The curve `Y^2 = x(x-1)(x-d)(x^3 - a x^2 + b x - c)` covering
/// `y^2 = z(z-1)(z-t)(z-s)` with a generic degree-3 cover.
pub fn generic_family(a: &Nf, c: &Nf) -> Result<GenericFamilyPoint> {
    let at = at_ac(a, c);
    let one = Nf::one();
    let am1 = nonzero(a.clone() - &one, "a - 1")?;
    let den23 = nonzero(Nf::from(2) * a - Nf::from(3), "2a - 3")?;
    if c.is_zero() {
        return Err(Error::Degenerate("c = 0: s = 0".into()));
    }
    let am1_sq = am1.clone() * &am1;
    let b = formulas::GEN_B_NUM.eval(&at)?.div(&(Nf::from(4) * &am1_sq))?;
    let d = formulas::GEN_D_NUM.eval(&at)?.div(&den23)?;
    let t = formulas::GEN_T_NUM.eval(&at)?.div(&den23.pow(3))?;
    let s = (Nf::from(4) * c).div(&am1_sq)?;
    if t.is_zero() {
        return Err(Error::Degenerate("t = 0".into()));
    }
    if s == one {
        return Err(Error::Degenerate("s collides with 1: (a-1)^2 = 4c".into()));
    }
    if d.is_zero() {
        return Err(Error::Degenerate("d = 0".into()));
    }
    if d == one {
        return Err(Error::Degenerate("d collides with 1".into()));
    }
    let zero = Nf::zero();
    distinct(&[("0", &zero), ("1", &one), ("t", &t), ("s", &s)])?;
    let curve = Genus2Curve::new_smooth(three_plus_cubic(&d, a, &b, c))?;
    Ok(GenericFamilyPoint {
        a: a.clone(),
        b,
        c: c.clone(),
        d,
        t,
        s,
        curve,
    })
}

/// `16/C^2 * A^3 / (a^6 c^2 (a-1)^2 (a-2)^2 (a-3)^6 ((a-1)^2 - 4c)^2)`.
pub fn generic_j1(a: &Nf, c: &Nf) -> Result<Nf> {
    let at = at_ac(a, c);
    let big_a = formulas::GEN_A.eval(&at)?;
    let big_c = nonzero(formulas::GEN_C.eval(&at)?, "C")?;
    let one = Nf::one();
    let am1 = a.clone() - &one;
    let factors = [
        (a.clone(), "a", 6),
        (c.clone(), "c", 2),
        (am1.clone(), "a - 1", 2),
        (a.clone() - Nf::from(2), "a - 2", 2),
        (a.clone() - Nf::from(3), "a - 3", 6),
        (am1.clone() * &am1 - Nf::from(4) * c, "(a-1)^2 - 4c", 2),
    ];
    let mut den = big_c.clone() * &big_c;
    for (v, name, e) in factors {
        den = den * &nonzero(v, name)?.pow(e);
    }
    Ok((Nf::from(16) * &big_a.pow(3)).div(&den)?)
}

/// `-16/C * B^3 / (c((a-1)^2 - 4c))`.
pub fn generic_j2(a: &Nf, c: &Nf) -> Result<Nf> {
    let at = at_ac(a, c);
    let big_b = formulas::GEN_B.eval(&at)?;
    let big_c = nonzero(formulas::GEN_C.eval(&at)?, "C")?;
    let am1 = a.clone() - Nf::one();
    let c = nonzero(c.clone(), "c")?;
    let q = nonzero(am1.clone() * &am1 - Nf::from(4) * &c, "(a-1)^2 - 4c")?;
    Ok((Nf::from(-16) * &big_b.pow(3)).div(&(big_c * &c * &q))?)
}

/// `z = k x (x - m)^2 / (x - u)` with branch points `0, 1, t, s, infinity`.
pub fn generic_cover(p: &GenericFamilyPoint) -> Result<RationalMap<Nf>> {
    let m = p.a.div(&Nf::from(2))?;
    let k = p.s.div(&nonzero(m.clone() * &m - p.b.clone(), "m^2 - b")?)?;
    let u = (-(k.clone() * &p.c)).div(&p.s)?;
    let num = Polynomial::from_roots([Nf::zero(), m.clone(), m].iter()).scale(&k);
    let den = Polynomial::linear_root(u);
    Ok(RationalMap::new(num, den)?)
}

pub fn generic_branch_points(p: &GenericFamilyPoint) -> Vec<P1Point<Nf>> {
    vec![
        P1Point::Finite(Nf::zero()),
        P1Point::Finite(Nf::one()),
        P1Point::Finite(p.t.clone()),
        P1Point::Finite(p.s.clone()),
        P1Point::Infinity,
    ]
}

/// Checks the generic cover against the case-I profile.
pub fn verify_generic_cover(p: &GenericFamilyPoint) -> Result<CoverReport<Nf>> {
    let phi = generic_cover(p)?;
    let report = enumerate_profiles(3)?;
    let claimed = &report.get("I").expect("case I exists at n = 3").profile;
    Ok(verify_cover(&phi, &generic_branch_points(p), claimed)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegenerateFamilyPoint {
    pub w1: Nf,
    pub w2: Nf,
    pub w3: Nf,
    pub s: Nf,
    pub curve: Genus2Curve<Nf>,
}

impl DegenerateFamilyPoint {
    /// `y^2 = z(z - 1)(z - s)`.
    pub fn e(&self) -> EllipticModel<Nf> {
        EllipticModel::Legendre { t: self.s.clone() }
    }

    /// `y^2 = (x - w1)(x - w2)(x - w3)`.
    pub fn cubic_model(&self) -> EllipticModel<Nf> {
        EllipticModel::BranchPoints {
            q: [
                P1Point::Finite(self.w1.clone()),
                P1Point::Finite(self.w2.clone()),
                P1Point::Finite(self.w3.clone()),
                P1Point::Infinity,
            ],
        }
    }
}

/// Both roots `w2` of the w1-w2 relation at the given `w1`.
pub fn solve_w2(w1: &Rational) -> Result<[Nf; 2]> {
    let coeffs = formulas::EQ1.poly().coefficients_in("w_2");
    let at = [("w_1", w1.clone())];
    let c: Vec<Rational> = coeffs.iter().map(|p| p.eval(&at)).collect::<std::result::Result<_, _>>()?;
    Ok(nf_solve_quadratic(&c[2], &c[1], &c[0])?)
}

/// `w3` and `s` at a point of the w1-w2 relation.
pub fn degenerate_point(w1: &Nf, w2: &Nf) -> Result<DegenerateFamilyPoint> {
    let at = at_w(w1, w2);
    if !formulas::EQ1.eval(&at)?.is_zero() {
        return Err(Error::OffVariety("w1-w2 relation"));
    }
    let zero = Nf::zero();
    let one = Nf::one();
    distinct(&[("0", &zero), ("1", &one), ("w1", w1), ("w2", w2)])?;
    let w3 = formulas::W3_NUM.eval(&at)?.div(&w3_den(w1, w2)?)?;
    let inner = formulas::S_INNER_NUM.eval(&at)?.div(&product(&formulas::S_DEN, &at)?)?;
    let s = Nf::from(-27) * &inner * &inner;
    distinct(&[("0", &zero), ("1", &one), ("w1", w1), ("w2", w2), ("w3", &w3)])?;
    if s.is_zero() || s == one {
        return Err(Error::Degenerate("s in {0, 1}".into()));
    }
    let roots = [zero, one, w1.clone(), w2.clone(), w3.clone()];
    let curve = Genus2Curve::new_smooth(Polynomial::from_roots(roots.iter()))?;
    Ok(DegenerateFamilyPoint {
        w1: w1.clone(),
        w2: w2.clone(),
        w3,
        s,
        curve,
    })
}

fn w3_den(w1: &Nf, w2: &Nf) -> Result<Nf> {
    let at = at_w(w1, w2);
    let one = Nf::one();
    let w1c = nonzero(w1.clone(), formulas::W3_DEN[0].name)?;
    let w1m = nonzero(w1.clone() - &one, formulas::W3_DEN[1].name)?;
    let f = nonzero(formulas::W3_DEN[2].eval(&at)?, formulas::W3_DEN[2].name)?;
    Ok(Nf::from(16) * &w1c.pow(3) * &w1m.pow(3) * &f)
}

/// The two Galois-conjugate family points over a rational `w1`.
pub fn degenerate_family(w1: &Rational) -> Result<[DegenerateFamilyPoint; 2]> {
    if w1.is_zero() || w1.is_one() {
        return Err(Error::Degenerate(format!("w1 = {w1} is a Weierstrass point")));
    }
    let [r1, r2] = solve_w2(w1)?;
    if r1 == r2 {
        return Err(Error::Degenerate("the w1-w2 relation has a double root".into()));
    }
    let w1 = Nf::rational(w1.clone());
    Ok([degenerate_point(&w1, &r1)?, degenerate_point(&w1, &r2)?])
}

/// `z = k2 (x - w1)^3 / (x(x - 1))`, normalized so that `w3` maps to 1.
pub fn degenerate_cover(p: &DegenerateFamilyPoint) -> Result<RationalMap<Nf>> {
    let one = Nf::one();
    let diff = nonzero(p.w3.clone() - &p.w1, "w3 - w1")?;
    let k2 = (p.w3.clone() * &(p.w3.clone() - &one)).div(&diff.pow(3))?;
    let num = Polynomial::linear_root(p.w1.clone()).pow(3).scale(&k2);
    let den = Polynomial::from_roots([Nf::zero(), one].iter());
    Ok(RationalMap::new(num, den)?)
}

pub fn degenerate_branch_points(p: &DegenerateFamilyPoint) -> Vec<P1Point<Nf>> {
    vec![
        P1Point::Finite(p.s.clone()),
        P1Point::Finite(Nf::one()),
        P1Point::Finite(Nf::zero()),
        P1Point::Infinity,
    ]
}

/// Checks the degenerate cover against the case-III.ii profile.
pub fn verify_degenerate_cover(p: &DegenerateFamilyPoint) -> Result<CoverReport<Nf>> {
    let phi = degenerate_cover(p)?;
    let report = enumerate_profiles(3)?;
    let claimed = &report.get("III.ii").expect("III.ii exists at n = 3").profile;
    Ok(verify_cover(&phi, &degenerate_branch_points(p), claimed)?)
}

fn solve_linear(rel: &Formula, unknown: &str, at: &[(&str, Nf)], what: &'static str) -> Result<Nf> {
    let cs = rel.poly().coefficients_in(unknown);
    if cs.len() != 2 {
        return Err(Error::Input(format!("{} is not linear in {unknown}", rel.name)));
    }
    let c0 = cs[0].eval(at)?;
    let c1 = nonzero(cs[1].eval(at)?, what)?;
    Ok((-c0).div(&c1)?)
}

/// `j(E)` from the j1-w1 relation, which is linear in `j1`.
pub fn degenerate_j1(w1: &Nf) -> Result<Nf> {
    solve_linear(
        &formulas::J1_W1,
        "j_1",
        &[("w_1", w1.clone())],
        "j1 coefficient of the j1-w1 relation",
    )
}

/// `j` of `y^2 = (x - w1)(x - w2)(x - w3)` from the j-w1 relation.
pub fn degenerate_j(w1: &Nf) -> Result<Nf> {
    solve_linear(
        &formulas::J_W1,
        "j",
        &[("w_1", w1.clone())],
        "j coefficient of the j-w1 relation",
    )
}

/// `256 A(j) j1^3 + 3 B(j) j1^2 + 6 C(j) j1 - D(j)`.
pub fn cubic() -> MPoly {
    let j1 = MPoly::var("j_1");
    let k = |n: i64| MPoly::constant(Rational::from_int(n));
    k(256) * formulas::CUBIC_A.poly().clone() * j1.pow(3)
        + k(3) * formulas::CUBIC_B.poly().clone() * j1.pow(2)
        + k(6) * formulas::CUBIC_C.poly().clone() * j1
        - formulas::CUBIC_D.poly().clone()
}

pub fn cubic_residual(j: &Nf, j1: &Nf) -> Result<Nf> {
    Ok(cubic().eval(&[("j", j.clone()), ("j_1", j1.clone())])?)
}

/// The three values of `j1` paired with `j`, with multiplicities.
pub fn j_pair_cubic(j: &Rational) -> Result<Vec<Root>> {
    nonzero(formulas::CUBIC_A.eval(&[("j", j.clone())])?, "A(j) = (9j - 35152)^4")?;
    let p: QPoly = cubic().to_univariate("j_1", &[("j", j.clone())])?;
    Ok(solve_polynomial(&p)?)
}

/// `13824 S / T`.
pub fn j_from_absolutes<F: Field>(i1: &F, i2: &F) -> Result<F> {
    let at = [("i_1", i1.clone()), ("i_2", i2.clone())];
    let s = formulas::S_ABS.eval(&at)?;
    let t = nonzero(formulas::T_ABS.eval(&at)?, "T")?;
    Ok((F::from_i64(13824) * &s).div(&t)?)
}

/// The curve of the j = 0 fixed point.
pub fn j0_curve() -> Genus2Curve<Rational> {
    let k = |n: i64| Rational::from_int(n);
    Genus2Curve::new(Polynomial::new(vec![k(0), k(-216), k(216), k(0), k(-1), k(1)]))
        .expect("degree 5")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lemma53Point {
    pub t: Nf,
    pub curve: Genus2Curve<Nf>,
    pub e: EllipticModel<Nf>,
    pub cover: RationalMap<Nf>,
}

/// `Y^2 = x(x - 1)(x^3 - 3/2 x^2 + 9/16 x - t/16)` with the degenerate
/// cover `z = 16 x (x - 3/4)^2` onto `y^2 = z(z - 1)(z - t)`.
pub fn lemma53_family(t: &Nf) -> Result<Lemma53Point> {
    if t.is_zero() || t.is_one() {
        return Err(Error::Degenerate(format!("t = {t}")));
    }
    let f3 = Polynomial::new(vec![
        -t.div(&Nf::from(16))?,
        Nf::rational(Rational::frac(9, 16)),
        Nf::rational(Rational::frac(-3, 2)),
        Nf::one(),
    ]);
    let f = Polynomial::from_roots([Nf::zero(), Nf::one()].iter()) * f3;
    let curve = Genus2Curve::new_smooth(f)?;
    let m = Nf::rational(Rational::frac(3, 4));
    let cover = RationalMap::polynomial(
        Polynomial::from_roots([Nf::zero(), m.clone(), m].iter()).scale(&Nf::from(16)),
    )?;
    Ok(Lemma53Point {
        t: t.clone(),
        curve,
        e: EllipticModel::Legendre { t: t.clone() },
        cover,
    })
}

pub fn lemma53_branch_points(t: &Nf) -> Vec<P1Point<Nf>> {
    vec![
        P1Point::Finite(Nf::zero()),
        P1Point::Finite(Nf::one()),
        P1Point::Infinity,
        P1Point::Finite(t.clone()),
    ]
}

pub fn verify_lemma53_cover(p: &Lemma53Point) -> Result<CoverReport<Nf>> {
    let report = enumerate_profiles(3)?;
    let claimed = &report.get("III.ii").expect("III.ii exists at n = 3").profile;
    Ok(verify_cover(&p.cover, &lemma53_branch_points(&p.t), claimed)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub t1: Nf,
    pub t2: Nf,
    pub j1: Nf,
    pub j2: Nf,
    pub curve: Genus2Curve<Nf>,
    pub absolute: AbsoluteInvariants<Nf>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table {
    pub rows: Vec<TableRow>,
    pub rows_isomorphic: bool,
}

fn table_row(t1: Nf, t2: Nf) -> Result<TableRow> {
    let p = lemma53_family(&t1)?;
    Ok(TableRow {
        j1: j_from_lambda(&t1)?,
        j2: j_from_lambda(&t2)?,
        absolute: p.curve.absolute_invariants()?,
        curve: p.curve,
        t1,
        t2,
    })
}

/// The two classes where both covers are degenerate. The second row lives
/// in `Q(sqrt(-2))`.
pub fn both_degenerate_table() -> Result<Table> {
    let q = |n, d| Nf::rational(Rational::frac(n, d));
    let row1 = table_row(q(1, 2), q(-1, 1))?;
    let r = crate::exact::sqrt_in(-2)?;
    let num = Nf::from(241) + Nf::from(22) * &r;
    let t1 = num.div(&(Nf::from(-2) + Nf::from(22) * &r))?;
    let t2 = num.div(&Nf::from(243))?;
    let row2 = table_row(t1, t2)?;
    let rows_isomorphic = is_isomorphic(&row1.curve, &row2.curve)?;
    Ok(Table {
        rows: vec![row1, row2],
        rows_isomorphic,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CollisionCheck {
    pub condition: &'static str,
    /// Degree of the gcd of the eliminated condition with the j-w1
    /// relation; positive means some root of the relation degenerates.
    pub common_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpecializationReport {
    pub j: Rational,
    pub relation: QPoly,
    pub checks: Vec<CollisionCheck>,
    pub j10_vanishes: bool,
}

/// Whether some root `w1` of the j-w1 relation at the given `j` makes the
/// family curve singular. Each way two of `0, 1, w1, w2, w3, infinity` can
/// collide is eliminated against the w1-w2 relation and intersected with the relation.
pub fn specialization_kills_j10(j: &Rational) -> Result<SpecializationReport> {
    let relation = formulas::J_W1.poly().to_univariate("w_1", &[("j", j.clone())])?;
    let w1 = MPoly::var("w_1");
    let w2 = MPoly::var("w_2");
    let one = MPoly::constant(Rational::one());
    let num = formulas::W3_NUM.poly().clone();
    let den = MPoly::constant(Rational::from_int(16))
        * w1.pow(3)
        * (w1.clone() - one.clone()).pow(3)
        * formulas::W3_DEN[2].poly().clone();
    let conditions: Vec<(&'static str, MPoly)> = vec![
        ("w3 = 0", num.clone()),
        ("w3 = 1", num.clone() - den.clone()),
        ("w3 = w1", num.clone() - w1.clone() * den.clone()),
        ("w3 = w2", num.clone() - w2.clone() * den.clone()),
        ("w3 = infinity", den),
        ("w2 = 0", w2.clone()),
        ("w2 = 1", w2.clone() - one.clone()),
        ("w2 = w1", w2 - w1.clone()),
    ];
    let eq1 = formulas::EQ1.poly();
    let mut checks = Vec::new();
    for extra in [("w1 = 0", QPoly::x()), ("w1 = 1", QPoly::linear_root(Rational::one()))] {
        checks.push(CollisionCheck {
            condition: extra.0,
            common_degree: relation.gcd(&extra.1)?.degree().unwrap_or(0),
        });
    }
    for (name, cond) in conditions {
        let r = cond.resultant_in(eq1, "w_2")?.to_qpoly()?;
        let g = if r.is_zero() {
            relation.clone()
        } else {
            relation.gcd(&r)?
        };
        checks.push(CollisionCheck {
            condition: name,
            common_degree: g.degree().unwrap_or(0),
        });
    }
    let j10_vanishes = checks.iter().any(|c| c.common_degree > 0);
    Ok(SpecializationReport {
        j: j.clone(),
        relation,
        checks,
        j10_vanishes,
    })
}

/// Eliminates `w1` between the two j-relations and divides out the cubic.
/// Returns the cofactor.
pub fn cubic_cofactor() -> Result<MPoly> {
    let r = formulas::J1_W1.poly().resultant_in(formulas::J_W1.poly(), "w_1")?;
    Ok(r.div_exact(&cubic())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Nf {
        Nf::rational(Rational::frac(n, d))
    }

    #[test]
    fn generic_at_4_1() {
        let p = generic_family(&q(4, 1), &q(1, 1)).unwrap();
        assert_eq!(p.d, q(8, 5));
        assert_eq!(p.t, q(128, 125));
        assert_eq!(p.s, q(4, 9));
        assert_eq!(p.b, q(41, 9));
        let j1 = generic_j1(&q(4, 1), &q(1, 1)).unwrap();
        assert_eq!(j1, q(17757110542969, 23912100));
        assert_eq!(j1, p.e1().j_invariant().unwrap());
        assert_eq!(generic_j2(&q(4, 1), &q(1, 1)).unwrap(), q(-2370816, 815));
    }

    #[test]
    fn generic_cover_is_case_one() {
        let p = generic_family(&q(4, 1), &q(1, 1)).unwrap();
        let phi = generic_cover(&p).unwrap();
        assert_eq!(phi.degree(), 3);
        assert!(verify_generic_cover(&p).unwrap().matches);
    }

    #[test]
    fn generic_degeneracies() {
        let e = |a, c| generic_family(&a, &c).unwrap_err();
        assert_eq!(e(q(2, 1), q(1, 1)), Error::Degenerate("t = 0".into()));
        assert_eq!(e(q(1, 1), q(1, 1)), Error::Vanishing("a - 1"));
        assert_eq!(e(q(3, 2), q(1, 1)), Error::Vanishing("2a - 3"));
        assert!(matches!(e(q(5, 1), q(4, 1)), Error::Degenerate(m) if m.contains("s collides with 1")));
        assert!(matches!(e(q(3, 1), q(2, 1)), Error::Degenerate(m) if m.contains("d collides")));
        assert!(matches!(e(q(4, 1), q(0, 1)), Error::Degenerate(_)));
    }

    #[test]
    fn degenerate_at_2() {
        let pts = degenerate_family(&Rational::from_int(2)).unwrap();
        let r3 = crate::exact::sqrt_in(3).unwrap();
        let w2s: Vec<Nf> = pts.iter().map(|p| p.w2.clone()).collect();
        assert!(w2s.contains(&(Nf::from(8) + Nf::from(4) * &r3)));
        assert!(w2s.contains(&(Nf::from(8) - Nf::from(4) * &r3)));
        let j = degenerate_j(&q(2, 1)).unwrap();
        let j1 = degenerate_j1(&q(2, 1)).unwrap();
        assert_eq!(j, q(54000, 1));
        assert_eq!(j1, q(1728, 1));
        for p in &pts {
            assert_eq!(p.cubic_model().j_invariant().unwrap(), j);
            assert_eq!(p.e().j_invariant().unwrap(), j1);
            assert!(verify_degenerate_cover(p).unwrap().matches);
        }
        assert!(cubic_residual(&j, &j1).unwrap().is_zero());
    }

    #[test]
    fn degenerate_rejects_weierstrass_w1() {
        assert!(matches!(degenerate_family(&Rational::from_int(0)), Err(Error::Degenerate(_))));
        assert!(matches!(degenerate_family(&Rational::from_int(1)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn cubic_special_values() {
        let r = j_pair_cubic(&Rational::from_int(0)).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].multiplicity, 3);
        assert_eq!(r[0].value, q(-1213857792, 28561));

        let mut r = j_pair_cubic(&Rational::from_int(1728)).unwrap();
        r.sort_by_key(|x| x.multiplicity);
        assert_eq!(r[0].value, q(1728, 1));
        assert_eq!(r[1].multiplicity, 2);
        assert_eq!(
            r[1].value,
            Nf::rational("942344950464/1500625".parse().unwrap())
        );
        assert_eq!(
            j_pair_cubic(&Rational::frac(35152, 9)).unwrap_err(),
            Error::Vanishing("A(j) = (9j - 35152)^4")
        );
    }

    #[test]
    fn lemma53_cover() {
        let p = lemma53_family(&q(1, 2)).unwrap();
        let rep = verify_lemma53_cover(&p).unwrap();
        assert!(rep.matches, "{rep:?}");
        assert!(lemma53_family(&q(0, 1)).is_err());
    }

    #[test]
    fn table() {
        let t = both_degenerate_table().unwrap();
        assert_eq!(t.rows[0].j1, q(1728, 1));
        assert_eq!(t.rows[0].j2, q(1728, 1));
        assert_eq!(t.rows[1].j1, q(-873722816, 59049));
        assert_eq!(t.rows[1].j2, q(-873722816, 59049));
        assert!(!t.rows_isomorphic);
    }

    #[test]
    fn absolutes_at_origin() {
        let z = Rational::from_int(0);
        assert_eq!(j_from_absolutes(&z, &z).unwrap(), Rational::from_int(1728));
    }
}

#[cfg(test)]
mod elimination {
    use super::*;

    #[test]
    fn relations_eliminate_to_the_cubic() {
        let cof = cubic_cofactor().unwrap();
        assert_eq!(cof.degree_in("j_1"), 3);
    }

    #[test]
    fn j1728_relation_factors() {
        let r = specialization_kills_j10(&Rational::from_int(1728)).unwrap();
        let k = |n: i64| Rational::from_int(n);
        let a = QPoly::new(vec![k(-1), k(2)]);
        let b = QPoly::new(vec![k(35), k(-32), k(32)]);
        let want = (a * b).pow(2).scale(&k(16));
        assert_eq!(r.relation, want);
        assert_eq!(r.checks.len(), 10);
    }
}
