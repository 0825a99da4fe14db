//! Exact roots of rational polynomials.
//!
//! Rational roots are found by Sturm isolation: an isolating interval is
//! refined until it is narrower than `1/lc`, after which the only possible
//! rational root in it is the unique `k/lc` it contains. Irrational factors
//! are returned as quadratic-field elements or as the generator of
//! `Q[x]/(g)` for the leftover factor `g`.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::error::ExactError;
use super::numfield::{nf_solve_quadratic, Nf, QPoly};
use super::rational::Rational;
use super::ring::Ring;

/// One root, or one representative of a block of conjugate roots.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Root {
    pub value: Nf,
    pub multiplicity: usize,
    /// How many roots this value stands for: 1 for rational and quadratic
    /// roots, `deg g` for the generator of `Q[x]/(g)`.
    pub conjugates: usize,
}

fn sturm_chain(p: &QPoly) -> Result<Vec<QPoly>, ExactError> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1])?;
        if r.is_zero() {
            break;
        }
        chain.push(-r);
    }
    Ok(chain)
}

fn variations(chain: &[QPoly], x: &Rational) -> usize {
    let mut last = 0;
    let mut count = 0;
    for p in chain {
        let s = p.eval(x).signum();
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Distinct rational roots of a nonzero polynomial, in increasing order.
pub fn rational_roots(p: &QPoly) -> Result<Vec<Rational>, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    let mut f = p.squarefree_part()?;
    if f.coeff(0).is_zero() {
        out.push(Rational::zero());
        f = f.div_exact_poly(&QPoly::x())?;
    }
    if f.degree_i() <= 0 {
        return Ok(out);
    }
    let f = f.primitive_integer();
    let lc = f.leading_coeff().expect("nonzero").numer().clone();
    let lcq = Rational::from_int(lc.clone());
    let bound = f
        .coeffs()
        .iter()
        .map(|c| (c / &lcq).abs())
        .fold(Rational::zero(), |a, b| if b > a { b } else { a })
        + Rational::one();
    let chain = sturm_chain(&f)?;
    let width_target = Rational::new(BigInt::one(), lc.clone())?;
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let n = variations(&chain, &lo) - variations(&chain, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 && &hi - &lo < width_target {
            // k/lc in (lo, hi]
            let k = (&lo * &lcq).floor() + BigInt::one();
            let cand = Rational::new(k, lc.clone())?;
            if cand <= hi && f.eval(&cand).is_zero() {
                out.push(cand);
            }
            continue;
        }
        let mid = (&lo + &hi) * Rational::frac(1, 2);
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort();
    Ok(out)
}

/// All roots with multiplicities.
pub fn solve_polynomial(p: &QPoly) -> Result<Vec<Root>, ExactError> {
    let mut out = Vec::new();
    for (g, m) in p.squarefree_decomposition()? {
        let mut rest = g.clone();
        for r in rational_roots(&g)? {
            rest = rest.div_exact_poly(&QPoly::linear_root(r.clone()))?;
            out.push(Root {
                value: Nf::rational(r),
                multiplicity: m,
                conjugates: 1,
            });
        }
        match rest.degree() {
            Some(0) | None => {}
            Some(1) => unreachable!("linear factors have rational roots"),
            Some(2) => {
                for v in nf_solve_quadratic(&rest.coeff(2), &rest.coeff(1), &rest.coeff(0))? {
                    out.push(Root {
                        value: v,
                        multiplicity: m,
                        conjugates: 1,
                    });
                }
            }
            Some(d) => out.push(Root {
                value: Nf::generator(&rest)?,
                multiplicity: m,
                conjugates: d,
            }),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::Field;

    fn poly(c: &[i64]) -> QPoly {
        QPoly::new(c.iter().map(|&n| Rational::from_int(n)).collect())
    }

    #[test]
    fn finds_rational_roots() {
        // (2x - 3)(5x + 7)(x^2 + 1)
        let p = poly(&[-3, 2]) * poly(&[7, 5]) * poly(&[1, 0, 1]);
        assert_eq!(
            rational_roots(&p).unwrap(),
            vec![Rational::frac(-7, 5), Rational::frac(3, 2)]
        );
        assert_eq!(rational_roots(&poly(&[0, 0, 1])).unwrap(), vec![Rational::zero()]);
        assert!(rational_roots(&poly(&[-2, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn close_roots_are_separated() {
        let p = poly(&[-1000, 1001]) * poly(&[-1001, 1002]);
        assert_eq!(
            rational_roots(&p).unwrap(),
            vec![Rational::frac(1000, 1001), Rational::frac(1001, 1002)]
        );
    }

    #[test]
    fn solve_mixed() {
        // (x - 1)^2 (x^2 - 2) (x^3 - 2)
        let p = poly(&[-1, 1]).pow(2) * poly(&[-2, 0, 1]) * poly(&[-2, 0, 0, 1]);
        let roots = solve_polynomial(&p).unwrap();
        let total: usize = roots.iter().map(|r| r.multiplicity * r.conjugates).sum();
        assert_eq!(total, 7);
        assert!(roots
            .iter()
            .any(|r| r.multiplicity == 2 && r.value.as_rational() == Some(Rational::one())));
        // x^2 - 2 and x^3 - 2 stay together: no factorization beyond squarefree
        assert!(roots.iter().any(|r| r.conjugates == 5));
    }
}
