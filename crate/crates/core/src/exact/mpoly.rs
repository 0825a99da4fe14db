//! Sparse multivariate polynomials over the rationals.
//!
//! Monomials are exponent vectors indexed by an ordered list of variable
//! names; the map order on exponent vectors is the lexicographic monomial
//! order with the first variable largest. Two operands with different
//! variable lists are aligned onto the union of both lists.
//!
//! The parser reads formulas in the notation they are usually typeset in:
//! implicit multiplication (`38637j_1w_1^7`), `^n` or `^{n}` exponents and
//! division by numeric constants only.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::error::ExactError;
use super::poly::Polynomial;
use super::rational::Rational;
use super::ring::{Domain, Field, Ring};

#[derive(Clone, Default)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// A polynomial in two named indeterminates.
pub type BivariatePolynomial = MPoly;

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MPoly { vars: Vec::new(), terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::one());
        MPoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Parses `src` over the declared variable names.
    pub fn parse(src: &str, vars: &[&str]) -> Result<Self, ExactError> {
        Parser::new(src, vars).parse()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms as `(exponents, coefficient)` in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Highest power of `name` that occurs; 0 if absent.
    pub fn degree_in(&self, name: &str) -> u32 {
        match self.index_of(name) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
        }
    }

    pub fn contains_var(&self, name: &str) -> bool {
        self.degree_in(name) > 0
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().expect("one term");
                e.iter().all(|&k| k == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn align(&self, vars: &[String]) -> BTreeMap<Vec<u32>, Rational> {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset"))
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0; vars.len()];
                for (i, &k) in e.iter().enumerate() {
                    ne[map[i]] = k;
                }
                (ne, c.clone())
            })
            .collect()
    }

    fn union_vars(&self, other: &Self) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn with_vars(&self, vars: &[String]) -> MPoly {
        if self.vars == vars {
            return self.clone();
        }
        MPoly {
            vars: vars.to_vec(),
            terms: self.align(vars),
        }
    }

    fn unify(&self, other: &Self) -> (MPoly, MPoly) {
        let vars = self.union_vars(other);
        (self.with_vars(&vars), other.with_vars(&vars))
    }

    fn add_term(terms: &mut BTreeMap<Vec<u32>, Rational>, e: Vec<u32>, c: Rational) {
        use std::collections::btree_map::Entry;
        match terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    fn leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    fn mul_term(&self, e: &[u32], c: &Rational) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(f, a)| (f.iter().zip(e).map(|(x, y)| x + y).collect(), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = MPoly::constant(Rational::one());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Exact division; errors if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MPoly) -> Result<MPoly, ExactError> {
        if d.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let (mut r, d) = self.unify(d);
        let vars = r.vars.clone();
        let (de, dc) = {
            let (e, c) = d.leading().expect("nonzero");
            (e.clone(), c.clone())
        };
        let mut q = BTreeMap::new();
        while let Some((re, rc)) = r.leading() {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return Err(ExactError::InexactDivision);
            }
            let te: Vec<u32> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let tc = rc / &dc;
            r = &r - &d.mul_term(&te, &tc);
            q.insert(te, tc);
        }
        Ok(MPoly { vars, terms: q })
    }

    /// Exact square root when `self` is the square of a polynomial with
    /// positive leading coefficient, else `None`.
    pub fn sqrt_exact(&self) -> Option<MPoly> {
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        let vars = self.vars.clone();
        let caps: Vec<u32> = (0..vars.len())
            .map(|i| self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
            .collect();
        let (le, lc) = self.leading()?;
        if le.iter().any(|k| k % 2 == 1) {
            return None;
        }
        let s0c = lc.sqrt_exact()?;
        let s0e: Vec<u32> = le.iter().map(|k| k / 2).collect();
        let mut root = MPoly {
            vars: vars.clone(),
            terms: BTreeMap::from([(s0e.clone(), s0c.clone())]),
        };
        let two_s0c = Rational::from_int(2) * &s0c;
        loop {
            let r = self - &(&root * &root);
            let Some((re, rc)) = r.leading() else {
                return Some(root);
            };
            // lt(r) = 2 * lt(root) * next term
            if re.iter().zip(&s0e).any(|(a, b)| a < b) {
                return None;
            }
            let te: Vec<u32> = re.iter().zip(&s0e).map(|(a, b)| a - b).collect();
            if te >= s0e || te.iter().zip(&caps).any(|(t, c)| 2 * t > *c) {
                return None;
            }
            let tc = rc / &two_s0c;
            Self::add_term(&mut root.terms, te, tc);
        }
    }

    /// Evaluates with every variable assigned.
    pub fn eval<F: Field>(&self, assignment: &[(&str, F)]) -> Result<F, ExactError> {
        let vals = self.lookup(assignment)?;
        let mut acc = F::zero();
        for (e, c) in &self.terms {
            let mut t = F::from_rational(c);
            for (v, &k) in vals.iter().zip(e) {
                if k > 0 {
                    t = t * &v.pow(k);
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    fn lookup<F: Field>(&self, assignment: &[(&str, F)]) -> Result<Vec<F>, ExactError> {
        self.vars
            .iter()
            .enumerate()
            .map(|(i, v)| {
                if let Some((_, x)) = assignment.iter().find(|(n, _)| n == v) {
                    Ok(x.clone())
                } else if self.terms.keys().all(|e| e[i] == 0) {
                    Ok(F::zero())
                } else {
                    Err(ExactError::VariableAbsent(v.clone()))
                }
            })
            .collect()
    }

    /// Substitutes all variables except `var` and returns the univariate
    /// polynomial in `var`.
    pub fn to_univariate<F: Field>(
        &self,
        var: &str,
        assignment: &[(&str, F)],
    ) -> Result<Polynomial<F>, ExactError> {
        let mut coeffs: Vec<MPoly> = self.coefficients_in(var);
        let mut out = Vec::with_capacity(coeffs.len());
        for c in coeffs.drain(..) {
            out.push(c.eval(assignment)?);
        }
        Ok(Polynomial::new(out))
    }

    /// Coefficients of the powers of `var`, low degree first; the
    /// coefficients no longer involve `var`.
    pub fn coefficients_in(&self, var: &str) -> Vec<MPoly> {
        let Some(i) = self.index_of(var) else {
            return vec![self.clone()];
        };
        let other: Vec<String> = self.vars.iter().filter(|v| *v != var).cloned().collect();
        let deg = self.degree_in(var) as usize;
        let mut out = vec![
            MPoly {
                vars: other.clone(),
                terms: BTreeMap::new(),
            };
            deg + 1
        ];
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne.remove(i) as usize;
            Self::add_term(&mut out[k].terms, ne, c.clone());
        }
        out
    }

    pub fn as_polynomial_in(&self, var: &str) -> Polynomial<MPoly> {
        Polynomial::new(self.coefficients_in(var))
    }

    pub fn from_polynomial_in(p: &Polynomial<MPoly>, var: &str) -> MPoly {
        let x = MPoly::var(var);
        p.coeffs()
            .iter()
            .enumerate()
            .fold(MPoly::zero(), |acc, (k, c)| acc + c * &x.pow(k as u32))
    }

    /// Resultant with respect to `var`, as a polynomial in the remaining
    /// variables.
    pub fn resultant_in(&self, other: &MPoly, var: &str) -> Result<MPoly, ExactError> {
        for p in [self, other] {
            if !p.contains_var(var) {
                return Err(ExactError::VariableAbsent(var.to_string()));
            }
        }
        let (a, b) = self.unify(other);
        a.as_polynomial_in(var).resultant(&b.as_polynomial_in(var))
    }

    /// Univariate view for a polynomial in at most one variable.
    pub fn to_qpoly(&self) -> Result<Polynomial<Rational>, ExactError> {
        let live: Vec<&String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] > 0))
            .map(|(_, v)| v)
            .collect();
        match live.as_slice() {
            [] => Ok(Polynomial::constant(self.as_constant().expect("constant"))),
            [v] => {
                let v = (*v).clone();
                self.to_univariate::<Rational>(&v, &[])
            }
            _ => Err(ExactError::Parse(format!(
                "expected a univariate polynomial, found variables {live:?}"
            ))),
        }
    }

    pub fn from_qpoly(p: &Polynomial<Rational>, var: &str) -> MPoly {
        let mut terms = BTreeMap::new();
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                terms.insert(vec![k as u32], c.clone());
            }
        }
        MPoly {
            vars: vec![var.to_string()],
            terms,
        }
    }
}

/// Resultant of `p` and `q` eliminating `var`.
pub fn bivariate_resultant(p: &MPoly, q: &MPoly, var: &str) -> Result<MPoly, ExactError> {
    p.resultant_in(q, var)
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.unify(other);
        a.terms == b.terms
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], k)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

fn add_impl(a: &MPoly, b: &MPoly, negate: bool) -> MPoly {
    let (mut x, y) = a.unify(b);
    for (e, c) in y.terms {
        MPoly::add_term(&mut x.terms, e, if negate { -c } else { c });
    }
    x
}

fn mul_impl(a: &MPoly, b: &MPoly) -> MPoly {
    let (x, y) = a.unify(b);
    let mut terms = BTreeMap::new();
    for (e1, c1) in &x.terms {
        for (e2, c2) in &y.terms {
            let e: Vec<u32> = e1.iter().zip(e2).map(|(p, q)| p + q).collect();
            MPoly::add_term(&mut terms, e, c1 * c2);
        }
    }
    MPoly { vars: x.vars, terms }
}

macro_rules! mpoly_binop {
    ($tr:ident, $m:ident, $f:expr) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                $f(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &'a MPoly) -> MPoly {
                $f(&self, rhs)
            }
        }
        impl<'a, 'b> $tr<&'b MPoly> for &'a MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &'b MPoly) -> MPoly {
                $f(self, rhs)
            }
        }
    };
}

mpoly_binop!(Add, add, |a, b| add_impl(a, b, false));
mpoly_binop!(Sub, sub, |a, b| add_impl(a, b, true));
mpoly_binop!(Mul, mul, mul_impl);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rational::one())
    }
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_i64(n: i64) -> Self {
        MPoly::constant(Rational::from_int(n))
    }
}

impl Domain for MPoly {
    fn div_exact(&self, rhs: &Self) -> Result<Self, ExactError> {
        MPoly::div_exact(self, rhs)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: Vec<&'a str>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, vars: &[&'a str]) -> Self {
        let mut vars = vars.to_vec();
        vars.sort_by_key(|v| std::cmp::Reverse(v.len()));
        Parser {
            src: src.as_bytes(),
            pos: 0,
            vars,
        }
    }

    fn err(&self, what: &str) -> ExactError {
        let rest = String::from_utf8_lossy(&self.src[self.pos.min(self.src.len())..]);
        let rest: String = rest.chars().take(24).collect();
        ExactError::Parse(format!("{what} at byte {} near {rest:?}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<MPoly, ExactError> {
        let e = self.expr()?;
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(e)
    }

    fn expr(&mut self) -> Result<MPoly, ExactError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == b'(' => true,
            Some(_) => self.match_var().is_some(),
            None => false,
        }
    }

    fn term(&mut self) -> Result<MPoly, ExactError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    let c = d
                        .as_constant()
                        .ok_or_else(|| self.err("division by a non-constant"))?;
                    let inv = c.recip()?;
                    acc = acc.scale(&inv);
                }
                _ if self.starts_factor() => acc = acc * self.factor()?,
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly, ExactError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.exponent()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u32, ExactError> {
        let braced = self.peek() == Some(b'{');
        if braced {
            self.pos += 1;
            self.skip_ws();
        }
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected exponent"));
        }
        let n: u32 = std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| self.err("exponent too large"))?;
        if braced {
            if self.peek() != Some(b'}') {
                return Err(self.err("expected '}'"));
            }
            self.pos += 1;
        }
        Ok(n)
    }

    fn match_var(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        self.vars.iter().copied().find(|v| rest.starts_with(v.as_bytes()))
    }

    fn atom(&mut self) -> Result<MPoly, ExactError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(MPoly::constant(s.parse()?))
            }
            Some(_) => match self.match_var() {
                Some(v) => {
                    self.pos += v.len();
                    Ok(MPoly::var(v))
                }
                None => Err(self.err("unknown symbol")),
            },
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn parses_implicit_products() {
        let p = MPoly::parse("38637j_1w_1^7 - 3(x+1)^{2}/2", &["j_1", "w_1", "x"]).unwrap();
        assert_eq!(p.degree_in("w_1"), 7);
        let v = p
            .eval(&[("j_1", q(1)), ("w_1", q(1)), ("x", q(1))])
            .unwrap();
        assert_eq!(v, q(38637 - 6));
    }

    #[test]
    fn bare_exponent_takes_all_digits() {
        let p = MPoly::parse("w_1^15", &["w_1"]).unwrap();
        assert_eq!(p.degree_in("w_1"), 15);
    }

    #[test]
    fn rejects_unknown_and_nonconstant_division() {
        assert!(MPoly::parse("2y", &["x"]).is_err());
        assert!(MPoly::parse("x/x", &["x"]).is_err());
        assert!(MPoly::parse("(x+1", &["x"]).is_err());
    }

    #[test]
    fn exact_division_and_failure() {
        let vars = ["x", "y"];
        let a = MPoly::parse("x^2 - y^2", &vars).unwrap();
        let b = MPoly::parse("x + y", &vars).unwrap();
        assert_eq!(a.div_exact(&b).unwrap(), MPoly::parse("x - y", &vars).unwrap());
        assert!(MPoly::parse("x^2 + y", &vars).unwrap().div_exact(&b).is_err());
    }

    #[test]
    fn square_roots() {
        let vars = ["d", "t"];
        let r = MPoly::parse("28d^{11} - 7d^{12} + t^3 - 561d^4t^2", &vars).unwrap();
        let sq = &r * &r;
        let s = sq.sqrt_exact().unwrap();
        assert!(s == r || s == -r);
        assert!((sq + MPoly::var("t")).sqrt_exact().is_none());
    }

    #[test]
    fn resultant_eliminates() {
        // res_y(y - x^2, y - 1) = 1 - x^2 up to sign
        let vars = ["x", "y"];
        let a = MPoly::parse("y - x^2", &vars).unwrap();
        let b = MPoly::parse("y - 1", &vars).unwrap();
        let r = a.resultant_in(&b, "y").unwrap();
        let want = MPoly::parse("x^2 - 1", &vars).unwrap();
        assert!(r == want || r == -want);
        assert!(matches!(
            a.resultant_in(&MPoly::var("x"), "y"),
            Err(ExactError::VariableAbsent(_))
        ));
    }
}
