//! Ramification of Frey-Kani coverings `phi: P^1 -> P^1`.
//!
//! A profile lists, per branch point, the ramification indices >= 2 in its
//! fiber; unramified points are implicit. The templates below are the odd-
//! and even-degree classifications, written with exponents `(n + offset)/2`
//! and instantiated at a given `n`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::elliptic::P1Point;
use crate::exact::{ExactError, Field, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RamificationError {
    #[error("degree must be at least 3, got {0}")]
    DegreeTooSmall(usize),
    #[error("numerator and denominator of the map share a factor")]
    NotCoprime,
    #[error("the map is constant")]
    ConstantMap,
    #[error("the fiber polynomial vanishes identically over this point")]
    ZeroFiber,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RamificationProfile {
    pub degree: usize,
    /// Per branch point, explicit indices >= 2 in decreasing order.
    pub fibers: Vec<Vec<usize>>,
}

impl RamificationProfile {
    pub fn new(degree: usize, fibers: Vec<Vec<usize>>) -> Self {
        let fibers = fibers
            .into_iter()
            .map(|mut f| {
                f.retain(|&e| e >= 2);
                f.sort_unstable_by(|a, b| b.cmp(a));
                f
            })
            .collect();
        RamificationProfile { degree, fibers }
    }

    /// Number of implicit unramified points in fiber `i` (negative when
    /// the explicit indices already exceed the degree).
    pub fn implicit_ones(&self, i: usize) -> isize {
        self.degree as isize - self.fibers[i].iter().sum::<usize>() as isize
    }

    pub fn overfilled(&self) -> bool {
        (0..self.fibers.len()).any(|i| self.implicit_ones(i) < 0)
    }
}

impl fmt::Display for RamificationProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .fibers
            .iter()
            .map(|fib| {
                if fib.is_empty() {
                    "(-)".to_string()
                } else {
                    fib.iter().map(|e| format!("({e})")).collect::<String>()
                }
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `sum over fibers of sum (e - 1)`.
pub fn rh_defect(p: &RamificationProfile) -> usize {
    p.fibers.iter().flatten().map(|e| e - 1).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Odd,
    Even,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CaseLabel {
    pub parity: Parity,
    pub name: &'static str,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

/// `(index)^((n + offset)/2)`, or a single point when `offset` is `None`.
#[derive(Clone, Copy, Debug)]
struct Block {
    index: usize,
    offset: Option<i64>,
}

const fn one(index: usize) -> Block {
    Block { index, offset: None }
}

const fn pow2(offset: i64) -> Block {
    Block {
        index: 2,
        offset: Some(offset),
    }
}

struct Template {
    label: CaseLabel,
    fibers: &'static [&'static [Block]],
}

const fn odd(name: &'static str, fibers: &'static [&'static [Block]]) -> Template {
    Template {
        label: CaseLabel {
            parity: Parity::Odd,
            name,
        },
        fibers,
    }
}

const fn even(name: &'static str, fibers: &'static [&'static [Block]]) -> Template {
    Template {
        label: CaseLabel {
            parity: Parity::Even,
            name,
        },
        fibers,
    }
}

static ODD_TEMPLATES: &[Template] = &[
    odd("I", &[&[pow2(-1)], &[pow2(-1)], &[pow2(-1)], &[pow2(-3)], &[one(2)]]),
    odd("II.i", &[&[pow2(-1)], &[pow2(-1)], &[pow2(-1)], &[one(4), pow2(-7)]]),
    odd("II.ii", &[&[pow2(-1)], &[pow2(-1)], &[pow2(-1)], &[pow2(-1)]]),
    odd("II.iii", &[&[pow2(-1)], &[pow2(-1)], &[one(4), pow2(-5)], &[pow2(-3)]]),
    odd("III.i", &[&[pow2(-1)], &[pow2(-1)], &[pow2(-1)], &[one(3), pow2(-5)]]),
    odd("III.ii", &[&[pow2(-1)], &[pow2(-1)], &[one(3), pow2(-3)], &[pow2(-3)]]),
];

static EVEN_TEMPLATES: &[Template] = &[
    even("I", &[&[pow2(-2)], &[pow2(-2)], &[pow2(-2)], &[pow2(0)], &[one(2)]]),
    even("II", &[&[pow2(-4)], &[pow2(-2)], &[pow2(0)], &[pow2(0)], &[one(2)]]),
    even("III", &[&[pow2(-6)], &[pow2(0)], &[pow2(0)], &[pow2(0)], &[one(2)]]),
    even("I.1", &[&[pow2(0)], &[pow2(-2)], &[pow2(-2)], &[pow2(0)]]),
    even("I.2", &[&[pow2(-2)], &[pow2(-2)], &[one(4), pow2(-6)], &[pow2(0)]]),
    even("I.3", &[&[pow2(-2)], &[pow2(-2)], &[pow2(-2)], &[one(4), pow2(-4)]]),
    even("I.4", &[&[one(3), pow2(-4)], &[pow2(-2)], &[pow2(-2)], &[pow2(0)]]),
    even("II.1", &[&[pow2(-2)], &[pow2(-2)], &[pow2(0)], &[pow2(0)]]),
    even("II.2", &[&[pow2(-4)], &[pow2(0)], &[pow2(0)], &[pow2(0)]]),
    even("II.3", &[&[one(4), pow2(-8)], &[pow2(-2)], &[pow2(0)], &[pow2(0)]]),
    even("II.4", &[&[pow2(-4)], &[one(4), pow2(-6)], &[pow2(0)], &[pow2(0)]]),
    even("II.5", &[&[pow2(-4)], &[pow2(-2)], &[pow2(-4)], &[pow2(0)]]),
    even("II.6", &[&[one(3), pow2(-6)], &[pow2(-2)], &[one(4), pow2(0)], &[pow2(0)]]),
    even("II.7", &[&[pow2(-4)], &[one(3), pow2(-4)], &[pow2(0)], &[pow2(0)]]),
    even("III.1", &[&[pow2(-4)], &[pow2(0)], &[pow2(0)], &[one(4), pow2(0)]]),
    even("III.2", &[&[pow2(-6)], &[one(4), pow2(-4)], &[pow2(0)], &[pow2(0)]]),
    even("III.3", &[&[pow2(0)], &[pow2(0)], &[pow2(0)], &[one(4), pow2(-10)]]),
    even("III.4", &[&[one(3), pow2(-8)], &[pow2(0)], &[pow2(0)], &[pow2(0)]]),
];

/// All case labels for the parity of `n`, in printed order.
pub fn case_labels(parity: Parity) -> Vec<CaseLabel> {
    let t = match parity {
        Parity::Odd => ODD_TEMPLATES,
        Parity::Even => EVEN_TEMPLATES,
    };
    t.iter().map(|t| t.label).collect()
}

fn instantiate(t: &Template, n: usize) -> Result<RamificationProfile, i64> {
    let mut fibers = Vec::new();
    for fib in t.fibers {
        let mut out = Vec::new();
        for b in *fib {
            let count = match b.offset {
                None => 1,
                Some(off) => {
                    let k = (n as i64 + off) / 2;
                    if k < 0 {
                        return Err(k);
                    }
                    k as usize
                }
            };
            out.extend(std::iter::repeat_n(b.index, count));
        }
        fibers.push(out);
    }
    Ok(RamificationProfile::new(n, fibers))
}

/// Weierstrass-point distribution test: the first four fibers lie over
/// the 2-torsion images. Odd-index points there are Weierstrass points;
/// additionally up to two index-2 points may be (the two ramification
/// points of `psi` in the 4-cycle and dihedral cases), and an index-3
/// point uses up both. The counts per fiber must be odd for odd `n`, even
/// for even `n`, and total 6.
pub fn lemma2_ok(p: &RamificationProfile) -> bool {
    if p.fibers.len() < 4 || p.overfilled() {
        return false;
    }
    let want_odd = p.degree % 2 == 1;
    let mut base = [0usize; 4];
    let mut twos = [0usize; 4];
    let mut budget: isize = 2;
    for i in 0..4 {
        let mut odd_pts = p.implicit_ones(i) as usize;
        for &e in &p.fibers[i] {
            match e {
                2 => twos[i] += 1,
                3 => {
                    odd_pts += 1;
                    budget -= 2;
                }
                e if e % 2 == 1 => return false,
                _ => {}
            }
        }
        base[i] = odd_pts;
    }
    if budget < 0 {
        return false;
    }
    // try every placement of at most `budget` extra Weierstrass points
    let budget = budget as usize;
    let mut x = [0usize; 4];
    loop {
        let used: usize = x.iter().sum();
        if used <= budget {
            let counts: Vec<usize> = (0..4).map(|i| base[i] + x[i]).collect();
            let parity_ok = counts.iter().all(|c| (c % 2 == 1) == want_odd);
            if parity_ok && counts.iter().sum::<usize>() == 6 {
                return true;
            }
        }
        // odometer over x_i in 0..=min(twos_i, budget)
        let mut i = 0;
        loop {
            if i == 4 {
                return false;
            }
            if x[i] < twos[i].min(budget) {
                x[i] += 1;
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnumeratedCase {
    pub case: CaseLabel,
    pub profile: RamificationProfile,
    pub display: String,
    pub rh_defect: usize,
    pub rh_ok: bool,
    pub rh_inconsistent: bool,
    /// Some fiber lists more ramification than the degree allows.
    pub fiber_overfilled: bool,
    pub lemma2_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExcludedCase {
    pub case: CaseLabel,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnumerationReport {
    pub degree: usize,
    pub cases: Vec<EnumeratedCase>,
    pub excluded: Vec<ExcludedCase>,
}

impl EnumerationReport {
    pub fn get(&self, name: &str) -> Option<&EnumeratedCase> {
        self.cases.iter().find(|c| c.case.name == name)
    }
}

/// Instantiates every template for the parity of `n`.
pub fn enumerate_profiles(n: usize) -> Result<EnumerationReport, RamificationError> {
    if n < 3 {
        return Err(RamificationError::DegreeTooSmall(n));
    }
    let templates = if n % 2 == 1 { ODD_TEMPLATES } else { EVEN_TEMPLATES };
    let mut cases = Vec::new();
    let mut excluded = Vec::new();
    for t in templates {
        match instantiate(t, n) {
            Err(k) => excluded.push(ExcludedCase {
                case: t.label,
                reason: format!("negative exponent {k} at n = {n}"),
            }),
            Ok(profile) => {
                let d = rh_defect(&profile);
                let rh_ok = d == 2 * n - 2;
                cases.push(EnumeratedCase {
                    case: t.label,
                    display: profile.to_string(),
                    rh_defect: d,
                    rh_ok,
                    rh_inconsistent: !rh_ok,
                    fiber_overfilled: profile.overfilled(),
                    lemma2_ok: lemma2_ok(&profile),
                    profile,
                });
            }
        }
    }
    Ok(EnumerationReport {
        degree: n,
        cases,
        excluded,
    })
}

/// A rational map `num/den` of the projective line.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "F: Serialize + Clone", deserialize = "F: Deserialize<'de> + Ring"))]
pub struct RationalMap<F> {
    pub num: Polynomial<F>,
    pub den: Polynomial<F>,
}

impl<F: Field> RationalMap<F> {
    pub fn new(num: Polynomial<F>, den: Polynomial<F>) -> Result<Self, RamificationError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero.into());
        }
        if num.gcd(&den)?.degree_i() > 0 {
            return Err(RamificationError::NotCoprime);
        }
        let m = RationalMap { num, den };
        if m.degree() == 0 {
            return Err(RamificationError::ConstantMap);
        }
        Ok(m)
    }

    pub fn polynomial(p: Polynomial<F>) -> Result<Self, RamificationError> {
        Self::new(p, Polynomial::one())
    }

    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    /// Full multiset of ramification indices over `q`, including 1s, in
    /// decreasing order.
    pub fn fiber(&self, q: &P1Point<F>) -> Result<Vec<usize>, RamificationError> {
        fiber_profile(&self.num, &self.den, q)
    }
}

/// Root multiplicities of `num - q*den` (of `den` over infinity), plus the
/// multiplicity of the point at infinity when the degree drops.
pub fn fiber_profile<F: Field>(
    num: &Polynomial<F>,
    den: &Polynomial<F>,
    q: &P1Point<F>,
) -> Result<Vec<usize>, RamificationError> {
    let n = num.degree().unwrap_or(0).max(den.degree().unwrap_or(0));
    let p = match q {
        P1Point::Finite(v) => num.clone() - den.scale(v),
        P1Point::Infinity => den.clone(),
    };
    if p.is_zero() {
        return Err(RamificationError::ZeroFiber);
    }
    let mut out = p.multiplicity_profile()?;
    let d = p.degree().unwrap_or(0);
    if d < n {
        out.push(n - d);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiberCheck<F> {
    pub point: P1Point<F>,
    pub computed: Vec<usize>,
    pub claimed: Option<Vec<usize>>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoverReport<F> {
    pub degree: usize,
    pub claimed_degree: usize,
    pub fibers: Vec<FiberCheck<F>>,
    pub total_defect: usize,
    /// Total defect over the listed points equals `2n - 2`.
    pub unramified_elsewhere: bool,
    pub matches: bool,
}

/// Compares the fibers of `phi` over `branch_points` with `claimed`,
/// fiber by fiber in the given order.
pub fn verify_cover<F: Field>(
    phi: &RationalMap<F>,
    branch_points: &[P1Point<F>],
    claimed: &RamificationProfile,
) -> Result<CoverReport<F>, RamificationError> {
    let n = phi.degree();
    let mut fibers = Vec::new();
    let mut total = 0;
    for (i, q) in branch_points.iter().enumerate() {
        let full = phi.fiber(q)?;
        total += full.iter().map(|e| e - 1).sum::<usize>();
        let computed: Vec<usize> = full.into_iter().filter(|&e| e >= 2).collect();
        let claimed_fiber = claimed.fibers.get(i).cloned();
        let ok = claimed_fiber.as_ref() == Some(&computed);
        fibers.push(FiberCheck {
            point: q.clone(),
            computed,
            claimed: claimed_fiber,
            ok,
        });
    }
    let unramified_elsewhere = total == 2 * n - 2;
    let matches = n == claimed.degree
        && branch_points.len() == claimed.fibers.len()
        && fibers.iter().all(|f| f.ok)
        && unramified_elsewhere;
    Ok(CoverReport {
        degree: n,
        claimed_degree: claimed.degree,
        fibers,
        total_defect: total,
        unramified_elsewhere,
        matches,
    })
}

/// Labels whose instantiated profile equals the computed fibers of `phi`
/// over `branch_points` as an unordered collection of fibers.
pub fn match_cases<F: Field>(
    phi: &RationalMap<F>,
    branch_points: &[P1Point<F>],
) -> Result<Vec<CaseLabel>, RamificationError> {
    let n = phi.degree();
    let mut computed = Vec::new();
    for q in branch_points {
        let f: Vec<usize> = phi.fiber(q)?.into_iter().filter(|&e| e >= 2).collect();
        if !f.is_empty() {
            computed.push(f);
        }
    }
    computed.sort();
    let report = enumerate_profiles(n)?;
    Ok(report
        .cases
        .iter()
        .filter(|c| {
            let mut fibers: Vec<Vec<usize>> =
                c.profile.fibers.iter().filter(|f| !f.is_empty()).cloned().collect();
            fibers.sort();
            fibers == computed
        })
        .map(|c| c.case)
        .collect())
}
