//! The acceptance criteria as runnable checks, shared by `g2 selftest` and
//! the acceptance test target.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::degree3::{self, j_from_absolutes};
use crate::degree5::{self, deg5_family, deg5_membership, deg5_solve_v};
use crate::degree7::{self, deg7_point, deg7_solve_t};
use crate::elliptic::j_from_short_weierstrass;
use crate::exact::{Nf, Rational, Ring};
use crate::ramification::enumerate_profiles;
use crate::Result;

/// Criteria that are expected to fail; see the README for why.
pub const KNOWN_RED: &[u32] = &[2, 7];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub known_red: bool,
    pub detail: String,
}

impl Outcome {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let note = if !self.passed && self.known_red {
            " (known)"
        } else {
            ""
        };
        format!("{status} {:>2} {}{note}: {}", self.id, self.name, self.detail)
    }
}

type Check = fn() -> Result<(bool, String)>;

const CRITERIA: &[(u32, &str, Check)] = &[
    (1, "j = 0 fixed point", c1_j0),
    (2, "j = 1728 fixed point", c2_j1728),
    (3, "both-degenerate table", c3_table),
    (4, "degree-5 double root", c4_double_root),
    (5, "generic degree-3 oracle", c5_generic_oracle),
    (6, "degenerate degree-3 oracle", c6_degenerate_oracle),
    (7, "Igusa calibration", c7_calibration),
    (8, "ramification taxonomy", c8_taxonomy),
    (9, "explicit cover verification", c9_covers),
    (10, "degree-5 membership", c10_deg5_membership),
    (11, "degree-7 consistency", c11_deg7),
];

pub fn run_all() -> Vec<Outcome> {
    CRITERIA.iter().map(|&(id, name, f)| run_one(id, name, f)).collect()
}

pub fn run(id: u32) -> Option<Outcome> {
    CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .map(|&(id, name, f)| run_one(id, name, f))
}

fn run_one(id: u32, name: &'static str, f: Check) -> Outcome {
    let (passed, detail) = match f() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    Outcome {
        id,
        name,
        passed,
        known_red: KNOWN_RED.contains(&id),
        detail,
    }
}

fn rat(s: &str) -> Rational {
    s.parse().expect("literal")
}

fn nf(s: &str) -> Nf {
    Nf::rational(rat(s))
}

fn random_rational(rng: &mut ChaCha8Rng, span: i64) -> Rational {
    let n = rng.gen_range(-span..=span);
    let d = rng.gen_range(1..=span);
    Rational::frac(n, d)
}

fn c1_j0() -> Result<(bool, String)> {
    let roots = degree3::j_pair_cubic(&Rational::zero())?;
    let want = rat("-1213857792/28561");
    let triple = roots.len() == 1 && roots[0].multiplicity == 3 && roots[0].value == Nf::rational(want.clone());
    let e = j_from_short_weierstrass(&rat("-668644200"), &rat("6788828143125"))?;
    let smooth = degree3::j0_curve().is_smooth()?;
    Ok((
        triple && e == want && smooth,
        format!("triple root {triple}, Weierstrass j {e}, J10 != 0 {smooth}"),
    ))
}

fn c2_j1728() -> Result<(bool, String)> {
    let roots = degree3::j_pair_cubic(&Rational::from_int(1728))?;
    let mut got: Vec<(Nf, usize)> = roots.iter().map(|r| (r.value.clone(), r.multiplicity)).collect();
    got.sort_by_key(|x| x.1);
    let want = vec![(nf("1728"), 1), (nf("942344950464/1500625"), 2)];
    let roots_ok = got == want;
    let rep = degree3::specialization_kills_j10(&Rational::from_int(1728))?;
    Ok((
        roots_ok && rep.j10_vanishes,
        format!(
            "roots {}, some root of the j-w1 relation kills J10: {}",
            if roots_ok { "match" } else { "differ" },
            rep.j10_vanishes
        ),
    ))
}

fn c3_table() -> Result<(bool, String)> {
    let t = degree3::both_degenerate_table()?;
    let r1 = &t.rows[0];
    let r2 = &t.rows[1];
    let row1 = r1.j1 == nf("1728") && r1.j2 == nf("1728");
    let j = nf("-873722816/59049");
    let row2 = r2.j1 == j && r2.j2 == j && !r2.t1.is_rational();
    Ok((
        row1 && row2 && !t.rows_isomorphic,
        format!("row 1 {row1}, row 2 {row2}, isomorphic {}", t.rows_isomorphic),
    ))
}

fn c4_double_root() -> Result<(bool, String)> {
    let r = degree5::deg5_double_root()?;
    let root_ok = r.root == nf("28849701763/16941456");
    Ok((
        r.discriminant_vanishes && root_ok && r.locus_divides_discriminant,
        format!(
            "discriminant zero {}, root {}, divisibility {}",
            r.discriminant_vanishes, r.root, r.locus_divides_discriminant
        ),
    ))
}

fn c5_generic_oracle() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut ok = 0;
    let mut bad = Vec::new();
    let mut tries = 0;
    while ok + bad.len() < 20 && tries < 1000 {
        tries += 1;
        let a = Nf::rational(random_rational(&mut rng, 12));
        let c = Nf::rational(random_rational(&mut rng, 12));
        let Ok(p) = degree3::generic_family(&a, &c) else { continue };
        let Ok(j1) = degree3::generic_j1(&a, &c) else { continue };
        if j1 == p.e1().j_invariant()? {
            ok += 1;
        } else {
            bad.push(format!("({a}, {c})"));
        }
    }
    Ok((ok == 20, format!("{ok}/20 agree; mismatches {bad:?}")))
}

fn c6_degenerate_oracle() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut ok = 0;
    let mut bad = Vec::new();
    let mut tries = 0;
    while ok + bad.len() < 10 && tries < 1000 {
        tries += 1;
        let w1 = random_rational(&mut rng, 9);
        let Ok(pts) = degree3::degenerate_family(&w1) else { continue };
        let w = Nf::rational(w1.clone());
        let (Ok(j), Ok(j1)) = (degree3::degenerate_j(&w), degree3::degenerate_j1(&w)) else {
            continue;
        };
        let mut good = degree3::cubic_residual(&j, &j1)?.is_zero();
        for p in &pts {
            good &= p.e().j_invariant()? == j1;
            good &= p.cubic_model().j_invariant()? == j;
        }
        if good {
            ok += 1;
        } else {
            bad.push(w1.to_string());
        }
    }
    Ok((ok == 10, format!("{ok}/10 agree; mismatches {bad:?}")))
}

fn c7_calibration() -> Result<(bool, String)> {
    let mut details = Vec::new();
    let mut all = true;
    for w1 in ["2", "3", "1/2", "-5/3"] {
        let w = rat(w1);
        let j = degree3::degenerate_j(&Nf::rational(w.clone()))?;
        let p = &degree3::degenerate_family(&w)?[0];
        let res = p
            .curve
            .absolute_invariants()
            .map_err(crate::Error::from)
            .and_then(|a| j_from_absolutes(&a.i1, &a.i2));
        match res {
            Ok(js) => {
                let hit = js == j;
                all &= hit;
                details.push(format!("w1={w1}: 13824 S/T = {js}, j = {j}"));
            }
            Err(e) => {
                all = false;
                details.push(format!("w1={w1}: {e}"));
            }
        }
    }
    Ok((all, details.join("; ")))
}

fn c8_taxonomy() -> Result<(bool, String)> {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in (3..=21).step_by(2) {
        for c in enumerate_profiles(n)?.cases {
            if !c.rh_ok {
                ok = false;
                notes.push(format!("n={n} {}", c.case.name));
            }
        }
    }
    let expected: BTreeSet<&str> = ["II.5", "II.6", "III.1"].into_iter().collect();
    for n in (4..=20).step_by(2) {
        let rep = enumerate_profiles(n)?;
        let failing: BTreeSet<&str> = rep
            .cases
            .iter()
            .filter(|c| !c.rh_ok)
            .map(|c| c.case.name)
            .collect();
        let present: BTreeSet<&str> = rep
            .cases
            .iter()
            .map(|c| c.case.name)
            .filter(|x| expected.contains(x))
            .collect();
        let flagged = rep.cases.iter().all(|c| c.rh_inconsistent == !c.rh_ok);
        if failing != present || !flagged {
            ok = false;
            notes.push(format!("n={n} failing {failing:?}"));
        }
    }
    Ok((ok, if notes.is_empty() { "as expected".into() } else { notes.join(", ") }))
}

fn c9_covers() -> Result<(bool, String)> {
    let p = degree3::lemma53_family(&nf("1/2"))?;
    let a = degree3::verify_lemma53_cover(&p)?.matches;
    let q = &degree3::degenerate_family(&Rational::from_int(2))?[0];
    let b = degree3::verify_degenerate_cover(q)?.matches;
    Ok((a && b, format!("16x(x-3/4)^2: {a}, k2(x-w1)^3/(x(x-1)) at w1=2: {b}")))
}

fn c10_deg5_membership() -> Result<(bool, String)> {
    let us = [
        "0", "1/3", "3", "-1", "1/2", "7/2", "-2/5", "25/16", "43/16", "5/7", "11/4", "-7/3",
    ];
    let mut ok = 0;
    let mut bad = Vec::new();
    for u in us {
        let u = rat(u);
        for v in deg5_solve_v(&u)? {
            let Ok(p) = deg5_family(&Nf::rational(u.clone()), &v) else { continue };
            let Ok(m) = deg5_membership(&p) else { continue };
            if m {
                ok += 1;
            } else {
                bad.push(format!("u={u}"));
            }
        }
    }
    Ok((ok >= 10 && bad.is_empty(), format!("{ok} points are roots; failures {bad:?}")))
}

fn c11_deg7() -> Result<(bool, String)> {
    let square = degree7::deg7_c_is_square();
    let mut ok = 0;
    let mut bad = Vec::new();
    for d in ["2", "-1", "3", "1/2", "-2"] {
        let d = rat(d);
        for root in deg7_solve_t(&d)? {
            match deg7_point(&Nf::rational(d.clone()), &root.value) {
                Ok(p) if p.constraint_residual.is_zero() && p.j10_nonzero => ok += 1,
                Ok(_) => bad.push(format!("d={d}: J10 = 0")),
                Err(e) => bad.push(format!("d={d}: {e}")),
            }
        }
    }
    Ok((
        square && ok >= 3,
        format!("c inner square {square}; {ok} points pass; other {bad:?}"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines_are_formatted() {
        let o = Outcome {
            id: 7,
            name: "x",
            passed: false,
            known_red: true,
            detail: "d".into(),
        };
        assert_eq!(o.line(), "FAIL  7 x (known): d");
    }
}

