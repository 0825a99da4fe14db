//! The `g2` command line. Every command prints one JSON document
//! `{status, payload, provenance}`; exact values are strings or number-field
//! records, never floats.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::acceptance;
use crate::degree3;
use crate::degree5;
use crate::degree7;
use crate::elliptic::{EllipticModel, P1Point};
use crate::exact::{Nf, Rational, Ring};
use crate::genus2::Genus2Curve;
use crate::ramification::{
    enumerate_profiles, match_cases, verify_cover, RamificationProfile, RationalMap,
};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "g2", version, about = "Genus-2 curves with split Jacobians, in exact arithmetic")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Output::Json, global = true)]
    pub output: Output,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Pretty,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Igusa and absolute invariants of `Y^2 = f(x)`.
    Invariants {
        /// Coefficients of f, low degree first, as a JSON array or `{"f": [...]}`.
        #[arg(long)]
        curve: String,
    },
    /// j-invariant of an elliptic curve model.
    J(JArgs),
    /// Ramification profiles for a given degree.
    Ramification {
        #[arg(long)]
        degree: usize,
    },
    /// Fibers of a rational map over the given branch points.
    VerifyCover {
        /// `{"num": [...], "den": [...]}`, coefficients low degree first.
        #[arg(long)]
        map: String,
        /// JSON array of points; `"inf"` for infinity.
        #[arg(long)]
        branch_points: String,
        /// Case name to compare against, e.g. `III.ii`.
        #[arg(long)]
        case: Option<String>,
        /// Explicit profile `{"degree": n, "fibers": [[...], ...]}`.
        #[arg(long, conflicts_with = "case")]
        claimed: Option<String>,
    },
    /// Degree-3 families.
    #[command(subcommand)]
    Deg3(Deg3),
    /// Degree-5 family at a given `u`.
    Deg5 {
        #[arg(long, allow_hyphen_values = true)]
        u: Rational,
        #[arg(long, default_value_t = 0)]
        v_branch: usize,
    },
    /// Degree-7 family at a given `d`.
    Deg7 {
        #[arg(long, allow_hyphen_values = true)]
        d: Rational,
        #[arg(long, default_value_t = 0)]
        t_branch: usize,
    },
    /// Runs the acceptance criteria.
    Selftest {
        #[arg(long)]
        criterion: Option<u32>,
    },
}

#[derive(Args, Debug)]
pub struct JArgs {
    #[arg(long, value_enum)]
    model: Model,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<Rational>,
    /// JSON array of four points; `"inf"` for infinity.
    #[arg(long)]
    points: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Model {
    Legendre,
    BranchPoints,
    Weierstrass,
}

#[derive(Subcommand, Debug)]
pub enum Deg3 {
    /// Generic family at `(a, c)`, with the branch-point oracle for `j1`.
    Generic {
        #[arg(long, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true)]
        c: Rational,
    },
    /// Degenerate family over `w1`.
    Degenerate {
        #[arg(long, allow_hyphen_values = true)]
        w1: Rational,
    },
    /// Values of `j1` paired with `j`.
    Pair {
        #[arg(long, allow_hyphen_values = true)]
        j: Rational,
    },
    /// `j = 13824 S/T` from absolute invariants.
    Absolutes {
        #[arg(long, allow_hyphen_values = true)]
        i1: Rational,
        #[arg(long, allow_hyphen_values = true)]
        i2: Rational,
    },
    /// The curve with the degenerate cover `z = 16 x (x - 3/4)^2`.
    Lemma53 {
        #[arg(long, allow_hyphen_values = true)]
        t: Rational,
    },
    /// Curves where both covers are degenerate.
    Table1,
}

#[derive(Serialize)]
struct CommandResult {
    status: &'static str,
    payload: Value,
    provenance: Vec<&'static str>,
}

struct Reply {
    payload: Value,
    provenance: Vec<&'static str>,
    /// Whether every check reported in the payload passed.
    passed: bool,
}

fn reply(payload: impl Serialize, provenance: Vec<&'static str>) -> Result<Reply> {
    Ok(Reply {
        payload: to_value(payload)?,
        provenance,
        passed: true,
    })
}

fn to_value(v: impl Serialize) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Input(e.to_string()))
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Input(format!("{what}: {e}")))
}

fn parse_points(s: &str) -> Result<Vec<P1Point<Nf>>> {
    let raw: Vec<Value> = parse_json("branch points", s)?;
    raw.into_iter()
        .map(|v| match &v {
            Value::String(x) if matches!(x.as_str(), "inf" | "infinity" | "oo") => Ok(P1Point::Infinity),
            _ => Ok(P1Point::Finite(
                serde_json::from_value(v).map_err(|e| Error::Input(format!("point: {e}")))?,
            )),
        })
        .collect()
}

/// Parses `argv` and runs the command. Returns the exit code and the text to
/// print on stdout.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.to_string());
        }
    };
    let pretty = cli.output == Output::Pretty;
    let (code, result) = match execute(&cli.command) {
        Ok(r) => (
            if r.passed { EXIT_OK } else { EXIT_DOMAIN },
            CommandResult {
                status: "ok",
                payload: r.payload,
                provenance: r.provenance,
            },
        ),
        Err(e) => (
            if matches!(e, Error::Input(_)) { EXIT_USAGE } else { EXIT_DOMAIN },
            CommandResult {
                status: "error",
                payload: json!(e),
                provenance: vec![],
            },
        ),
    };
    let text = if pretty {
        serde_json::to_string_pretty(&result)
    } else {
        serde_json::to_string(&result)
    }
    .expect("values serialize");
    (code, text)
}

fn execute(cmd: &Command) -> Result<Reply> {
    match cmd {
        Command::Invariants { curve } => invariants(curve),
        Command::J(a) => j(a),
        Command::Ramification { degree } => reply(enumerate_profiles(*degree)?, vec![]),
        Command::VerifyCover {
            map,
            branch_points,
            case,
            claimed,
        } => cover(map, branch_points, case.as_deref(), claimed.as_deref()),
        Command::Deg3(d) => deg3(d),
        Command::Deg5 { u, v_branch } => deg5(u, *v_branch),
        Command::Deg7 { d, t_branch } => deg7(d, *t_branch),
        Command::Selftest { criterion } => selftest(*criterion),
    }
}

fn invariants(curve: &str) -> Result<Reply> {
    let v: Value = parse_json("curve", curve)?;
    let c: Genus2Curve<Nf> = match v {
        Value::Array(_) => Genus2Curve::new(
            serde_json::from_value(v).map_err(|e| Error::Input(format!("curve: {e}")))?,
        )?,
        other => {
            let c: Genus2Curve<Nf> =
                serde_json::from_value(other).map_err(|e| Error::Input(format!("curve: {e}")))?;
            Genus2Curve::new(c.f)?
        }
    };
    let ig = c.igusa_invariants()?;
    let abs = c.absolute_invariants().ok();
    let mut out = to_value(&ig)?;
    let obj = out.as_object_mut().expect("struct");
    for (k, f) in [("i1", 0), ("i2", 1), ("i3", 2)] {
        let val = abs.as_ref().map(|a| match f {
            0 => a.i1.clone(),
            1 => a.i2.clone(),
            _ => a.i3.clone(),
        });
        obj.insert(k.into(), to_value(val)?);
    }
    reply(out, vec![])
}

fn j(a: &JArgs) -> Result<Reply> {
    let need = |x: &Option<Rational>, name: &str| {
        x.clone()
            .map(Nf::rational)
            .ok_or_else(|| Error::Input(format!("--{name} is required for this model")))
    };
    let model = match a.model {
        Model::Legendre => EllipticModel::Legendre { t: need(&a.t, "t")? },
        Model::Weierstrass => EllipticModel::ShortWeierstrass {
            a: need(&a.a, "a")?,
            b: need(&a.b, "b")?,
        },
        Model::BranchPoints => {
            let s = a
                .points
                .as_deref()
                .ok_or_else(|| Error::Input("--points is required for this model".into()))?;
            let pts = parse_points(s)?;
            let q: [P1Point<Nf>; 4] = pts
                .try_into()
                .map_err(|_| Error::Input("exactly four points are required".into()))?;
            EllipticModel::BranchPoints { q }
        }
    };
    let j = model.j_invariant()?;
    reply(json!({ "model": model, "j": j }), vec![])
}

fn cover(map: &str, points: &str, case: Option<&str>, claimed: Option<&str>) -> Result<Reply> {
    let raw: RationalMap<Nf> = parse_json("map", map)?;
    let phi = RationalMap::new(raw.num, raw.den)?;
    let pts = parse_points(points)?;
    let profile: Option<RamificationProfile> = match (case, claimed) {
        (Some(name), _) => {
            let rep = enumerate_profiles(phi.degree())?;
            let c = rep
                .get(name)
                .ok_or_else(|| Error::Input(format!("no case {name} at degree {}", phi.degree())))?;
            Some(c.profile.clone())
        }
        (None, Some(p)) => Some(parse_json("claimed profile", p)?),
        (None, None) => None,
    };
    let cases: Vec<String> = match_cases(&phi, &pts)?.iter().map(|c| c.name.to_string()).collect();
    match profile {
        Some(p) => {
            let report = verify_cover(&phi, &pts, &p)?;
            let passed = report.matches;
            Ok(Reply {
                payload: json!({ "report": report, "matching_cases": cases }),
                provenance: vec![],
                passed,
            })
        }
        None => {
            let fibers = pts
                .iter()
                .map(|q| phi.fiber(q))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            reply(json!({ "fibers": fibers, "matching_cases": cases }), vec![])
        }
    }
}

fn deg3(cmd: &Deg3) -> Result<Reply> {
    match cmd {
        Deg3::Generic { a, c } => {
            let (a, c) = (Nf::rational(a.clone()), Nf::rational(c.clone()));
            let p = degree3::generic_family(&a, &c)?;
            let j1 = degree3::generic_j1(&a, &c)?;
            let j2 = degree3::generic_j2(&a, &c)?;
            let oracle = p.e1().j_invariant()?;
            let cover = degree3::verify_generic_cover(&p)?;
            let passed = j1 == oracle && cover.matches;
            Ok(Reply {
                payload: json!({
                    "curve": p.curve, "a": p.a, "b": p.b, "c": p.c, "d": p.d, "t": p.t, "s": p.s,
                    "j1": j1, "j2": j2, "oracle_j1": oracle, "match": j1 == oracle,
                    "cover_matches_case_I": cover.matches,
                }),
                provenance: vec!["A", "C", "B"],
                passed,
            })
        }
        Deg3::Degenerate { w1 } => {
            let pts = degree3::degenerate_family(w1)?;
            let w = Nf::rational(w1.clone());
            let j = degree3::degenerate_j(&w)?;
            let j1 = degree3::degenerate_j1(&w)?;
            let mut passed = degree3::cubic_residual(&j, &j1)?.is_zero();
            let mut points = Vec::new();
            for p in &pts {
                let oracle_j = p.cubic_model().j_invariant()?;
                let oracle_j1 = p.e().j_invariant()?;
                let cover = degree3::verify_degenerate_cover(p)?;
                passed &= oracle_j == j && oracle_j1 == j1 && cover.matches;
                points.push(json!({
                    "point": p, "oracle_j": oracle_j, "oracle_j1": oracle_j1,
                    "cover_matches_case_III_ii": cover.matches,
                }));
            }
            Ok(Reply {
                payload: json!({ "w1": w1, "j": j, "j1": j1, "points": points }),
                provenance: vec!["w1-w2 relation", "j1-w1 relation", "j-w1 relation"],
                passed,
            })
        }
        Deg3::Pair { j } => reply(
            json!({ "j": j, "roots": degree3::j_pair_cubic(j)? }),
            vec!["A(j)", "B(j)", "C(j)", "D(j)"],
        ),
        Deg3::Absolutes { i1, i2 } => reply(
            json!({ "j": degree3::j_from_absolutes(i1, i2)? }),
            vec!["S", "T"],
        ),
        Deg3::Lemma53 { t } => {
            let p = degree3::lemma53_family(&Nf::rational(t.clone()))?;
            let report = degree3::verify_lemma53_cover(&p)?;
            let passed = report.matches;
            Ok(Reply {
                payload: json!({ "family": p, "cover": report }),
                provenance: vec![],
                passed,
            })
        }
        Deg3::Table1 => {
            let t = degree3::both_degenerate_table()?;
            let passed = !t.rows_isomorphic && t.rows.iter().all(|r| r.j1 == r.j2);
            Ok(Reply {
                payload: to_value(t)?,
                provenance: vec![],
                passed,
            })
        }
    }
}

fn deg5(u: &Rational, branch: usize) -> Result<Reply> {
    let vs = degree5::deg5_solve_v(u)?;
    let v = vs
        .get(branch)
        .ok_or_else(|| Error::Input("--v-branch must be 0 or 1".into()))?;
    let p = degree5::deg5_family(&Nf::rational(u.clone()), v)?;
    let q = degree5::deg5_j_quadratic(&p.u)?;
    let j = crate::elliptic::j_from_lambda(&p.t)?;
    let member = q.residual(&j).is_zero();
    Ok(Reply {
        payload: json!({
            "family": p, "quadratic": q, "j_e1": j, "membership": member,
        }),
        provenance: vec!["degree-5 constraint", "A(u)", "B(u)", "C(u)"],
        passed: member,
    })
}

fn deg7(d: &Rational, branch: usize) -> Result<Reply> {
    let roots = degree7::deg7_solve_t(d)?;
    let r = roots
        .get(branch)
        .ok_or_else(|| Error::Input(format!("--t-branch must be below {}", roots.len())))?;
    let p = degree7::deg7_point(&Nf::rational(d.clone()), &r.value)?;
    let passed = p.constraint_residual.is_zero() && p.j10_nonzero;
    let abs = p.absolute.clone();
    Ok(Reply {
        payload: json!({
            "d": p.d, "t": p.t, "t_multiplicity": r.multiplicity, "t_conjugates": r.conjugates,
            "a": p.coefficients.a, "b": p.coefficients.b, "c": p.coefficients.c,
            "constraint_residual": p.constraint_residual, "J10_nonzero": p.j10_nonzero,
            "i1": abs.as_ref().map(|a| a.i1.clone()),
            "i2": abs.as_ref().map(|a| a.i2.clone()),
            "i3": abs.as_ref().map(|a| a.i3.clone()),
            "curve": p.curve,
        }),
        provenance: vec!["a numerator", "b numerator", "c inner polynomial", "degree-7 constraint"],
        passed,
    })
}

fn selftest(criterion: Option<u32>) -> Result<Reply> {
    let outcomes = match criterion {
        Some(id) => vec![acceptance::run(id)
            .ok_or_else(|| Error::Input(format!("no criterion {id}")))?],
        None => acceptance::run_all(),
    };
    let passed = outcomes.iter().all(|o| o.passed);
    Ok(Reply {
        payload: to_value(&outcomes)?,
        provenance: vec![],
        passed,
    })
}
