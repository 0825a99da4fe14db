use g2split::elliptic::{j_from_branch_points, P1Point};
use g2split::exact::{poly_gcd, resultant, Field, Nf, Polynomial, QPoly, Rational, Ring};
use g2split::genus2::Genus2Curve;
use g2split::ramification::{enumerate_profiles, rh_defect};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::frac(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |x| !x.is_zero())
}

fn qpoly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1)
        .prop_map(|c| QPoly::new(c.into_iter().map(Rational::from_int).collect()))
        .prop_filter("nonconstant", |p| p.degree().unwrap_or(0) >= 1)
}

fn quadratic_field() -> impl Strategy<Value = QPoly> {
    prop::sample::select(vec![-3i64, -1, 2, 3, 5, 7])
        .prop_map(|d| QPoly::new(vec![Rational::from_int(-d), Rational::from_int(0), Rational::from_int(1)]))
}

fn element(m: QPoly) -> impl Strategy<Value = Nf> {
    (rational(), rational()).prop_map(move |(a, b)| Nf::new(&m, &QPoly::new(vec![a, b])).unwrap())
}

fn nf_triple() -> impl Strategy<Value = (Nf, Nf, Nf)> {
    quadratic_field().prop_flat_map(|m| (element(m.clone()), element(m.clone()), element(m)))
}

fn distinct(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), n).prop_filter("distinct", |v| {
        v.iter().enumerate().all(|(i, x)| v[..i].iter().all(|y| y != x))
    })
}

fn mobius() -> impl Strategy<Value = [Rational; 4]> {
    (rational(), rational(), rational(), rational())
        .prop_map(|(a, b, c, d)| [a, b, c, d])
        .prop_filter("invertible", |[a, b, c, d]| !(a.clone() * d - b.clone() * c).is_zero())
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|i| p.contains(&i)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn resultant_vanishes_iff_common_factor(p in qpoly(4), q in qpoly(4)) {
        let r = resultant(&p, &q).unwrap();
        let g = poly_gcd(&p, &q).unwrap();
        prop_assert_eq!(r.is_zero(), g.degree().unwrap_or(0) > 0);
    }

    #[test]
    fn resultant_with_forced_common_root(p in qpoly(3), q in qpoly(3), x in rational()) {
        let lin = QPoly::new(vec![-x, Rational::one()]);
        prop_assert!(resultant(&(p * lin.clone()), &(q * lin)).unwrap().is_zero());
    }

    #[test]
    fn resultant_swaps_with_sign(p in qpoly(4), q in qpoly(4)) {
        let (m, n) = (p.degree().unwrap(), q.degree().unwrap());
        let a = resultant(&p, &q).unwrap();
        let b = resultant(&q, &p).unwrap();
        prop_assert_eq!(a, if (m * n) % 2 == 0 { b } else { -b });
    }

    #[test]
    fn number_field_ring_axioms((a, b, c) in nf_triple()) {
        prop_assert_eq!(a.clone() + &b, b.clone() + &a);
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + a.clone() * &c);
        prop_assert_eq!(a.clone() - &a, Nf::zero());
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * &Nf::one().div(&a).unwrap(), Nf::one());
        }
    }

    #[test]
    fn j_is_invariant_under_reordering(v in distinct(4)) {
        let pts: Vec<P1Point<Rational>> = v.into_iter().map(P1Point::Finite).collect();
        let base = j_from_branch_points(&[pts[0].clone(), pts[1].clone(), pts[2].clone(), pts[3].clone()]).unwrap();
        for p in permutations4() {
            let q = [pts[p[0]].clone(), pts[p[1]].clone(), pts[p[2]].clone(), pts[p[3]].clone()];
            prop_assert_eq!(j_from_branch_points(&q).unwrap(), base.clone());
        }
    }

    #[test]
    fn j_is_invariant_under_mobius(v in distinct(4), [a, b, c, d] in mobius()) {
        let pts: [P1Point<Rational>; 4] = [0, 1, 2, 3].map(|i| P1Point::Finite(v[i].clone()));
        let moved = pts.clone().map(|p| p.mobius(&a, &b, &c, &d).unwrap());
        prop_assert_eq!(j_from_branch_points(&moved).unwrap(), j_from_branch_points(&pts).unwrap());
    }

    #[test]
    fn absolute_invariants_are_mobius_invariant(v in distinct(6), lead in nonzero_rational(), [a, b, c, d] in mobius()) {
        let f = Polynomial::from_roots(v.iter()).scale(&lead);
        let curve = Genus2Curve::new(f).unwrap();
        let moved = curve.transform(&a, &b, &c, &d).unwrap();
        let (x, y) = (curve.igusa_invariants().unwrap(), moved.igusa_invariants().unwrap());
        prop_assume!(!x.j2.is_zero());
        prop_assert_eq!(curve.absolute_invariants().unwrap(), moved.absolute_invariants().unwrap());
        prop_assert!(!y.j10.is_zero());
    }

    #[test]
    fn igusa_invariants_scale_by_weight(v in distinct(6), lambda in nonzero_rational()) {
        let f = Polynomial::from_roots(v.iter());
        let x = Genus2Curve::new(f.clone()).unwrap().igusa_invariants().unwrap();
        let y = Genus2Curve::new(f.scale(&lambda)).unwrap().igusa_invariants().unwrap();
        let pow = |k: u32| (0..k).fold(Rational::one(), |acc, _| acc * &lambda);
        prop_assert_eq!(y.j2, x.j2 * &pow(2));
        prop_assert_eq!(y.j4, x.j4 * &pow(4));
        prop_assert_eq!(y.j6, x.j6 * &pow(6));
        prop_assert_eq!(y.j10, x.j10 * &pow(10));
    }

    #[test]
    fn profiles_are_consistent(n in 3usize..=40) {
        let rep = enumerate_profiles(n).unwrap();
        for c in &rep.cases {
            prop_assert_eq!(c.profile.degree, n);
            prop_assert_eq!(c.rh_defect, rh_defect(&c.profile));
            prop_assert_eq!(c.rh_ok, c.rh_defect == 2 * n - 2);
            prop_assert_eq!(c.rh_inconsistent, !c.rh_ok);
            prop_assert!(c.profile.fibers.iter().flatten().all(|&e| e >= 2));
            let over = (0..c.profile.fibers.len()).any(|i| c.profile.implicit_ones(i) < 0);
            prop_assert_eq!(c.fiber_overfilled, over);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generic_j1_matches_branch_points(a in rational(), c in rational()) {
        let (a, c) = (Nf::rational(a), Nf::rational(c));
        let Ok(p) = g2split::degree3::generic_family(&a, &c) else { return Ok(()) };
        let j1 = g2split::degree3::generic_j1(&a, &c).unwrap();
        prop_assert_eq!(j1, p.e1().j_invariant().unwrap());
        prop_assert!(g2split::degree3::verify_generic_cover(&p).unwrap().matches);
    }

    #[test]
    fn degenerate_pair_lies_on_the_cubic(w1 in rational()) {
        let Ok(pts) = g2split::degree3::degenerate_family(&w1) else { return Ok(()) };
        let w = Nf::rational(w1);
        let j = g2split::degree3::degenerate_j(&w).unwrap();
        let j1 = g2split::degree3::degenerate_j1(&w).unwrap();
        prop_assert!(g2split::degree3::cubic_residual(&j, &j1).unwrap().is_zero());
        for p in &pts {
            prop_assert_eq!(p.e().j_invariant().unwrap(), j1.clone());
            prop_assert_eq!(p.cubic_model().j_invariant().unwrap(), j.clone());
        }
    }

    #[test]
    fn degree5_j_is_a_root(u in rational()) {
        for v in g2split::degree5::deg5_solve_v(&u).unwrap() {
            let Ok(p) = g2split::degree5::deg5_family(&Nf::rational(u.clone()), &v) else { continue };
            if let Ok(m) = g2split::degree5::deg5_membership(&p) {
                prop_assert!(m);
            }
        }
    }
}
