use g2split::elliptic::{j_from_branch_points, j_from_lambda, j_from_short_weierstrass, P1Point};
use g2split::exact::{Nf, Polynomial, QPoly, Rational, Ring};
use g2split::genus2::Genus2Curve;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn sq(x: Rational) -> Rational {
    x.clone() * &x
}

/// Igusa-Clebsch invariants summed over the roots.
fn root_invariants(a0: &Rational, r: &[Rational; 6]) -> [Rational; 4] {
    let d = |i: usize, j: usize| sq(r[i].clone() - r[j].clone());
    let idx: Vec<usize> = (0..6).collect();
    let mut i2 = q(0);
    let mut i4 = q(0);
    let mut i6 = q(0);
    let mut i10 = q(1);
    for i in 0..6 {
        for j in i + 1..6 {
            i10 = i10 * &d(i, j);
        }
    }
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                let rest: Vec<usize> = idx.iter().copied().filter(|&x| x != a && x != b && x != c).collect();
                let (p, q2, s) = (rest[0], rest[1], rest[2]);
                // each split into two triples is met twice; count it once
                if a == 0 {
                    i4 = i4 + d(a, b) * &d(b, c) * &d(c, a) * &d(p, q2) * &d(q2, s) * &d(s, p);
                    for m in permutations([p, q2, s]) {
                        i6 = i6
                            + d(a, b) * &d(b, c) * &d(c, a) * &d(p, q2) * &d(q2, s) * &d(s, p)
                                * &d(a, m[0]) * &d(b, m[1]) * &d(c, m[2]);
                    }
                }
            }
        }
    }
    for b in 1..6 {
        let rest: Vec<usize> = (1..6).filter(|&x| x != b).collect();
        for (x, y) in [(0, 1), (0, 2), (0, 3)] {
            let others: Vec<usize> = (0..4).filter(|&k| k != x && k != y).collect();
            i2 = i2 + d(0, b) * &d(rest[x], rest[y]) * &d(rest[others[0]], rest[others[1]]);
        }
    }
    let p = |k: u32| {
        let mut acc = q(1);
        for _ in 0..k {
            acc = acc * a0;
        }
        acc
    };
    [i2 * &p(2), i4 * &p(4), i6 * &p(6), i10 * &p(10)]
}

fn permutations(v: [usize; 3]) -> [[usize; 3]; 6] {
    let [a, b, c] = v;
    [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]]
}

fn igusa_clebsch(a0: &Rational, roots: &[Rational; 6]) -> [Rational; 4] {
    let f = Polynomial::from_roots(roots.iter()).scale(a0);
    let ic = Genus2Curve::new(f).unwrap().igusa_clebsch().unwrap();
    [ic.i2, ic.i4, ic.i6, ic.i10]
}

#[test]
fn transvectants_match_root_sums() {
    let cases = [
        (q(1), [q(0), q(1), q(-1), q(2), q(3), q(-4)]),
        (q(3), [q(0), q(1), q(-1), q(2), q(3), q(-4)]),
        (Rational::frac(-2, 7), [q(5), Rational::frac(1, 2), q(-3), q(7), Rational::frac(-9, 4), q(11)]),
    ];
    for (a0, r) in &cases {
        assert_eq!(igusa_clebsch(a0, r), root_invariants(a0, r));
    }
}

#[test]
fn transvectants_match_root_sums_at_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..8 {
        let mut r: Vec<Rational> = Vec::new();
        while r.len() < 6 {
            let x = Rational::frac(rng.gen_range(-30..=30), rng.gen_range(1..=9));
            if !r.contains(&x) {
                r.push(x);
            }
        }
        let r: [Rational; 6] = r.try_into().unwrap();
        let a0 = Rational::frac(rng.gen_range(1..=20), rng.gen_range(1..=20));
        assert_eq!(igusa_clebsch(&a0, &r), root_invariants(&a0, &r));
    }
}

#[test]
fn discriminant_matches_i10() {
    let r = [q(0), q(1), q(-1), q(2), q(3), q(-4)];
    let f = Polynomial::from_roots(r.iter());
    let disc = f.discriminant().unwrap();
    assert_eq!(igusa_clebsch(&q(1), &r)[3], disc);
}

/// `y^2 = x(x - 1)(x - t)` moved to `y^2 = x^3 + a x + b`.
fn legendre_to_weierstrass(t: &Rational) -> (Rational, Rational) {
    let s = q(1) + t.clone();
    let a = t.clone() - sq(s.clone()) / q(3);
    let b = -(q(2) * &s * &s * &s) / q(27) + s * t / q(3);
    (a, b)
}

#[test]
fn j_models_agree() {
    for t in [q(2), q(-1), Rational::frac(1, 2), Rational::frac(-7, 3), q(9)] {
        let (a, b) = legendre_to_weierstrass(&t);
        assert_eq!(j_from_lambda(&t).unwrap(), j_from_short_weierstrass(&a, &b).unwrap());
        let pts = [P1Point::Finite(q(0)), P1Point::Finite(q(1)), P1Point::Finite(t.clone()), P1Point::Infinity];
        assert_eq!(j_from_lambda(&t).unwrap(), j_from_branch_points(&pts).unwrap());
    }
}

#[test]
fn j_classical_values() {
    assert_eq!(j_from_lambda(&q(-1)).unwrap(), q(1728));
    assert_eq!(j_from_lambda(&q(2)).unwrap(), q(1728));
    let m = QPoly::new(vec![q(1), q(-1), q(1)]);
    let w = Nf::generator(&m).unwrap();
    assert!(j_from_lambda(&w).unwrap().is_zero());
    assert_eq!(j_from_short_weierstrass(&q(0), &q(1)).unwrap(), q(0));
    assert_eq!(j_from_short_weierstrass(&q(1), &q(0)).unwrap(), q(1728));
}
