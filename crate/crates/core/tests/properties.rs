use std::collections::HashSet;

use milnor::curve::{
    alexander_iterated, alexander_torus_knot, cable_presentation, CharacteristicPairs,
};
use milnor::pham::{self, Enumeration, Exponents, SphereKind, Strategy as Route};
use milnor::plumbing::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn ex(a: &[u64]) -> Exponents {
    Exponents::new(a.to_vec()).unwrap()
}

fn exponents(max_len: usize, max_a: u64) -> impl Strategy<Value = Exponents> {
    prop::collection::vec(2..=max_a, 2..=max_len).prop_map(|a| Exponents::new(a).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn spectrum_size_is_milnor_number(a in exponents(5, 9)) {
        let s = pham::monodromy_spectrum(&a).unwrap();
        prop_assert_eq!(BigInt::from(s.total()), BigInt::from(a.milnor_number()));
        let lcm = a.lcm().unwrap();
        prop_assert!(s.entries().keys().all(|r| lcm % r.denom() == 0));
    }

    #[test]
    fn spectrum_is_closed_under_conjugation(a in exponents(5, 9)) {
        let s = pham::monodromy_spectrum(&a).unwrap();
        for (r, m) in s.entries() {
            prop_assert_eq!(*m, s.multiplicity(r.conjugate()));
        }
    }

    #[test]
    fn characteristic_polynomial_is_cyclotomic(a in exponents(4, 8)) {
        let f = Enumeration::default().cyclotomic_factorization(&a).unwrap();
        let p = f.expand();
        prop_assert!(p.is_monic());
        prop_assert_eq!(BigInt::from(p.degree().unwrap()), BigInt::from(a.milnor_number()));
        // every eigenvalue is a root of unity of order dividing lcm
        let lcm = a.lcm().unwrap();
        prop_assert!(f.factors().keys().all(|d| lcm % d == 0));
        prop_assert_eq!(f.eval_i64(2), p.eval_i64(2));
        prop_assert_eq!(f.eval_i64(-1), p.eval_i64(-1));
    }

    #[test]
    fn signature_parts_partition_milnor_number(a in exponents(6, 7)) {
        prop_assume!(a.n() % 2 == 0);
        let s = Enumeration::default().signature(&a).unwrap();
        prop_assert_eq!(
            BigInt::from(s.plus + s.minus + s.zero),
            BigInt::from(a.milnor_number())
        );
    }

    #[test]
    fn routes_and_workers_agree(a in exponents(5, 10), workers in 1usize..9) {
        let direct = Enumeration::default()
            .with_strategy(Route::Direct)
            .with_workers(workers)
            .distribution(&a)
            .unwrap();
        let conv = Enumeration::default()
            .with_strategy(Route::Convolution)
            .distribution(&a)
            .unwrap();
        prop_assert_eq!(direct, conv);
    }

    #[test]
    fn smith_factors_multiply_to_determinant(
        entries in prop::collection::vec(-6i64..=6, 1..=21),
        size in 1usize..=6,
    ) {
        // random symmetric matrix from the upper triangle
        let mut rows = vec![vec![0i64; size]; size];
        let mut it = entries.iter().cycle();
        for i in 0..size {
            for j in i..size {
                let v = *it.next().unwrap();
                rows[i][j] = v;
                rows[j][i] = v;
            }
        }
        let m = IntMatrix::from_rows(&rows);
        let s = m.smith_form();
        prop_assert!(s.divisibility_holds());
        let det = m.determinant();
        if det.is_zero() {
            prop_assert!(s.rank < size);
        } else {
            prop_assert_eq!(s.rank, size);
            prop_assert_eq!(s.torsion_order(), det.abs());
        }
        // d₁ is the gcd of all entries
        let g = rows.iter().flatten().fold(BigInt::zero(), |acc, &v| acc.gcd(&BigInt::from(v)));
        prop_assert_eq!(&s.invariant_factors[0], &g);
    }
}

#[test]
fn quadric_signature_follows_vanishing_cycle() {
    for n in (2..=10usize).step_by(2) {
        let a = ex(&vec![2; n + 1]);
        let sigma = pham::signature(&a).unwrap();
        let self_int = pham::picard_lefschetz_self_intersection(n as i64).unwrap();
        assert_eq!(sigma, self_int / 2, "n = {n}");
    }
}

#[test]
fn kervaire_residue_matches_d_mod_8() {
    for n in [3usize, 5, 7] {
        for d in (3..=99u64).step_by(2) {
            let mut a = vec![d];
            a.extend(std::iter::repeat(2).take(n));
            let class = pham::sphere_class(&ex(&a)).unwrap();
            let expected = match d % 8 {
                1 | 7 => SphereKind::StandardSphere,
                _ => SphereKind::KervaireSphere,
            };
            assert_eq!(class.kind, expected, "d = {d}, n = {n}");
        }
    }
}

#[test]
fn casson_divisibility() {
    for a in 2..=12u64 {
        for b in a..=12 {
            for c in b..=12 {
                let e = ex(&[a, b, c]);
                if !pham::is_homology_3_sphere(&e).unwrap() {
                    continue;
                }
                let sigma = pham::signature(&e).unwrap();
                assert_eq!(sigma % 8, 0, "{e}");
                assert_eq!(pham::casson_invariant(&e).unwrap(), sigma / 8);
            }
        }
    }
}

#[test]
fn homology_sphere_iff_alexander_at_one_is_unit() {
    for a in 2..=12u64 {
        for b in 2..=12 {
            for c in 2..=12 {
                let e = ex(&[a, b, c]);
                let delta1 = pham::alexander_at_one(&e, &Enumeration::default()).unwrap();
                assert_eq!(
                    pham::is_homology_3_sphere(&e).unwrap(),
                    delta1.is_one(),
                    "{e}"
                );
            }
        }
    }
}

#[test]
fn outputs_are_deterministic() {
    let a = ex(&[7, 5, 3, 2]);
    let first = pham::characteristic_polynomial(&a).unwrap();
    for _ in 0..3 {
        assert_eq!(pham::characteristic_polynomial(&a).unwrap(), first);
    }
}

#[test]
fn torus_knot_degree_and_symmetry() {
    for p in 1..=12u64 {
        for q in 1..=12u64 {
            if p.gcd(&q) != 1 {
                continue;
            }
            let d = alexander_torus_knot(p, q).unwrap();
            assert_eq!(d.degree(), Some(((p - 1) * (q - 1)) as usize));
            assert!(d.is_palindromic());
            assert!(d.eval_i64(1).is_one());
        }
    }
}

/// All characteristic pairs with one stage `p₁ ≤ 8`, or two stages with
/// `p₁p₂ ≤ 8`, whose cable parameters stay at most 40.
fn small_cable_corpus() -> Vec<CharacteristicPairs> {
    let mut out = Vec::new();
    for p1 in 2..=8u64 {
        for q1 in p1 + 1..=40 {
            let Ok(one) = CharacteristicPairs::new(vec![(p1, q1)]) else {
                continue;
            };
            out.push(one);
            for p2 in 2..=8 / p1 {
                for q2 in p2 * q1 + 1..=p2 * q1 + 40 {
                    let Ok(two) = CharacteristicPairs::new(vec![(p1, q1), (p2, q2)]) else {
                        continue;
                    };
                    if cable_presentation(&two)
                        .stages()
                        .iter()
                        .all(|&(_, s)| s <= 40)
                    {
                        out.push(two);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn iterated_alexander_polynomials_pass_the_gate_and_are_distinct() {
    let corpus = small_cable_corpus();
    assert!(corpus.iter().any(|c| c.pairs().len() == 2));
    let mut seen = HashSet::new();
    for cp in &corpus {
        let delta = alexander_iterated(&cable_presentation(cp)).unwrap();
        assert_eq!(delta.degree().unwrap() as u64, cp.milnor_number(), "{cp}");
        assert!(delta.is_palindromic(), "{cp}");
        assert!(delta.eval_i64(1).abs().is_one(), "{cp}");
        assert!(seen.insert(delta), "repeated polynomial for {cp}");
    }
}
