mod common;

use common::*;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use torus_mirror::automorphy::{auxiliary_identities, curvature_factor, gauge_transform, im_pairings, LatticeBasis};
use torus_mirror::bundle::{
    build_unitary_set, compute_rank, curvature_02_part, decompose_mu, holomorphic_split, is_holomorphic,
    recompose_mu, BundleSpec,
};
use torus_mirror::cli::json::{complex_matrix_json, parse_complex, parse_matrix};
use torus_mirror::fukaya::{canonical_form, check_conditions, AffineLagrangian, AngleVector, FukayaObject, Side};
use torus_mirror::gcs::{b_field_transform, gcs_from_complex_structure, gcs_from_complexified_symplectic, BFieldForm};
use torus_mirror::linalg::{
    det, exact_det, exact_inverse, exact_rank, rat, smith_normal_form, IntMatrix, RatComplex, RatComplexMatrix,
    Rational,
};
use torus_mirror::sampling::{
    admissible_triple, complex_matrix, int_matrix, pd_period, rational_matrix, singular_period, small_complex,
};
use torus_mirror::torus::{find_delta_unchecked, Biholomorphism};

fn int_matrix_strategy(max_n: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_n, 1..=max_n).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-bound..=bound, r * c).prop_map(move |v| IntMatrix::from_i64(r, c, &v))
    })
}

fn square_int_strategy(max_n: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(-bound..=bound, n * n).prop_map(move |v| IntMatrix::from_i64(n, n, &v))
    })
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_matches_determinantal_divisors(a in int_matrix_strategy(3, 6)) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(&s.divisors[..s.s()], &minor_gcd_divisors(&a)[..]);
        prop_assert_eq!(&(&s.left * &a) * &s.right, s.diagonal());
        prop_assert!(det(&s.left).abs().is_one() && det(&s.right).abs().is_one());
    }

    #[test]
    fn rank_formula_matches_brute_force(r in 1u64..=6, a in square_int_strategy(3, 6)) {
        prop_assert_eq!(compute_rank(r, &a).rprime, brute_force_rprime(r, &a));
    }

    #[test]
    fn bareiss_matches_cofactor(a in square_int_strategy(4, 9)) {
        prop_assert_eq!(det(&a), cofactor_det(&a));
    }

    #[test]
    fn complex_det_and_rank_match_oracles(seed in any::<u64>(), n in 1usize..=4, k in 0usize..=4) {
        let mut g = rng(seed);
        let t = singular_period(&mut g, n, k.min(n));
        prop_assert_eq!(exact_rank(&t), minor_rank(&t));
        prop_assert_eq!(exact_det(&t), cofactor_det(&t));
        let m = complex_matrix(&mut g, n, n, 3, 3);
        prop_assert_eq!(exact_det(&m), cofactor_det(&m));
        if let Ok(inv) = exact_inverse(&m) {
            prop_assert_eq!(&m * &inv, RatComplexMatrix::identity(n));
        } else {
            prop_assert!(exact_det(&m).is_zero());
        }
    }

    #[test]
    fn delta_uses_lex_first_minor(seed in any::<u64>(), n in 1usize..=5, k in 0usize..5) {
        let t = singular_period(&mut rng(seed), n, k.min(n - 1));
        let s = find_delta_unchecked(&t).unwrap();
        prop_assert_eq!((s.basis_rows.clone(), s.basis_cols.clone()), lex_first_minor(&t));
        prop_assert!(!exact_det(&(&t - &s.delta.to_rc())).is_zero());
        let ones = s.delta.entries().iter().filter(|x| x.is_one()).count();
        prop_assert!(s.delta.entries().iter().all(|x| x.is_zero() || x.is_one()));
        prop_assert_eq!(ones, n - s.rank);
    }

    #[test]
    fn gcs_axioms(seed in any::<u64>(), n in 1usize..=3) {
        let mut g = rng(seed);
        let t = pd_period(&mut g, n);
        let j = gcs_from_complex_structure(&t).unwrap();
        let w = gcs_from_complexified_symplectic(&t.re(), &t.im()).unwrap();
        for s in [&j, &w] {
            prop_assert!(s.squares_to_minus_identity() && s.preserves_pairing());
        }
        let m1 = rational_matrix(&mut g, 2 * n, 2 * n, 2, 3);
        let m2 = rational_matrix(&mut g, 2 * n, 2 * n, 2, 3);
        let b1 = BFieldForm::new(&m1 - &m1.transpose()).unwrap();
        let b2 = BFieldForm::new(&m2 - &m2.transpose()).unwrap();
        let twice = b_field_transform(&b_field_transform(&j, &b1).unwrap(), &b2).unwrap();
        prop_assert_eq!(&twice, &b_field_transform(&j, &b1.sum(&b2)).unwrap());
        prop_assert_eq!(b_field_transform(&twice, &b1.sum(&b2).negate()).unwrap(), j);
    }

    #[test]
    fn holomorphic_conditions_agree(seed in any::<u64>(), n in 1usize..=3, generic in any::<bool>()) {
        let mut g = rng(seed);
        let (t, d, a) = if generic {
            let t = pd_period(&mut g, n);
            let d = find_delta_unchecked(&t).unwrap().delta;
            (t, d, int_matrix(&mut g, n, n, 2))
        } else {
            admissible_triple(&mut g, n)
        };
        let phi = Biholomorphism::new(&t, &d).unwrap();
        let h = is_holomorphic(&a, &phi.t_prime);
        let (c1, c2) = holomorphic_split(&a, &t, &d);
        prop_assert_eq!(h, c1 && c2);
        prop_assert_eq!(h, curvature_02_part(&a, &phi.t_prime).unwrap().antisymmetric_part().is_zero());
        for side in [Side::CheckTPrime, Side::CheckT] {
            prop_assert!(check_conditions(2, &a, side, &phi).unwrap().consistent());
        }
    }

    #[test]
    fn pairings_and_gauge_identities(seed in any::<u64>(), n in 1usize..=3, r in 1u64..=3) {
        let mut g = rng(seed);
        let (t, d, a) = admissible_triple(&mut g, n);
        let cf = curvature_factor(r, &a, &t, &d).unwrap();
        prop_assert!(cf.four_pi_r.is_symmetric());
        prop_assert!(im_pairings(&cf, &LatticeBasis::new(&t).unwrap(), &d).is_ok());
        prop_assert!(auxiliary_identities(&cf));
        let phi = Biholomorphism::new(&t, &d).unwrap();
        let mu: Vec<RatComplex> = (0..n).map(|_| small_complex(&mut g, 2, 3)).collect();
        let spec = BundleSpec::new(r, &a, &mu, &phi.t_prime).unwrap();
        let gauge = gauge_transform(&spec, &phi).unwrap();
        prop_assert!(gauge.cal_a.is_symmetric());
    }

    #[test]
    fn unitary_relations_hold(r in 1u64..=4, a in square_int_strategy(2, 3), shift in proptest::collection::vec(-1i64..=1, 4)) {
        let set = build_unitary_set(r, &a).unwrap();
        prop_assert!(set.violation().is_none());
        prop_assert!(set.v.iter().all(|m| m.size() as u64 == set.rprime));
        let n = a.rows();
        let delta = IntMatrix::from_fn(n, n, |i, j| BigInt::from(shift[i * 2 + j]));
        prop_assert!(set.pull_back(&delta).violation().is_none());
    }

    #[test]
    fn mu_decomposition_round_trips(seed in any::<u64>(), n in 1usize..=3) {
        let mut g = rng(seed);
        let t = pd_period(&mut g, n);
        let mu: Vec<RatComplex> = (0..n).map(|_| small_complex(&mut g, 3, 4)).collect();
        let (p, q) = decompose_mu(&mu, &t).unwrap();
        prop_assert_eq!(recompose_mu(&p, &q, &t), mu);
    }

    #[test]
    fn canonical_key_absorbs_translations(
        seed in any::<u64>(),
        r in 1u64..=3,
        j in 0usize..2,
        m in -2i64..=2,
        use_a in any::<bool>(),
    ) {
        let mut g = rng(seed);
        let a = int_matrix(&mut g, 2, 2, 2);
        let base: Vec<Rational> = (0..2).map(|_| rat(1, 3)).collect();
        let turns: Vec<Rational> = (0..2).map(|_| rat(1, 5)).collect();
        let obj = |p_turns: Vec<Rational>, q_turns: Vec<Rational>| FukayaObject {
            lagrangian: AffineLagrangian {
                r,
                a: a.clone(),
                p: AngleVector { base: base.clone(), turns: p_turns },
                side: Side::CheckTPrime,
            },
            q: AngleVector { base: base.clone(), turns: q_turns },
        };
        let shift: Vec<Rational> = if use_a {
            (0..2).map(|i| Rational::from_integer(a[(i, j)].clone() * m)).collect()
        } else {
            (0..2).map(|i| if i == j { rat(m * r as i64, 1) } else { rat(0, 1) }).collect()
        };
        let moved: Vec<Rational> = turns.iter().zip(&shift).map(|(t, s)| t + s).collect();
        let q_moved: Vec<Rational> = turns.iter().map(|t| t + rat(m * r as i64, 1)).collect();
        prop_assert_eq!(canonical_form(&obj(turns.clone(), turns.clone())), canonical_form(&obj(moved, q_moved)));
    }

    #[test]
    fn json_round_trip(seed in any::<u64>(), n in 1usize..=3) {
        let m = complex_matrix(&mut rng(seed), n, n, 50, 97);
        let v = complex_matrix_json(&m);
        let back = parse_matrix(&v, "$", |x, p| parse_complex(x, p, false)).unwrap();
        prop_assert_eq!(back, m);
    }
}

#[test]
fn integer_sign_helper() {
    let v = [BigInt::from(-3), BigInt::from(2)];
    assert_eq!(abs_all(&v), vec![BigInt::from(3), BigInt::from(2)]);
}
