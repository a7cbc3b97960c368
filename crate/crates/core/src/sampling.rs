//! Seeded generators of exact random instances: period matrices with
//! prescribed rank, and integer matrices `A` that make `AT'` symmetric.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::linalg::{
    cq, det, exact_det, inverse, nullspace, rat, IntMatrix, RatComplex, RatComplexMatrix, RatMatrix,
    Rational,
};

pub fn small_rational(rng: &mut impl Rng, bound: i64, max_den: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=max_den))
}

pub fn small_complex(rng: &mut impl Rng, bound: i64, max_den: i64) -> RatComplex {
    cq(small_rational(rng, bound, max_den), small_rational(rng, bound, max_den))
}

pub fn rational_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64, max_den: i64) -> RatMatrix {
    RatMatrix::from_fn(rows, cols, |_, _| small_rational(rng, bound, max_den))
}

pub fn complex_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64, max_den: i64) -> RatComplexMatrix {
    RatComplexMatrix::from_fn(rows, cols, |_, _| small_complex(rng, bound, max_den))
}

pub fn int_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

/// Random symmetric positive definite matrix `L L^t + I`.
pub fn symmetric_pd(rng: &mut impl Rng, n: usize) -> RatMatrix {
    let l = rational_matrix(rng, n, n, 2, 2);
    &(&l * &l.transpose()) + &RatMatrix::identity(n)
}

/// Random matrix with nonzero determinant.
pub fn invertible(rng: &mut impl Rng, n: usize) -> RatMatrix {
    loop {
        let p = rational_matrix(rng, n, n, 3, 2);
        if !det(&p).is_zero() {
            return p;
        }
    }
}

/// Period matrix whose imaginary part has a positive definite symmetric
/// part; the antisymmetric part of `Im T` is random too.
pub fn pd_period(rng: &mut impl Rng, n: usize) -> RatComplexMatrix {
    let k = rational_matrix(rng, n, n, 2, 3);
    let im = &symmetric_pd(rng, n) + &k.antisymmetric_part();
    RatComplexMatrix::from_parts(&rational_matrix(rng, n, n, 3, 3), &im)
}

pub fn nonsingular_pd_period(rng: &mut impl Rng, n: usize) -> RatComplexMatrix {
    loop {
        let t = pd_period(rng, n);
        if !exact_det(&t).is_zero() {
            return t;
        }
    }
}

/// Random unimodular integer matrix, a product of elementary operations.
pub fn unimodular(rng: &mut impl Rng, n: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    if n < 2 {
        return if rng.gen_bool(0.5) { m } else { -&m };
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let c = BigInt::from(rng.gen_range(-2i64..=2));
        for k in 0..n {
            let add = &m[(j, k)] * &c;
            m[(i, k)] += add;
        }
        if rng.gen_bool(0.2) {
            m.swap_rows(i, j);
        }
    }
    m
}

/// `T = S K + i S` with `S` symmetric positive definite and `K` similar to
/// a block diagonal matrix carrying `n - rank` rotation blocks, each of
/// which contributes one null direction to `K + i I`. Positivity of
/// `Im T` forces `rank >= n / 2`; returns `None` below that.
pub fn singular_pd_period(rng: &mut impl Rng, n: usize, rank: usize) -> Option<RatComplexMatrix> {
    let d = n.checked_sub(rank)?;
    if 2 * d > n {
        return None;
    }
    let mut core = RatMatrix::zeros(n, n);
    for b in 0..d {
        core[(2 * b, 2 * b + 1)] = rat(-1, 1);
        core[(2 * b + 1, 2 * b)] = rat(1, 1);
    }
    for i in 2 * d..n {
        core[(i, i)] = small_rational(rng, 3, 2);
    }
    let p = invertible(rng, n);
    let k = &(&p * &core) * &inverse(&p).expect("invertible");
    let s = symmetric_pd(rng, n);
    Some(RatComplexMatrix::from_parts(&(&s * &k), &s))
}

/// Random complex matrix of exact rank `rank`, without any positivity.
pub fn singular_period(rng: &mut impl Rng, n: usize, rank: usize) -> RatComplexMatrix {
    loop {
        let x = complex_matrix(rng, n, rank, 3, 1);
        let y = complex_matrix(rng, rank, n, 3, 1);
        let t = &x * &y;
        if crate::linalg::exact_rank(&t) == rank {
            return t;
        }
    }
}

/// Rank-two `5 x 5` family whose first two rows have their second column
/// proportional to the first, so the leading nonsingular minor sits on
/// rows `{0, 1}` and columns `{0, 2}`. The remaining rows are random
/// combinations of the first two.
pub fn rank_two_family(rng: &mut impl Rng) -> RatComplexMatrix {
    let n = 5;
    let top = loop {
        let mut top = complex_matrix(rng, 2, n, 3, 2);
        let c = small_complex(rng, 3, 2);
        for i in 0..2 {
            top[(i, 1)] = &top[(i, 0)] * &c;
        }
        let minor = top.submatrix(&[0, 1], &[0, 2]);
        if !exact_det(&minor).is_zero() {
            break top;
        }
    };
    let mix = complex_matrix(rng, n - 2, 2, 3, 2);
    let bottom = &mix * &top;
    RatComplexMatrix::from_blocks(&[&[&top], &[&bottom]])
}

/// Integer basis of the lattice `{A : A T' symmetric}`. The constraint is
/// linear over the rationals, so the rational null space is cleared of
/// denominators.
pub fn holomorphic_basis(t_prime: &RatComplexMatrix) -> Vec<IntMatrix> {
    let n = t_prime.rows();
    let mut eqs: Vec<Vec<Rational>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            // (A T')_{ij} - (A T')_{ji} = sum_k a_ik t_kj - a_jk t_ki
            let mut re = vec![Rational::zero(); n * n];
            let mut im = vec![Rational::zero(); n * n];
            for k in 0..n {
                re[i * n + k] += &t_prime[(k, j)].re;
                im[i * n + k] += &t_prime[(k, j)].im;
                re[j * n + k] -= &t_prime[(k, i)].re;
                im[j * n + k] -= &t_prime[(k, i)].im;
            }
            eqs.push(re);
            eqs.push(im);
        }
    }
    let basis = if eqs.is_empty() {
        (0..n * n)
            .map(|k| (0..n * n).map(|l| if k == l { Rational::one() } else { Rational::zero() }).collect())
            .collect()
    } else {
        nullspace(&RatMatrix::from_rows(eqs))
    };
    basis
        .into_iter()
        .map(|v| {
            let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect();
            let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            IntMatrix::from_fn(n, n, |i, j| &ints[i * n + j] / &g)
        })
        .collect()
}

/// Random integer combination of a lattice basis.
pub fn combination(rng: &mut impl Rng, basis: &[IntMatrix], n: usize, bound: i64) -> IntMatrix {
    let mut a = IntMatrix::zeros(n, n);
    for b in basis {
        let c = BigInt::from(rng.gen_range(-bound..=bound));
        a = &a + &b.scale(&c);
    }
    a
}

/// Data `(T, delta, A)` with `A T'` symmetric by construction:
/// `Im T = P`, `A = S P`, `Re T = delta + (c0 + c1 S) P` with `P` integral
/// symmetric positive definite and `S` integral symmetric.
pub fn admissible_triple(rng: &mut impl Rng, n: usize) -> (RatComplexMatrix, IntMatrix, IntMatrix) {
    let p = loop {
        let l = int_matrix(rng, n, n, 1);
        let p = &(&l * &l.transpose()) + &IntMatrix::identity(n);
        if det(&p).is_positive() {
            break p;
        }
    };
    let s = loop {
        let m = int_matrix(rng, n, n, 1);
        let s = &m + &m.transpose();
        if !s.is_zero() {
            break s;
        }
    };
    let delta = IntMatrix::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(0..=1)));
    let a = &s * &p;
    let c0 = small_rational(rng, 2, 2);
    let c1 = small_rational(rng, 2, 2);
    let sr = s.to_rat();
    let mix = &RatMatrix::identity(n).scale(&c0) + &sr.scale(&c1);
    let re = &delta.to_rat() + &(&mix * &p.to_rat());
    (RatComplexMatrix::from_parts(&re, &p.to_rat()), delta, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::exact_rank;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn singular_pd_has_requested_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 2..=5 {
            for rank in (n + 1) / 2..n {
                let t = singular_pd_period(&mut rng, n, rank).unwrap();
                assert_eq!(exact_rank(&t), rank);
                assert!(t.im().is_positive_definite());
            }
            for rank in 0..n {
                assert_eq!(singular_pd_period(&mut rng, n, rank).is_some(), 2 * rank >= n);
            }
        }
    }

    #[test]
    fn unimodular_has_unit_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for n in 1..=4 {
            assert!(det(&unimodular(&mut rng, n)).abs().is_one());
        }
    }

    #[test]
    fn rank_two_family_profile() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..5 {
            let t = rank_two_family(&mut rng);
            assert_eq!(exact_rank(&t), 2);
            assert_eq!(crate::linalg::independent_rows(&t), vec![0, 1]);
        }
    }

    #[test]
    fn admissible_triples_are_holomorphic() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=3 {
            let (t, delta, a) = admissible_triple(&mut rng, n);
            let tp = inverse(&(&delta.to_rc() - &t)).unwrap();
            let at = &a.to_rc() * &tp;
            assert!(at.is_symmetric());
        }
    }

    #[test]
    fn holomorphic_basis_of_example() {
        let c = |a: i64, b: i64| cq(rat(a, 1), rat(b, 1));
        let tp = RatComplexMatrix::from_rows(vec![vec![c(1, 1), c(0, 1)], vec![c(0, -1), c(1, 0)]]);
        let basis = holomorphic_basis(&tp);
        assert_eq!(basis.len(), 2);
        for b in &basis {
            assert!((&b.to_rc() * &tp).is_symmetric());
            // [[a, c], [c, c - a]]
            assert_eq!(b[(0, 1)], b[(1, 0)]);
            assert_eq!(&b[(1, 1)], &(&b[(0, 1)] - &b[(0, 0)]));
        }
    }
}
