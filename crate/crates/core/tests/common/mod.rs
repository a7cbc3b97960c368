//! Oracles computed by brute force, independent of the library's
//! elimination and normal-form code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use torus_mirror::linalg::{rat, IntMatrix, Matrix, RatComplex, RatComplexMatrix};

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Laplace expansion along the first row.
pub fn cofactor_det<T>(m: &Matrix<T>) -> T
where
    T: Clone + Zero + One + std::ops::Neg<Output = T> + std::ops::Mul<Output = T>,
{
    let n = m.rows();
    if n == 0 {
        return T::one();
    }
    let mut acc = T::zero();
    for j in 0..n {
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let term = m[(0, j)].clone() * cofactor_det(&m.submatrix(&rows, &cols));
        acc = if j % 2 == 0 { acc + term } else { acc + -term };
    }
    acc
}

/// Largest `k` with a nonzero `k x k` minor.
pub fn minor_rank(m: &RatComplexMatrix) -> usize {
    let max = m.rows().min(m.cols());
    (1..=max)
        .rev()
        .find(|&k| {
            subsets(m.rows(), k)
                .iter()
                .any(|r| subsets(m.cols(), k).iter().any(|c| !cofactor_det(&m.submatrix(r, c)).is_zero()))
        })
        .unwrap_or(0)
}

/// Rows and columns of the lexicographically first nonsingular minor of
/// maximal size: the first row subset spanning the row space, then the
/// first column subset of it with nonzero determinant.
pub fn lex_first_minor(m: &RatComplexMatrix) -> (Vec<usize>, Vec<usize>) {
    let k = minor_rank(m);
    let all: Vec<usize> = (0..m.cols()).collect();
    let rows = subsets(m.rows(), k)
        .into_iter()
        .find(|r| minor_rank(&m.submatrix(r, &all)) == k)
        .expect("rank is attained");
    let cols = subsets(m.cols(), k)
        .into_iter()
        .find(|c| !cofactor_det(&m.submatrix(&rows, c)).is_zero())
        .expect("rank is attained");
    (rows, cols)
}

/// Elementary divisors as ratios of determinantal divisors
/// `d_k = gcd of all k x k minors`.
pub fn minor_gcd_divisors(a: &IntMatrix) -> Vec<BigInt> {
    let n = a.rows().min(a.cols());
    let mut prev = BigInt::one();
    let mut out = Vec::new();
    for k in 1..=n {
        let mut g = BigInt::zero();
        for r in subsets(a.rows(), k) {
            for c in subsets(a.cols(), k) {
                g = g.gcd(&cofactor_det(&a.submatrix(&r, &c)));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

/// Smallest `k_i >= 1` with `k_i d_i / r` integral, multiplied together.
pub fn brute_force_rprime(r: u64, a: &IntMatrix) -> u64 {
    minor_gcd_divisors(a)
        .iter()
        .map(|d| (1..=r).find(|&k| (BigInt::from(k) * d % BigInt::from(r)).is_zero()).expect("k = r works"))
        .product()
}

pub fn c(re: i64, im: i64) -> RatComplex {
    RatComplex::new(rat(re, 1), rat(im, 1))
}

pub fn example_t() -> RatComplexMatrix {
    RatComplexMatrix::from_rows(vec![vec![c(0, 1), c(1, 0)], vec![c(-1, 0), c(0, 1)]])
}

pub fn example_delta() -> IntMatrix {
    IntMatrix::from_i64(2, 2, &[0, 0, 0, 1])
}

pub fn a1() -> IntMatrix {
    IntMatrix::from_i64(2, 2, &[0, 1, 1, 1])
}

pub fn a2() -> IntMatrix {
    IntMatrix::from_i64(2, 2, &[1, 1, 1, -1])
}

pub fn abs_all(v: &[BigInt]) -> Vec<BigInt> {
    v.iter().map(|x| x.abs()).collect()
}

/// Laplace expansion along successive rows, memoized on the set of columns
/// already used: `O(2^n n)` products.
pub fn memo_det(m: &RatComplexMatrix) -> RatComplex {
    let n = m.rows();
    let mut table: Vec<Option<RatComplex>> = vec![None; 1 << n];
    table[(1 << n) - 1] = Some(RatComplex::one());
    for mask in (0..(1usize << n) - 1).rev() {
        let row = mask.count_ones() as usize;
        let mut acc = RatComplex::zero();
        for j in (0..n).filter(|j| mask & (1 << j) == 0) {
            let sign_flip = (mask & ((1 << j) - 1)).count_ones() % 2 == 1;
            let rest = table[mask | (1 << j)].as_ref().expect("filled");
            let term = &m[(row, j)] * rest;
            acc = if sign_flip { acc - term } else { acc + term };
        }
        table[mask] = Some(acc);
    }
    table[0].take().expect("filled")
}
