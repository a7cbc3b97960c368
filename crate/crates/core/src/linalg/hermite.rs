use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::scalar::{IntMatrix, Rational};
use super::Matrix;

/// Row-style Hermite basis of the lattice spanned by the rows of `g`.
///
/// The result is in echelon form with positive pivots, entries above each
/// pivot reduced into `[0, pivot)`, and zero rows dropped. Equal lattices
/// give equal bases.
pub fn hermite_row_basis(g: &IntMatrix) -> IntMatrix {
    let mut m = g.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            // Move the smallest nonzero entry of column c (rows >= r) up.
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !m[(i, c)].is_zero() && best.map_or(true, |b| m[(i, c)].abs() < m[(b, c)].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            m.swap_rows(r, b);
            let mut done = true;
            for i in r + 1..rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let q = &m[(i, c)] / &m[(r, c)];
                for j in 0..cols {
                    let v = &m[(i, j)] - &q * &m[(r, j)];
                    m[(i, j)] = v;
                }
                done &= m[(i, c)].is_zero();
            }
            if done {
                break;
            }
        }
        if m[(r, c)].is_zero() {
            continue;
        }
        if m[(r, c)].is_negative() {
            for j in 0..cols {
                m[(r, j)] = -m[(r, j)].clone();
            }
        }
        for i in 0..r {
            let q = m[(i, c)].div_floor(&m[(r, c)]);
            if q.is_zero() {
                continue;
            }
            for j in 0..cols {
                let v = &m[(i, j)] - &q * &m[(r, j)];
                m[(i, j)] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Matrix::from_fn(r, cols, |i, j| m[(i, j)].clone())
}

/// Reduce a rational vector modulo the lattice spanned by the rows of an
/// echelon basis (as returned by [`hermite_row_basis`]). For a full-rank
/// lattice every coordinate lands in `[0, pivot)`, which gives a unique
/// representative of the coset.
pub fn reduce_mod_lattice(v: &[Rational], basis: &IntMatrix) -> Vec<Rational> {
    let mut out = v.to_vec();
    for i in 0..basis.rows() {
        let Some(c) = (0..basis.cols()).find(|&j| !basis[(i, j)].is_zero()) else {
            continue;
        };
        let p = Rational::from_integer(basis[(i, c)].clone());
        let q: BigInt = (&out[c] / &p).floor().to_integer();
        if q.is_zero() {
            continue;
        }
        for (j, x) in out.iter_mut().enumerate() {
            *x = &*x - Rational::from_integer(&q * &basis[(i, j)]);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn hermite_is_canonical() {
        let a = IntMatrix::from_i64(3, 2, &[2, 0, 0, 2, 1, 1]);
        let b = IntMatrix::from_i64(2, 2, &[1, 1, 0, 2]);
        assert_eq!(hermite_row_basis(&a), hermite_row_basis(&b));
        assert_eq!(hermite_row_basis(&b), b);
    }

    #[test]
    fn reduction_lands_in_box() {
        let basis = hermite_row_basis(&IntMatrix::from_i64(2, 2, &[1, 1, 0, 2]));
        let v = vec![rat(7, 2), rat(-3, 1)];
        let w = reduce_mod_lattice(&v, &basis);
        assert_eq!(w, vec![rat(1, 2), rat(0, 1)]);
        let shifted = vec![&v[0] + rat(1, 1), &v[1] + rat(3, 1)];
        assert_eq!(reduce_mod_lattice(&shifted, &basis), w);
    }
}
