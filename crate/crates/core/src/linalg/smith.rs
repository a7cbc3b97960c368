use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::IntMatrix;
use super::Matrix;

/// `left * a * right == diag(divisors)` with unimodular `left`, `right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub left: IntMatrix,
    pub right: IntMatrix,
    /// Nonzero divisors first, each dividing the next, then zeros.
    pub divisors: Vec<BigInt>,
}

impl SmithDecomposition {
    /// Number of nonzero divisors.
    pub fn s(&self) -> usize {
        self.divisors.iter().take_while(|d| !d.is_zero()).count()
    }

    pub fn diagonal(&self) -> IntMatrix {
        Matrix::from_fn(self.left.rows(), self.right.cols(), |i, j| {
            if i == j && i < self.divisors.len() {
                self.divisors[i].clone()
            } else {
                BigInt::zero()
            }
        })
    }
}

/// Smallest nonzero absolute value in the trailing block, row-major ties.
fn pivot(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows() {
        for j in t..m.cols() {
            let v = &m[(i, j)];
            if v.is_zero() {
                continue;
            }
            if best.map_or(true, |(bi, bj)| v.abs() < m[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn add_row_multiple(m: &mut IntMatrix, dst: usize, src: usize, f: &BigInt) {
    for j in 0..m.cols() {
        let v = m[(dst, j)].clone() + f * &m[(src, j)];
        m[(dst, j)] = v;
    }
}

fn add_col_multiple(m: &mut IntMatrix, dst: usize, src: usize, f: &BigInt) {
    for i in 0..m.rows() {
        let v = m[(i, dst)].clone() + f * &m[(i, src)];
        m[(i, dst)] = v;
    }
}

/// Smith normal form by repeated Euclidean elimination. The pivot is the
/// smallest nonzero entry in absolute value (ties in row-major order), so
/// the transforms are deterministic.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m = a.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let steps = rows.min(cols);
    let mut t = 0;
    while t < steps {
        let Some((pi, pj)) = pivot(&m, t) else { break };
        m.swap_rows(t, pi);
        left.swap_rows(t, pi);
        m.swap_cols(t, pj);
        right.swap_cols(t, pj);

        let mut clean = true;
        for i in t + 1..rows {
            if m[(i, t)].is_zero() {
                continue;
            }
            let q = -(&m[(i, t)] / &m[(t, t)]);
            add_row_multiple(&mut m, i, t, &q);
            add_row_multiple(&mut left, i, t, &q);
            clean &= m[(i, t)].is_zero();
        }
        for j in t + 1..cols {
            if m[(t, j)].is_zero() {
                continue;
            }
            let q = -(&m[(t, j)] / &m[(t, t)]);
            add_col_multiple(&mut m, j, t, &q);
            add_col_multiple(&mut right, j, t, &q);
            clean &= m[(t, j)].is_zero();
        }
        if !clean {
            continue;
        }
        let p = m[(t, t)].clone();
        let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !m[(i, j)].is_multiple_of(&p)));
        if let Some(i) = offender {
            let one = BigInt::one();
            add_row_multiple(&mut m, t, i, &one);
            add_row_multiple(&mut left, t, i, &one);
            continue;
        }
        if p.is_negative() {
            for j in 0..cols {
                m[(t, j)] = -m[(t, j)].clone();
            }
            for j in 0..rows {
                left[(t, j)] = -left[(t, j)].clone();
            }
        }
        t += 1;
    }
    let divisors = (0..steps).map(|i| m[(i, i)].clone()).collect();
    SmithDecomposition { left, right, divisors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::det;

    fn check(a: &IntMatrix) -> SmithDecomposition {
        let s = smith_normal_form(a);
        assert_eq!(&(&s.left * a) * &s.right, s.diagonal());
        assert_eq!(det(&s.left).abs(), BigInt::one());
        assert_eq!(det(&s.right).abs(), BigInt::one());
        let k = s.s();
        for w in s.divisors[..k].windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert!(s.divisors[..k].iter().all(|d| d.is_positive()));
        assert!(s.divisors[k..].iter().all(|d| d.is_zero()));
        s
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn two_by_two_examples() {
        assert_eq!(check(&IntMatrix::from_i64(2, 2, &[2, 4, 6, 8])).divisors, ints(&[2, 4]));
        assert_eq!(check(&IntMatrix::from_i64(2, 2, &[0, 1, 1, 1])).divisors, ints(&[1, 1]));
        assert_eq!(check(&IntMatrix::from_i64(2, 2, &[2, 0, 0, 6])).divisors, ints(&[2, 6]));
        assert_eq!(check(&IntMatrix::from_i64(2, 2, &[2, 0, 0, 3])).divisors, ints(&[1, 6]));
    }

    #[test]
    fn identity_is_fixed() {
        let id = IntMatrix::identity(3);
        let s = check(&id);
        assert_eq!(s.divisors, ints(&[1, 1, 1]));
        assert_eq!(s.left, id);
        assert_eq!(s.right, id);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(check(&IntMatrix::zeros(2, 2)).divisors, ints(&[0, 0]));
        assert_eq!(check(&IntMatrix::from_i64(3, 3, &[1, 2, 3, 2, 4, 6, 1, 1, 1])).divisors, ints(&[1, 1, 0]));
        assert_eq!(check(&IntMatrix::from_i64(2, 3, &[4, 6, 0, 0, 0, 10])).divisors, ints(&[2, 10]));
    }
}
