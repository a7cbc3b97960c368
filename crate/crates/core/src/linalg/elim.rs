use super::matrix::{Matrix, Scalar};

/// Bareiss fraction-free determinant. Every division is exact, so this is
/// valid over the integers as well as over fields.
pub fn det<T: Scalar>(m: &Matrix<T>) -> T {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return T::one();
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[(k, k)].clone() * a[(i, j)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                a[(i, j)] = v / prev.clone();
            }
            a[(i, k)] = T::zero();
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Reduced row echelon form over a field, with its pivot columns.
fn rref<T: Scalar>(m: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols() {
        if r == a.rows() {
            break;
        }
        let Some(p) = (r..a.rows()).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = T::one() / a[(r, c)].clone();
        for j in c..a.cols() {
            a[(r, j)] = a[(r, j)].clone() * inv.clone();
        }
        for i in 0..a.rows() {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..a.cols() {
                let v = a[(i, j)].clone() - f.clone() * a[(r, j)].clone();
                a[(i, j)] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Rank over a field.
pub fn rank<T: Scalar>(m: &Matrix<T>) -> usize {
    rref(m).1.len()
}

/// Pivot columns of the reduced echelon form: the lexicographically first
/// set of columns forming a basis of the column space.
pub fn pivot_columns<T: Scalar>(m: &Matrix<T>) -> Vec<usize> {
    rref(m).1
}

/// First linearly independent rows, scanned in index order.
pub fn independent_rows<T: Scalar>(m: &Matrix<T>) -> Vec<usize> {
    rref(&m.transpose()).1
}

/// Basis of the right null space over a field, one vector per free column.
pub fn nullspace<T: Scalar>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); m.cols()];
            v[f] = T::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, f)].clone();
            }
            v
        })
        .collect()
}

/// Solve `a x = b` for square nonsingular `a`.
pub fn solve<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Option<Matrix<T>> {
    assert!(a.is_square());
    assert_eq!(a.rows(), b.rows());
    let n = a.rows();
    let aug = Matrix::from_blocks(&[&[a, b]]);
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(Matrix::from_fn(n, b.cols(), |i, j| r[(i, n + j)].clone()))
}

/// Inverse over a field, `None` when singular.
pub fn inverse<T: Scalar>(m: &Matrix<T>) -> Option<Matrix<T>> {
    solve(m, &Matrix::identity(m.rows()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn bi(rows: usize, d: &[i64]) -> Matrix<BigInt> {
        Matrix::from_fn(rows, d.len() / rows, |i, j| BigInt::from(d[i * (d.len() / rows) + j]))
    }

    #[test]
    fn integer_bareiss() {
        assert_eq!(det(&bi(2, &[2, 4, 6, 8])), BigInt::from(-8));
        assert_eq!(det(&bi(3, &[0, 1, 2, 1, 0, 3, 4, -3, 8])), BigInt::from(-2));
        assert_eq!(det(&bi(3, &[1, 2, 3, 2, 4, 6, 1, 1, 1])), BigInt::from(0));
    }

    #[test]
    fn pivots_are_lexicographically_first() {
        let m = bi(2, &[1, 2, 0, 1, 2, 4, 1, 0]);
        let q = m.map(|x| num_rational::BigRational::from_integer(x.clone()));
        assert_eq!(pivot_columns(&q), vec![0, 2]);
        assert_eq!(independent_rows(&q.transpose()), vec![0, 2]);
    }
}
