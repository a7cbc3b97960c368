//! Exact integer, rational and Gaussian-rational linear algebra.

mod elim;
mod hermite;
mod matrix;
mod scalar;
mod smith;

pub use elim::{det, independent_rows, inverse, nullspace, pivot_columns, rank, solve};
pub use hermite::{hermite_row_basis, reduce_mod_lattice};
pub use matrix::{Matrix, Scalar};
pub use scalar::{
    cq, int_to_rat, int_to_rc, is_integral, rat, rat_from_f64, rat_to_f64, rc_to_c64, IntMatrix,
    RatComplex, RatComplexMatrix, RatMatrix, Rational,
};
pub use smith::{smith_normal_form, SmithDecomposition};

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Determinant of an exact complex matrix (fraction-free elimination).
pub fn exact_det(m: &RatComplexMatrix) -> RatComplex {
    det(m)
}

/// Rank over the complex numbers.
pub fn exact_rank(m: &RatComplexMatrix) -> usize {
    rank(m)
}

/// Inverse of an exact complex matrix, or `SingularMatrix`.
pub fn exact_inverse(m: &RatComplexMatrix) -> Result<RatComplexMatrix> {
    inverse(m).ok_or(Error::SingularMatrix)
}

impl RatComplexMatrix {
    pub fn from_parts(re: &RatMatrix, im: &RatMatrix) -> Self {
        assert_eq!((re.rows(), re.cols()), (im.rows(), im.cols()));
        Matrix::from_fn(re.rows(), re.cols(), |i, j| {
            Complex::new(re[(i, j)].clone(), im[(i, j)].clone())
        })
    }

    pub fn re(&self) -> RatMatrix {
        self.map(|z| z.re.clone())
    }

    pub fn im(&self) -> RatMatrix {
        self.map(|z| z.im.clone())
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn is_real(&self) -> bool {
        self.entries().iter().all(|z| z.im.is_zero())
    }

    pub fn to_c64(&self) -> Matrix<Complex<f64>> {
        self.map(rc_to_c64)
    }
}

impl RatMatrix {
    pub fn to_complex(&self) -> RatComplexMatrix {
        self.map(|x| Complex::new(x.clone(), Rational::zero()))
    }

    /// Integer matrix if every entry is integral.
    pub fn to_int(&self) -> Option<IntMatrix> {
        if self.entries().iter().all(is_integral) {
            Some(self.map(|x| x.to_integer()))
        } else {
            None
        }
    }

    /// Sylvester criterion applied to the symmetric part.
    pub fn is_positive_definite(&self) -> bool {
        if self.rows() != self.cols() {
            return false;
        }
        let s = self.symmetric_part();
        (1..=s.rows()).all(|k| {
            let minor = s.submatrix(&(0..k).collect::<Vec<_>>(), &(0..k).collect::<Vec<_>>());
            det(&minor).is_positive()
        })
    }
}

impl IntMatrix {
    pub fn to_rat(&self) -> RatMatrix {
        self.map(int_to_rat)
    }

    pub fn to_rc(&self) -> RatComplexMatrix {
        self.map(int_to_rc)
    }

    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(rows * cols, data.len());
        Matrix::from_fn(rows, cols, |i, j| BigInt::from(data[i * cols + j]))
    }

    /// Inverse of a unimodular integer matrix.
    pub fn unimodular_inverse(&self) -> Option<IntMatrix> {
        inverse(&self.to_rat())?.to_int()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rcm(rows: usize, entries: &[(i64, i64)]) -> RatComplexMatrix {
        let cols = entries.len() / rows;
        Matrix::from_fn(rows, cols, |i, j| {
            let (a, b) = entries[i * cols + j];
            cq(rat(a, 1), rat(b, 1))
        })
    }

    #[test]
    fn singular_period_matrix_has_zero_det_and_rank_one() {
        let t = rcm(2, &[(0, 1), (1, 0), (-1, 0), (0, 1)]);
        assert!(exact_det(&t).is_zero());
        assert_eq!(exact_rank(&t), 1);
    }

    #[test]
    fn shifted_det_is_minus_i() {
        let t = rcm(2, &[(0, 1), (1, 0), (-1, 0), (-1, 1)]);
        assert_eq!(exact_det(&t), cq(rat(0, 1), rat(-1, 1)));
    }

    #[test]
    fn inverse_of_shifted_matrix() {
        let m = rcm(2, &[(0, -1), (-1, 0), (1, 0), (1, -1)]);
        let inv = exact_inverse(&m).unwrap();
        assert_eq!(inv, rcm(2, &[(1, 1), (0, 1), (0, -1), (1, 0)]));
    }

    #[test]
    fn diagonal_inverse() {
        let m = rcm(2, &[(2, 0), (0, 0), (0, 0), (0, 1)]);
        let inv = exact_inverse(&m).unwrap();
        assert_eq!(inv[(0, 0)], cq(rat(1, 2), rat(0, 1)));
        assert_eq!(inv[(1, 1)], cq(rat(0, 1), rat(-1, 1)));
        assert!(inv[(0, 1)].is_zero());
    }

    #[test]
    fn singular_inverse_errors() {
        let t = rcm(2, &[(0, 1), (1, 0), (-1, 0), (0, 1)]);
        assert_eq!(exact_inverse(&t), Err(Error::SingularMatrix));
    }

    #[test]
    fn identity_and_zero() {
        let id = RatComplexMatrix::identity(3);
        assert_eq!(exact_det(&id), cq(rat(1, 1), rat(0, 1)));
        assert_eq!(exact_rank(&id), 3);
        assert_eq!(exact_inverse(&id).unwrap(), id);
        assert_eq!(exact_rank(&RatComplexMatrix::zeros(3, 2)), 0);
    }

    #[test]
    fn positive_definite_uses_symmetric_part() {
        // [[1, 5], [-5, 1]] has symmetric part I.
        let m = RatMatrix::from_fn(2, 2, |i, j| rat([[1, 5], [-5, 1]][i][j], 1));
        assert!(m.is_positive_definite());
        let n = RatMatrix::from_fn(2, 2, |i, j| rat([[1, 2], [2, 1]][i][j], 1));
        assert!(!n.is_positive_definite());
    }
}
