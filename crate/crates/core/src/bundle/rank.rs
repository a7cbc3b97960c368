use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::linalg::{smith_normal_form, IntMatrix, SmithDecomposition};

/// Rank of the bundle attached to `(r, A)`: each nonzero elementary
/// divisor `d_i` contributes the denominator of `d_i / r` in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankData {
    pub r: u64,
    pub smith: SmithDecomposition,
    /// `(r_i', a_i')` with `d_i / r = a_i' / r_i'`, one per nonzero divisor.
    pub reduced: Vec<(u64, BigInt)>,
    pub rprime: u64,
}

impl RankData {
    pub fn s(&self) -> usize {
        self.reduced.len()
    }
}

pub fn compute_rank(r: u64, a: &IntMatrix) -> RankData {
    assert!(r >= 1, "r must be positive");
    let smith = smith_normal_form(a);
    let rb = BigInt::from(r);
    let reduced: Vec<(u64, BigInt)> = smith.divisors[..smith.s()]
        .iter()
        .map(|d| {
            let g = d.gcd(&rb);
            ((&rb / &g).to_u64().expect("r fits in u64"), d / &g)
        })
        .collect();
    let rprime = reduced
        .iter()
        .try_fold(1u64, |acc, (ri, _)| acc.checked_mul(*ri))
        .expect("rank overflows u64");
    RankData { r, smith, reduced, rprime }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_one_gives_line_bundle() {
        assert_eq!(compute_rank(1, &IntMatrix::from_i64(2, 2, &[3, 1, 7, -2])).rprime, 1);
    }

    #[test]
    fn unimodular_with_r_two() {
        let d = compute_rank(2, &IntMatrix::from_i64(2, 2, &[0, 1, 1, 1]));
        assert_eq!(d.rprime, 4);
        assert_eq!(d.reduced, vec![(2, BigInt::from(1)), (2, BigInt::from(1))]);
    }

    #[test]
    fn diagonal_two_six_over_four() {
        let d = compute_rank(4, &IntMatrix::from_i64(2, 2, &[2, 0, 0, 6]));
        assert_eq!(d.smith.divisors, vec![BigInt::from(2), BigInt::from(6)]);
        assert_eq!(d.reduced, vec![(2, BigInt::from(1)), (2, BigInt::from(3))]);
        assert_eq!(d.rprime, 4);
    }

    #[test]
    fn zero_matrix_has_empty_product() {
        let d = compute_rank(5, &IntMatrix::zeros(3, 3));
        assert_eq!((d.s(), d.rprime), (0, 1));
    }

    #[test]
    fn integral_ratio_gives_rank_one() {
        let d = compute_rank(2, &IntMatrix::from_i64(1, 1, &[2]));
        assert_eq!(d.reduced, vec![(1, BigInt::from(1))]);
        assert_eq!(d.rprime, 1);
    }
}
