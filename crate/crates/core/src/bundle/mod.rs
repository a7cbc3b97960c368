//! Bundles `E(r, A, mu, U)` on the torus of `T'`: rank, transition
//! matrices, connection, curvature and the holomorphicity test.

mod connection;
mod rank;
mod unitary;

pub use connection::{displayed_pullback_connection, e_connection, pullback_connection, ConnectionData};
pub use rank::{compute_rank, RankData};
pub use unitary::{build_unitary_set, MonomialUnitary, PulledBackUnitaries, UnitarySet};

use crate::error::{Error, Result};
use crate::linalg::{exact_inverse, inverse, IntMatrix, RatComplex, RatComplexMatrix, Rational};
use crate::torus::Biholomorphism;

#[derive(Debug, Clone, PartialEq)]
pub struct BundleSpec {
    pub r: u64,
    pub a: IntMatrix,
    pub mu: Vec<RatComplex>,
    /// `mu = p + T'^t q`.
    pub p: Vec<Rational>,
    pub q: Vec<Rational>,
    pub unitaries: UnitarySet,
    pub rank: RankData,
}

impl BundleSpec {
    /// Build with the default clock/shift unitary set.
    pub fn new(r: u64, a: &IntMatrix, mu: &[RatComplex], t_prime: &RatComplexMatrix) -> Result<Self> {
        let unitaries = build_unitary_set(r, a)?;
        Self::with_unitaries(mu, t_prime, unitaries)
    }

    pub fn with_unitaries(mu: &[RatComplex], t_prime: &RatComplexMatrix, unitaries: UnitarySet) -> Result<Self> {
        let n = t_prime.rows();
        if unitaries.a.rows() != n || unitaries.a.cols() != n || mu.len() != n {
            return Err(Error::Shape(format!("expected n = {n} for A and mu")));
        }
        unitaries.verify()?;
        let (p, q) = decompose_mu(mu, t_prime)?;
        let rank = compute_rank(unitaries.r, &unitaries.a);
        Ok(BundleSpec { r: unitaries.r, a: unitaries.a.clone(), mu: mu.to_vec(), p, q, unitaries, rank })
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    pub fn rprime(&self) -> u64 {
        self.rank.rprime
    }
}

/// Real `p`, `q` with `mu = p + T'^t q`.
pub fn decompose_mu(mu: &[RatComplex], t_prime: &RatComplexMatrix) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let im_t = t_prime.im().transpose();
    let re_t = t_prime.re().transpose();
    let im_mu: Vec<Rational> = mu.iter().map(|z| z.im.clone()).collect();
    let q = inverse(&im_t).ok_or(Error::SingularMatrix)?.mul_vec(&im_mu);
    let shift = re_t.mul_vec(&q);
    let p = mu.iter().zip(&shift).map(|(z, s)| &z.re - s).collect();
    Ok((p, q))
}

/// `p + T'^t q`.
pub fn recompose_mu(p: &[Rational], q: &[Rational], t_prime: &RatComplexMatrix) -> Vec<RatComplex> {
    let qc: Vec<RatComplex> = q.iter().map(|x| RatComplex::new(x.clone(), Rational::from_integer(0.into()))).collect();
    let tq = t_prime.transpose().mul_vec(&qc);
    p.iter().zip(tq).map(|(x, z)| RatComplex::new(x + &z.re, z.im)).collect()
}

/// `A T'` symmetric.
pub fn is_holomorphic(a: &IntMatrix, t_prime: &RatComplexMatrix) -> bool {
    (&a.to_rc() * t_prime).is_symmetric()
}

/// The two real conditions equivalent to holomorphicity:
/// `(Im T)^t A` symmetric and `A^t Re(T - delta)` symmetric.
pub fn holomorphic_split(a: &IntMatrix, t: &RatComplexMatrix, delta: &IntMatrix) -> (bool, bool) {
    let ar = a.to_rat();
    let im_cond = (&t.im().transpose() * &ar).is_symmetric();
    let re_cond = (&ar.transpose() * &(&t.re() - &delta.to_rat())).is_symmetric();
    (im_cond, re_cond)
}

/// `{T' (T' - conj T')^-1}^t A^t (T' - conj T')^-1`, the coefficient of the
/// curvature's `(0,2)` part up to a constant. Its antisymmetric part
/// vanishes exactly when `A T'` is symmetric.
pub fn curvature_02_part(a: &IntMatrix, t_prime: &RatComplexMatrix) -> Result<RatComplexMatrix> {
    let w = exact_inverse(&(t_prime - &t_prime.conj()))?;
    Ok(&(&(t_prime * &w).transpose() * &a.to_rc().transpose()) * &w)
}

/// `T'` for a shift, convenience over [`Biholomorphism`].
pub fn t_prime(t: &RatComplexMatrix, delta: &IntMatrix) -> Result<RatComplexMatrix> {
    Ok(Biholomorphism::new(t, delta)?.t_prime)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{cq, rat};

    fn c(re: i64, im: i64) -> RatComplex {
        cq(rat(re, 1), rat(im, 1))
    }

    fn example_t_prime() -> RatComplexMatrix {
        RatComplexMatrix::from_rows(vec![vec![c(1, 1), c(0, 1)], vec![c(0, -1), c(1, 0)]])
    }

    fn example_t() -> RatComplexMatrix {
        RatComplexMatrix::from_rows(vec![vec![c(0, 1), c(1, 0)], vec![c(-1, 0), c(0, 1)]])
    }

    #[test]
    fn example_holomorphicity() {
        let a1 = IntMatrix::from_i64(2, 2, &[0, 1, 1, 1]);
        let a2 = IntMatrix::from_i64(2, 2, &[1, 1, 1, -1]);
        assert!(is_holomorphic(&a1, &example_t_prime()));
        assert!(!is_holomorphic(&a2, &example_t_prime()));
        assert!(is_holomorphic(&IntMatrix::zeros(2, 2), &example_t_prime()));
    }

    #[test]
    fn example_curvature_02() {
        let tp = example_t_prime();
        let a1 = IntMatrix::from_i64(2, 2, &[0, 1, 1, 1]);
        let a2 = IntMatrix::from_i64(2, 2, &[1, 1, 1, -1]);
        assert!(curvature_02_part(&IntMatrix::zeros(2, 2), &tp).unwrap().is_zero());
        assert!(curvature_02_part(&a1, &tp).unwrap().antisymmetric_part().is_zero());
        assert!(!curvature_02_part(&a2, &tp).unwrap().antisymmetric_part().is_zero());
    }

    #[test]
    fn split_conditions_on_example() {
        let delta = IntMatrix::from_i64(2, 2, &[0, 0, 0, 1]);
        let a1 = IntMatrix::from_i64(2, 2, &[0, 1, 1, 1]);
        assert_eq!(holomorphic_split(&a1, &example_t(), &delta), (true, true));
        let a2 = IntMatrix::from_i64(2, 2, &[1, 1, 1, -1]);
        assert_ne!(holomorphic_split(&a2, &example_t(), &delta), (true, true));
    }

    #[test]
    fn mu_round_trip() {
        let tp = example_t_prime();
        let mu = vec![cq(rat(1, 2), rat(-3, 1)), cq(rat(2, 1), rat(5, 7))];
        let (p, q) = decompose_mu(&mu, &tp).unwrap();
        assert_eq!(recompose_mu(&p, &q, &tp), mu);
    }

    #[test]
    fn spec_carries_rank() {
        let a1 = IntMatrix::from_i64(2, 2, &[0, 1, 1, 1]);
        let spec = BundleSpec::new(2, &a1, &[c(0, 0), c(0, 0)], &example_t_prime()).unwrap();
        assert_eq!(spec.rprime(), 4);
        assert!(spec.p.iter().chain(&spec.q).all(|x| x == &rat(0, 1)));
        assert!(BundleSpec::new(2, &a1, &[c(0, 0)], &example_t_prime()).is_err());
    }

    #[test]
    fn t_prime_of_example() {
        assert_eq!(t_prime(&example_t(), &IntMatrix::from_i64(2, 2, &[0, 0, 0, 1])).unwrap(), example_t_prime());
    }
}
