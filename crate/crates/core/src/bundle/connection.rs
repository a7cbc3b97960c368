use crate::error::Result;
use crate::linalg::{exact_inverse, int_to_rc, RatComplex, RatComplexMatrix, RatMatrix, Rational};
use crate::torus::Biholomorphism;

use super::BundleSpec;

/// An affine connection on a torus with real coordinates `u = (x, y)`,
/// all coefficients stored in units of `i / 2pi`:
/// the connection is `d + (i/2pi) sum_b f_b(u) du_b` with
/// `f_b(u) = sum_a linear[(a, b)] u_a + constant[b]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConnectionData {
    pub linear: RatMatrix,
    pub constant: Vec<RatComplex>,
    /// Curvature `(i/2pi) sum_ab C_ab du_a ^ du_b`, `C` antisymmetric.
    pub curvature: RatMatrix,
    /// The same form in the frame `(dz, dzbar)`, `z = x + P y`.
    pub curvature_z: RatComplexMatrix,
    /// `(1,1)` part written as `dz^t M dzbar`.
    pub mixed: RatComplexMatrix,
    /// `(0,2)` part written as `dzbar^t N dzbar`.
    pub part_02: RatComplexMatrix,
}

impl ConnectionData {
    /// `period` is the period matrix defining the complex coordinate.
    pub fn from_affine(linear: RatMatrix, constant: Vec<RatComplex>, period: &RatComplexMatrix) -> Result<Self> {
        let n = period.rows();
        let curvature = linear.antisymmetric_part();
        let w = exact_inverse(&(period - &period.conj()))?;
        let tw = period * &w;
        let id = RatComplexMatrix::identity(n);
        // (x, y) in terms of (z, zbar).
        let p = RatComplexMatrix::from_blocks(&[&[&(&id - &tw), &tw], &[&w, &-&w]]);
        let curvature_z = &(&p.transpose() * &curvature.to_complex()) * &p;
        let two = RatComplex::new(Rational::from_integer(2.into()), Rational::from_integer(0.into()));
        let mixed = curvature_z.block(2, 0, 1).scale(&two);
        let part_02 = curvature_z.block(2, 1, 1);
        Ok(ConnectionData { linear, constant, curvature, curvature_z, mixed, part_02 })
    }

    /// Pull back along the real linear map `U = phi u`.
    pub fn pull_back(&self, phi: &RatMatrix, period: &RatComplexMatrix) -> Result<Self> {
        let linear = &(&phi.transpose() * &self.linear) * phi;
        let constant = phi.to_complex().transpose().mul_vec(&self.constant);
        ConnectionData::from_affine(linear, constant, period)
    }

    /// `f(u)` at a point.
    pub fn coefficients_at(&self, u: &[Rational]) -> Vec<RatComplex> {
        let lin = self.linear.transpose().mul_vec(u);
        lin.into_iter().zip(&self.constant).map(|(l, c)| RatComplex::new(l + &c.re, c.im.clone())).collect()
    }

    pub fn is_flat(&self) -> bool {
        self.curvature.is_zero()
    }
}

fn scaled_mu(spec: &BundleSpec, sign: i64) -> Vec<RatComplex> {
    let f = Rational::new(sign.into(), spec.r.into());
    spec.mu.iter().map(|m| RatComplex::new(&m.re * &f, &m.im * &f)).collect()
}

/// `d - (i/2pi)((1/r) X^t A^t + (1/r) mu^t) dY` on the torus of `T'`, in
/// the frame `(X, Y)`.
pub fn e_connection(spec: &BundleSpec, t_prime: &RatComplexMatrix) -> Result<ConnectionData> {
    let n = spec.n();
    let r = Rational::from_integer(spec.r.into());
    let at = spec.a.to_rat().transpose();
    let z = RatMatrix::zeros(n, n);
    let linear = RatMatrix::from_blocks(&[&[&z, &(&-&at).map(|x| x / &r)], &[&z, &z]]);
    let mut constant = vec![RatComplex::new(Rational::from_integer(0.into()), Rational::from_integer(0.into())); n];
    constant.extend(scaled_mu(spec, -1));
    ConnectionData::from_affine(linear, constant, t_prime)
}

/// Pullback of [`e_connection`] along the biholomorphism, by the chain rule.
pub fn pullback_connection(spec: &BundleSpec, phi: &Biholomorphism) -> Result<ConnectionData> {
    e_connection(spec, &phi.t_prime)?.pull_back(&phi.real_matrix.to_rat(), &phi.t)
}

/// The pulled-back connection written out directly:
/// `d - (i/2pi)(-(1/r) y^t A^t + (1/r) mu^t)(dx + delta dy)`.
pub fn displayed_pullback_connection(spec: &BundleSpec, phi: &Biholomorphism) -> Result<ConnectionData> {
    let n = spec.n();
    let r = Rational::from_integer(spec.r.into());
    let at = spec.a.to_rat().transpose();
    let atd = &at * &phi.delta.to_rat();
    let z = RatMatrix::zeros(n, n);
    let linear = RatMatrix::from_blocks(&[&[&z, &z], &[&at.map(|x| x / &r), &atd.map(|x| x / &r)]]);
    let neg_mu = scaled_mu(spec, -1);
    let dt = phi.delta.transpose().map(int_to_rc);
    let mut constant = neg_mu.clone();
    constant.extend(dt.mul_vec(&neg_mu));
    ConnectionData::from_affine(linear, constant, &phi.t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::is_holomorphic;
    use crate::linalg::{cq, rat, IntMatrix};

    fn c(re: i64, im: i64) -> RatComplex {
        cq(rat(re, 1), rat(im, 1))
    }

    fn example() -> Biholomorphism {
        let t = RatComplexMatrix::from_rows(vec![vec![c(0, 1), c(1, 0)], vec![c(-1, 0), c(0, 1)]]);
        Biholomorphism::new(&t, &IntMatrix::from_i64(2, 2, &[0, 0, 0, 1])).unwrap()
    }

    #[test]
    fn zero_data_is_flat_and_trivial() {
        let phi = example();
        let spec = BundleSpec::new(1, &IntMatrix::zeros(2, 2), &[c(0, 0), c(0, 0)], &phi.t_prime).unwrap();
        let conn = pullback_connection(&spec, &phi).unwrap();
        assert!(conn.is_flat());
        assert!(conn.linear.is_zero());
        assert!(conn.constant.iter().all(|z| z == &c(0, 0)));
    }

    #[test]
    fn chain_rule_matches_displayed_form() {
        let phi = example();
        let a = IntMatrix::from_i64(2, 2, &[0, 1, 1, 1]);
        let mu = [cq(rat(1, 3), rat(2, 1)), cq(rat(-1, 1), rat(1, 2))];
        let spec = BundleSpec::new(2, &a, &mu, &phi.t_prime).unwrap();
        let pulled = pullback_connection(&spec, &phi).unwrap();
        assert_eq!(pulled, displayed_pullback_connection(&spec, &phi).unwrap());
        let e = e_connection(&spec, &phi.t_prime).unwrap();
        let u = [rat(1, 2), rat(-3, 1), rat(2, 7), rat(5, 1)];
        let big = phi.real_matrix.to_rat();
        let image = big.mul_vec(&u);
        let lhs = big.to_complex().transpose().mul_vec(&e.coefficients_at(&image));
        assert_eq!(lhs, pulled.coefficients_at(&u));
    }

    #[test]
    fn e_curvature_block_is_minus_a_transpose_over_r() {
        let phi = example();
        let a = IntMatrix::from_i64(2, 2, &[0, 1, 1, 1]);
        let spec = BundleSpec::new(3, &a, &[c(0, 0), c(0, 0)], &phi.t_prime).unwrap();
        let e = e_connection(&spec, &phi.t_prime).unwrap();
        let xy = e.curvature.block(2, 0, 1).scale(&rat(2, 1));
        assert_eq!(xy, a.to_rat().transpose().scale(&rat(-1, 3)));
    }

    #[test]
    fn z_frame_curvature_for_example() {
        let phi = example();
        let a = IntMatrix::from_i64(2, 2, &[0, 1, 1, 1]);
        assert!(is_holomorphic(&a, &phi.t_prime));
        let spec = BundleSpec::new(1, &a, &[c(0, 0), c(0, 0)], &phi.t_prime).unwrap();
        let conn = pullback_connection(&spec, &phi).unwrap();
        // T - conj T = 2i I, so the mixed part is A^t / (2i).
        let expected = a.to_rc().transpose().scale(&cq(rat(0, 1), rat(-1, 2)));
        assert_eq!(conn.mixed, expected);
        assert!(conn.part_02.is_zero());
    }

    #[test]
    fn non_holomorphic_has_02_part() {
        let phi = example();
        let a = IntMatrix::from_i64(2, 2, &[1, 1, 1, -1]);
        let spec = BundleSpec::new(1, &a, &[c(0, 0), c(0, 0)], &phi.t_prime).unwrap();
        assert!(!pullback_connection(&spec, &phi).unwrap().part_02.is_zero());
    }
}
