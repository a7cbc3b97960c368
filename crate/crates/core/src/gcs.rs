//! Generalized complex structures on a real 2n-torus as `4n x 4n` matrices
//! acting on `(x, y, dx, dy)`, B-field transforms and the T-duality
//! conjugations `g24`, `g13`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{exact_det, inverse, RatComplexMatrix, RatMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GCStructure {
    n: usize,
    m: RatMatrix,
}

impl GCStructure {
    /// Wrap a matrix after checking `M^2 = -I` and `M^t Q M = Q`.
    pub fn from_matrix(m: RatMatrix) -> Result<Self> {
        if !m.is_square() || m.rows() % 4 != 0 {
            return Err(Error::Shape(format!("expected 4n x 4n, got {} x {}", m.rows(), m.cols())));
        }
        let g = GCStructure { n: m.rows() / 4, m };
        if !g.squares_to_minus_identity() {
            return Err(Error::ConditionViolated("M^2 == -I".into()));
        }
        if !g.preserves_pairing() {
            return Err(Error::ConditionViolated("M^t Q M == Q".into()));
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.m
    }

    pub fn squares_to_minus_identity(&self) -> bool {
        &self.m * &self.m == -&RatMatrix::identity(4 * self.n)
    }

    pub fn preserves_pairing(&self) -> bool {
        let q = pairing(self.n);
        &(&self.m.transpose() * &q) * &self.m == q
    }
}

/// The natural pairing `<X + a, Y + b> = a(Y) + b(X)` as a matrix.
pub fn pairing(n: usize) -> RatMatrix {
    let i = RatMatrix::identity(2 * n);
    let z = RatMatrix::zeros(2 * n, 2 * n);
    RatMatrix::from_blocks(&[&[&z, &i], &[&i, &z]])
}

/// Alternating `2n x 2n` two-form used for B-field transforms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFieldForm {
    b: RatMatrix,
}

impl BFieldForm {
    pub fn new(b: RatMatrix) -> Result<Self> {
        if !b.is_antisymmetric() || b.rows() % 2 != 0 {
            return Err(Error::NotAlternating);
        }
        Ok(BFieldForm { b })
    }

    /// `[[0, -B], [B^t, 0]]` for an `n x n` real B-field.
    pub fn from_b(b: &RatMatrix) -> Self {
        let z = RatMatrix::zeros(b.rows(), b.rows());
        BFieldForm { b: RatMatrix::from_blocks(&[&[&z, &-b], &[&b.transpose(), &z]]) }
    }

    /// `[[0, delta], [-delta^t, 0]]` for an integer shift.
    pub fn from_delta(delta: &RatMatrix) -> Self {
        let z = RatMatrix::zeros(delta.rows(), delta.rows());
        BFieldForm { b: RatMatrix::from_blocks(&[&[&z, delta], &[&-&delta.transpose(), &z]]) }
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.b
    }

    pub fn negate(&self) -> Self {
        BFieldForm { b: -&self.b }
    }

    pub fn sum(&self, other: &Self) -> Self {
        BFieldForm { b: &self.b + &other.b }
    }
}

fn exp_b(b: &RatMatrix) -> RatMatrix {
    let k = b.rows();
    RatMatrix::from_blocks(&[
        &[&RatMatrix::identity(k), &RatMatrix::zeros(k, k)],
        &[b, &RatMatrix::identity(k)],
    ])
}

/// Conjugate by `[[I, 0], [B, I]]`.
pub fn b_field_transform(g: &GCStructure, b: &BFieldForm) -> Result<GCStructure> {
    if b.b.rows() != 2 * g.n {
        return Err(Error::Shape("B-field size does not match structure".into()));
    }
    let m = &(&exp_b(&b.b) * &g.m) * &exp_b(&-&b.b);
    Ok(GCStructure { n: g.n, m })
}

fn split(t: &RatComplexMatrix) -> Result<(RatMatrix, RatMatrix, RatMatrix)> {
    let (tr, ti) = (t.re(), t.im());
    if !ti.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let ti_inv = inverse(&ti).ok_or(Error::NotPositiveDefinite)?;
    Ok((tr, ti, ti_inv))
}

/// Structure induced by the complex structure with period matrix `T`.
pub fn gcs_from_complex_structure(t: &RatComplexMatrix) -> Result<GCStructure> {
    let (tr, ti, ti_inv) = split(t)?;
    let tr_ti_inv = &tr * &ti_inv;
    let j = RatMatrix::from_blocks(&[
        &[&-&tr_ti_inv, &(&-&ti - &(&tr_ti_inv * &tr))],
        &[&ti_inv, &(&ti_inv * &tr)],
    ]);
    let z = RatMatrix::zeros(j.rows(), j.rows());
    let m = RatMatrix::from_blocks(&[&[&j, &z], &[&z, &-&j.transpose()]]);
    Ok(GCStructure { n: t.rows(), m })
}

/// `omega` as an alternating `2n x 2n` form on `(x, y)`.
fn omega_rep(omega: &RatMatrix) -> RatMatrix {
    let z = RatMatrix::zeros(omega.rows(), omega.rows());
    RatMatrix::from_blocks(&[&[&z, &-omega], &[&omega.transpose(), &z]])
}

/// Structure induced by the complexified symplectic form `B + i omega`.
pub fn gcs_from_complexified_symplectic(b: &RatMatrix, omega: &RatMatrix) -> Result<GCStructure> {
    if exact_det(&omega.to_complex()).is_zero() {
        return Err(Error::SingularOmega);
    }
    let w = omega_rep(omega);
    let w_inv = inverse(&w).ok_or(Error::SingularOmega)?;
    let z = RatMatrix::zeros(w.rows(), w.rows());
    let base = GCStructure { n: b.rows(), m: RatMatrix::from_blocks(&[&[&z, &-&w_inv], &[&w, &z]]) };
    b_field_transform(&base, &BFieldForm::from_b(b))
}

/// Conjugate by the block permutation matrix whose block order is `perm`.
fn permute_blocks(g: &GCStructure, perm: [usize; 4]) -> GCStructure {
    let n = g.n;
    let m = RatMatrix::from_fn(4 * n, 4 * n, |i, j| {
        g.m[(perm[i / n] * n + i % n, perm[j / n] * n + j % n)].clone()
    });
    GCStructure { n, m }
}

/// T-duality along the fibre directions: swaps `y` with `dy`.
pub fn mirror_g24(g: &GCStructure) -> GCStructure {
    permute_blocks(g, [0, 3, 2, 1])
}

/// T-duality swapping `x` with `dx`.
pub fn mirror_g13(g: &GCStructure) -> GCStructure {
    permute_blocks(g, [2, 1, 0, 3])
}

/// Residuals of the nine relations linking `T` to its mirror
/// `B + i omega = -(T^-1)^t`. Every entry is zero when the relations hold.
#[derive(Debug, Clone, PartialEq)]
pub struct MirrorRelationReport {
    pub b: RatMatrix,
    pub omega: RatMatrix,
    pub residuals: Vec<(&'static str, RatComplexMatrix)>,
}

impl MirrorRelationReport {
    pub fn all_zero(&self) -> bool {
        self.residuals.iter().all(|(_, r)| r.is_zero())
    }

    pub fn failing(&self) -> Vec<&'static str> {
        self.residuals.iter().filter(|(_, r)| !r.is_zero()).map(|(k, _)| *k).collect()
    }
}

pub fn check_mirror_relations(t: &RatComplexMatrix) -> Result<MirrorRelationReport> {
    let t_inv = inverse(t).ok_or(Error::SingularT)?;
    let (tr, ti, ti_inv) = split(t)?;
    let tau = -&t_inv.transpose();
    let (b, omega) = (tau.re(), tau.im());
    let om_inv_t = inverse(&omega).ok_or(Error::SingularOmega)?.transpose();
    let id = RatMatrix::identity(t.rows());
    let bt = b.transpose();
    let tit_inv = ti_inv.transpose();
    let trt = tr.transpose();

    let eq1 = &(&-&tr * &ti_inv) - &(&om_inv_t * &bt);
    let eq2 = &(&-&ti - &(&(&tr * &ti_inv) * &tr)) + &om_inv_t;
    let eq3 = &(&ti_inv - &omega.transpose()) - &(&(&bt * &om_inv_t) * &bt);
    let eq4 = &(&ti_inv * &tr) + &(&bt * &om_inv_t);
    let eq5 = &(&-&trt * &omega) - &(&ti.transpose() * &b);
    let eq6 = &(&trt * &b) + &(&(&(&trt * &tit_inv) * &trt) * &omega);
    let eq7 = &(&(&ti.transpose() * &omega) - &(&trt * &b)) - &id;
    let idc = RatComplexMatrix::identity(t.rows());
    let right = &(&-&t.transpose() * &tau) - &idc;
    let left = &(&tau * &-&t.transpose()) - &idc;

    let residuals = vec![
        ("eq1", eq1.to_complex()),
        ("eq2", eq2.to_complex()),
        ("eq3", eq3.to_complex()),
        ("eq4", eq4.to_complex()),
        ("eq5", eq5.to_complex()),
        ("eq6", eq6.to_complex()),
        ("eq7", eq7.to_complex()),
        ("right", right),
        ("left", left),
    ];
    Ok(MirrorRelationReport { b, omega, residuals })
}

/// Solve `g24 I_omega(B) g24 = I_J(T)` for `(B, omega)` from its first block
/// row. The solution is unique whenever it exists.
pub fn solve_g24_matching(t: &RatComplexMatrix) -> Result<(RatMatrix, RatMatrix)> {
    let (tr, ti, ti_inv) = split(t)?;
    let k = &ti + &(&(&tr * &ti_inv) * &tr);
    let omega = inverse(&k).ok_or(Error::SingularT)?.transpose();
    let b = &(&-&ti_inv.transpose() * &tr.transpose()) * &omega;
    let g = gcs_from_complexified_symplectic(&b, &omega)?;
    if mirror_g24(&g) != gcs_from_complex_structure(t)? {
        return Err(Error::ConditionViolated("g24 I_omega(B) g24 == I_J(T)".into()));
    }
    Ok((b, omega))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{cq, rat, RatComplex};

    fn rm(rows: usize, d: &[i64]) -> RatMatrix {
        RatMatrix::from_fn(rows, d.len() / rows, |i, j| rat(d[i * (d.len() / rows) + j], 1))
    }

    fn c(re: i64, im: i64) -> RatComplex {
        cq(rat(re, 1), rat(im, 1))
    }

    fn example_t() -> RatComplexMatrix {
        RatComplexMatrix::from_rows(vec![vec![c(0, 1), c(1, 0)], vec![c(-1, 0), c(0, 1)]])
    }

    #[test]
    fn complex_structure_of_i() {
        let t = RatComplexMatrix::from_rows(vec![vec![c(0, 1)]]);
        let g = gcs_from_complex_structure(&t).unwrap();
        assert_eq!(g.matrix(), &rm(4, &[0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0]));
        assert!(g.squares_to_minus_identity() && g.preserves_pairing());
    }

    #[test]
    fn complex_structure_blocks_for_singular_t() {
        let g = gcs_from_complex_structure(&example_t()).unwrap();
        // T_I = I, T_R = [[0,1],[-1,0]].
        let tr = rm(2, &[0, 1, -1, 0]);
        let j = g.matrix().block(2, 0, 0);
        assert_eq!(j.block(2, 0, 0), -&tr);
        assert_eq!(j.block(2, 0, 1), &-&RatMatrix::identity(2) - &(&tr * &tr));
        assert_eq!(j.block(2, 1, 0), RatMatrix::identity(2));
        assert_eq!(j.block(2, 1, 1), tr);
        assert!(g.squares_to_minus_identity() && g.preserves_pairing());
    }

    #[test]
    fn symplectic_unit_form() {
        let g = gcs_from_complexified_symplectic(&rm(1, &[0]), &rm(1, &[1])).unwrap();
        assert_eq!(g.matrix(), &rm(4, &[0, 0, 0, -1, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, 0]));
    }

    #[test]
    fn singular_omega_rejected() {
        let r = gcs_from_complexified_symplectic(&rm(1, &[0]), &rm(1, &[0]));
        assert_eq!(r, Err(Error::SingularOmega));
    }

    #[test]
    fn not_positive_definite_rejected() {
        let t = RatComplexMatrix::from_rows(vec![vec![c(1, -1)]]);
        assert_eq!(gcs_from_complex_structure(&t), Err(Error::NotPositiveDefinite));
    }

    #[test]
    fn g24_of_mirror_is_complex_structure_for_i() {
        let t = RatComplexMatrix::from_rows(vec![vec![c(0, 1)]]);
        // -(1/i) = i, so B = 0 and omega = 1.
        let g = gcs_from_complexified_symplectic(&rm(1, &[0]), &rm(1, &[1])).unwrap();
        assert_eq!(mirror_g24(&g), gcs_from_complex_structure(&t).unwrap());
        assert_eq!(mirror_g24(&mirror_g24(&g)), g);
    }

    #[test]
    fn g13_of_complex_structure_is_symplectic_of_t() {
        let t = RatComplexMatrix::from_rows(vec![
            vec![c(1, 2), cq(rat(1, 2), rat(1, 3))],
            vec![c(0, 0), cq(rat(-1, 1), rat(3, 2))],
        ]);
        let g = gcs_from_complex_structure(&t).unwrap();
        let s = gcs_from_complexified_symplectic(&t.re(), &t.im()).unwrap();
        assert_eq!(mirror_g13(&g), s);
    }

    #[test]
    fn b_field_group_law() {
        let g = gcs_from_complex_structure(&example_t()).unwrap();
        let b = BFieldForm::from_b(&rm(2, &[1, 2, 0, 3]));
        let back = b_field_transform(&b_field_transform(&g, &b).unwrap(), &b.negate()).unwrap();
        assert_eq!(back, g);
        assert!(BFieldForm::new(rm(2, &[0, 1, 1, 0])).is_err());
    }

    #[test]
    fn b_field_of_real_part_gives_symplectic_structure() {
        let t = example_t();
        let plain = gcs_from_complexified_symplectic(&RatMatrix::zeros(2, 2), &t.im()).unwrap();
        let shifted = b_field_transform(&plain, &BFieldForm::from_b(&t.re())).unwrap();
        assert_eq!(shifted, gcs_from_complexified_symplectic(&t.re(), &t.im()).unwrap());
    }

    #[test]
    fn mirror_relations_for_i_and_pure_imaginary() {
        let t = RatComplexMatrix::from_rows(vec![vec![c(0, 1)]]);
        let rep = check_mirror_relations(&t).unwrap();
        assert!(rep.all_zero());
        assert!(rep.b.is_zero());
        assert_eq!(rep.omega, rm(1, &[1]));

        let ti = RatMatrix::from_rows(vec![vec![rat(2, 1), rat(1, 1)], vec![rat(1, 1), rat(3, 1)]]);
        let t = RatComplexMatrix::from_parts(&RatMatrix::zeros(2, 2), &ti);
        let rep = check_mirror_relations(&t).unwrap();
        assert!(rep.all_zero(), "{:?}", rep.failing());
        assert!(rep.b.is_zero());
        assert_eq!(rep.omega, inverse(&ti).unwrap().transpose());
    }

    #[test]
    fn mirror_relations_reject_singular() {
        assert_eq!(check_mirror_relations(&example_t()), Err(Error::SingularT));
    }

    #[test]
    fn g24_matching_recovers_tau() {
        let t = RatComplexMatrix::from_rows(vec![
            vec![c(1, 2), cq(rat(1, 2), rat(1, 3))],
            vec![c(0, 0), cq(rat(-1, 1), rat(3, 2))],
        ]);
        let (b, omega) = solve_g24_matching(&t).unwrap();
        let tau = -&inverse(&t).unwrap().transpose();
        assert_eq!(RatComplexMatrix::from_parts(&b, &omega), tau);
    }
}
