//! Factor of automorphy presentation of the pulled-back bundle: the
//! Hermitian form `R`, lattice pairings, the gauge transform `Psi`, and a
//! numerical check that `Psi` intertwines the transition functions with
//! the factor of automorphy.
//!
//! Everything that is an algebraic identity is checked exactly; floats are
//! used only to evaluate exponentials.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bundle::{compute_rank, is_holomorphic, BundleSpec, MonomialUnitary, PulledBackUnitaries};
use crate::error::{Error, Result};
use crate::linalg::{
    exact_inverse, inverse, rank, rat_to_f64, rc_to_c64, IntMatrix, Matrix, RatComplex, RatComplexMatrix,
    RatMatrix, Rational,
};
use crate::torus::Biholomorphism;

type CMatrix = Matrix<Complex64>;

fn i_unit() -> RatComplex {
    RatComplex::new(Rational::zero(), Rational::from_integer(1.into()))
}

fn ratio(rprime: u64, r: u64) -> Rational {
    Rational::new(BigInt::from(rprime), BigInt::from(r))
}

/// `R = F / (4 pi)` with `F = (r'/r) (T_I^-1)^t A^t`, real and symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureFactor {
    pub r: u64,
    pub rprime: u64,
    pub a: IntMatrix,
    pub t: RatComplexMatrix,
    /// `4 pi R`, exact.
    pub four_pi_r: RatMatrix,
}

impl CurvatureFactor {
    pub fn r_f64(&self) -> Matrix<f64> {
        self.four_pi_r.map(|x| rat_to_f64(x) / (4.0 * PI))
    }
}

/// Requires `A T'` symmetric. Both closed forms of `R` are computed and
/// compared exactly.
pub fn curvature_factor(r: u64, a: &IntMatrix, t: &RatComplexMatrix, delta: &IntMatrix) -> Result<CurvatureFactor> {
    let phi = Biholomorphism::new(t, delta)?;
    if !is_holomorphic(a, &phi.t_prime) {
        return Err(Error::ConditionViolated("AT' == (AT')^t".into()));
    }
    let rprime = compute_rank(r, a).rprime;
    let k = ratio(rprime, r);
    let ti_inv = inverse(&t.im()).ok_or(Error::SingularMatrix)?;
    let from_imag = (&ti_inv.transpose() * &a.to_rat().transpose()).map(|x| x * &k);
    let w = exact_inverse(&(t - &t.conj()))?;
    let two_i = RatComplex::new(Rational::zero(), Rational::from_integer(2.into()));
    let from_diff = (&w.transpose() * &a.to_rc().transpose()).map(|z| z * &two_i * RatComplex::from(k.clone()));
    if from_diff != from_imag.to_complex() {
        return Err(Error::ConditionViolated("the two closed forms of R agree".into()));
    }
    if !from_imag.is_symmetric() {
        return Err(Error::ConditionViolated("R == R^t".into()));
    }
    Ok(CurvatureFactor { r, rprime, a: a.clone(), t: t.clone(), four_pi_r: from_imag })
}

/// Lattice generators `gamma_j = 2pi e_j` and `gamma'_k = 2pi T e_k`,
/// stored in units of `2pi` as the columns of `[I | T]`.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeBasis {
    pub generators: RatComplexMatrix,
}

impl LatticeBasis {
    pub fn new(t: &RatComplexMatrix) -> Result<Self> {
        let n = t.rows();
        let generators = RatComplexMatrix::from_blocks(&[&[&RatComplexMatrix::identity(n), t]]);
        let real = RatMatrix::from_blocks(&[&[&generators.re()], &[&generators.im()]]);
        if rank(&real) < 2 * n {
            return Err(Error::ConditionViolated("lattice generators are real-linearly independent".into()));
        }
        Ok(LatticeBasis { generators })
    }

    pub fn n(&self) -> usize {
        self.generators.rows()
    }

    pub fn len(&self) -> usize {
        self.generators.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Generator `g` as a point of `C^n` (including the `2pi`).
    pub fn vector(&self, g: usize) -> Vec<Complex64> {
        self.generators.col(g).iter().map(|z| rc_to_c64(z) * (2.0 * PI)).collect()
    }

    pub fn name(&self, g: usize) -> String {
        let n = self.n();
        if g < n {
            format!("gamma_{}", g + 1)
        } else {
            format!("gamma'_{}", g - n + 1)
        }
    }
}

/// `Im R(g_a, g_b) / pi` for all pairs of generators, exact.
#[derive(Debug, Clone, PartialEq)]
pub struct PairingTable {
    pub im_over_pi: RatMatrix,
    pub expected: RatMatrix,
}

fn expected_pairings(n: usize, k: &Rational, a: &IntMatrix, delta: &IntMatrix) -> RatMatrix {
    let ar = a.to_rat();
    let dr = delta.to_rat();
    let gg = RatMatrix::zeros(n, n);
    let gp = ar.map(|x| -(x * k));
    let pg = ar.transpose().map(|x| x * k);
    let pp = (&(&ar.transpose() * &dr) - &(&dr.transpose() * &ar)).map(|x| x * k);
    RatMatrix::from_blocks(&[&[&gg, &gp], &[&pg, &pp]])
}

/// Evaluate `Im R` on every generator pair and compare with the closed
/// forms: zero on `(gamma, gamma)`, `(r'/r)(A^t delta - delta^t A)` on
/// `(gamma', gamma')` and `-(r'/r) a_jk` on `(gamma_j, gamma'_k)`.
pub fn im_pairings(cf: &CurvatureFactor, basis: &LatticeBasis, delta: &IntMatrix) -> Result<PairingTable> {
    let table = pairing_table(cf, basis, delta);
    let (im_over_pi, expected) = (&table.im_over_pi, &table.expected);
    let n = basis.n();
    for x in 0..2 * n {
        for y in 0..2 * n {
            if im_over_pi[(x, y)] != expected[(x, y)] {
                return Err(Error::AssertionFailed {
                    pair: format!("({}, {})", basis.name(x), basis.name(y)),
                    detail: format!("Im R / pi = {} but expected {}", im_over_pi[(x, y)], expected[(x, y)]),
                });
            }
        }
    }
    Ok(table)
}

/// The pairing table without the comparison.
pub fn pairing_table(cf: &CurvatureFactor, basis: &LatticeBasis, delta: &IntMatrix) -> PairingTable {
    let f = cf.four_pi_r.to_complex();
    let g = &basis.generators;
    let im_over_pi = (&(&g.transpose() * &f) * &g.conj()).im();
    let expected = expected_pairings(basis.n(), &ratio(cf.rprime, cf.r), &cf.a, delta);
    PairingTable { im_over_pi, expected }
}

/// `Im(4pi R conj(T)) == -(r'/r) A` and `Im(4pi conj(R) T) == (r'/r) A`.
pub fn auxiliary_identities(cf: &CurvatureFactor) -> bool {
    let k = ratio(cf.rprime, cf.r);
    let f = cf.four_pi_r.to_complex();
    let target = cf.a.to_rat().map(|x| x * &k);
    (&f * &cf.t.conj()).im() == -&target && (&f.conj() * &cf.t).im() == target
}

/// A scalar `plain + pi * pi_part` with exact Gaussian-rational parts.
#[derive(Debug, Clone, PartialEq)]
pub struct Phase {
    pub plain: RatComplex,
    pub pi_part: RatComplex,
}

impl Phase {
    pub fn is_imaginary(&self) -> bool {
        self.plain.re.is_zero() && self.pi_part.re.is_zero()
    }

    pub fn to_c64(&self) -> Complex64 {
        rc_to_c64(&self.plain) + rc_to_c64(&self.pi_part) * PI
    }
}

/// The gauge transform `Psi` and the data it is assembled from.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeTransform {
    pub r: u64,
    pub rprime: u64,
    pub t: RatComplexMatrix,
    pub delta: IntMatrix,
    pub mu: Vec<RatComplex>,
    /// `(r'/r) W^t A^t (delta - T) W` with `W = (T - conj T)^-1`.
    pub cal_a: RatComplexMatrix,
    pub four_pi_r: RatMatrix,
    w: RatComplexMatrix,
    /// `W^t (delta - T)^t mu`, the coefficient of `zbar` in the linear term.
    lin_zbar: Vec<RatComplex>,
    /// `W^t (delta - conj T)^t conj(mu)`, the coefficient of `z`.
    lin_z: Vec<RatComplex>,
    cal_a_c: CMatrix,
    cal_a_bar_c: CMatrix,
    lin_zbar_c: Vec<Complex64>,
    lin_z_c: Vec<Complex64>,
}

fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn quad(z: &[Complex64], m: &CMatrix, w: &[Complex64]) -> Complex64 {
    dot(z, &m.mul_vec(w))
}

fn conj(z: &[Complex64]) -> Vec<Complex64> {
    z.iter().map(|x| x.conj()).collect()
}

pub fn gauge_transform(spec: &BundleSpec, phi: &Biholomorphism) -> Result<GaugeTransform> {
    if !is_holomorphic(&spec.a, &phi.t_prime) {
        return Err(Error::ConditionViolated("AT' == (AT')^t".into()));
    }
    let t = &phi.t;
    let cf = curvature_factor(spec.r, &spec.a, t, &phi.delta)?;
    let k = RatComplex::from(ratio(cf.rprime, spec.r));
    let w = exact_inverse(&(t - &t.conj()))?;
    let d = phi.delta.to_rc();
    let at = spec.a.to_rc().transpose();
    let cal_a = (&(&(&w.transpose() * &at) * &(&d - t)) * &w).map(|z| z * &k);
    if !cal_a.is_symmetric() {
        return Err(Error::ConditionViolated("CalA == CalA^t".into()));
    }
    let rel_rhs = cf.four_pi_r.to_complex().map(|z| z * RatComplex::new(Rational::zero(), Rational::new((-1).into(), 2.into())));
    if &cal_a.conj() - &cal_a != rel_rhs {
        return Err(Error::ConditionViolated("conj(CalA) - CalA == (2 pi / i) R".into()));
    }
    let mu_bar: Vec<RatComplex> = spec.mu.iter().map(|z| z.conj()).collect();
    let lin_zbar = (&w.transpose() * &(&d - t).transpose()).mul_vec(&spec.mu);
    let lin_z = (&w.transpose() * &(&d - &t.conj()).transpose()).mul_vec(&mu_bar);
    Ok(GaugeTransform {
        r: spec.r,
        rprime: cf.rprime,
        t: t.clone(),
        delta: phi.delta.clone(),
        mu: spec.mu.clone(),
        cal_a_c: cal_a.to_c64(),
        cal_a_bar_c: cal_a.conj().to_c64(),
        lin_zbar_c: lin_zbar.iter().map(rc_to_c64).collect(),
        lin_z_c: lin_z.iter().map(rc_to_c64).collect(),
        cal_a,
        four_pi_r: cf.four_pi_r,
        w,
        lin_zbar,
        lin_z,
    })
}

impl GaugeTransform {
    /// `log Psi(z, zbar)`; `Psi` is this scalar times the identity.
    pub fn log_psi(&self, z: &[Complex64]) -> Complex64 {
        let i = Complex64::i();
        let rp = self.rprime as f64;
        let r = self.r as f64;
        let zb = conj(z);
        i / (4.0 * PI * rp) * quad(z, &self.cal_a_bar_c, z) + i / (4.0 * PI * rp) * quad(&zb, &self.cal_a_c, &zb)
            - i / (2.0 * PI * rp) * quad(z, &self.cal_a_c, &zb)
            + i / (2.0 * PI * r) * dot(&zb, &self.lin_zbar_c)
            - i / (2.0 * PI * r) * dot(z, &self.lin_z_c)
    }

    pub fn psi(&self, z: &[Complex64]) -> Complex64 {
        self.log_psi(z).exp()
    }

    /// Phase of `U(gamma_j) = e^{c_j} V'_j`.
    pub fn phase_gamma(&self, j: usize) -> Phase {
        let i_over_r = i_unit() * RatComplex::from(Rational::new(1.into(), BigInt::from(self.r)));
        let plain = &i_over_r * &self.lin_zbar[j] - &i_over_r * &self.lin_z[j];
        Phase { plain, pi_part: RatComplex::zero() }
    }

    /// Phase of `U(gamma'_k) = e^{c'_k} U'_k`.
    pub fn phase_gamma_prime(&self, k: usize) -> Phase {
        let t = &self.t;
        let tb = t.conj();
        let diff = t - &tb;
        let i_over_rp = i_unit() * RatComplex::from(Rational::new(1.into(), BigInt::from(self.rprime)));
        let i_over_r = i_unit() * RatComplex::from(Rational::new(1.into(), BigInt::from(self.r)));
        let m1 = &(&t.transpose() * &self.cal_a.conj()) * &diff;
        let m2 = &(&diff.transpose() * &self.cal_a) * &tb;
        let pi_part = &i_over_rp * &(&m1[(k, k)] - &m2[(k, k)]);
        let v1 = tb.transpose().mul_vec(&self.lin_zbar);
        let v2 = t.transpose().mul_vec(&self.lin_z);
        let plain = &i_over_r * &(&v1[k] - &v2[k]);
        Phase { plain, pi_part }
    }

    /// Exponent of the scalar transition factor for `gamma'_k`,
    /// `-(i/r)(A^t (x + delta y))_k` written in `z`, `zbar`.
    fn transition_exponent(&self, a: &IntMatrix, k: usize, z: &[Complex64]) -> Complex64 {
        let i = Complex64::i();
        let r = self.r as f64;
        let at = a.to_rc().transpose();
        let d = self.delta.to_rc();
        let row_z = (&(&at * &(&d - &self.t.conj())) * &self.w).to_c64();
        let row_zb = (&(&at * &(&d - &self.t)) * &self.w).to_c64();
        let zb = conj(z);
        -i / r * dot(row_z.row(k), z) + i / r * dot(row_zb.row(k), &zb)
    }
}

/// Generators of the factor of automorphy:
/// `j(gamma, z) = U(gamma) exp{(1/r') R(z, gamma) + (1/2r') R(gamma, gamma)}`.
#[derive(Debug, Clone)]
pub struct AutomorphyFactor {
    pub basis: LatticeBasis,
    pub phases: Vec<Phase>,
    pub matrices: Vec<MonomialUnitary>,
    pub rprime: u64,
    r_c: CMatrix,
    pulled: PulledBackUnitaries,
}

impl AutomorphyFactor {
    pub fn new(spec: &BundleSpec, phi: &Biholomorphism, gauge: &GaugeTransform) -> Result<Self> {
        let n = spec.n();
        let basis = LatticeBasis::new(&phi.t)?;
        let pulled = spec.unitaries.pull_back(&phi.delta);
        let mut phases: Vec<Phase> = (0..n).map(|j| gauge.phase_gamma(j)).collect();
        phases.extend((0..n).map(|k| gauge.phase_gamma_prime(k)));
        let matrices = pulled.v.iter().chain(&pulled.u).cloned().collect();
        let r_c = gauge.four_pi_r.map(|x| Complex64::new(rat_to_f64(x) / (4.0 * PI), 0.0));
        Ok(AutomorphyFactor { basis, phases, matrices, rprime: gauge.rprime, r_c, pulled })
    }

    /// `R(z, w) = z^t R conj(w)`.
    fn hermitian(&self, z: &[Complex64], w: &[Complex64]) -> Complex64 {
        quad(z, &self.r_c, &conj(w))
    }

    /// `(scalar, matrix)` with `j(g, z) = scalar * matrix`.
    pub fn generator(&self, g: usize, z: &[Complex64]) -> (Complex64, &MonomialUnitary) {
        let gamma = self.basis.vector(g);
        let rp = self.rprime as f64;
        let e = self.phases[g].to_c64() + self.hermitian(z, &gamma) / rp + self.hermitian(&gamma, &gamma) / (2.0 * rp);
        (e.exp(), &self.matrices[g])
    }

    /// `j(sum_g m_g gamma_g, z)` unrolled from the first generator:
    /// `j(g + rest, z) = j(g, z + rest) j(rest, z)` and
    /// `j(-g, z) = j(g, z - g)^-1`.
    pub fn lattice(&self, coeffs: &[i64], z: &[Complex64]) -> CMatrix {
        let mut steps: Vec<(usize, bool)> = Vec::new();
        for (g, &m) in coeffs.iter().enumerate() {
            for _ in 0..m.unsigned_abs() {
                steps.push((g, m > 0));
            }
        }
        let size = self.matrices[0].size();
        let order = self.matrices[0].order();
        let mut scalar = Complex64::new(1.0, 0.0);
        let mut mat = MonomialUnitary::identity(size, order);
        let mut pos = z.to_vec();
        for &(g, positive) in steps.iter().rev() {
            let gamma = self.basis.vector(g);
            if positive {
                let (s, m) = self.generator(g, &pos);
                scalar *= s;
                mat = m.mul(&mat);
                pos.iter_mut().zip(&gamma).for_each(|(p, d)| *p += d);
            } else {
                pos.iter_mut().zip(&gamma).for_each(|(p, d)| *p -= d);
                let (s, m) = self.generator(g, &pos);
                scalar /= s;
                mat = m.inverse().mul(&mat);
            }
        }
        mat.to_dense().map(|x| x * scalar)
    }

    /// The three relations among the `U(gamma)`. Scalars commute, so they
    /// reduce to the monomial parts and are checked in root-of-unity
    /// arithmetic.
    pub fn cocycle_violation(&self) -> Option<String> {
        self.pulled.violation()
    }
}

fn frobenius(m: &CMatrix) -> f64 {
    m.entries().iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

fn relative(lhs: &CMatrix, rhs: &CMatrix) -> f64 {
    frobenius(&(lhs - rhs)) / frobenius(rhs).max(f64::MIN_POSITIVE)
}

fn unitarity_residual(m: &CMatrix) -> f64 {
    let mh = m.transpose().map(|x| x.conj());
    frobenius(&(&(&mh * m) - &CMatrix::identity(m.rows())))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntertwiningReport {
    pub samples: usize,
    /// Largest relative Frobenius residual between both sides.
    pub max_residual: f64,
    pub worst_sample: usize,
    pub worst_generator: String,
    pub per_generator: Vec<(String, f64)>,
    /// Largest `||U^H U - I||` over the `U(gamma)`.
    pub unitarity_residual: f64,
    /// Every phase `c` of `U(gamma) = e^c V` has zero real part, exactly.
    pub phases_imaginary: bool,
    /// Relations among the `U(gamma)` in root-of-unity arithmetic.
    pub cocycle_violation: Option<String>,
    /// Largest relative residual of `j(g + h, z) = j(g, z + h) j(h, z)`.
    pub cocycle_identity_residual: f64,
}

pub const UNITARITY_TOL: f64 = 1e-12;

fn sample_points(t: &RatComplexMatrix, samples: usize, seed: u64) -> Vec<Vec<Complex64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = t.rows();
    let tc = t.to_c64();
    (0..samples)
        .map(|_| {
            let x: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..2.0 * PI)).collect();
            let y: Vec<Complex64> = (0..n).map(|_| Complex64::new(rng.gen_range(0.0..2.0 * PI), 0.0)).collect();
            let ty = tc.mul_vec(&y);
            x.iter().zip(ty).map(|(a, b)| b + a).collect()
        })
        .collect()
}

/// Compare `Psi(z + gamma) transition_gamma(z) Psi(z)^-1` with
/// `j(gamma, z)` at seeded samples `z = x + T y`, `x, y` uniform in
/// `[0, 2pi)^n`, for every generator. Only algebraic preconditions fail
/// here; residuals are reported for the caller to judge.
pub fn intertwining_residuals(spec: &BundleSpec, phi: &Biholomorphism, samples: usize, seed: u64) -> Result<IntertwiningReport> {
    let gauge = gauge_transform(spec, phi)?;
    let factor = AutomorphyFactor::new(spec, phi, &gauge)?;
    let n = spec.n();
    let points = sample_points(&phi.t, samples, seed);
    let mut per = vec![0.0f64; 2 * n];
    let (mut worst, mut worst_sample, mut worst_gen) = (0.0f64, 0, 0);
    let mut cocycle_res = 0.0f64;
    for (s, z) in points.iter().enumerate() {
        let psi_z = gauge.psi(z);
        for g in 0..2 * n {
            let gamma = factor.basis.vector(g);
            let shifted: Vec<Complex64> = z.iter().zip(&gamma).map(|(a, b)| a + b).collect();
            let trans = if g < n { Complex64::new(1.0, 0.0) } else { gauge.transition_exponent(&spec.a, g - n, z).exp() };
            let lhs = factor.matrices[g].to_dense().map(|x| x * gauge.psi(&shifted) * trans / psi_z);
            let (s_j, m_j) = factor.generator(g, z);
            let rhs = m_j.to_dense().map(|x| x * s_j);
            let res = relative(&lhs, &rhs);
            per[g] = per[g].max(res);
            if res >= worst {
                worst = res;
                worst_sample = s;
                worst_gen = g;
            }
        }
        for g in 0..2 * n {
            for h in 0..2 * n {
                let mut both = vec![0i64; 2 * n];
                both[g] += 1;
                both[h] += 1;
                let mut only_h = vec![0i64; 2 * n];
                only_h[h] = 1;
                let mut only_g = vec![0i64; 2 * n];
                only_g[g] = 1;
                let lam = factor.basis.vector(h);
                let moved: Vec<Complex64> = z.iter().zip(&lam).map(|(a, b)| a + b).collect();
                let lhs = factor.lattice(&both, z);
                let rhs = &factor.lattice(&only_g, &moved) * &factor.lattice(&only_h, z);
                cocycle_res = cocycle_res.max(relative(&lhs, &rhs));
            }
        }
    }
    let mut unitarity = 0.0f64;
    for (p, m) in factor.phases.iter().zip(&factor.matrices) {
        let c = p.to_c64().exp();
        unitarity = unitarity.max(unitarity_residual(&m.to_dense().map(|x| x * c)));
    }
    Ok(IntertwiningReport {
        samples,
        max_residual: worst,
        worst_sample,
        worst_generator: factor.basis.name(worst_gen),
        per_generator: per.iter().enumerate().map(|(g, r)| (factor.basis.name(g), *r)).collect(),
        unitarity_residual: unitarity,
        phases_imaginary: factor.phases.iter().all(Phase::is_imaginary),
        cocycle_violation: factor.cocycle_violation(),
        cocycle_identity_residual: cocycle_res,
    })
}

/// [`intertwining_residuals`] plus the pass criteria: residuals within
/// `tol`, unitarity within `1e-12`, exact phase and relation checks.
pub fn verify_intertwining(spec: &BundleSpec, phi: &Biholomorphism, samples: usize, tol: f64, seed: u64) -> Result<IntertwiningReport> {
    let rep = intertwining_residuals(spec, phi, samples, seed)?;
    if !rep.phases_imaginary {
        return Err(Error::ConditionViolated("phases of U(gamma) are purely imaginary".into()));
    }
    if let Some(v) = &rep.cocycle_violation {
        return Err(Error::ConditionViolated(v.clone()));
    }
    if rep.max_residual > tol {
        return Err(Error::ToleranceExceeded {
            residual: rep.max_residual,
            tol,
            at: format!("sample {} generator {}", rep.worst_sample, rep.worst_generator),
        });
    }
    if rep.cocycle_identity_residual > tol {
        return Err(Error::ToleranceExceeded { residual: rep.cocycle_identity_residual, tol, at: "cocycle identity".into() });
    }
    if rep.unitarity_residual > UNITARITY_TOL {
        return Err(Error::ToleranceExceeded { residual: rep.unitarity_residual, tol: UNITARITY_TOL, at: "unitarity of U(gamma)".into() });
    }
    Ok(rep)
}

/// Membership of each enumerated `A` in the two bundle families: the
/// pullbacks (`A T'` symmetric) and the direct ones (`A T` symmetric).
#[derive(Debug, Clone, PartialEq)]
pub struct SetReport {
    pub bound: i64,
    pub entries: Vec<SetEntry>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SetEntry {
    pub a: IntMatrix,
    pub in_delta: bool,
    pub in_syz: bool,
}

impl SetReport {
    pub fn delta_only(&self) -> impl Iterator<Item = &SetEntry> {
        self.entries.iter().filter(|e| e.in_delta && !e.in_syz)
    }

    pub fn syz_only(&self) -> impl Iterator<Item = &SetEntry> {
        self.entries.iter().filter(|e| !e.in_delta && e.in_syz)
    }

    pub fn both(&self) -> impl Iterator<Item = &SetEntry> {
        self.entries.iter().filter(|e| e.in_delta && e.in_syz)
    }

    pub fn sets_differ(&self) -> bool {
        self.delta_only().next().is_some() || self.syz_only().next().is_some()
    }
}

/// Every integer `n x n` matrix with entries in `[-bound, bound]`, in
/// lexicographic order of the row-major entry list.
pub fn integer_box(n: usize, bound: i64) -> impl Iterator<Item = IntMatrix> {
    let width = (2 * bound + 1) as u64;
    let total = width.pow((n * n) as u32);
    (0..total).map(move |mut code| {
        let mut vals = vec![0i64; n * n];
        for v in vals.iter_mut().rev() {
            *v = (code % width) as i64 - bound;
            code /= width;
        }
        IntMatrix::from_i64(n, n, &vals)
    })
}

pub fn classify_sets(t: &RatComplexMatrix, delta: &IntMatrix, bound: i64) -> Result<SetReport> {
    let phi = Biholomorphism::new(t, delta)?;
    let entries = integer_box(t.rows(), bound)
        .map(|a| {
            let in_delta = is_holomorphic(&a, &phi.t_prime);
            let in_syz = (&a.to_rc() * t).is_symmetric();
            SetEntry { a, in_delta, in_syz }
        })
        .collect();
    Ok(SetReport { bound, entries })
}
