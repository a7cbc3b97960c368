use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::rank::{compute_rank, RankData};
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, Matrix};

/// Monomial matrix with root-of-unity entries:
/// `M e_m = exp(2 pi i phase[m] / order) e_{perm[m]}`.
///
/// Products, inverses and determinants stay exact, so relations among
/// these matrices are checked without tolerance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialUnitary {
    order: u64,
    perm: Vec<usize>,
    phase: Vec<u64>,
}

impl MonomialUnitary {
    pub fn identity(size: usize, order: u64) -> Self {
        MonomialUnitary { order, perm: (0..size).collect(), phase: vec![0; size] }
    }

    pub fn new(order: u64, perm: Vec<usize>, phase: Vec<u64>) -> Self {
        assert_eq!(perm.len(), phase.len());
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            assert!(!std::mem::replace(&mut seen[p], true), "not a permutation");
        }
        let phase = phase.into_iter().map(|x| x % order).collect();
        MonomialUnitary { order, perm, phase }
    }

    pub fn size(&self) -> usize {
        self.perm.len()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Same matrix with phases expressed over a multiple of the order.
    pub fn lift(&self, order: u64) -> Self {
        assert_eq!(order % self.order, 0, "order must be a multiple");
        let k = order / self.order;
        MonomialUnitary { order, perm: self.perm.clone(), phase: self.phase.iter().map(|p| p * k).collect() }
    }

    /// Same matrix over the smallest order that expresses its phases.
    pub fn reduced(&self) -> Self {
        let g = self.phase.iter().fold(self.order, |g, &p| g.gcd(&p));
        MonomialUnitary { order: self.order / g, perm: self.perm.clone(), phase: self.phase.iter().map(|p| p / g).collect() }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Phase exponents over [`Self::order`].
    pub fn phases(&self) -> &[u64] {
        &self.phase
    }

    /// Multiply by the scalar `exp(2 pi i k / order)`.
    pub fn scaled(&self, k: i64) -> Self {
        let n = self.order as i64;
        let k = k.rem_euclid(n) as u64;
        MonomialUnitary {
            order: self.order,
            perm: self.perm.clone(),
            phase: self.phase.iter().map(|p| (p + k) % self.order).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "orders differ");
        assert_eq!(self.size(), rhs.size(), "sizes differ");
        let perm = rhs.perm.iter().map(|&p| self.perm[p]).collect();
        let phase = (0..rhs.size()).map(|m| (rhs.phase[m] + self.phase[rhs.perm[m]]) % self.order).collect();
        MonomialUnitary { order: self.order, perm, phase }
    }

    pub fn inverse(&self) -> Self {
        let mut perm = vec![0; self.size()];
        let mut phase = vec![0; self.size()];
        for m in 0..self.size() {
            perm[self.perm[m]] = m;
            phase[self.perm[m]] = (self.order - self.phase[m]) % self.order;
        }
        MonomialUnitary { order: self.order, perm, phase }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = MonomialUnitary::identity(self.size(), self.order);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// `Some(k)` when `self = exp(2 pi i k / order) * other`.
    pub fn scalar_ratio(&self, other: &Self) -> Option<u64> {
        if self.order != other.order || self.perm != other.perm {
            return None;
        }
        let k = (self.phase.first()? + self.order - other.phase[0]) % self.order;
        let all = self.phase.iter().zip(&other.phase).all(|(a, b)| (a + self.order - b) % self.order == k);
        all.then_some(k)
    }

    /// `det / (2 pi i)` as an exact fraction of a turn in `[0, 1)`.
    pub fn det_turns(&self) -> BigRational {
        let total: u64 = self.phase.iter().sum();
        let mut t = BigRational::new(BigInt::from(total), BigInt::from(self.order));
        if self.is_odd() {
            t += BigRational::new(1.into(), 2.into());
        }
        let f = t.floor();
        t - f
    }

    fn is_odd(&self) -> bool {
        let mut seen = vec![false; self.size()];
        let mut transpositions = 0;
        for s in 0..self.size() {
            let mut len = 0;
            let mut m = s;
            while !seen[m] {
                seen[m] = true;
                m = self.perm[m];
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        transpositions % 2 == 1
    }

    pub fn to_dense(&self) -> Matrix<Complex64> {
        let mut m = Matrix::from_fn(self.size(), self.size(), |_, _| Complex64::zero());
        for c in 0..self.size() {
            let angle = std::f64::consts::TAU * self.phase[c] as f64 / self.order as f64;
            m[(self.perm[c], c)] = Complex64::from_polar(1.0, angle);
        }
        m
    }
}

/// Matrices `V_j`, `U_k` with `V_j V_k = V_k V_j`, `U_j U_k = U_k U_j` and
/// `zeta^{-a_kj} U_k V_j = V_j U_k` where `zeta = exp(2 pi i / r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitarySet {
    pub r: u64,
    pub rprime: u64,
    pub a: IntMatrix,
    pub v: Vec<MonomialUnitary>,
    pub u: Vec<MonomialUnitary>,
}

fn a_mod(a: &IntMatrix, i: usize, j: usize, r: u64) -> i64 {
    a[(i, j)].mod_floor(&BigInt::from(r)).to_i64().expect("reduced entry fits")
}

impl UnitarySet {
    pub fn n(&self) -> usize {
        self.v.len()
    }

    pub fn order(&self) -> u64 {
        self.v.first().map_or(self.r, |m| m.order())
    }

    /// `zeta^k` as an exponent over the common order.
    fn zeta_exponent(&self, k: i64) -> i64 {
        k * (self.order() / self.r) as i64
    }

    /// First violated relation, if any.
    pub fn violation(&self) -> Option<String> {
        let n = self.n();
        for j in 0..n {
            for k in 0..n {
                if self.v[j].mul(&self.v[k]) != self.v[k].mul(&self.v[j]) {
                    return Some(format!("V_{} V_{} == V_{} V_{}", j + 1, k + 1, k + 1, j + 1));
                }
                if self.u[j].mul(&self.u[k]) != self.u[k].mul(&self.u[j]) {
                    return Some(format!("U_{} U_{} == U_{} U_{}", j + 1, k + 1, k + 1, j + 1));
                }
                let e = self.zeta_exponent(-a_mod(&self.a, k, j, self.r));
                if self.u[k].mul(&self.v[j]).scaled(e) != self.v[j].mul(&self.u[k]) {
                    return Some(format!("zeta^-a_{}{} U_{} V_{} == V_{} U_{}", k + 1, j + 1, k + 1, j + 1, j + 1, k + 1));
                }
            }
        }
        None
    }

    pub fn verify(&self) -> Result<()> {
        match self.violation() {
            None => Ok(()),
            Some(rel) => Err(Error::ConstructionFailed(format!("relation fails: {rel}"))),
        }
    }

    /// Multiply `V_j` by `exp(2 pi i v_exp[j] / order)` and `U_k` by
    /// `exp(2 pi i u_exp[k] / order)`. Scalars never change the relations.
    pub fn scaled(&self, order: u64, v_exp: &[i64], u_exp: &[i64]) -> Self {
        let lcm = order.lcm(&self.order());
        let f = (lcm / order) as i64;
        UnitarySet {
            r: self.r,
            rprime: self.rprime,
            a: self.a.clone(),
            v: self.v.iter().zip(v_exp).map(|(m, e)| m.lift(lcm).scaled(e * f)).collect(),
            u: self.u.iter().zip(u_exp).map(|(m, e)| m.lift(lcm).scaled(e * f)).collect(),
        }
    }

    pub fn v_det_turns(&self) -> Vec<BigRational> {
        self.v.iter().map(|m| m.det_turns()).collect()
    }

    pub fn u_det_turns(&self) -> Vec<BigRational> {
        self.u.iter().map(|m| m.det_turns()).collect()
    }

    /// Transition matrices seen through the biholomorphism:
    /// `V'_j = U_j` and `U'_k = U^{delta e_k} V_k^-1`.
    pub fn pull_back(&self, delta: &IntMatrix) -> PulledBackUnitaries {
        let n = self.n();
        let v = self.u.clone();
        let u = (0..n)
            .map(|k| {
                let mut m = self.v[k].inverse();
                for j in (0..n).rev() {
                    let e = delta[(j, k)].to_i64().expect("small shift");
                    m = self.u[j].pow(e).mul(&m);
                }
                m
            })
            .collect();
        PulledBackUnitaries { r: self.r, a: self.a.clone(), delta: delta.clone(), v, u }
    }
}

/// `V'_j`, `U'_k` for the pulled-back bundle. They satisfy
/// `zeta^{-a_jk} U'_k V'_j = V'_j U'_k` and
/// `U'_j U'_k = zeta^{(A^t delta)_jk - (A^t delta)_kj} U'_k U'_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PulledBackUnitaries {
    pub r: u64,
    pub a: IntMatrix,
    pub delta: IntMatrix,
    pub v: Vec<MonomialUnitary>,
    pub u: Vec<MonomialUnitary>,
}

impl PulledBackUnitaries {
    pub fn violation(&self) -> Option<String> {
        let n = self.v.len();
        let order = self.v.first().map_or(self.r, |m| m.order());
        let unit = (order / self.r) as i64;
        let atd = &self.a.transpose() * &self.delta;
        for j in 0..n {
            for k in 0..n {
                if self.v[j].mul(&self.v[k]) != self.v[k].mul(&self.v[j]) {
                    return Some(format!("V'_{} V'_{} == V'_{} V'_{}", j + 1, k + 1, k + 1, j + 1));
                }
                let e = -a_mod(&self.a, j, k, self.r) * unit;
                if self.u[k].mul(&self.v[j]).scaled(e) != self.v[j].mul(&self.u[k]) {
                    return Some(format!("zeta^-a_{}{} U'_{} V'_{} == V'_{} U'_{}", j + 1, k + 1, k + 1, j + 1, j + 1, k + 1));
                }
                let c = (&atd[(j, k)] - &atd[(k, j)]).mod_floor(&BigInt::from(self.r)).to_i64().unwrap();
                if self.u[j].mul(&self.u[k]) != self.u[k].mul(&self.u[j]).scaled(c * unit) {
                    return Some(format!("U'_{} U'_{} == zeta^(A^t delta)_[{}{}] U'_{} U'_{}", j + 1, k + 1, j + 1, k + 1, k + 1, j + 1));
                }
            }
        }
        None
    }
}

/// Clock and shift matrices on `C^{r_1'} x ... x C^{r_s'}`, one pair per
/// elementary divisor, recombined through the inverses of the Smith
/// transforms. The relations are then checked exactly.
pub fn build_unitary_set(r: u64, a: &IntMatrix) -> Result<UnitarySet> {
    let rank = compute_rank(r, a);
    let set = unitary_set_from_rank(&rank, a)?;
    set.verify()?;
    Ok(set)
}

fn unitary_set_from_rank(rank: &RankData, a: &IntMatrix) -> Result<UnitarySet> {
    let n = a.rows();
    let r = rank.r;
    let size = usize::try_from(rank.rprime).map_err(|_| Error::ConstructionFailed("rank too large".into()))?;
    let radices: Vec<usize> = rank.reduced.iter().map(|(ri, _)| *ri as usize).collect();
    // Digit i of a basis index in mixed radix.
    let digit = |g: usize, i: usize| -> usize {
        let below: usize = radices[..i].iter().product();
        (g / below) % radices[i]
    };
    let clocks: Vec<MonomialUnitary> = rank
        .reduced
        .iter()
        .enumerate()
        .map(|(i, (ri, ai))| {
            let step = (ai.mod_floor(&BigInt::from(*ri)).to_u64().unwrap()) * (r / ri);
            let phase = (0..size).map(|g| (digit(g, i) as u64 * step) % r).collect();
            MonomialUnitary::new(r, (0..size).collect(), phase)
        })
        .collect();
    let shifts: Vec<MonomialUnitary> = (0..rank.s())
        .map(|i| {
            let below: usize = radices[..i].iter().product();
            let perm = (0..size)
                .map(|g| {
                    let d = digit(g, i);
                    g - d * below + ((d + 1) % radices[i]) * below
                })
                .collect();
            MonomialUnitary::new(r, perm, vec![0; size])
        })
        .collect();
    let left_inv = rank
        .smith
        .left
        .unimodular_inverse()
        .ok_or_else(|| Error::ConstructionFailed("left transform not unimodular".into()))?;
    let right_inv = rank
        .smith
        .right
        .unimodular_inverse()
        .ok_or_else(|| Error::ConstructionFailed("right transform not unimodular".into()))?;
    let combine = |gens: &[MonomialUnitary], exps: &dyn Fn(usize) -> BigInt| {
        let mut m = MonomialUnitary::identity(size, r);
        for (i, g) in gens.iter().enumerate() {
            let e = exps(i).to_i64().expect("exponent fits");
            m = m.mul(&g.pow(e));
        }
        m
    };
    let u = (0..n).map(|k| combine(&clocks, &|i| left_inv[(k, i)].clone())).collect();
    let v = (0..n).map(|j| combine(&shifts, &|l| right_inv[(l, j)].clone())).collect();
    Ok(UnitarySet { r, rprime: rank.rprime, a: a.clone(), v, u })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_unitarity_residual(m: &MonomialUnitary) -> f64 {
        let d = m.to_dense();
        let mut worst: f64 = 0.0;
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let s: Complex64 = (0..d.rows()).map(|k| d[(k, i)].conj() * d[(k, j)]).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((s - target).norm());
            }
        }
        worst
    }

    #[test]
    fn monomial_algebra() {
        let c = MonomialUnitary::new(3, vec![0, 1, 2], vec![0, 1, 2]);
        let s = MonomialUnitary::new(3, vec![1, 2, 0], vec![0, 0, 0]);
        // C S = omega S C
        assert_eq!(c.mul(&s), s.mul(&c).scaled(1));
        assert_eq!(c.mul(&c.inverse()), MonomialUnitary::identity(3, 3));
        assert_eq!(s.pow(3), MonomialUnitary::identity(3, 3));
        assert_eq!(s.pow(-1), s.inverse());
        assert_eq!(c.mul(&s).scalar_ratio(&s.mul(&c)), Some(1));
        // det C = omega^3 = 1; det S = sign of a 3-cycle = 1
        assert!(c.det_turns().is_zero());
        assert!(s.det_turns().is_zero());
        let swap = MonomialUnitary::new(2, vec![1, 0], vec![0, 0]);
        assert_eq!(swap.det_turns(), BigRational::new(1.into(), 2.into()));
        assert!(dense_unitarity_residual(&c.mul(&s)) < 1e-12);
    }

    #[test]
    fn r_one_is_scalar() {
        let set = build_unitary_set(1, &IntMatrix::from_i64(2, 2, &[0, 1, 1, 1])).unwrap();
        assert_eq!(set.rprime, 1);
        assert!(set.v.iter().chain(&set.u).all(|m| m.size() == 1));
    }

    #[test]
    fn r_two_unimodular_gives_four_by_four() {
        let set = build_unitary_set(2, &IntMatrix::from_i64(2, 2, &[0, 1, 1, 1])).unwrap();
        assert_eq!(set.rprime, 4);
        assert!(set.v.iter().chain(&set.u).all(|m| m.size() == 4));
        assert!(set.violation().is_none());
    }

    #[test]
    fn integral_divisor_is_scalar() {
        let set = build_unitary_set(2, &IntMatrix::from_i64(1, 1, &[2])).unwrap();
        assert_eq!(set.rprime, 1);
    }

    #[test]
    fn general_cases_verify() {
        for (r, a) in [
            (4, IntMatrix::from_i64(2, 2, &[2, 0, 0, 6])),
            (6, IntMatrix::from_i64(2, 2, &[4, 1, -3, 2])),
            (3, IntMatrix::from_i64(3, 3, &[1, 2, 0, 0, 1, 1, 2, 0, 1])),
            (5, IntMatrix::zeros(2, 2)),
        ] {
            let set = build_unitary_set(r, &a).unwrap();
            assert_eq!(set.rprime, compute_rank(r, &a).rprime);
            let scaled = set.scaled(7, &vec![3; a.rows()], &vec![5; a.rows()]);
            assert!(scaled.violation().is_none());
        }
    }

    #[test]
    fn pulled_back_relations() {
        let a = IntMatrix::from_i64(2, 2, &[0, 1, 1, 1]);
        let delta = IntMatrix::from_i64(2, 2, &[0, 0, 0, 1]);
        for r in [1, 2, 3] {
            let set = build_unitary_set(r, &a).unwrap();
            assert_eq!(set.pull_back(&delta).violation(), None);
        }
        let b = IntMatrix::from_i64(2, 2, &[1, 2, -1, 0]);
        let d = IntMatrix::from_i64(2, 2, &[1, 1, 0, 1]);
        let set = build_unitary_set(3, &b).unwrap();
        assert_eq!(set.pull_back(&d).violation(), None);
    }

    #[test]
    fn broken_set_is_detected() {
        let mut set = build_unitary_set(2, &IntMatrix::from_i64(2, 2, &[0, 1, 1, 1])).unwrap();
        set.a = IntMatrix::from_i64(2, 2, &[1, 1, 1, 1]);
        assert!(matches!(set.verify(), Err(Error::ConstructionFailed(_))));
    }
}
