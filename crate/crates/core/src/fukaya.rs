//! Affine Lagrangian multi-sections with flat line bundles on the mirror
//! tori, the object conditions, and the map from bundles to objects.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::automorphy::integer_box;
use crate::bundle::{build_unitary_set, is_holomorphic, BundleSpec, MonomialUnitary, UnitarySet};
use crate::error::{Error, Result};
use crate::linalg::{
    exact_inverse, hermite_row_basis, reduce_mod_lattice, IntMatrix, RatComplex, RatComplexMatrix,
    RatMatrix, Rational,
};
use crate::torus::Biholomorphism;

/// Which mirror carries the Lagrangian.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    /// Graph `Y = (1/r) A X + (1/r) p` in the mirror of `T'`.
    #[serde(rename = "check-Tprime")]
    CheckTPrime,
    /// Graph `x = -(1/r) A y + (1/r) p` in the mirror of `T`.
    #[serde(rename = "check-T")]
    CheckT,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::CheckTPrime => "check-Tprime",
            Side::CheckT => "check-T",
        }
    }

    pub fn parse(s: &str) -> Option<Side> {
        match s {
            "check-Tprime" => Some(Side::CheckTPrime),
            "check-T" => Some(Side::CheckT),
            _ => None,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Real vector `base + 2 pi turns` with rational `base` and `turns`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AngleVector {
    pub base: Vec<Rational>,
    pub turns: Vec<Rational>,
}

impl AngleVector {
    pub fn from_base(base: Vec<Rational>) -> Self {
        let turns = vec![Rational::zero(); base.len()];
        AngleVector { base, turns }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.base
            .iter()
            .zip(&self.turns)
            .map(|(b, t)| crate::linalg::rat_to_f64(b) + std::f64::consts::TAU * crate::linalg::rat_to_f64(t))
            .collect()
    }

    fn scaled(&self, f: &Rational) -> Self {
        AngleVector {
            base: self.base.iter().map(|x| x * f).collect(),
            turns: self.turns.iter().map(|x| x * f).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineLagrangian {
    pub r: u64,
    pub a: IntMatrix,
    pub p: AngleVector,
    pub side: Side,
}

/// Lagrangian plus the flat connection `d -+ (i/2pi)(1/r) q^t dX`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FukayaObject {
    pub lagrangian: AffineLagrangian,
    pub q: AngleVector,
}

/// Outcome of the two object conditions, evaluated independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ObjectReport {
    /// The symplectic form vanishes on the graph.
    pub lagrangian: bool,
    /// The B-field vanishes on the graph, matching the flat connection.
    pub flat: bool,
    /// `A T'` symmetric.
    pub at_prime_symmetric: bool,
}

impl ObjectReport {
    pub fn is_object(&self) -> bool {
        self.lagrangian && self.flat
    }

    /// The conjunction of the two conditions agrees with `A T'` symmetry.
    pub fn consistent(&self) -> bool {
        self.is_object() == self.at_prime_symmetric
    }
}

/// Complexified form `dX^t M dY` of the mirror on each side.
fn mirror_form(side: Side, phi: &Biholomorphism) -> Result<RatComplexMatrix> {
    match side {
        Side::CheckTPrime => Ok(-&exact_inverse(&phi.t_prime)?.transpose()),
        Side::CheckT => Ok(&phi.t - &phi.delta.to_rc()),
    }
}

/// Pull the real form `dX^t m dY` back to the graph and test whether it
/// vanishes.
fn vanishes_on_graph(m: &RatMatrix, r: u64, a: &IntMatrix, side: Side) -> bool {
    let n = a.rows();
    let slope = a.to_rat().map(|x| x / Rational::from_integer(r.into()));
    let id = RatMatrix::identity(n);
    let tangent = match side {
        Side::CheckTPrime => RatMatrix::from_blocks(&[&[&id], &[&slope]]),
        Side::CheckT => RatMatrix::from_blocks(&[&[&-&slope], &[&id]]),
    };
    let z = RatMatrix::zeros(n, n);
    let omega = RatMatrix::from_blocks(&[&[&z, m], &[&z, &z]]);
    (&(&tangent.transpose() * &omega) * &tangent).antisymmetric_part().is_zero()
}

/// Evaluate the Lagrangian and flatness conditions for `(r, A)` on a side.
/// The translation parts `p`, `q` do not enter.
pub fn check_conditions(r: u64, a: &IntMatrix, side: Side, phi: &Biholomorphism) -> Result<ObjectReport> {
    let form = mirror_form(side, phi)?;
    Ok(ObjectReport {
        lagrangian: vanishes_on_graph(&form.im(), r, a, side),
        flat: vanishes_on_graph(&form.re(), r, a, side),
        at_prime_symmetric: is_holomorphic(a, &phi.t_prime),
    })
}

pub fn check_fukaya_object(obj: &FukayaObject, phi: &Biholomorphism) -> Result<ObjectReport> {
    let l = &obj.lagrangian;
    check_conditions(l.r, &l.a, l.side, phi)
}

/// Determinant phases of the transition matrices, `det V_j = e^{i xi_j}`,
/// `det U_k = e^{i theta_k}`, both taken in `[0, 2pi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseData {
    pub xi_turns: Vec<Rational>,
    pub theta_turns: Vec<Rational>,
    /// `p - (r/r') theta`.
    pub p_theta: AngleVector,
    /// `q + (r/r') xi`.
    pub q_xi: AngleVector,
}

pub fn phase_data(spec: &BundleSpec) -> PhaseData {
    let xi_turns = spec.unitaries.v_det_turns();
    let theta_turns = spec.unitaries.u_det_turns();
    let ratio = Rational::new(BigInt::from(spec.r), BigInt::from(spec.rprime()));
    let p_theta = AngleVector { base: spec.p.clone(), turns: theta_turns.iter().map(|t| -(t * &ratio)).collect() };
    let q_xi = AngleVector { base: spec.q.clone(), turns: xi_turns.iter().map(|t| t * &ratio).collect() };
    PhaseData { xi_turns, theta_turns, p_theta, q_xi }
}

/// The object `(L(r, A, p(theta)), L(r, A, p(theta), q(xi)))` attached to a
/// holomorphic bundle.
pub fn mirror_object(spec: &BundleSpec, side: Side, phi: &Biholomorphism) -> Result<FukayaObject> {
    if !is_holomorphic(&spec.a, &phi.t_prime) {
        return Err(Error::NotHolomorphic);
    }
    let ph = phase_data(spec);
    Ok(FukayaObject {
        lagrangian: AffineLagrangian { r: spec.r, a: spec.a.clone(), p: ph.p_theta, side },
        q: ph.q_xi,
    })
}

/// Normal form of an object: slope `A/r`, the offset `p/r` reduced modulo
/// the translations `2pi(Z^n + (A/r) Z^n)` of the multi-section, and the
/// holonomy `q/r` reduced modulo `2pi Z^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub side: Side,
    pub slope: RatMatrix,
    pub offset: AngleVector,
    pub holonomy: AngleVector,
}

pub fn canonical_form(obj: &FukayaObject) -> CanonicalKey {
    let l = &obj.lagrangian;
    let n = l.a.rows();
    let r = Rational::from_integer(l.r.into());
    let inv_r = Rational::from_integer(1.into()) / &r;
    let slope = l.a.to_rat().map(|x| x * &inv_r);
    // The lattice r Z^n + A Z^n, generated by the columns of [r I | A].
    let gens = IntMatrix::from_blocks(&[&[&IntMatrix::identity(n).scale(&BigInt::from(l.r))], &[&l.a.transpose()]]);
    let basis = hermite_row_basis(&gens);
    let p_turns = reduce_mod_lattice(&l.p.turns, &basis);
    let offset = AngleVector { base: l.p.base.clone(), turns: p_turns }.scaled(&inv_r);
    let q = obj.q.scaled(&inv_r);
    let holonomy = AngleVector { base: q.base, turns: q.turns.iter().map(|t| t - t.floor()).collect() };
    CanonicalKey { side: l.side, slope, offset, holonomy }
}

/// The `2^(2n)` unitary sets obtained by scaling each generator by
/// `exp(2 pi i e / (2 r'))`, `e in {0, 1}`. Each unit step flips the sign
/// of that generator's determinant.
pub fn det_phase_branches(set: &UnitarySet) -> Vec<UnitarySet> {
    let n = set.n();
    let order = 2 * set.rprime;
    (0..1u64 << (2 * n))
        .map(|mask| {
            let bit = |k: usize| ((mask >> k) & 1) as i64;
            let v: Vec<i64> = (0..n).map(bit).collect();
            let u: Vec<i64> = (n..2 * n).map(bit).collect();
            set.scaled(order, &v, &u)
        })
        .collect()
}

/// What a bundle is made of: slope `A/r`, `mu/r` and the transition
/// matrices. Specs agreeing here define the same bundle.
#[derive(Debug, Clone, PartialEq)]
struct BundleIdentity {
    slope: RatMatrix,
    mu: Vec<RatComplex>,
    v: Vec<MonomialUnitary>,
    u: Vec<MonomialUnitary>,
}

fn identity_of(spec: &BundleSpec) -> BundleIdentity {
    let r = Rational::from_integer(spec.r.into());
    BundleIdentity {
        slope: spec.a.to_rat().map(|x| x / &r),
        mu: spec.mu.iter().map(|z| RatComplex::new(&z.re / &r, &z.im / &r)).collect(),
        v: spec.unitaries.v.iter().map(MonomialUnitary::reduced).collect(),
        u: spec.unitaries.u.iter().map(MonomialUnitary::reduced).collect(),
    }
}

/// Outcome of running [`mirror_object`] over an enumerated family.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ObjectEnumeration {
    /// Holomorphic bundle specs visited, counting every branch.
    pub specs: usize,
    /// Objects produced, one per spec and side.
    pub objects: usize,
    /// Objects failing [`check_fukaya_object`].
    pub failures: Vec<String>,
    /// Pairs of different bundles with equal canonical keys.
    pub collisions: Vec<(String, String)>,
}

impl ObjectEnumeration {
    pub fn injective(&self) -> bool {
        self.collisions.is_empty()
    }
}

/// Every holomorphic `A` with entries in `[-bound, bound]`, each `r` in
/// `radii`, `mu = 0` and every determinant-phase branch, mapped to objects
/// on both sides.
pub fn enumerate_objects(phi: &Biholomorphism, bound: i64, radii: &[u64]) -> Result<ObjectEnumeration> {
    let n = phi.n();
    let mu = vec![RatComplex::zero(); n];
    let mut out = ObjectEnumeration::default();
    let mut seen: HashMap<CanonicalKey, (BundleIdentity, String)> = HashMap::new();
    for a in integer_box(n, bound).filter(|a| is_holomorphic(a, &phi.t_prime)) {
        for &r in radii {
            let base = build_unitary_set(r, &a)?;
            for (branch, set) in det_phase_branches(&base).into_iter().enumerate() {
                let spec = BundleSpec::with_unitaries(&mu, &phi.t_prime, set)?;
                out.specs += 1;
                let identity = identity_of(&spec);
                for side in [Side::CheckTPrime, Side::CheckT] {
                    let label = format!("r={r} A={:?} branch={branch} side={side}", a.to_rows());
                    let obj = mirror_object(&spec, side, phi)?;
                    out.objects += 1;
                    if !check_fukaya_object(&obj, phi)?.is_object() {
                        out.failures.push(label.clone());
                    }
                    match seen.entry(canonical_form(&obj)) {
                        Entry::Occupied(e) => {
                            if e.get().0 != identity {
                                out.collisions.push((e.get().1.clone(), label));
                            }
                        }
                        Entry::Vacant(e) => {
                            e.insert((identity.clone(), label));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}
