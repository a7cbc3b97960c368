use num_traits::Zero;
use serde_json::{json, Value};

use super::json::*;
use super::{CheckRecord, JobConfig, MAX_ENUMERATION_BOUND};
use crate::automorphy::{classify_sets, SetReport};
use crate::bundle::{
    build_unitary_set, curvature_02_part, e_connection, holomorphic_split, is_holomorphic, pullback_connection,
    BundleSpec, MonomialUnitary, UnitarySet,
};
use crate::error::{Error, Result};
use crate::fukaya::{canonical_form, check_fukaya_object, enumerate_objects, mirror_object, phase_data, AngleVector, Side};
use crate::gcs::{check_mirror_relations, gcs_from_complexified_symplectic, solve_g24_matching};
use crate::linalg::{cq, exact_det, exact_inverse, rat, IntMatrix, RatComplex, RatComplexMatrix, Rational};
use crate::torus::{delta_shift_transform, find_delta, mirror_partner, Biholomorphism, ComplexTorus};

pub(super) type Outcome = (Value, Vec<CheckRecord>);

/// `[[i, 1], [-1, i]]`.
pub fn example_torus() -> RatComplexMatrix {
    let c = |a: i64, b: i64| cq(rat(a, 1), rat(b, 1));
    RatComplexMatrix::from_rows(vec![vec![c(0, 1), c(1, 0)], vec![c(-1, 0), c(0, 1)]])
}

/// `r = 1`, `A = [[0, 1], [1, 1]]`, `mu = 0` on the example torus.
pub fn example_bundle() -> BundleInput {
    BundleInput {
        torus: TorusInput { t: example_torus(), delta: None },
        r: 1,
        a: IntMatrix::from_i64(2, 2, &[0, 1, 1, 1]),
        mu: vec![RatComplex::zero(); 2],
    }
}

pub(super) fn load_torus(config: &JobConfig, input: Option<&Value>) -> Result<TorusInput> {
    match input {
        None => Ok(TorusInput { t: example_torus(), delta: None }),
        Some(v) => parse_torus(v, config.float_input),
    }
}

pub(super) fn load_bundle(config: &JobConfig, input: Option<&Value>) -> Result<BundleInput> {
    match input {
        None => Ok(example_bundle()),
        Some(v) => parse_bundle(v, config.float_input),
    }
}

/// The given shift, or the constructed one.
pub(super) fn resolve_delta(torus: &TorusInput) -> Result<IntMatrix> {
    ComplexTorus::new(torus.t.clone())?;
    match &torus.delta {
        Some(d) => Ok(d.clone()),
        None => Ok(find_delta(&torus.t)?.delta),
    }
}

pub(super) fn unitary_json(m: &MonomialUnitary) -> Value {
    json!({ "order": m.order(), "perm": m.perm(), "phase": m.phases() })
}

pub(super) fn unitary_set_json(set: &UnitarySet) -> Value {
    json!({
        "r": set.r,
        "rprime": set.rprime,
        "V": set.v.iter().map(unitary_json).collect::<Vec<_>>(),
        "U": set.u.iter().map(unitary_json).collect::<Vec<_>>(),
        "det_V_turns": rat_vec_json(&set.v_det_turns()),
        "det_U_turns": rat_vec_json(&set.u_det_turns()),
    })
}

fn angle_json(a: &AngleVector) -> Value {
    json!({ "base": rat_vec_json(&a.base), "turns": rat_vec_json(&a.turns) })
}

pub fn find_delta_cmd(config: &JobConfig, input: Option<&Value>) -> Result<Outcome> {
    let torus = load_torus(config, input)?;
    let shift = find_delta(&torus.t)?;
    let n = torus.t.rows();
    let ones = shift.delta.entries().iter().filter(|x| *x == &1.into()).count();
    let binary = shift.delta.entries().iter().all(|x| x.is_zero() || *x == 1.into());
    let output = json!({
        "delta": int_matrix_json(&shift.delta),
        "rank": shift.rank,
        "minor_rows": shift.basis_rows,
        "minor_cols": shift.basis_cols,
        "det_T_minus_delta": complex_json(&shift.det_shifted),
    });
    let checks = vec![
        CheckRecord::exact("nonsingular-shift", "det(T - delta) != 0", !exact_det(&(&torus.t - &shift.delta.to_rc())).is_zero()),
        CheckRecord::exact("unit-entries", "delta in {0,1}^(n x n) with n - rank(T) ones", binary && ones == n - shift.rank),
    ];
    Ok((output, checks))
}

pub fn mirror_cmd(config: &JobConfig, input: Option<&Value>) -> Result<Outcome> {
    let torus = load_torus(config, input)?;
    let t = &torus.t;
    let delta = resolve_delta(&torus)?;
    let mut checks = Vec::new();
    let det = exact_det(&(t - &delta.to_rc()));
    checks.push(CheckRecord::exact("nonsingular-shift", "det(T - delta) != 0", !det.is_zero()));
    if det.is_zero() {
        return Ok((json!({ "delta": int_matrix_json(&delta) }), checks));
    }
    let tau = mirror_partner(t, &delta)?.tau;
    let phi = Biholomorphism::new(t, &delta)?;
    checks.push(CheckRecord::exact("b-field-only", "Im(T - delta) == Im T", tau.im() == t.im()));
    let g = gcs_from_complexified_symplectic(&t.re(), &t.im())?;
    let shifted = delta_shift_transform(&g, &delta)?;
    let g_tau = gcs_from_complexified_symplectic(&tau.re(), &tau.im())?;
    checks.push(CheckRecord::exact(
        "shift-transform",
        "exp(B_delta) I_omega(Re T, Im T) exp(-B_delta) == I_omega(Re(T - delta), Im(T - delta))",
        shifted == g_tau,
    ));
    checks.push(CheckRecord::exact(
        "mirror-gcs",
        "I^2 == -I and I^t Q I == Q for I = I_omega(Re(T - delta), Im(T - delta))",
        g_tau.squares_to_minus_identity() && g_tau.preserves_pairing(),
    ));
    let id = RatComplexMatrix::identity(t.rows());
    checks.push(CheckRecord::exact("t-prime", "T' (delta - T) == I", &phi.t_prime * &(&delta.to_rc() - t) == id));
    checks.push(CheckRecord::exact("lattice", "phi(Z^n + T Z^n) == Z^n + T' Z^n", phi.maps_lattice_onto()?));
    checks.push(CheckRecord::exact("modular", "(T C + A)^-1 (T D + B) == T' for [[delta, I], [-I, 0]]", phi.mobius_t_prime()? == phi.t_prime));
    let mut output = json!({
        "delta": int_matrix_json(&delta),
        "tau": complex_matrix_json(&tau),
        "B": rat_matrix_json(&tau.re()),
        "omega": rat_matrix_json(&tau.im()),
        "T_prime": complex_matrix_json(&phi.t_prime),
        "lattice_map": int_matrix_json(&phi.real_matrix),
    });
    if !exact_det(t).is_zero() {
        let rel = check_mirror_relations(t)?;
        checks.push(
            CheckRecord::exact("mirror-relations", "eq1..eq7, right, left for B + i omega = -(T^-1)^t", rel.all_zero())
                .with_witnesses(rel.failing().into_iter().map(Value::from).collect()),
        );
        let (b, omega) = solve_g24_matching(t)?;
        let expected = -&exact_inverse(t)?.transpose();
        checks.push(CheckRecord::exact(
            "g24-matching",
            "g24 I_omega(B) g24 == I_J(T) solves to B + i omega == -(T^-1)^t",
            b == expected.re() && omega == expected.im(),
        ));
        output["untwisted_mirror"] = complex_matrix_json(&expected);
    }
    Ok((output, checks))
}

/// Exact checks on one bundle and, when holomorphic, its mirror objects.
pub(super) fn bundle_checks(b: &BundleInput, delta: &IntMatrix) -> Result<Outcome> {
    let t = &b.torus.t;
    let phi = Biholomorphism::new(t, delta)?;
    let spec = BundleSpec::new(b.r, &b.a, &b.mu, &phi.t_prime)?;
    let holo = is_holomorphic(&b.a, &phi.t_prime);
    let (im_cond, re_cond) = holomorphic_split(&b.a, t, delta);
    let e = e_connection(&spec, &phi.t_prime)?;
    let pulled = pullback_connection(&spec, &phi)?;
    let no_02 = e.part_02.antisymmetric_part().is_zero();
    let no_02_direct = curvature_02_part(&b.a, &phi.t_prime)?.antisymmetric_part().is_zero();
    let w = exact_inverse(&(t - &t.conj()))?;
    let inv_r = RatComplex::from(Rational::new(1.into(), b.r.into()));
    let mixed_expected = (&w.transpose() * &b.a.to_rc().transpose()).scale(&inv_r);

    let mut checks = vec![
        CheckRecord::exact("unitary-relations", "V_j V_k == V_k V_j, U_j U_k == U_k U_j, zeta^-a_kj U_k V_j == V_j U_k", spec.unitaries.violation().is_none()),
        CheckRecord::exact("pulled-back-relations", "relations of V'_j = U_j, U'_k = U^(delta e_k) V_k^-1", spec.unitaries.pull_back(delta).violation().is_none()),
        CheckRecord::exact("split-conditions", "[AT' == (AT')^t] <=> [(Im T)^t A sym and A^t Re(T - delta) sym]", holo == (im_cond && re_cond)),
        CheckRecord::exact("curvature-02", "[AT' == (AT')^t] <=> [(0,2)-part of curvature == 0]", holo == no_02 && no_02 == no_02_direct),
        CheckRecord::exact("holomorphic", "AT' == (AT')^t", holo),
    ];
    let mut output = json!({
        "T_prime": complex_matrix_json(&phi.t_prime),
        "delta": int_matrix_json(delta),
        "rprime": spec.rprime(),
        "elementary_divisors": spec.rank.smith.divisors.iter().map(int_json).collect::<Vec<_>>(),
        "p": rat_vec_json(&spec.p),
        "q": rat_vec_json(&spec.q),
        "unitaries": unitary_set_json(&spec.unitaries),
        "holomorphic": holo,
    });
    if holo {
        checks.push(CheckRecord::exact("curvature-11", "(1,1)-part of pulled-back curvature == (1/r) W^t A^t, W = (T - conj T)^-1", pulled.mixed == mixed_expected));
        let mut objects = Vec::new();
        for side in [Side::CheckTPrime, Side::CheckT] {
            let obj = mirror_object(&spec, side, &phi)?;
            let rep = check_fukaya_object(&obj, &phi)?;
            checks.push(CheckRecord::exact(
                format!("object-{}", side.name()),
                format!("mirror on {}: Lagrangian (f1) and flat (f2)", side.name()),
                rep.is_object(),
            ));
            let key = canonical_form(&obj);
            objects.push(json!({
                "side": side.name(),
                "slope": rat_matrix_json(&key.slope),
                "p": angle_json(&obj.lagrangian.p),
                "q": angle_json(&obj.q),
                "canonical_offset": angle_json(&key.offset),
                "canonical_holonomy": angle_json(&key.holonomy),
            }));
        }
        let ph = phase_data(&spec);
        output["xi_turns"] = rat_vec_json(&ph.xi_turns);
        output["theta_turns"] = rat_vec_json(&ph.theta_turns);
        output["objects"] = Value::Array(objects);
    }
    Ok((output, checks))
}

pub fn check_bundle_cmd(config: &JobConfig, input: Option<&Value>) -> Result<Outcome> {
    let b = load_bundle(config, input)?;
    let delta = resolve_delta(&b.torus)?;
    if exact_det(&(&b.torus.t - &delta.to_rc())).is_zero() {
        return Ok((
            json!({ "delta": int_matrix_json(&delta) }),
            vec![CheckRecord::exact("nonsingular-shift", "det(T - delta) != 0", false)],
        ));
    }
    bundle_checks(&b, &delta)
}

pub fn build_unitaries_cmd(_config: &JobConfig, input: Option<&Value>) -> Result<Outcome> {
    let u = match input {
        None => {
            let b = example_bundle();
            UnitariesInput { r: b.r, a: b.a }
        }
        Some(v) => parse_unitaries(v)?,
    };
    let set = build_unitary_set(u.r, &u.a)?;
    let size_ok = set.v.iter().chain(&set.u).all(|m| m.size() as u64 == set.rprime);
    let mut output = unitary_set_json(&set);
    output["A"] = int_matrix_json(&u.a);
    let checks = vec![
        CheckRecord::exact("relations", "V_j V_k == V_k V_j, U_j U_k == U_k U_j, zeta^-a_kj U_k V_j == V_j U_k", set.violation().is_none()),
        CheckRecord::exact("size", "every matrix is r' x r'", size_ok),
    ];
    Ok((output, checks))
}

pub(super) fn entry_json(e: &crate::automorphy::SetEntry) -> Value {
    json!({ "A": int_matrix_json(&e.a), "in_delta": e.in_delta, "in_syz": e.in_syz })
}

pub(super) fn set_checks(sets: &SetReport) -> Vec<CheckRecord> {
    let zero = sets.entries.iter().find(|e| e.a.is_zero());
    vec![
        CheckRecord::exact("zero-in-both", "A = 0 has AT' and AT symmetric", zero.is_some_and(|e| e.in_delta && e.in_syz)),
        CheckRecord::exact("sets-differ", "{A : AT' sym} != {A : AT sym} on the box", sets.sets_differ())
            .with_witnesses(sets.delta_only().chain(sets.syz_only()).map(entry_json).collect()),
    ]
}

pub fn enumerate_cmd(config: &JobConfig, input: Option<&Value>) -> Result<Outcome> {
    if config.bound > MAX_ENUMERATION_BOUND {
        return Err(Error::BoundTooLarge(config.bound));
    }
    let torus = load_torus(config, input)?;
    let delta = resolve_delta(&torus)?;
    let phi = Biholomorphism::new(&torus.t, &delta)?;
    let sets = classify_sets(&torus.t, &delta, config.bound)?;
    let radii = [1, 2];
    let objects = enumerate_objects(&phi, config.bound, &radii)?;
    let mut checks = set_checks(&sets);
    checks.push(
        CheckRecord::exact("objects-valid", "every mirror_object output passes (f1) and (f2)", objects.failures.is_empty())
            .with_witnesses(objects.failures.iter().map(|s| Value::from(s.as_str())).collect()),
    );
    checks.push(
        CheckRecord::exact("injective", "distinct bundles have distinct canonical keys", objects.injective())
            .with_witnesses(objects.collisions.iter().map(|(a, b)| json!([a, b])).collect()),
    );
    let output = json!({
        "delta": int_matrix_json(&delta),
        "bound": config.bound,
        "table": sets.entries.iter().map(entry_json).collect::<Vec<_>>(),
        "delta_only": sets.delta_only().count(),
        "syz_only": sets.syz_only().count(),
        "both": sets.both().count(),
        "radii": radii,
        "specs": objects.specs,
        "objects": objects.objects,
    });
    Ok((output, checks))
}
