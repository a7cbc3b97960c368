use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::commands::{load_torus, resolve_delta, set_checks, example_torus};
use super::json::*;
use super::{CheckRecord, JobConfig};
use crate::automorphy::{
    auxiliary_identities, classify_sets, curvature_factor, gauge_transform, intertwining_residuals, pairing_table,
    LatticeBasis, UNITARITY_TOL,
};
use crate::bundle::{
    build_unitary_set, compute_rank, curvature_02_part, e_connection, holomorphic_split, is_holomorphic, BundleSpec,
};
use crate::error::{Error, Result};
use crate::fukaya::{check_conditions, check_fukaya_object, mirror_object, Side};
use crate::gcs::{
    b_field_transform, check_mirror_relations, gcs_from_complex_structure, gcs_from_complexified_symplectic,
    mirror_g24, solve_g24_matching, BFieldForm, GCStructure,
};
use crate::linalg::{cq, det, exact_det, exact_inverse, exact_rank, rat, IntMatrix, RatComplex, RatComplexMatrix};
use crate::sampling::{
    admissible_triple, holomorphic_basis, int_matrix, nonsingular_pd_period, pd_period, rank_two_family,
    rational_matrix, singular_pd_period, singular_period, small_complex, unimodular,
};
use crate::torus::{delta_for_profile, find_delta, find_delta_unchecked, Biholomorphism};

type Suite = fn(&JobConfig, Option<&Value>) -> Result<Vec<CheckRecord>>;

/// Suite names accepted by `verify`, besides `all`.
pub const SUITES: [&str; 9] =
    ["gcs", "mirror-relations", "delta", "rank", "holomorphic", "fukaya", "pairings", "automorphy", "sets"];

const MAX_WITNESSES: usize = 5;

fn lookup(name: &str) -> Option<(usize, Suite)> {
    let table: [Suite; 9] = [gcs, mirror_relations, delta, rank, holomorphic, fukaya, pairings, automorphy, sets];
    SUITES.iter().position(|s| *s == name).map(|i| (i, table[i]))
}

pub(super) fn run_suite(name: &str, config: &JobConfig, input: Option<&Value>) -> Result<Vec<CheckRecord>> {
    if name == "all" {
        let mut out = Vec::new();
        for s in SUITES {
            for mut c in run_suite(s, config, input)? {
                c.name = format!("{s}/{}", c.name);
                out.push(c);
            }
        }
        return Ok(out);
    }
    let (_, suite) = lookup(name).ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    suite(config, input)
}

/// Each suite draws from its own stream so `all` matches the single runs.
fn rng_for(config: &JobConfig, suite: &str) -> ChaCha8Rng {
    let (idx, _) = lookup(suite).expect("known suite");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(idx as u64 + 1);
    rng
}

/// Pass/fail tally of one predicate over a family.
struct Tally {
    name: &'static str,
    predicate: &'static str,
    count: usize,
    failures: Vec<Value>,
}

impl Tally {
    fn new(name: &'static str, predicate: &'static str) -> Self {
        Tally { name, predicate, count: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.count += 1;
        if !ok && self.failures.len() < MAX_WITNESSES {
            self.failures.push(witness());
        }
    }

    fn finish(self) -> CheckRecord {
        CheckRecord::exact(self.name, self.predicate, self.failures.is_empty())
            .with_witnesses(self.failures)
            .with_detail(json!({ "instances": self.count }))
    }
}

fn is_gcs(g: &GCStructure) -> bool {
    g.squares_to_minus_identity() && g.preserves_pairing()
}

fn random_b_field(rng: &mut ChaCha8Rng, size: usize) -> BFieldForm {
    let m = rational_matrix(rng, size, size, 2, 2);
    BFieldForm::new(&m - &m.transpose()).expect("alternating")
}

fn gcs(config: &JobConfig, input: Option<&Value>) -> Result<Vec<CheckRecord>> {
    let mut rng = rng_for(config, "gcs");
    let mut periods = vec![load_torus(config, input)?.t];
    periods.extend((0..config.samples).map(|i| pd_period(&mut rng, 1 + i % 4)));
    let mut complex = Tally::new("complex-structure", "I_J(T)^2 == -I and I_J(T)^t Q I_J(T) == Q");
    let mut symplectic = Tally::new("symplectic", "I_omega(B)^2 == -I and I_omega(B)^t Q I_omega(B) == Q, B + i omega = T");
    let mut dual = Tally::new("g24", "g24 I g24 is a generalized complex structure and g24 is an involution");
    let mut bfield = Tally::new("b-field", "exp(B2) exp(B1) I exp(-B1) exp(-B2) == exp(B1 + B2) I exp(-B1 - B2)");
    for t in &periods {
        let w = || complex_matrix_json(t);
        let gj = gcs_from_complex_structure(t)?;
        complex.record(is_gcs(&gj), w);
        let go = gcs_from_complexified_symplectic(&t.re(), &t.im())?;
        symplectic.record(is_gcs(&go), w);
        let m = mirror_g24(&go);
        dual.record(is_gcs(&m) && mirror_g24(&m) == go, w);
        let (b1, b2) = (random_b_field(&mut rng, 2 * t.rows()), random_b_field(&mut rng, 2 * t.rows()));
        let twice = b_field_transform(&b_field_transform(&gj, &b1)?, &b2)?;
        let once = b_field_transform(&gj, &b1.sum(&b2))?;
        bfield.record(twice == once && is_gcs(&once), w);
    }
    Ok(vec![complex.finish(), symplectic.finish(), dual.finish(), bfield.finish()])
}

fn mirror_relations(config: &JobConfig, _input: Option<&Value>) -> Result<Vec<CheckRecord>> {
    let mut rng = rng_for(config, "mirror-relations");
    let mut chain = Tally::new("relations", "eq1..eq7, right, left hold for B + i omega = -(T^-1)^t");
    let mut matching = Tally::new("g24-matching", "the unique solution of g24 I_omega(B) g24 == I_J(T) is -(T^-1)^t");
    for i in 0..config.samples {
        let t = nonsingular_pd_period(&mut rng, 1 + i % 3);
        let rel = check_mirror_relations(&t)?;
        chain.record(rel.all_zero(), || json!({ "T": complex_matrix_json(&t), "failing": rel.failing() }));
        let (b, omega) = solve_g24_matching(&t)?;
        let tau = -&exact_inverse(&t)?.transpose();
        matching.record(b == tau.re() && omega == tau.im(), || complex_matrix_json(&t));
    }
    Ok(vec![chain.finish(), matching.finish()])
}

fn delta(config: &JobConfig, input: Option<&Value>) -> Result<Vec<CheckRecord>> {
    let mut rng = rng_for(config, "delta");
    let mut nonsingular = Tally::new("nonsingular", "det(T - delta) != 0");
    let mut ones = Tally::new("unit-entries", "delta in {0,1}^(n x n) with n - rank(T) ones");
    let mut ranks = Tally::new("rank", "reported rank == rank(T)");
    let mut cases = vec![load_torus(config, input)?.t];
    find_delta(&cases[0])?;
    for i in 0..config.samples {
        let n = 1 + i % 6;
        let r = rng.gen_range(0..n);
        let t = match singular_pd_period(&mut rng, n, r) {
            Some(t) if rng.gen_bool(0.5) => t,
            _ => singular_period(&mut rng, n, r),
        };
        cases.push(t);
    }
    for t in &cases {
        let s = find_delta_unchecked(t)?;
        let n = t.rows();
        let w = || complex_matrix_json(t);
        nonsingular.record(!exact_det(&(t - &s.delta.to_rc())).is_zero(), w);
        let binary = s.delta.entries().iter().all(|x| x.is_zero() || x.is_one());
        let count = s.delta.entries().iter().filter(|x| x.is_one()).count();
        ones.record(binary && count == n - s.rank, w);
        ranks.record(s.rank == exact_rank(t), w);
    }
    let mut pattern = Tally::new("staircase", "rank-two 5x5 family with proportional second column: delta_34 = delta_45 = delta_52 = 1");
    let expected = delta_for_profile(5, &[0, 1], &[0, 2]);
    let units = [(2, 3), (3, 4), (4, 1)];
    for _ in 0..config.samples.min(20) {
        let t = rank_two_family(&mut rng);
        let s = find_delta_unchecked(&t)?;
        let ok = s.delta == expected
            && units.iter().all(|&(i, j)| s.delta[(i, j)].is_one())
            && !s.det_shifted.is_zero();
        pattern.record(ok, || complex_matrix_json(&t));
    }
    Ok(vec![nonsingular.finish(), ones.finish(), ranks.finish(), pattern.finish()])
}

fn rank(config: &JobConfig, _input: Option<&Value>) -> Result<Vec<CheckRecord>> {
    let mut rng = rng_for(config, "rank");
    let mut smith = Tally::new("smith", "L A R == diag(d_1, .., d_s, 0, ..), L and R unimodular, d_i | d_(i+1)");
    let mut invariance = Tally::new("invariance", "r'(r, U A V) == r'(r, A) for unimodular U, V");
    let mut unitaries = Tally::new("unitaries", "build_unitary_set(r, A) has r' x r' matrices satisfying the relations");
    for i in 0..config.samples {
        let n = 1 + i % 3;
        let r = rng.gen_range(1..=6u64);
        let a = int_matrix(&mut rng, n, n, 6);
        let w = || json!({ "r": r, "A": int_matrix_json(&a) });
        let rd = compute_rank(r, &a);
        let s = &rd.smith;
        let nonzero = &s.divisors[..s.s()];
        let chain = nonzero.windows(2).all(|p| (&p[1] % &p[0]).is_zero()) && nonzero.iter().all(|d| d.is_positive());
        let unimod = det(&s.left).abs().is_one() && det(&s.right).abs().is_one();
        smith.record(&(&s.left * &a) * &s.right == s.diagonal() && chain && unimod, w);
        let (u, v) = (unimodular(&mut rng, n), unimodular(&mut rng, n));
        invariance.record(compute_rank(r, &(&(&u * &a) * &v)).rprime == rd.rprime, w);
        let set = build_unitary_set(r, &a)?;
        let sized = set.v.iter().chain(&set.u).all(|m| m.size() as u64 == rd.rprime);
        unitaries.record(sized && set.violation().is_none(), w);
    }
    Ok(vec![smith.finish(), invariance.finish(), unitaries.finish()])
}

/// Exact `(T, delta, A)` mixing admissible data with generic `A`.
fn condition_family(rng: &mut ChaCha8Rng, samples: usize) -> Result<Vec<(RatComplexMatrix, IntMatrix, IntMatrix)>> {
    let mut out = Vec::new();
    for i in 0..samples {
        let n = 1 + i % 3;
        if i % 2 == 0 {
            out.push(admissible_triple(rng, n));
        } else {
            let t = pd_period(rng, n);
            let d = find_delta(&t)?.delta;
            out.push((t, d, int_matrix(rng, n, n, 2)));
        }
    }
    Ok(out)
}

fn holomorphic(config: &JobConfig, _input: Option<&Value>) -> Result<Vec<CheckRecord>> {
    let mut rng = rng_for(config, "holomorphic");
    let mut split = Tally::new("split", "[AT' == (AT')^t] <=> [(Im T)^t A sym and A^t Re(T - delta) sym]");
    let mut curv = Tally::new("curvature-02", "[AT' == (AT')^t] <=> [(0,2)-part of curvature == 0]");
    let mut holo = 0;
    for (t, d, a) in condition_family(&mut rng, config.samples)? {
        let w = || json!({ "T": complex_matrix_json(&t), "delta": int_matrix_json(&d), "A": int_matrix_json(&a) });
        let phi = Biholomorphism::new(&t, &d)?;
        let h = is_holomorphic(&a, &phi.t_prime);
        holo += h as usize;
        let (c1, c2) = holomorphic_split(&a, &t, &d);
        split.record(h == (c1 && c2), w);
        let r = rng.gen_range(1..=3);
        let mu = vec![RatComplex::zero(); t.rows()];
        let spec = BundleSpec::new(r, &a, &mu, &phi.t_prime)?;
        let from_connection = e_connection(&spec, &phi.t_prime)?.part_02.antisymmetric_part().is_zero();
        let direct = curvature_02_part(&a, &phi.t_prime)?.antisymmetric_part().is_zero();
        curv.record(h == from_connection && h == direct, w);
    }
    let detail = json!({ "instances": config.samples, "holomorphic": holo });
    Ok(vec![split.finish().with_detail(detail.clone()), curv.finish().with_detail(detail)])
}

fn fukaya(config: &JobConfig, _input: Option<&Value>) -> Result<Vec<CheckRecord>> {
    let mut rng = rng_for(config, "fukaya");
    let mut equiv = Tally::new("conditions", "[(f1) and (f2)] <=> [AT' == (AT')^t] on both mirrors");
    let mut objects = Tally::new("objects", "mirror_object(E) passes (f1) and (f2) on both mirrors");
    for (t, d, a) in condition_family(&mut rng, config.samples)? {
        let w = || json!({ "T": complex_matrix_json(&t), "delta": int_matrix_json(&d), "A": int_matrix_json(&a) });
        let phi = Biholomorphism::new(&t, &d)?;
        let r = rng.gen_range(1..=3);
        let mut consistent = true;
        for side in [Side::CheckTPrime, Side::CheckT] {
            consistent &= check_conditions(r, &a, side, &phi)?.consistent();
        }
        equiv.record(consistent, w);
        if is_holomorphic(&a, &phi.t_prime) {
            let mu: Vec<RatComplex> = (0..t.rows()).map(|_| small_complex(&mut rng, 2, 3)).collect();
            let spec = BundleSpec::new(r, &a, &mu, &phi.t_prime)?;
            let mut ok = true;
            for side in [Side::CheckTPrime, Side::CheckT] {
                ok &= check_fukaya_object(&mirror_object(&spec, side, &phi)?, &phi)?.is_object();
            }
            objects.record(ok, w);
        }
    }
    Ok(vec![equiv.finish(), objects.finish()])
}

fn pairings(config: &JobConfig, input: Option<&Value>) -> Result<Vec<CheckRecord>> {
    let mut rng = rng_for(config, "pairings");
    let torus = load_torus(config, input)?;
    let d0 = resolve_delta(&torus)?;
    let mut cases = Vec::new();
    for a in candidate_slopes(&torus.t, &d0)? {
        cases.push((torus.t.clone(), d0.clone(), a, 1));
    }
    for i in 0..config.samples {
        let (t, d, a) = admissible_triple(&mut rng, 1 + i % 4);
        cases.push((t, d, a, rng.gen_range(1..=3)));
    }
    let names = [
        ("gamma-gamma", "Im R(gamma_j, gamma_k) == 0"),
        ("gamma'-gamma'", "Im R(gamma'_j, gamma'_k) == pi (r'/r) (A^t delta - delta^t A)_jk"),
        ("gamma-gamma'", "Im R(gamma_j, gamma'_k) == -pi (r'/r) a_jk"),
    ];
    let mut tallies: Vec<Tally> = names.iter().map(|(n, p)| Tally::new(n, p)).collect();
    let mut aux = Tally::new("auxiliary", "Im(4 pi R conj T) == -(r'/r) A and Im(4 pi conj(R) T) == (r'/r) A");
    let mut rsym = Tally::new("r-closed-forms", "R == R^t and its two closed forms agree");
    for (t, d, a, r) in &cases {
        let w = || json!({ "T": complex_matrix_json(t), "delta": int_matrix_json(d), "A": int_matrix_json(a), "r": r });
        let cf = match curvature_factor(*r, a, t, d) {
            Ok(cf) => cf,
            Err(Error::ConditionViolated(_)) => {
                rsym.record(false, w);
                continue;
            }
            Err(e) => return Err(e),
        };
        rsym.record(true, w);
        let table = pairing_table(&cf, &LatticeBasis::new(t)?, d);
        for (b, tally) in [(0, 0), (1, 1), (0, 1)].iter().zip(tallies.iter_mut()) {
            let ok = table.im_over_pi.block(2, b.0, b.1) == table.expected.block(2, b.0, b.1)
                && table.im_over_pi.block(2, b.1, b.0) == table.expected.block(2, b.1, b.0);
            tally.record(ok, || json!({ "instance": w(), "im_over_pi": rat_matrix_json(&table.im_over_pi) }));
        }
        aux.record(auxiliary_identities(&cf), w);
    }
    let mut out: Vec<CheckRecord> = tallies.into_iter().map(Tally::finish).collect();
    out.push(aux.finish());
    out.push(rsym.finish());
    Ok(out)
}

/// `A_1 = [[0, 1], [1, 1]]` on the example torus, otherwise the nonzero
/// elements of an integral basis of `{A : A T' symmetric}`.
fn candidate_slopes(t: &RatComplexMatrix, delta: &IntMatrix) -> Result<Vec<IntMatrix>> {
    if *t == example_torus() && *delta == IntMatrix::from_i64(2, 2, &[0, 0, 0, 1]) {
        return Ok(vec![IntMatrix::from_i64(2, 2, &[0, 1, 1, 1])]);
    }
    let phi = Biholomorphism::new(t, delta)?;
    Ok(holomorphic_basis(&phi.t_prime).into_iter().filter(|a| !a.is_zero()).take(2).collect())
}

struct AutomorphyCase {
    label: String,
    t: RatComplexMatrix,
    delta: IntMatrix,
    r: u64,
    a: IntMatrix,
    mu: Vec<RatComplex>,
}

fn automorphy(config: &JobConfig, input: Option<&Value>) -> Result<Vec<CheckRecord>> {
    let mut rng = rng_for(config, "automorphy");
    let torus = load_torus(config, input)?;
    let d0 = resolve_delta(&torus)?;
    let n = torus.t.rows();
    let zero_mu = vec![RatComplex::zero(); n];
    let random_mu = |rng: &mut ChaCha8Rng, n: usize| (0..n).map(|_| small_complex(rng, 2, 3)).collect::<Vec<_>>();
    let mut cases = Vec::new();
    let mut push = |r: u64, a: &IntMatrix, mu: Vec<RatComplex>, t: &RatComplexMatrix, d: &IntMatrix, tag: &str| {
        cases.push(AutomorphyCase {
            label: format!("r={r} A={} mu={tag}", serde_json::to_string(&int_matrix_json(a)).expect("json")),
            t: t.clone(),
            delta: d.clone(),
            r,
            a: a.clone(),
            mu,
        });
    };
    push(1, &IntMatrix::zeros(n, n), zero_mu.clone(), &torus.t, &d0, "0");
    for a in candidate_slopes(&torus.t, &d0)? {
        push(1, &a, zero_mu.clone(), &torus.t, &d0, "0");
        push(2, &a, zero_mu.clone(), &torus.t, &d0, "0");
        push(2, &a, random_mu(&mut rng, n), &torus.t, &d0, "random");
    }
    // r' = 2 on T = i I.
    let t2 = RatComplexMatrix::identity(2).scale(&cq(rat(0, 1), rat(1, 1)));
    push(2, &IntMatrix::from_i64(2, 2, &[1, 0, 0, 0]), random_mu(&mut rng, 2), &t2, &IntMatrix::zeros(2, 2), "random");

    let mut out = Vec::new();
    for (k, case) in cases.iter().enumerate() {
        let phi = Biholomorphism::new(&case.t, &case.delta)?;
        let spec = BundleSpec::new(case.r, &case.a, &case.mu, &phi.t_prime)?;
        let name = |s: &str| format!("case{k}/{s}");
        let info = json!({
            "case": case.label,
            "T": complex_matrix_json(&case.t),
            "delta": int_matrix_json(&case.delta),
            "mu": complex_vec_json(&case.mu),
            "rprime": spec.rprime(),
        });
        let gauge = gauge_transform(&spec, &phi);
        out.push(
            CheckRecord::exact(name("cal-a"), "CalA == CalA^t and conj(CalA) - CalA == (2 pi / i) R", gauge.is_ok())
                .with_detail(info.clone()),
        );
        if gauge.is_err() {
            continue;
        }
        let rep = intertwining_residuals(&spec, &phi, config.samples, config.seed)?;
        out.push(
            CheckRecord::float(name("intertwining"), "|| Psi(z + g) e_g(z) Psi(z)^-1 - j(g, z) || / || j(g, z) || <= tol", rep.max_residual, config.tol)
                .with_detail(json!({
                    "case": case.label,
                    "samples": rep.samples,
                    "worst_sample": rep.worst_sample,
                    "worst_generator": rep.worst_generator,
                    "per_generator": rep.per_generator,
                })),
        );
        out.push(CheckRecord::float(name("cocycle-identity"), "j(g + h, z) == j(g, z + h) j(h, z)", rep.cocycle_identity_residual, config.tol));
        out.push(CheckRecord::float(name("unitarity"), "|| U(g)^H U(g) - I || <= 1e-12", rep.unitarity_residual, UNITARITY_TOL));
        out.push(CheckRecord::exact(name("imaginary-phases"), "Re c(g) == 0 for U(g) = e^c(g) V(g)", rep.phases_imaginary));
        out.push(
            CheckRecord::exact(name("cocycle-relations"), "U(g) satisfy the relations of V'_j, U'_k in root-of-unity arithmetic", rep.cocycle_violation.is_none())
                .with_witnesses(rep.cocycle_violation.iter().map(|v| Value::from(v.as_str())).collect()),
        );
    }
    Ok(out)
}

fn sets(config: &JobConfig, input: Option<&Value>) -> Result<Vec<CheckRecord>> {
    let torus = load_torus(config, input)?;
    let d = resolve_delta(&torus)?;
    let report = classify_sets(&torus.t, &d, config.bound)?;
    let mut out = set_checks(&report);
    if torus.t == example_torus() && d == IntMatrix::from_i64(2, 2, &[0, 0, 0, 1]) {
        let find = |vals: &[i64]| {
            let a = IntMatrix::from_i64(2, 2, vals);
            report.entries.iter().find(|e| e.a == a).map(|e| (e.in_delta, e.in_syz))
        };
        let a1 = find(&[0, 1, 1, 1]);
        let a2 = find(&[1, 1, 1, -1]);
        out.push(CheckRecord::exact("a1", "A_1 = [[0,1],[1,1]]: A_1 T' sym and A_1 T not", a1 == Some((true, false)) || (a1.is_none() && config.bound < 1)));
        out.push(CheckRecord::exact("a2", "A_2 = [[1,1],[1,-1]]: A_2 T sym and A_2 T' not", a2 == Some((false, true)) || (a2.is_none() && config.bound < 1)));
    }
    Ok(out)
}
