// Generalized complex structures of a torus and of its mirror.

use torus_mirror::gcs::{
    check_mirror_relations, gcs_from_complex_structure, gcs_from_complexified_symplectic, mirror_g24,
    solve_g24_matching,
};
use torus_mirror::linalg::{cq, rat, IntMatrix, RatComplexMatrix};
use torus_mirror::torus::{delta_shift_transform, mirror_partner};

type Res = Result<(), Box<dyn std::error::Error>>;

pub fn run_example() -> Res {
    let c = |a: i64, b: i64| cq(rat(a, 1), rat(b, 1));

    // Nonsingular T: the mirror is B + i omega = -(T^-1)^t.
    let t = RatComplexMatrix::from_rows(vec![vec![c(1, 2), c(0, 1)], vec![c(0, 1), c(-1, 1)]]);
    let (b, omega) = solve_g24_matching(&t)?;
    println!("B = {b}\nomega = {omega}");
    let rel = check_mirror_relations(&t)?;
    println!("relations hold: {}", rel.all_zero());
    let g_j = gcs_from_complex_structure(&t)?;
    let g_w = gcs_from_complexified_symplectic(&b, &omega)?;
    println!("g24 exchanges them: {}", mirror_g24(&g_w) == g_j);

    // Singular T: shift the B-field by delta first.
    let t = RatComplexMatrix::from_rows(vec![vec![c(0, 1), c(1, 0)], vec![c(-1, 0), c(0, 1)]]);
    let delta = IntMatrix::from_i64(2, 2, &[0, 0, 0, 1]);
    let tau = mirror_partner(&t, &delta)?.tau;
    let g = gcs_from_complexified_symplectic(&t.re(), &t.im())?;
    let shifted = delta_shift_transform(&g, &delta)?;
    println!("tau = T - delta = {tau}");
    println!("B-field shift matches: {}", shifted == gcs_from_complexified_symplectic(&tau.re(), &tau.im())?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Res {
    run_example()
}
