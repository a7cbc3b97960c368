// Bundle rank from elementary divisors and the clock/shift transition
// matrices.

use torus_mirror::bundle::{build_unitary_set, compute_rank};
use torus_mirror::linalg::IntMatrix;

type Res = Result<(), Box<dyn std::error::Error>>;

pub fn run_example() -> Res {
    for (r, vals) in [(1, [0, 1, 1, 1]), (2, [0, 1, 1, 1]), (2, [1, 0, 0, 0]), (6, [4, 6, 2, 8])] {
        let a = IntMatrix::from_i64(2, 2, &vals);
        let rank = compute_rank(r, &a);
        println!("r = {r}, A = {a}: divisors {:?}, r' = {}", rank.smith.divisors, rank.rprime);
    }
    let a = IntMatrix::from_i64(2, 2, &[0, 1, 1, 1]);
    let set = build_unitary_set(2, &a)?;
    for (j, v) in set.v.iter().enumerate() {
        println!("V_{}: perm {:?} phases {:?} / {}", j + 1, v.perm(), v.phases(), v.order());
    }
    for (k, u) in set.u.iter().enumerate() {
        println!("U_{}: perm {:?} phases {:?} / {}", k + 1, u.perm(), u.phases(), u.order());
    }
    println!("relations hold: {}", set.violation().is_none());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Res {
    run_example()
}
