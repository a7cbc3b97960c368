// Bundles pulled back from the mirror versus bundles built directly on
// the torus: the two families differ.

use torus_mirror::automorphy::classify_sets;
use torus_mirror::linalg::{cq, rat, IntMatrix, RatComplexMatrix};

type Res = Result<(), Box<dyn std::error::Error>>;

pub fn run_example() -> Res {
    let c = |a: i64, b: i64| cq(rat(a, 1), rat(b, 1));
    let t = RatComplexMatrix::from_rows(vec![vec![c(0, 1), c(1, 0)], vec![c(-1, 0), c(0, 1)]]);
    let delta = IntMatrix::from_i64(2, 2, &[0, 0, 0, 1]);
    let sets = classify_sets(&t, &delta, 1)?;
    println!("AT' symmetric only:");
    for e in sets.delta_only() {
        println!("  {}", e.a);
    }
    println!("AT symmetric only:");
    for e in sets.syz_only() {
        println!("  {}", e.a);
    }
    println!("both: {}", sets.both().count());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Res {
    run_example()
}
