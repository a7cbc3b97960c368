// Which `E(r, A, mu, U)` pull back to holomorphic bundles: the symmetry
// test, its real split and the curvature of the connection.

use torus_mirror::bundle::{holomorphic_split, is_holomorphic, pullback_connection, BundleSpec};
use torus_mirror::linalg::{cq, rat, IntMatrix, RatComplex, RatComplexMatrix};
use torus_mirror::torus::Biholomorphism;

type Res = Result<(), Box<dyn std::error::Error>>;

pub fn run_example() -> Res {
    let c = |a: i64, b: i64| cq(rat(a, 1), rat(b, 1));
    let t = RatComplexMatrix::from_rows(vec![vec![c(0, 1), c(1, 0)], vec![c(-1, 0), c(0, 1)]]);
    let delta = IntMatrix::from_i64(2, 2, &[0, 0, 0, 1]);
    let phi = Biholomorphism::new(&t, &delta)?;
    println!("T' = {}", phi.t_prime);
    let mu = [RatComplex::new(rat(0, 1), rat(0, 1)), RatComplex::new(rat(0, 1), rat(0, 1))];
    for (name, vals) in [("A1", [0, 1, 1, 1]), ("A2", [1, 1, 1, -1])] {
        let a = IntMatrix::from_i64(2, 2, &vals);
        let (im_cond, re_cond) = holomorphic_split(&a, &t, &delta);
        let spec = BundleSpec::new(1, &a, &mu, &phi.t_prime)?;
        let conn = pullback_connection(&spec, &phi)?;
        println!(
            "{name}: AT' symmetric {}, AT symmetric {}, split ({im_cond}, {re_cond}), (0,2)-part zero {}",
            is_holomorphic(&a, &phi.t_prime),
            (&a.to_rc() * &t).is_symmetric(),
            conn.part_02.antisymmetric_part().is_zero(),
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Res {
    run_example()
}
