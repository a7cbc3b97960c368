// Affine Lagrangian multi-sections mirror to holomorphic bundles, on both
// mirror tori, with their canonical keys.

use torus_mirror::bundle::BundleSpec;
use torus_mirror::fukaya::{canonical_form, check_fukaya_object, enumerate_objects, mirror_object, Side};
use torus_mirror::linalg::{cq, rat, IntMatrix, RatComplexMatrix, Rational};
use torus_mirror::torus::Biholomorphism;

type Res = Result<(), Box<dyn std::error::Error>>;

fn row(v: &[Rational]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", items.join(", "))
}

pub fn run_example() -> Res {
    let c = |a: i64, b: i64| cq(rat(a, 1), rat(b, 1));
    let t = RatComplexMatrix::from_rows(vec![vec![c(0, 1), c(1, 0)], vec![c(-1, 0), c(0, 1)]]);
    let phi = Biholomorphism::new(&t, &IntMatrix::from_i64(2, 2, &[0, 0, 0, 1]))?;
    let a = IntMatrix::from_i64(2, 2, &[0, 1, 1, 1]);
    let mu = [cq(rat(1, 2), rat(1, 3)), cq(rat(0, 1), rat(-1, 4))];
    let spec = BundleSpec::new(2, &a, &mu, &phi.t_prime)?;
    println!("r = 2, A = A1, rank r' = {}", spec.rprime());
    for side in [Side::CheckTPrime, Side::CheckT] {
        let obj = mirror_object(&spec, side, &phi)?;
        let rep = check_fukaya_object(&obj, &phi)?;
        let key = canonical_form(&obj);
        println!("{side}: Lagrangian {}, flat {}", rep.lagrangian, rep.flat);
        println!("  slope {}", key.slope);
        println!("  offset {} + 2pi {}", row(&key.offset.base), row(&key.offset.turns));
        println!("  holonomy {} + 2pi {}", row(&key.holonomy.base), row(&key.holonomy.turns));
    }
    let e = enumerate_objects(&phi, 1, &[1, 2])?;
    println!("bound 1, r in {{1, 2}}: {} specs, {} objects, injective {}", e.specs, e.objects, e.injective());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Res {
    run_example()
}
