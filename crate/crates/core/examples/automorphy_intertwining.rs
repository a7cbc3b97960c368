// The Hermitian form `R`, lattice pairings, and the gauge transform
// intertwining transition functions with the factor of automorphy.

use torus_mirror::automorphy::{
    auxiliary_identities, curvature_factor, im_pairings, intertwining_residuals, LatticeBasis,
};
use torus_mirror::bundle::BundleSpec;
use torus_mirror::linalg::{cq, rat, IntMatrix, RatComplexMatrix};
use torus_mirror::torus::Biholomorphism;

type Res = Result<(), Box<dyn std::error::Error>>;

pub fn run_example() -> Res {
    let c = |a: i64, b: i64| cq(rat(a, 1), rat(b, 1));
    let t = RatComplexMatrix::from_rows(vec![vec![c(0, 1), c(1, 0)], vec![c(-1, 0), c(0, 1)]]);
    let delta = IntMatrix::from_i64(2, 2, &[0, 0, 0, 1]);
    let a = IntMatrix::from_i64(2, 2, &[0, 1, 1, 1]);
    let phi = Biholomorphism::new(&t, &delta)?;

    let cf = curvature_factor(1, &a, &t, &delta)?;
    println!("4 pi R = {}", cf.four_pi_r);
    let table = im_pairings(&cf, &LatticeBasis::new(&t)?, &delta)?;
    println!("Im R / pi on (gamma, gamma') = {}", table.im_over_pi);
    println!("auxiliary identities: {}", auxiliary_identities(&cf));

    for r in [1, 2] {
        let mu = [cq(rat(1, 3), rat(1, 5)), cq(rat(-1, 2), rat(0, 1))];
        let spec = BundleSpec::new(r, &a, &mu, &phi.t_prime)?;
        let rep = intertwining_residuals(&spec, &phi, 50, 0)?;
        println!("r = {r}, r' = {}: max residual {:.2e} at {}", spec.rprime(), rep.max_residual, rep.worst_generator);
        for (g, res) in &rep.per_generator {
            println!("  {g}: {res:.2e}");
        }
        println!("  unitarity {:.1e}, cocycle identity {:.1e}", rep.unitarity_residual, rep.cocycle_identity_residual);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Res {
    run_example()
}
