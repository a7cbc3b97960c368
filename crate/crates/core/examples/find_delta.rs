// Integer shifts that make a singular period matrix invertible.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use torus_mirror::linalg::{cq, exact_rank, rat, RatComplexMatrix};
use torus_mirror::sampling::{rank_two_family, singular_pd_period};
use torus_mirror::torus::{find_delta, find_delta_unchecked};

type Res = Result<(), Box<dyn std::error::Error>>;

pub fn run_example() -> Res {
    let c = |a: i64, b: i64| cq(rat(a, 1), rat(b, 1));
    let t = RatComplexMatrix::from_rows(vec![vec![c(0, 1), c(1, 0)], vec![c(-1, 0), c(0, 1)]]);
    let s = find_delta(&t)?;
    println!("T = [[i, 1], [-1, i]], rank {}", s.rank);
    println!("delta = {}, det(T - delta) = {}", s.delta, s.det_shifted);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let t = singular_pd_period(&mut rng, 4, 2).expect("rank 2 of 4 admits Im T > 0");
    let s = find_delta(&t)?;
    println!("random 4x4 of rank {}: minor rows {:?} cols {:?}", exact_rank(&t), s.basis_rows, s.basis_cols);
    println!("delta = {}", s.delta);

    let t = rank_two_family(&mut rng);
    let s = find_delta_unchecked(&t)?;
    println!("5x5 rank-two family: delta = {}", s.delta);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Res {
    run_example()
}
