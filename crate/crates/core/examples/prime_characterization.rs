// Odd primes characterized by coefficient sums of ∏_{i=1}^{p−1}(1 − qⁱ).
//
//     cargo run --release --example prime_characterization -- 400

use std::error::Error;

use nsfn::arith::is_prime;
use nsfn::qseries::{corollary1_phi_mu, prime_test_sweep};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n_max = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(150);

    for n in [5u64, 9, 12] {
        let (phi, mu) = corollary1_phi_mu(n)?;
        println!("n={n}: φ-sum {phi}, μ-sum {mu}");
    }

    let sweep = prime_test_sweep(n_max)?;
    let primes: Vec<u64> = sweep.iter().filter(|(_, t)| *t).map(|(n, _)| *n).collect();
    println!("odd n ≤ {n_max} passing the coefficient test: {primes:?}");
    for (n, t) in &sweep {
        assert_eq!(*t, is_prime(*n), "n = {n}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
