// Partial sums of Σ Ns(a,m)/m² against (6/π²)·σ₋₁(a).
//
//     cargo run --release --example dirichlet_series -- 100000

use std::error::Error;

use nsfn::analytic::{dirichlet_check_with, mobius_series_scaled, DEFAULT_TOLERANCE};
use nsfn::arith::build_sieve;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cutoff: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(20_000);
    let sieve = build_sieve(cutoff as usize)?;

    println!(" a  partial        target         residual");
    for a in 1..=10 {
        let c = dirichlet_check_with(&sieve, a, cutoff, DEFAULT_TOLERANCE)?;
        println!(
            "{a:>2}  {:.10}  {:.10}  {:.2e}",
            c.partial_sum, c.target, c.residual
        );
        assert!(c.pass);
    }
    println!(
        "ζ(2)·Σ μ(m)/m² up to {cutoff}: {:.10}",
        mobius_series_scaled(&sieve, cutoff)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
