// Elementary functions and the linear sieve.
//
//     cargo run --example arithmetic_tables

use std::error::Error;

use nsfn::arith::{build_sieve, divisors, factorize, gcd, sigma};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("gcd(12, 18) = {}", gcd(12, 18)?);
    println!("gcd(0, 5)   = {}", gcd(0, 5)?);
    println!("360 = {:?}", factorize(360)?.pairs());
    println!("divisors(12) = {:?}", divisors(12)?);
    for s in [-1, 0, 1, 2] {
        println!("σ_{s}(12) = {}", sigma(s, 12)?);
    }

    let sieve = build_sieve(30)?;
    println!(" n  φ  μ  spf");
    for n in 1..=30 {
        println!(
            "{n:>2} {:>2} {:>2} {:>3}",
            sieve.phi(n),
            sieve.mu(n),
            sieve.smallest_prime_factor(n)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
