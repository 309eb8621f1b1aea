// Exhaustive check that the residue-class sums of the coefficients of
// ∏_{i=1}^{n−1}(1 − qⁱ) reproduce Ns(a, n). No proof is known; a
// counterexample would be printed in full.
//
//     cargo run --release --example conjecture_harness -- 300

use std::error::Error;

use nsfn::qseries::{poly_product, theorem4_ns, verify_theorem4};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n_max = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(80);

    let p = poly_product(5)?;
    println!("∏_{{i=1}}^4 (1 − q^i) coefficients: {:?}", p.coefficients());
    for a in 0..5 {
        println!("  a={a}: coefficient sum {}", theorem4_ns(a, 5)?);
    }

    let report = verify_theorem4(n_max)?;
    println!("{}", report.to_json());
    if !report.passed() {
        return Err(format!("{} counterexamples", report.counterexamples.len()).into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
