// Reading Ns(a, n) off the series (−1)^{n−1}/(1 − qⁿ) · ∏_{i=1}^{n−1}(1 − qⁱ).
//
//     cargo run --example generating_function

use std::error::Error;

use nsfn::ns::ns;
use nsfn::qseries::{corollary3_index, generating_series, verify_corollary3};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 6;
    let top = corollary3_index(2 * n, n)?;
    let series = generating_series(n, top)?;
    println!("N_{n}(0..={top}): {:?}", series.coefficients());
    for a in 1..=2 * n {
        let k = corollary3_index(a, n)?;
        let value = series.coefficient(k as usize)?;
        println!("  a={a:<2} N_{n}({k}) = {value:>3}  Ns = {}", ns(a, n)?);
    }

    let report = verify_corollary3(60, 2)?;
    println!(
        "{}: {} cases, {}",
        report.identity, report.cases, report.status
    );
    assert!(report.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
