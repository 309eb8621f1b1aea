// Σ_{d|n} Ns(a, d) = n when n | a and 0 otherwise, plus the absolute-value
// companion Σ_{d|n} |Ns(a, d)| = (a, n)·2^ω(n/(a, n)).
//
//     cargo run --example divisor_sums -- 300

use std::error::Error;

use nsfn::identities::{
    theorem1_abs_expected, theorem1_abs_sum, theorem1_expected, theorem1_sum, verify_theorem1,
    verify_theorem1_abs,
};
use nsfn::report::Jobs;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n_max = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(120);

    for (a, n) in [(6, 6), (1, 4), (0, 5), (2, 4), (1, 6)] {
        println!(
            "a={a} n={n}: Σ Ns = {} (expected {}), Σ |Ns| = {} (expected {})",
            theorem1_sum(a, n)?,
            theorem1_expected(a, n)?,
            theorem1_abs_sum(a, n)?,
            theorem1_abs_expected(a, n)?
        );
    }

    for report in [
        verify_theorem1(n_max, n_max, Jobs::default())?,
        verify_theorem1_abs(n_max, n_max, Jobs::default())?,
    ] {
        println!(
            "{} over {}: {} cases, {}",
            report.identity,
            report.range_description(),
            report.cases,
            report.status
        );
        assert!(report.passed());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
