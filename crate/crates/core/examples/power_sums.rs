// Σ_{a=1}^{n} Ns(a,n)^m against φ(n)^m ∏_p (1 − 1/(1−p)^{m−1}), in exact
// rationals, and the two row sums.
//
//     cargo run --example power_sums

use std::error::Error;

use nsfn::identities::{row_sums, row_sums_expected, theorem3_lhs, theorem3_rhs};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in [3u64, 4, 12, 30, 72] {
        for m in [-2, -1, 0, 1, 2, 3] {
            let lhs = theorem3_lhs(n, m)?;
            let rhs = theorem3_rhs(n, m)?;
            println!("n={n:<3} m={m:>2}: {lhs} = {rhs}");
            assert_eq!(lhs, rhs);
        }
    }

    // m = 0 counts only the a with μ(n/(a,n)) ≠ 0; for n = 4 that is 2 terms,
    // not 4.
    println!("n=4, m=0: {}", theorem3_lhs(4, 0)?);

    for n in [1u64, 4, 12, 97, 210] {
        let (signed, absolute) = row_sums(n)?;
        assert_eq!((signed, absolute), row_sums_expected(n)?);
        println!("n={n:<4} Σ Ns = {signed}, Σ |Ns| = {absolute}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
