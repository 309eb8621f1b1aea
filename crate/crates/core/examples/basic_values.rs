// Evaluate Ns(a, n) three ways: the closed formula, the divisor-sum oracle,
// and a batch row.
//
//     cargo run --example basic_values

use std::error::Error;

use nsfn::arith::{euler_phi, mobius};
use nsfn::ns::{ns, ns_oracle, ns_row, NsTable};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (a, n) in [(6, 6), (1, 4), (2, 4), (3, 9), (0, 12), (1, 30)] {
        let closed = ns(a, n)?;
        let oracle = ns_oracle(a, n)?;
        assert_eq!(closed, oracle);
        println!("Ns({a}, {n}) = {closed}");
    }

    // n | a gives φ(n); (a, n) = 1 gives μ(n)
    let n = 360;
    assert_eq!(ns(2 * n, n)? as u64, euler_phi(n)?);
    assert_eq!(ns(7, n)?, mobius(n)?);

    println!("row n = 12: {:?}", ns_row(12)?);

    let table = NsTable::build(10)?;
    for (n, row) in table.rows() {
        println!("{n:>3}: {row:?}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
