// The inversion formula Σ_{d|(a,n)} f(n/d)·d = Σ_{d|n} Ns(a,d)·g(n/d) with
// g = f * 1, for built-in and caller-supplied f.
//
//     cargo run --example generalized_inversion

use std::error::Error;

use nsfn::identities::{invert, verify_theorem2, ArithmeticFunction, StandardFunction};
use nsfn::report::Jobs;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for f in StandardFunction::ALL {
        let (lhs, rhs) = invert(&f, 6, 12)?;
        println!("f = {:<6} a=6 n=12: {lhs} = {rhs}", f.name());
    }

    // any Fn(u64) -> i128 is an arithmetic function
    let cube = |d: u64| (d as i128).pow(3);
    let (lhs, rhs) = invert(&cube, 10, 30)?;
    println!("f = d³     a=10 n=30: {lhs} = {rhs}");
    assert_eq!(lhs, rhs);

    // (a, n) = n with f = d: n·d(n) = Σ φ(d) S(n/d)
    let (lhs, _) = invert(&StandardFunction::Identity, 4, 4)?;
    println!("4·d(4) = {lhs}");
    // (a, n) = 1 recovers f(n)
    let (lhs, rhs) = invert(&StandardFunction::Mobius, 5, 6)?;
    println!(
        "μ(6) = {} = {lhs} = {rhs}",
        StandardFunction::Mobius.eval(6)
    );

    let report = verify_theorem2(200, Jobs::default())?;
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
