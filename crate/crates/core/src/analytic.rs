//! Floating-point checks of the Dirichlet-series statements
//!
//! ```text
//! Σ_{m≥1} Ns(a, m)/m² = (6/π²) · σ₋₁(a)
//! ζ(2) · Σ_{m≥1} Ns(a, m)/m² = σ₋₁(a)
//! ```
//!
//! by partial sums up to a cutoff. Targets come from the exact rational
//! σ₋₁(a) and are converted to `f64` only at the end. Accumulation runs in
//! ascending `m`, so a check is bit-reproducible for a fixed cutoff.

use std::f64::consts::PI;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::arith::{build_sieve, sigma, SieveTables};
use crate::ns::ns_sieved;
use crate::report::{range_map, Batch, Counterexample, Jobs, VerificationReport};
use crate::{Error, Result};

pub const DEFAULT_CUTOFF: u64 = 100_000;
pub const DEFAULT_TOLERANCE: f64 = 5e-3;

/// 6/π².
pub fn six_over_pi_squared() -> f64 {
    6.0 / (PI * PI)
}

/// ζ(2) = π²/6.
pub fn zeta2() -> f64 {
    PI * PI / 6.0
}

/// Outcome of one partial-sum comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesCheck {
    pub a: u64,
    pub cutoff: u64,
    pub partial_sum: f64,
    /// `(6/π²) · σ₋₁(a)`.
    pub target: f64,
    /// `|partial_sum − target|`.
    pub residual: f64,
    /// `|ζ(2) · partial_sum − σ₋₁(a)|`, the double-series form.
    pub double_series_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

fn check_args(op: &'static str, a: u64, cutoff: u64) -> Result<()> {
    if a == 0 {
        return Err(Error::domain(op, "a must be positive; σ₋₁(0) is undefined"));
    }
    if cutoff == 0 {
        return Err(Error::domain(op, "cutoff must be positive"));
    }
    Ok(())
}

/// `Σ_{m=1}^{cutoff} Ns(a, m)/m²`.
pub fn dirichlet_partial(a: u64, cutoff: u64) -> Result<f64> {
    check_args("dirichlet_partial", a, cutoff)?;
    let sieve = build_sieve(cutoff as usize)?;
    dirichlet_partial_with(&sieve, a, cutoff)
}

/// [`dirichlet_partial`] reusing a sieve that covers `cutoff`.
pub fn dirichlet_partial_with(sieve: &SieveTables, a: u64, cutoff: u64) -> Result<f64> {
    check_args("dirichlet_partial", a, cutoff)?;
    if cutoff as usize > sieve.limit() {
        return Err(Error::domain(
            "dirichlet_partial",
            format!("cutoff {cutoff} exceeds sieve limit {}", sieve.limit()),
        ));
    }
    let mut total = 0.0f64;
    for m in 1..=cutoff {
        let v = ns_sieved(sieve, a, m);
        if v != 0 {
            let mf = m as f64;
            total += v as f64 / (mf * mf);
        }
    }
    Ok(total)
}

/// σ₋₁(a) as `f64`, converted from the exact rational.
pub fn reciprocal_divisor_sum(a: u64) -> Result<f64> {
    Ok(sigma(-1, a)?.to_f64().expect("finite rational"))
}

/// `(6/π²) · σ₋₁(a)`.
pub fn dirichlet_target(a: u64) -> Result<f64> {
    check_args("dirichlet_target", a, 1)?;
    Ok(six_over_pi_squared() * reciprocal_divisor_sum(a)?)
}

/// Compares the partial sum with its limit; passes iff `residual ≤ tolerance`.
pub fn dirichlet_check(a: u64, cutoff: u64, tolerance: f64) -> Result<SeriesCheck> {
    check_args("dirichlet_check", a, cutoff)?;
    check_tolerance(tolerance)?;
    let sieve = build_sieve(cutoff as usize)?;
    dirichlet_check_with(&sieve, a, cutoff, tolerance)
}

fn check_tolerance(tolerance: f64) -> Result<()> {
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(Error::domain(
            "dirichlet_check",
            "tolerance must be positive",
        ));
    }
    Ok(())
}

/// [`dirichlet_check`] reusing a sieve.
pub fn dirichlet_check_with(
    sieve: &SieveTables,
    a: u64,
    cutoff: u64,
    tolerance: f64,
) -> Result<SeriesCheck> {
    check_tolerance(tolerance)?;
    let partial_sum = dirichlet_partial_with(sieve, a, cutoff)?;
    let inv_sum = reciprocal_divisor_sum(a)?;
    let target = six_over_pi_squared() * inv_sum;
    let residual = (partial_sum - target).abs();
    Ok(SeriesCheck {
        a,
        cutoff,
        partial_sum,
        target,
        residual,
        double_series_residual: (zeta2() * partial_sum - inv_sum).abs(),
        tolerance,
        pass: residual <= tolerance,
    })
}

/// `ζ(2) · Σ_{m=1}^{cutoff} μ(m)/m²`, which tends to 1. Reads μ straight
/// from the sieve, not through `Ns`.
pub fn mobius_series_scaled(sieve: &SieveTables, cutoff: u64) -> Result<f64> {
    if cutoff == 0 || cutoff as usize > sieve.limit() {
        return Err(Error::domain(
            "mobius_series_scaled",
            "cutoff outside sieve range",
        ));
    }
    let mut total = 0.0f64;
    for m in 1..=cutoff as usize {
        let mu = sieve.mu(m);
        if mu != 0 {
            let mf = m as f64;
            total += mu as f64 / (mf * mf);
        }
    }
    Ok(zeta2() * total)
}

/// Checks for `1 ≤ a ≤ a_max`: the single-series residual, the double-series
/// residual, and finally the μ-series analog.
pub fn verify_dirichlet(
    a_max: u64,
    cutoff: u64,
    tolerance: f64,
    jobs: Jobs,
) -> Result<VerificationReport> {
    check_args("verify_dirichlet", a_max, cutoff)?;
    check_tolerance(tolerance)?;
    let sieve = build_sieve(cutoff as usize)?;
    let checks: Vec<Result<SeriesCheck>> = jobs.install(|| {
        (1..=a_max)
            .into_par_iter()
            .map(|a| dirichlet_check_with(&sieve, a, cutoff, tolerance))
            .collect()
    });
    let mut batch = Batch::default();
    for check in checks {
        let c = check?;
        let inputs = || [("a", Value::from(c.a)), ("cutoff", Value::from(cutoff))];
        batch.check(c.pass, || {
            let mut ce = Counterexample::new(inputs(), c.target, c.partial_sum);
            ce.inputs.insert("form".into(), "single".into());
            ce
        });
        batch.check(c.double_series_residual <= tolerance, || {
            let sigma = c.target / six_over_pi_squared();
            let mut ce = Counterexample::new(inputs(), sigma, zeta2() * c.partial_sum);
            ce.inputs.insert("form".into(), "double".into());
            ce
        });
    }
    let scaled = mobius_series_scaled(&sieve, cutoff)?;
    batch.check((scaled - 1.0).abs() <= tolerance, || {
        Counterexample::new(
            [
                ("form", Value::from("mobius")),
                ("cutoff", Value::from(cutoff)),
            ],
            1.0,
            scaled,
        )
    });
    VerificationReport::new(
        "dirichlet",
        range_map([
            ("a_max", Value::from(a_max)),
            ("cutoff", Value::from(cutoff)),
            ("tolerance", Value::from(tolerance)),
        ]),
        batch.cases,
        batch.counterexamples,
    )
}
