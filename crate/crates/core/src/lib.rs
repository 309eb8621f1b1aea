//! Exact arithmetic for the two-variable function
//!
//! ```text
//! Ns(a, n) = φ(n) · μ(n / (a, n)) / φ(n / (a, n))
//! ```
//!
//! together with verifiers for the divisor-sum, inversion, power-sum,
//! q-series and Dirichlet-series identities it satisfies.
//!
//! Every identity check is exact (integers, big integers or rationals)
//! except the Dirichlet partial sums in [`analytic`], which are
//! floating-point with an explicit tolerance.
//!
//! - [`arith`]: gcd, factorization, φ, μ, divisor power sums, linear sieve
//! - [`ns`]: `Ns(a, n)` closed form, divisor-sum oracle, batch rows
//! - [`identities`]: divisor sums, generalized inversion, power sums over `a`
//! - [`qseries`]: `∏(1 − qⁱ)` coefficients and the residue-class conjecture harness
//! - [`analytic`]: Dirichlet partial sums against `(6/π²)·σ₋₁(a)`
//! - [`report`]: verification reports and parallel sweep plumbing
//! - [`cli`]: the `nsfn` command-line surface

pub mod analytic;
pub mod arith;
pub mod cli;
pub mod identities;
pub mod ns;
pub mod qseries;
pub mod report;

mod error;

pub use error::{Error, Result};
