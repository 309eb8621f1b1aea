//! Coefficients of the finite q-product `∏_{i=1}^{n−1} (1 − qⁱ)` and the
//! residue-class sums that reproduce `Ns(a, n)` from them.
//!
//! Writing `p_{n−1}(k)` for the coefficient of `q^k`, the conjectured identity
//! checked by [`verify_theorem4`] is
//!
//! ```text
//! Ns(a, n) = Σ_{k ≥ 0, a + nk ≤ n(n−1)/2} p_{n−1}(a + nk),   0 ≤ a ≤ n − 1.
//! ```
//!
//! It has no known proof; the sweep is an exhaustive finite check and any
//! mismatch is reported as a counterexample.
//!
//! Coefficients are arbitrary-precision. Products are built incrementally,
//! multiplying by each sparse factor in place, so a sweep over `n ≤ N` costs
//! `O(N³)` coefficient updates in total.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::arith::{check_positive, is_prime};
use crate::ns::ns_row;
use crate::report::{
    big_int_value as big_value, range_map, Batch, Counterexample, VerificationReport,
};
use crate::{Error, Result};

/// Largest `n` accepted by [`poly_product`]. The product has degree
/// `n(n−1)/2`, about two million coefficients at this ceiling.
pub const MAX_PRODUCT_N: u64 = 2000;

/// Largest truncation order accepted by [`generating_series`].
pub const MAX_SERIES_ORDER: u64 = 4_000_000;

/// Dense polynomial in `q` with big-integer coefficients, indexed by exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPolynomial {
    coefficients: Vec<BigInt>,
}

impl QPolynomial {
    pub fn one() -> Self {
        QPolynomial {
            coefficients: vec![BigInt::one()],
        }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient of `q^k`, zero above the degree.
    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    fn coefficient_ref(&self, k: usize) -> Option<&BigInt> {
        self.coefficients.get(k)
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coefficients.iter().sum()
    }

    /// Multiplies in place by `(1 − q^i)`: `c[k] −= c[k − i]` for descending `k`.
    pub fn mul_one_minus_q_pow(&mut self, i: usize) {
        assert!(i >= 1, "factor exponent must be positive");
        let old_len = self.coefficients.len();
        self.coefficients.resize(old_len + i, BigInt::zero());
        for k in (i..old_len + i).rev() {
            let (lo, hi) = self.coefficients.split_at_mut(k);
            let src = &lo[k - i];
            if !src.is_zero() {
                hi[0] -= src;
            }
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coefficients.len() > 1 && self.coefficients.last().is_some_and(Zero::is_zero) {
            self.coefficients.pop();
        }
    }
}

/// Successive products `∏_{i=1}^{n−1}(1 − qⁱ)` for `n = 1, 2, 3, …`.
#[derive(Debug, Clone)]
pub struct ProductChain {
    n: u64,
    poly: QPolynomial,
}

impl Default for ProductChain {
    fn default() -> Self {
        Self::new()
    }
}

impl ProductChain {
    /// Starts at `n = 1`, the empty product.
    pub fn new() -> Self {
        ProductChain {
            n: 1,
            poly: QPolynomial::one(),
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn product(&self) -> &QPolynomial {
        &self.poly
    }

    /// Moves from `n` to `n + 1` by multiplying in `(1 − qⁿ)`.
    pub fn advance(&mut self) -> Result<&QPolynomial> {
        if self.n + 1 > MAX_PRODUCT_N {
            return Err(Error::SizeLimit {
                op: "poly_product",
                requested: self.n + 1,
                limit: MAX_PRODUCT_N,
            });
        }
        self.poly.mul_one_minus_q_pow(self.n as usize);
        self.n += 1;
        Ok(&self.poly)
    }
}

/// `∏_{i=1}^{n−1}(1 − qⁱ)`; the constant 1 for `n = 1`.
pub fn poly_product(n: u64) -> Result<QPolynomial> {
    check_positive("poly_product", n)?;
    if n > MAX_PRODUCT_N {
        return Err(Error::SizeLimit {
            op: "poly_product",
            requested: n,
            limit: MAX_PRODUCT_N,
        });
    }
    let mut chain = ProductChain::new();
    while chain.n() < n {
        chain.advance()?;
    }
    Ok(chain.poly)
}

/// Upper summation index `⌊(n−1)/2 − a/n⌋`, or `None` when it is negative.
pub fn theorem4_upper_index(a: u64, n: u64) -> Option<u64> {
    // ⌊(n(n−1) − 2a) / 2n⌋
    let num = n as i128 * (n as i128 - 1) - 2 * a as i128;
    let k = num.div_euclid(2 * n as i128);
    u64::try_from(k).ok()
}

/// The `k` with `a + nk ≤ n(n−1)/2`, enumerated directly.
pub fn theorem4_index_set(a: u64, n: u64) -> Vec<u64> {
    let degree = n * (n - 1) / 2;
    (0..).take_while(|k| a + n * k <= degree).collect()
}

/// Whether the bracketed upper index and the degree constraint describe the
/// same `k` range.
pub fn theorem4_index_sets_agree(a: u64, n: u64) -> bool {
    let by_bracket: Vec<u64> = match theorem4_upper_index(a, n) {
        Some(top) => (0..=top).collect(),
        None => Vec::new(),
    };
    by_bracket == theorem4_index_set(a, n)
}

/// `Σ_k p_{n−1}(a + nk)` over `0 ≤ k ≤ top`, reading coefficients from `poly`.
fn residue_sum(poly: &QPolynomial, start: u64, step: u64, top: Option<u64>) -> BigInt {
    let Some(top) = top else {
        return BigInt::zero();
    };
    let mut total = BigInt::zero();
    for k in 0..=top {
        if let Some(c) = poly.coefficient_ref((start + step * k) as usize) {
            total += c;
        }
    }
    total
}

fn check_theorem4_domain(a: u64, n: u64) -> Result<()> {
    check_positive("theorem4_ns", n)?;
    if a >= n {
        return Err(Error::domain(
            "theorem4_ns",
            format!("a = {a} must lie in [0, n − 1] for n = {n}; reduce a mod n first"),
        ));
    }
    Ok(())
}

/// Residue-class coefficient sum for `a` in `[0, n−1]`, read from an already
/// built `∏_{i=1}^{n−1}(1 − qⁱ)`.
pub fn theorem4_from_product(poly: &QPolynomial, a: u64, n: u64) -> Result<BigInt> {
    check_theorem4_domain(a, n)?;
    Ok(residue_sum(poly, a, n, theorem4_upper_index(a, n)))
}

/// `Σ_{k=0}^{⌊(n−1)/2 − a/n⌋} p_{n−1}(a + nk)` for `0 ≤ a ≤ n − 1`.
pub fn theorem4_ns(a: u64, n: u64) -> Result<BigInt> {
    check_theorem4_domain(a, n)?;
    theorem4_from_product(&poly_product(n)?, a, n)
}

/// The conjecture harness: compares the residue-class sum with `Ns(a, n)` for
/// every `1 ≤ n ≤ n_max`, `0 ≤ a ≤ n − 1`.
///
/// Products are chained from one `n` to the next, so this sweep is
/// sequential.
pub fn verify_theorem4(n_max: u64) -> Result<VerificationReport> {
    check_positive("verify_theorem4", n_max)?;
    let mut batch = Batch::default();
    let mut chain = ProductChain::new();
    for n in 1..=n_max {
        if n > 1 {
            chain.advance()?;
        }
        let poly = chain.product();
        let row = ns_row(n)?;
        for a in 0..n {
            let expected = row[a as usize];
            let actual = theorem4_from_product(poly, a, n)?;
            let agree = theorem4_index_sets_agree(a, n);
            batch.check(agree && actual == BigInt::from(expected), || {
                let mut ce = Counterexample::new(
                    [("a", Value::from(a)), ("n", Value::from(n))],
                    expected,
                    big_value(&actual),
                );
                if !agree {
                    ce.inputs.insert("index_sets_agree".into(), false.into());
                }
                ce
            });
        }
    }
    VerificationReport::new(
        "theorem4",
        range_map([("n_max", n_max)]),
        batch.cases,
        batch.counterexamples,
    )
}

/// `Σ_{k=0}^{⌊(n−1)/2⌋} p_{n−1}(nk)`, which should equal φ(n).
pub fn corollary1_phi_sum(n: u64) -> Result<BigInt> {
    check_positive("corollary1_phi_sum", n)?;
    Ok(phi_sum_from_product(&poly_product(n)?, n))
}

fn phi_sum_from_product(poly: &QPolynomial, n: u64) -> BigInt {
    residue_sum(poly, 0, n, Some((n - 1) / 2))
}

fn mu_sum_from_product(poly: &QPolynomial, n: u64) -> BigInt {
    residue_sum(poly, 1, n, Some((n - 2) / 2))
}

/// `(Σ_{k=0}^{⌊(n−1)/2⌋} p_{n−1}(nk), Σ_{k=0}^{⌊(n−2)/2⌋} p_{n−1}(1 + nk))`,
/// which should equal `(φ(n), μ(n))`. The second sum has an empty range at
/// `n = 1`, which is a domain error.
pub fn corollary1_phi_mu(n: u64) -> Result<(BigInt, BigInt)> {
    check_positive("corollary1_phi_mu", n)?;
    if n < 2 {
        return Err(Error::domain("corollary1_phi_mu", "μ-sum needs n ≥ 2"));
    }
    let poly = poly_product(n)?;
    Ok((
        phi_sum_from_product(&poly, n),
        mu_sum_from_product(&poly, n),
    ))
}

/// φ and μ coefficient sums against the per-value functions for `n ≤ n_max`.
pub fn verify_corollary1(n_max: u64) -> Result<VerificationReport> {
    check_positive("verify_corollary1", n_max)?;
    let mut batch = Batch::default();
    let mut chain = ProductChain::new();
    for n in 1..=n_max {
        if n > 1 {
            chain.advance()?;
        }
        let poly = chain.product();
        let f = crate::arith::factorize(n)?;
        let phi = f.euler_phi() as i64;
        let got = phi_sum_from_product(poly, n);
        batch.check(got == BigInt::from(phi), || {
            Counterexample::new(
                [("n", Value::from(n)), ("sum", "phi".into())],
                phi,
                big_value(&got),
            )
        });
        if n >= 2 {
            let mu = f.mobius();
            let got = mu_sum_from_product(poly, n);
            batch.check(got == BigInt::from(mu), || {
                Counterexample::new(
                    [("n", Value::from(n)), ("sum", "mu".into())],
                    mu,
                    big_value(&got),
                )
            });
        }
    }
    VerificationReport::new(
        "corollary1",
        range_map([("n_max", n_max)]),
        batch.cases,
        batch.counterexamples,
    )
}

fn check_prime_test_domain(n: u64) -> Result<()> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::domain(
            "prime_test",
            format!("n = {n} must be odd and ≥ 3"),
        ));
    }
    Ok(())
}

/// Coefficient characterization of odd primes, with `p := n`:
///
/// ```text
/// 1 + Σ_{k=0}^{(p−1)/2} p_{p−1}(pk) = p
/// 1 + Σ_{k=0}^{(p−1)/2 − 1} p_{p−1}(a + pk) = 0,   1 ≤ a ≤ p − 1
/// ```
///
/// Returns whether every equality holds.
pub fn prime_test(n: u64) -> Result<bool> {
    check_prime_test_domain(n)?;
    prime_test_from_product(&poly_product(n)?, n)
}

/// [`prime_test`] against an already built `∏_{i=1}^{n−1}(1 − qⁱ)`.
pub fn prime_test_from_product(poly: &QPolynomial, n: u64) -> Result<bool> {
    check_prime_test_domain(n)?;
    let half = (n - 1) / 2;
    let one = BigInt::one();
    if &one + residue_sum(poly, 0, n, Some(half)) != BigInt::from(n) {
        return Ok(false);
    }
    for a in 1..n {
        if !(&one + residue_sum(poly, a, n, Some(half - 1))).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Odd `n` in `[3, n_max]` for which [`prime_test`] holds.
pub fn prime_test_sweep(n_max: u64) -> Result<Vec<(u64, bool)>> {
    let mut out = Vec::new();
    let mut chain = ProductChain::new();
    while chain.n() < n_max {
        chain.advance()?;
        let n = chain.n();
        if n >= 3 && n % 2 == 1 {
            out.push((n, prime_test_from_product(chain.product(), n)?));
        }
    }
    Ok(out)
}

/// [`prime_test`] against trial-division primality for odd `3 ≤ n ≤ n_max`.
pub fn verify_prime_test(n_max: u64) -> Result<VerificationReport> {
    if n_max < 3 {
        return Err(Error::domain(
            "verify_prime_test",
            "n_max must be at least 3",
        ));
    }
    let mut batch = Batch::default();
    for (n, test) in prime_test_sweep(n_max)? {
        let expected = is_prime(n);
        batch.check(test == expected, || {
            Counterexample::new([("n", Value::from(n))], expected, test)
        });
    }
    VerificationReport::new(
        "prime-test",
        range_map([("n_max", n_max)]),
        batch.cases,
        batch.counterexamples,
    )
}

/// Power-series prefix `c_0 … c_order`. Every accessor bounds-checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedPowerSeries {
    coefficients: Vec<BigInt>,
}

impl TruncatedPowerSeries {
    pub fn truncation_order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, k: usize) -> Result<&BigInt> {
        self.coefficients.get(k).ok_or(Error::IndexOutOfRange {
            index: k,
            max: self.truncation_order(),
        })
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }
}

/// `N_n(0..=order)` where
/// `Σ N_n(k) q^k = (−1)^{n−1} / (1 − qⁿ) · ∏_{i=1}^{n−1}(1 − qⁱ)`.
pub fn generating_series(n: u64, order: u64) -> Result<TruncatedPowerSeries> {
    check_positive("generating_series", n)?;
    let poly = poly_product(n)?;
    generating_series_from_product(&poly, n, order)
}

/// [`generating_series`] from an already built product.
///
/// Dividing by `1 − qⁿ` is the recurrence `U(k) = p(k) + U(k − n)`.
pub fn generating_series_from_product(
    poly: &QPolynomial,
    n: u64,
    order: u64,
) -> Result<TruncatedPowerSeries> {
    check_positive("generating_series", n)?;
    if order > MAX_SERIES_ORDER {
        return Err(Error::SizeLimit {
            op: "generating_series",
            requested: order,
            limit: MAX_SERIES_ORDER,
        });
    }
    let len = order as usize + 1;
    let step = n as usize;
    let mut coefficients: Vec<BigInt> = Vec::with_capacity(len);
    for k in 0..len {
        let mut c = poly.coefficient(k);
        if k >= step {
            c += &coefficients[k - step];
        }
        coefficients.push(c);
    }
    if n.is_multiple_of(2) {
        for c in &mut coefficients {
            *c = -&*c;
        }
    }
    Ok(TruncatedPowerSeries { coefficients })
}

/// Series index that holds `Ns(a, n)`: `(n−1)(n−2)/2 + a − 1`.
pub fn corollary3_index(a: u64, n: u64) -> Result<u64> {
    check_positive("corollary3_ns", n)?;
    if a == 0 {
        return Err(Error::domain("corollary3_ns", "a must be at least 1"));
    }
    Ok((n - 1) * n.saturating_sub(2) / 2 + a - 1)
}

/// Reads `N_n((n−1)(n−2)/2 + a − 1)`, building the series to exactly that
/// order.
pub fn corollary3_ns(a: u64, n: u64) -> Result<BigInt> {
    let index = corollary3_index(a, n)?;
    Ok(generating_series(n, index)?
        .coefficient(index as usize)?
        .clone())
}

/// Generating-function reading against `Ns(a, n)` for `n ≤ n_max`,
/// `1 ≤ a ≤ a_factor · n`.
pub fn verify_corollary3(n_max: u64, a_factor: u64) -> Result<VerificationReport> {
    check_positive("verify_corollary3", n_max)?;
    check_positive("verify_corollary3", a_factor)?;
    let mut batch = Batch::default();
    let mut chain = ProductChain::new();
    for n in 1..=n_max {
        if n > 1 {
            chain.advance()?;
        }
        let a_max = a_factor * n;
        let series =
            generating_series_from_product(chain.product(), n, corollary3_index(a_max, n)?)?;
        let row = ns_row(n)?;
        for a in 1..=a_max {
            let expected = row[(a % n) as usize];
            let actual = series.coefficient(corollary3_index(a, n)? as usize)?;
            batch.check(*actual == BigInt::from(expected), || {
                Counterexample::new(
                    [("a", Value::from(a)), ("n", Value::from(n))],
                    expected,
                    big_value(actual),
                )
            });
        }
    }
    VerificationReport::new(
        "corollary3",
        range_map([("n_max", n_max), ("a_factor", a_factor)]),
        batch.cases,
        batch.counterexamples,
    )
}

/// Largest coefficient magnitude of the product, for diagnostics.
pub fn max_abs_coefficient(poly: &QPolynomial) -> BigInt {
    poly.coefficients
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default()
}
