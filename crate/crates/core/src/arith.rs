//! Elementary multiplicative number theory on `u64`.
//!
//! Per-value operations go through trial-division factorization, which is
//! plenty for the ranges the verifiers sweep (n up to ~10⁶). Batch work over
//! a contiguous range should use [`SieveTables`] instead.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact rational in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

/// Greatest common divisor with `gcd(0, n) = n`.
pub fn gcd(a: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::domain("gcd", "n must be positive"));
    }
    Ok(gcd_raw(a, n))
}

pub(crate) fn gcd_raw(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub(crate) fn check_positive(op: &'static str, n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::domain(op, "n must be positive"))
    } else {
        Ok(())
    }
}

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Canonical prime-power decomposition, primes strictly ascending.
///
/// The empty factorization is the integer 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// The integer this factorization represents.
    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    /// Number of distinct prime divisors, ω(n).
    pub fn omega(&self) -> u32 {
        self.pairs.len() as u32
    }

    pub fn is_squarefree(&self) -> bool {
        self.pairs.iter().all(|&(_, e)| e == 1)
    }

    pub fn euler_phi(&self) -> u64 {
        self.pairs
            .iter()
            .map(|&(p, e)| (p - 1) * p.pow(e - 1))
            .product()
    }

    pub fn mobius(&self) -> i64 {
        if !self.is_squarefree() {
            0
        } else if self.pairs.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All divisors in ascending order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.pairs {
            let base_len = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..base_len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

/// Factorizes `n` by trial division up to √n.
pub fn factorize(n: u64) -> Result<Factorization> {
    check_positive("factorize", n)?;
    Ok(factorize_raw(n))
}

pub(crate) fn factorize_raw(mut n: u64) -> Factorization {
    let mut pairs = Vec::new();
    let mut push = |n: &mut u64, p: u64| {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            pairs.push((p, e));
        }
    };
    push(&mut n, 2);
    let mut p = 3u64;
    while p * p <= n {
        push(&mut n, p);
        p += 2;
    }
    if n > 1 {
        pairs.push((n, 1));
    }
    Factorization { pairs }
}

pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(factorize(n)?.euler_phi())
}

pub fn mobius(n: u64) -> Result<i64> {
    Ok(factorize(n)?.mobius())
}

/// Distinct prime count ω(n).
pub fn omega(n: u64) -> Result<u32> {
    Ok(factorize(n)?.omega())
}

pub fn divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.divisors())
}

/// Divisor power sum `Σ_{d|n} d^s` as an exact rational.
///
/// `s = 0` is the divisor count, `s = 1` the divisor sum, `s = −1` the sum of
/// reciprocals of divisors.
pub fn sigma(s: i32, n: u64) -> Result<ExactRational> {
    let divs = divisors(n)?;
    let mut total = BigRational::zero();
    for d in divs {
        let dp = BigInt::from(d).pow(s.unsigned_abs());
        if s >= 0 {
            total += BigRational::from_integer(dp);
        } else {
            total += BigRational::new(BigInt::one(), dp);
        }
    }
    Ok(total)
}

/// φ, μ and smallest-prime-factor tables over `1..=limit`, built by a linear
/// sieve. Index 0 is unused.
#[derive(Debug, Clone)]
pub struct SieveTables {
    limit: usize,
    phi: Vec<u64>,
    mu: Vec<i8>,
    smallest_prime_factor: Vec<u32>,
}

/// Builds φ/μ/spf tables in O(limit).
pub fn build_sieve(limit: usize) -> Result<SieveTables> {
    if limit == 0 {
        return Err(Error::domain("build_sieve", "limit must be positive"));
    }
    if limit > u32::MAX as usize {
        return Err(Error::SizeLimit {
            op: "build_sieve",
            requested: limit as u64,
            limit: u32::MAX as u64,
        });
    }
    let mut phi = vec![0u64; limit + 1];
    let mut mu = vec![0i8; limit + 1];
    let mut spf = vec![0u32; limit + 1];
    let mut primes: Vec<u32> = Vec::new();
    phi[1] = 1;
    mu[1] = 1;
    spf[1] = 1;
    for i in 2..=limit {
        if spf[i] == 0 {
            spf[i] = i as u32;
            phi[i] = i as u64 - 1;
            mu[i] = -1;
            primes.push(i as u32);
        }
        for &p in &primes {
            let p = p as usize;
            if p > spf[i] as usize || i * p > limit {
                break;
            }
            let ip = i * p;
            spf[ip] = p as u32;
            if i % p == 0 {
                phi[ip] = phi[i] * p as u64;
                mu[ip] = 0;
            } else {
                phi[ip] = phi[i] * (p as u64 - 1);
                mu[ip] = -mu[i];
            }
        }
    }
    Ok(SieveTables {
        limit,
        phi,
        mu,
        smallest_prime_factor: spf,
    })
}

impl SieveTables {
    pub fn limit(&self) -> usize {
        self.limit
    }

    /// φ(n). Panics if `n` is 0 or above the limit.
    pub fn phi(&self, n: usize) -> u64 {
        assert!(n >= 1 && n <= self.limit, "n = {n} outside sieve range");
        self.phi[n]
    }

    /// μ(n). Panics if `n` is 0 or above the limit.
    pub fn mu(&self, n: usize) -> i64 {
        assert!(n >= 1 && n <= self.limit, "n = {n} outside sieve range");
        self.mu[n] as i64
    }

    /// Smallest prime factor, with `spf(1) = 1`.
    pub fn smallest_prime_factor(&self, n: usize) -> u32 {
        assert!(n >= 1 && n <= self.limit, "n = {n} outside sieve range");
        self.smallest_prime_factor[n]
    }

    pub fn phi_table(&self) -> &[u64] {
        &self.phi
    }

    pub fn mu_table(&self) -> &[i8] {
        &self.mu
    }

    /// Factorization read off the smallest-prime-factor chain.
    pub fn factorize(&self, n: usize) -> Factorization {
        assert!(n >= 1 && n <= self.limit, "n = {n} outside sieve range");
        let mut pairs: Vec<(u64, u32)> = Vec::new();
        let mut m = n;
        while m > 1 {
            let p = self.smallest_prime_factor[m] as usize;
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            pairs.push((p as u64, e));
        }
        Factorization { pairs }
    }
}
