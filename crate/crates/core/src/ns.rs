//! The function `Ns(a, n) = φ(n) · μ(n/(a,n)) / φ(n/(a,n))`.
//!
//! It reduces to φ(n) when `n | a` and to μ(n) when `(a, n) = 1`. The value is
//! always an integer: either `μ(n/(a,n)) = 0` or `n/(a,n)` is squarefree and
//! `φ(n/(a,n))` divides φ(n).

use rayon::prelude::*;

use crate::arith::{self, check_positive, factorize_raw, gcd_raw, Factorization, SieveTables};
use crate::Result;

/// `Ns(a, n)` from the closed formula.
///
/// `a` may be any non-negative integer; the function has period `n` in `a`.
pub fn ns(a: u64, n: u64) -> Result<i64> {
    check_positive("ns", n)?;
    Ok(ns_closed(a, n))
}

fn ns_closed(a: u64, n: u64) -> i64 {
    let g = gcd_raw(a, n);
    let reduced = factorize_raw(n / g);
    // μ = 0 short-circuits before any division.
    let mu = reduced.mobius();
    if mu == 0 {
        return 0;
    }
    let phi_n = factorize_raw(n).euler_phi();
    let phi_reduced = reduced.euler_phi();
    debug_assert_eq!(phi_n % phi_reduced, 0);
    mu * (phi_n / phi_reduced) as i64
}

/// `Σ_{d | (a,n)} d · μ(n/d)`, the Möbius-inverted form of the divisor-sum
/// identity. Shares nothing with [`ns`] beyond gcd and factorization.
pub fn ns_oracle(a: u64, n: u64) -> Result<i64> {
    check_positive("ns_oracle", n)?;
    let g = gcd_raw(a, n);
    Ok(factorize_raw(g)
        .divisors()
        .into_iter()
        .map(|d| d as i64 * factorize_raw(n / d).mobius())
        .sum())
}

/// `Ns(a, n)` from precomputed sieve tables. `n` must not exceed the sieve
/// limit.
pub fn ns_sieved(sieve: &SieveTables, a: u64, n: u64) -> i64 {
    let g = gcd_raw(a, n);
    let r = (n / g) as usize;
    let mu = sieve.mu(r);
    if mu == 0 {
        return 0;
    }
    mu * (sieve.phi(n as usize) / sieve.phi(r)) as i64
}

/// `[Ns(0,n), …, Ns(n−1,n)]`.
///
/// For each divisor `g` of `n` in ascending order, every multiple of `g`
/// below `n` is overwritten with the value for `(a, n) = g`; the last writer
/// is the largest divisor of `n` dividing `a`, i.e. the gcd. Total work is
/// `σ(n)` writes.
pub fn ns_row(n: u64) -> Result<Vec<i64>> {
    check_positive("ns_row", n)?;
    Ok(row_from_factorization(&factorize_raw(n)))
}

fn row_from_factorization(f: &Factorization) -> Vec<i64> {
    let n = f.value();
    let phi_n = f.euler_phi();
    let mut row = vec![0i64; n as usize];
    for g in f.divisors() {
        let reduced = factorize_raw(n / g);
        let mu = reduced.mobius();
        let value = if mu == 0 {
            0
        } else {
            mu * (phi_n / reduced.euler_phi()) as i64
        };
        for a in (0..n).step_by(g as usize) {
            row[a as usize] = value;
        }
    }
    row
}

/// Rows `1..=n_max` of `Ns`, row `n` holding `a = 0..n`.
#[derive(Debug, Clone)]
pub struct NsTable {
    rows: Vec<Vec<i64>>,
}

impl NsTable {
    /// Builds every row; rows are independent and computed in parallel.
    pub fn build(n_max: u64) -> Result<Self> {
        check_positive("NsTable::build", n_max)?;
        let rows = (1..=n_max)
            .into_par_iter()
            .map(|n| row_from_factorization(&factorize_raw(n)))
            .collect();
        Ok(NsTable { rows })
    }

    pub fn n_max(&self) -> u64 {
        self.rows.len() as u64
    }

    /// Row `n`, of length `n`.
    pub fn row(&self, n: u64) -> &[i64] {
        &self.rows[(n - 1) as usize]
    }

    /// `Ns(a, n)` for any `a`, using periodicity. Panics if `n` is 0 or above
    /// `n_max`.
    pub fn get(&self, a: u64, n: u64) -> i64 {
        self.row(n)[(a % n) as usize]
    }

    pub fn rows(&self) -> impl Iterator<Item = (u64, &[i64])> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, r)| (i as u64 + 1, r.as_slice()))
    }
}

/// |Ns(a, n)| ≤ φ(n); exposed for the property checks.
pub fn bound_holds(a: u64, n: u64) -> Result<bool> {
    Ok(ns(a, n)?.unsigned_abs() <= arith::euler_phi(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{build_sieve, euler_phi, mobius};
    use proptest::prelude::*;

    #[test]
    fn ns_examples() {
        assert_eq!(ns(6, 6).unwrap(), 2);
        assert_eq!(ns(1, 4).unwrap(), 0);
        // μ(4) + 2μ(2) = -2
        assert_eq!(ns(2, 4).unwrap(), -2);
        // μ(9) + 3μ(3) = -3
        assert_eq!(ns(3, 9).unwrap(), -3);
        assert!(ns(3, 0).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(ns_oracle(0, 12).unwrap(), 4);
        assert_eq!(ns_oracle(1, 30).unwrap(), -1);
        assert_eq!(ns_oracle(2, 4).unwrap(), -2);
        assert!(ns_oracle(1, 0).is_err());
    }

    #[test]
    fn row_examples() {
        assert_eq!(ns_row(1).unwrap(), vec![1]);
        assert_eq!(ns_row(4).unwrap(), vec![2, 0, -2, 0]);
        assert_eq!(ns_row(3).unwrap(), vec![2, -1, -1]);
        assert!(ns_row(0).is_err());
    }

    #[test]
    fn rows_match_pointwise() {
        let table = NsTable::build(2000).unwrap();
        for (n, row) in table.rows() {
            assert_eq!(row.len() as u64, n);
            assert_eq!(row[0] as u64, euler_phi(n).unwrap());
            for (a, &v) in row.iter().enumerate() {
                assert_eq!(v, ns(a as u64, n).unwrap(), "Ns({a},{n})");
            }
        }
    }

    #[test]
    fn sieved_matches_closed_form() {
        let s = build_sieve(3000).unwrap();
        for n in 1..=3000u64 {
            for a in [0, 1, 2, n / 2, n, n + 7, 3 * n + 1] {
                assert_eq!(ns_sieved(&s, a, n), ns(a, n).unwrap());
            }
        }
    }

    #[test]
    fn multiplicative_in_n() {
        let s = build_sieve(10_000).unwrap();
        for n1 in 1..=100u64 {
            for n2 in 1..=100u64 {
                if gcd_raw(n1, n2) != 1 {
                    continue;
                }
                // one full period of a
                for a in 0..(n1 * n2) {
                    assert_eq!(
                        ns_sieved(&s, a, n1 * n2),
                        ns_sieved(&s, a, n1) * ns_sieved(&s, a, n2),
                        "a={a} n1={n1} n2={n2}"
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn periodic_in_a(a in 0u64..100_000, n in 1u64..100_000) {
            prop_assert_eq!(ns(a + n, n).unwrap(), ns(a, n).unwrap());
        }

        #[test]
        fn boundary_specializations(k in 0u64..1000, n in 1u64..100_000) {
            prop_assert_eq!(ns(k * n, n).unwrap() as u64, euler_phi(n).unwrap());
            // a = k·n + 1 is always coprime to n
            prop_assert_eq!(ns(k * n + 1, n).unwrap(), mobius(n).unwrap());
        }

        #[test]
        fn bounded_by_phi(a in 0u64..1_000_000, n in 1u64..1_000_000) {
            prop_assert!(bound_holds(a, n).unwrap());
        }

        #[test]
        fn oracle_agrees(a in 0u64..1_000_000, n in 1u64..1_000_000) {
            prop_assert_eq!(ns(a, n).unwrap(), ns_oracle(a, n).unwrap());
        }
    }
}
