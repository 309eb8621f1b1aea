//! Divisor-sum, inversion and power-sum identities for `Ns`, each with a
//! per-value evaluator and an exhaustive sweep that produces a
//! [`VerificationReport`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::arith::{self, check_positive, factorize_raw, gcd_raw, ExactRational};
use crate::ns::{ns, NsTable};
use crate::report::{
    range_map, rational_value, sweep, Batch, Counterexample, Jobs, VerificationReport,
};
use crate::Result;

/// `n | a`, with every `n` dividing 0.
pub fn divides(n: u64, a: u64) -> bool {
    a.is_multiple_of(n)
}

/// `Σ_{d|n} Ns(a, d)`.
pub fn theorem1_sum(a: u64, n: u64) -> Result<i64> {
    check_positive("theorem1_sum", n)?;
    arith::divisors(n)?.into_iter().map(|d| ns(a, d)).sum()
}

/// Closed form of [`theorem1_sum`]: `n` if `n | a`, else 0.
pub fn theorem1_expected(a: u64, n: u64) -> Result<i64> {
    check_positive("theorem1_expected", n)?;
    Ok(if divides(n, a) { n as i64 } else { 0 })
}

/// `Σ_{d|n} |Ns(a, d)|`.
pub fn theorem1_abs_sum(a: u64, n: u64) -> Result<i64> {
    check_positive("theorem1_abs_sum", n)?;
    arith::divisors(n)?
        .into_iter()
        .map(|d| ns(a, d).map(i64::abs))
        .sum()
}

/// Closed form of [`theorem1_abs_sum`]: `(a,n) · 2^ω(n/(a,n))`.
pub fn theorem1_abs_expected(a: u64, n: u64) -> Result<i64> {
    let g = arith::gcd(a, n)?;
    Ok(g as i64 * (1i64 << arith::omega(n / g)?))
}

/// An integer-valued function on the positive integers.
pub trait ArithmeticFunction {
    fn eval(&self, n: u64) -> i128;
}

impl<F: Fn(u64) -> i128> ArithmeticFunction for F {
    fn eval(&self, n: u64) -> i128 {
        self(n)
    }
}

/// The functions the inversion sweep runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardFunction {
    One,
    Identity,
    Square,
    Mobius,
    Phi,
}

impl StandardFunction {
    pub const ALL: [StandardFunction; 5] = [
        StandardFunction::One,
        StandardFunction::Identity,
        StandardFunction::Square,
        StandardFunction::Mobius,
        StandardFunction::Phi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StandardFunction::One => "one",
            StandardFunction::Identity => "id",
            StandardFunction::Square => "square",
            StandardFunction::Mobius => "mobius",
            StandardFunction::Phi => "phi",
        }
    }
}

impl ArithmeticFunction for StandardFunction {
    fn eval(&self, n: u64) -> i128 {
        match self {
            StandardFunction::One => 1,
            StandardFunction::Identity => n as i128,
            StandardFunction::Square => (n as i128) * (n as i128),
            StandardFunction::Mobius => factorize_raw(n).mobius() as i128,
            StandardFunction::Phi => factorize_raw(n).euler_phi() as i128,
        }
    }
}

/// `g(n) = Σ_{d|n} f(d)`.
pub fn divisor_summatory<F: ArithmeticFunction + ?Sized>(f: &F, n: u64) -> Result<i128> {
    Ok(arith::divisors(n)?.into_iter().map(|d| f.eval(d)).sum())
}

/// Both sides of the generalized inversion formula:
///
/// ```text
/// lhs = Σ_{d | (a,n)} f(n/d) · d
/// rhs = Σ_{d | n} Ns(a, d) · g(n/d),   g(m) = Σ_{e|m} f(e)
/// ```
pub fn invert<F: ArithmeticFunction + ?Sized>(f: &F, a: u64, n: u64) -> Result<(i128, i128)> {
    let g = arith::gcd(a, n)?;
    let lhs = factorize_raw(g)
        .divisors()
        .into_iter()
        .map(|d| f.eval(n / d) * d as i128)
        .sum();
    let mut rhs = 0i128;
    for d in arith::divisors(n)? {
        rhs += ns(a, d)? as i128 * divisor_summatory(f, n / d)?;
    }
    Ok((lhs, rhs))
}

/// Classical Möbius inversion `Σ_{d|n} μ(d) g(n/d)`, which should recover `f(n)`.
pub fn mobius_inversion<F: ArithmeticFunction + ?Sized>(f: &F, n: u64) -> Result<i128> {
    let mut total = 0i128;
    for d in arith::divisors(n)? {
        total += arith::mobius(d)? as i128 * divisor_summatory(f, n / d)?;
    }
    Ok(total)
}

/// `Σ_{a=1}^{n} Ns(a, n)^m` as an exact rational.
///
/// Terms with `μ(n/(a,n)) = 0` contribute nothing for every `m`, including
/// `m = 0`. For negative `m` each surviving term is
/// `(φ(n)/φ(n/(a,n)))^m · μ(n/(a,n))^{|m|}`.
pub fn theorem3_lhs(n: u64, m: i32) -> Result<ExactRational> {
    check_positive("theorem3_lhs", n)?;
    let phi_n = BigInt::from(factorize_raw(n).euler_phi());
    let mut total = BigRational::zero();
    for a in 1..=n {
        let reduced = factorize_raw(n / gcd_raw(a, n));
        let mu = reduced.mobius();
        if mu == 0 {
            continue;
        }
        let ratio = BigRational::new(phi_n.clone(), BigInt::from(reduced.euler_phi()));
        let sign = BigRational::from_integer(BigInt::from(mu));
        total += if m >= 0 {
            (sign * ratio).pow(m)
        } else {
            ratio.pow(m) * sign.pow(-m)
        };
    }
    Ok(total)
}

/// `φ(n)^m · ∏_{p | n} (1 − 1/(1 − p)^{m−1})`.
pub fn theorem3_rhs(n: u64, m: i32) -> Result<ExactRational> {
    check_positive("theorem3_rhs", n)?;
    let f = factorize_raw(n);
    let mut value = BigRational::from_integer(BigInt::from(f.euler_phi())).pow(m);
    for p in f.primes() {
        let base = BigRational::from_integer(BigInt::one() - BigInt::from(p));
        value *= BigRational::one() - base.pow(m - 1).recip();
    }
    Ok(value)
}

/// `(Σ_{a=1}^{n} Ns(a,n), Σ_{a=1}^{n} |Ns(a,n)|)`.
pub fn row_sums(n: u64) -> Result<(i64, i64)> {
    check_positive("row_sums", n)?;
    let mut signed = 0;
    let mut absolute = 0;
    for a in 1..=n {
        let v = ns(a, n)?;
        signed += v;
        absolute += v.abs();
    }
    Ok((signed, absolute))
}

/// Closed forms for [`row_sums`]: `([n = 1], φ(n) · 2^ω(n))`.
pub fn row_sums_expected(n: u64) -> Result<(i64, i64)> {
    let f = arith::factorize(n)?;
    Ok((
        i64::from(n == 1),
        f.euler_phi() as i64 * (1i64 << f.omega()),
    ))
}

/// The exponents the power-sum sweep covers by default.
pub const DEFAULT_EXPONENTS: [i32; 7] = [0, 1, 2, 3, 4, -1, -2];

fn an(a: u64, n: u64) -> [(&'static str, Value); 2] {
    [("a", a.into()), ("n", n.into())]
}

/// Divisor-sum identity over `1 ≤ n ≤ n_max`, `0 ≤ a ≤ a_max`.
pub fn verify_theorem1(n_max: u64, a_max: u64, jobs: Jobs) -> Result<VerificationReport> {
    check_positive("verify_theorem1", n_max)?;
    let table = NsTable::build(n_max)?;
    let batch = sweep((1..=n_max).collect(), jobs, |&n| {
        let divs = factorize_raw(n).divisors();
        let mut b = Batch::default();
        for a in 0..=a_max {
            let actual: i64 = divs.iter().map(|&d| table.get(a, d)).sum();
            let expected = if divides(n, a) { n as i64 } else { 0 };
            b.check(actual == expected, || {
                Counterexample::new(an(a, n), expected, actual)
            });
        }
        b
    });
    VerificationReport::new(
        "theorem1",
        range_map([("n_max", n_max), ("a_max", a_max)]),
        batch.cases,
        batch.counterexamples,
    )
}

/// `Σ_{d|n} |Ns(a,d)| = (a,n) · 2^ω(n/(a,n))` over the same range.
pub fn verify_theorem1_abs(n_max: u64, a_max: u64, jobs: Jobs) -> Result<VerificationReport> {
    check_positive("verify_theorem1_abs", n_max)?;
    let table = NsTable::build(n_max)?;
    let batch = sweep((1..=n_max).collect(), jobs, |&n| {
        let divs = factorize_raw(n).divisors();
        let mut b = Batch::default();
        for a in 0..=a_max {
            let actual: i64 = divs.iter().map(|&d| table.get(a, d).abs()).sum();
            let g = gcd_raw(a, n);
            let expected = g as i64 * (1i64 << factorize_raw(n / g).omega());
            b.check(actual == expected, || {
                Counterexample::new(an(a, n), expected, actual)
            });
        }
        b
    });
    VerificationReport::new(
        "theorem1-abs",
        range_map([("n_max", n_max), ("a_max", a_max)]),
        batch.cases,
        batch.counterexamples,
    )
}

/// The sampled `a` values for the inversion sweep at a given `n`:
/// `{0, 1, ⌊n/2⌋, n, n + 3}` without repeats.
pub fn theorem2_sample_a(n: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(5);
    for a in [0, 1, n / 2, n, n + 3] {
        if !out.contains(&a) {
            out.push(a);
        }
    }
    out
}

/// Generalized inversion for every [`StandardFunction`] and sampled `a`,
/// plus its three corollaries, for `1 ≤ n ≤ n_max`.
///
/// The corollary cases check, per `n`:
/// 1. `f(n) = Σ_{d|n} μ(d) g(n/d)` for every `f`, and that the `(a,n) = 1`
///    instance of the general formula reduces to it;
/// 2. `n·d(n) = Σ_{d|n} φ(d) S(n/d)`;
/// 3. `S(n) = Σ_{d|n} φ(d) d(n/d)`.
pub fn verify_theorem2(n_max: u64, jobs: Jobs) -> Result<VerificationReport> {
    check_positive("verify_theorem2", n_max)?;
    let batch = sweep((1..=n_max).collect(), jobs, |&n| {
        let mut b = Batch::default();
        let divs = factorize_raw(n).divisors();
        for f in StandardFunction::ALL {
            for a in theorem2_sample_a(n) {
                let (lhs, rhs) = invert(&f, a, n).expect("n positive");
                b.check(lhs == rhs, || {
                    Counterexample::new(
                        [
                            ("check", Value::from("general")),
                            ("f", f.name().into()),
                            ("a", a.into()),
                            ("n", n.into()),
                        ],
                        lhs as i64,
                        rhs as i64,
                    )
                });
            }

            let fn_value = f.eval(n);
            let classical = mobius_inversion(&f, n).expect("n positive");
            let (lhs, rhs) = invert(&f, 1, n).expect("n positive");
            b.check(
                classical == fn_value && lhs == fn_value && rhs == fn_value,
                || {
                    Counterexample::new(
                        [
                            ("check", Value::from("corollary1")),
                            ("f", f.name().into()),
                            ("n", n.into()),
                        ],
                        fn_value as i64,
                        classical as i64,
                    )
                },
            );
        }

        let phi = |d: u64| factorize_raw(d).euler_phi() as i128;
        let tau = |d: u64| factorize_raw(d).divisors().len() as i128;
        let sum_div = |d: u64| {
            factorize_raw(d)
                .divisors()
                .iter()
                .map(|&e| e as i128)
                .sum::<i128>()
        };

        let n_tau = n as i128 * tau(n);
        let conv2: i128 = divs.iter().map(|&d| phi(d) * sum_div(n / d)).sum();
        let (lhs2, _) = invert(&StandardFunction::Identity, n, n).expect("n positive");
        b.check(n_tau == conv2 && lhs2 == n_tau, || {
            Counterexample::new(
                [("check", Value::from("corollary2")), ("n", n.into())],
                n_tau as i64,
                conv2 as i64,
            )
        });

        let s = sum_div(n);
        let conv3: i128 = divs.iter().map(|&d| phi(d) * tau(n / d)).sum();
        let (lhs3, _) = invert(&StandardFunction::One, n, n).expect("n positive");
        b.check(s == conv3 && lhs3 == s, || {
            Counterexample::new(
                [("check", Value::from("corollary3")), ("n", n.into())],
                s as i64,
                conv3 as i64,
            )
        });
        b
    });
    VerificationReport::new(
        "theorem2",
        range_map([("n_max", n_max)]),
        batch.cases,
        batch.counterexamples,
    )
}

/// Power sums over `a` for every `n ≤ n_max` and each exponent in `exponents`.
pub fn verify_theorem3(n_max: u64, exponents: &[i32], jobs: Jobs) -> Result<VerificationReport> {
    check_positive("verify_theorem3", n_max)?;
    let batch = sweep((1..=n_max).collect(), jobs, |&n| {
        let mut b = Batch::default();
        for &m in exponents {
            let lhs = theorem3_lhs(n, m).expect("n positive");
            let rhs = theorem3_rhs(n, m).expect("n positive");
            b.check(lhs == rhs, || {
                Counterexample::new(
                    [("n", Value::from(n)), ("m", m.into())],
                    rational_value(&rhs),
                    rational_value(&lhs),
                )
            });
        }
        b
    });
    VerificationReport::new(
        "theorem3",
        range_map([
            ("n_max", Value::from(n_max)),
            ("m", Value::from(exponents.to_vec())),
        ]),
        batch.cases,
        batch.counterexamples,
    )
}

/// Signed and absolute row sums for `1 ≤ n ≤ n_max`. Each `n` contributes two
/// cases.
pub fn verify_row_sums(n_max: u64, jobs: Jobs) -> Result<VerificationReport> {
    check_positive("verify_row_sums", n_max)?;
    let table = NsTable::build(n_max)?;
    let batch = sweep((1..=n_max).collect(), jobs, |&n| {
        let mut b = Batch::default();
        // a = 1..=n is a = 0..n shifted by one period
        let row = table.row(n);
        let signed: i64 = row.iter().sum();
        let absolute: i64 = row.iter().map(|v| v.abs()).sum();
        let (exp_signed, exp_abs) = row_sums_expected(n).expect("n positive");
        let input = || [("n", Value::from(n))];
        b.check(signed == exp_signed, || {
            let mut ce = Counterexample::new(input(), exp_signed, signed);
            ce.inputs.insert("sum".into(), "signed".into());
            ce
        });
        b.check(absolute == exp_abs, || {
            let mut ce = Counterexample::new(input(), exp_abs, absolute);
            ce.inputs.insert("sum".into(), "absolute".into());
            ce
        });
        b
    });
    VerificationReport::new(
        "row-sums",
        range_map([("n_max", n_max)]),
        batch.cases,
        batch.counterexamples,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> ExactRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn theorem1_examples() {
        assert_eq!(theorem1_sum(6, 6).unwrap(), 6);
        assert_eq!(theorem1_sum(1, 4).unwrap(), 0);
        assert_eq!(theorem1_sum(0, 5).unwrap(), 5);
        assert_eq!(theorem1_expected(0, 5).unwrap(), 5);
        assert_eq!(theorem1_expected(1, 4).unwrap(), 0);
        assert!(theorem1_sum(1, 0).is_err());
    }

    #[test]
    fn theorem1_abs_examples() {
        assert_eq!(theorem1_abs_sum(2, 4).unwrap(), 4);
        assert_eq!(theorem1_abs_expected(2, 4).unwrap(), 4);
        assert_eq!(theorem1_abs_sum(12, 12).unwrap(), 12);
        assert_eq!(theorem1_abs_sum(1, 6).unwrap(), 4);
        assert_eq!(theorem1_abs_expected(1, 6).unwrap(), 4);
    }

    #[test]
    fn invert_examples() {
        assert_eq!(invert(&StandardFunction::Identity, 4, 4).unwrap(), (12, 12));
        assert_eq!(invert(&StandardFunction::One, 4, 4).unwrap(), (7, 7));
        assert_eq!(invert(&StandardFunction::Mobius, 5, 6).unwrap(), (1, 1));
        // closures work as arithmetic functions too
        let cube = |d: u64| (d as i128).pow(3);
        let (l, r) = invert(&cube, 6, 12).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn corollary_forms() {
        // recovering f from its divisor sum
        for f in StandardFunction::ALL {
            for n in 1..=50 {
                assert_eq!(mobius_inversion(&f, n).unwrap(), f.eval(n));
            }
        }
        assert_eq!(divisor_summatory(&StandardFunction::Phi, 36).unwrap(), 36);
    }

    #[test]
    fn theorem3_examples() {
        // direct sums over a = 1..n
        assert_eq!(theorem3_lhs(3, 2).unwrap(), rat(1 + 1 + 4, 1));
        assert_eq!(theorem3_lhs(4, 2).unwrap(), rat(8, 1));
        assert_eq!(
            theorem3_lhs(3, -1).unwrap(),
            rat(-1, 1) + rat(-1, 1) + rat(1, 2)
        );
        assert_eq!(theorem3_lhs(3, -1).unwrap(), rat(-3, 2));
        for m in -3..=5 {
            assert_eq!(theorem3_lhs(1, m).unwrap(), rat(1, 1));
            assert_eq!(theorem3_rhs(1, m).unwrap(), rat(1, 1));
        }
        assert_eq!(theorem3_rhs(3, 2).unwrap(), rat(6, 1));
        assert_eq!(theorem3_rhs(4, 2).unwrap(), rat(8, 1));
        assert_eq!(theorem3_rhs(3, -1).unwrap(), rat(-3, 2));
    }

    #[test]
    fn theorem3_zero_exponent_convention() {
        // Only a = 2 and a = 4 have μ(4/(a,4)) ≠ 0.
        assert_eq!(theorem3_lhs(4, 0).unwrap(), rat(2, 1));
        assert_eq!(theorem3_rhs(4, 0).unwrap(), rat(2, 1));
        // Counting every a (0⁰ = 1) would give 4 and break the identity.
        assert_ne!(rat(4, 1), theorem3_rhs(4, 0).unwrap());
    }

    #[test]
    fn row_sums_examples() {
        assert_eq!(row_sums(1).unwrap(), (1, 1));
        // row for a = 1..4 is [0, -2, 0, 2]
        assert_eq!(row_sums(4).unwrap(), (0, 4));
        assert_eq!(row_sums_expected(4).unwrap(), (0, 4));
        assert_eq!(row_sums(12).unwrap(), (0, 16));
        assert_eq!(row_sums_expected(12).unwrap(), (0, 16));
    }

    #[test]
    fn sample_a_dedups() {
        assert_eq!(theorem2_sample_a(1), vec![0, 1, 4]);
        assert_eq!(theorem2_sample_a(10), vec![0, 1, 5, 10, 13]);
    }

    #[test]
    fn small_sweeps_pass() {
        let j = Jobs(Some(2));
        assert!(verify_theorem1(60, 60, j).unwrap().passed());
        assert!(verify_theorem1_abs(60, 60, j).unwrap().passed());
        assert!(verify_theorem2(60, j).unwrap().passed());
        assert!(verify_theorem3(60, &DEFAULT_EXPONENTS, j).unwrap().passed());
        assert!(verify_row_sums(60, j).unwrap().passed());
    }

    #[test]
    fn sweep_matches_per_value_evaluators() {
        let r = verify_theorem1(30, 40, Jobs(Some(1))).unwrap();
        assert_eq!(r.cases, 30 * 41);
        for n in 1..=30 {
            for a in 0..=40 {
                assert_eq!(
                    theorem1_sum(a, n).unwrap(),
                    theorem1_expected(a, n).unwrap()
                );
                assert_eq!(
                    theorem1_abs_sum(a, n).unwrap(),
                    theorem1_abs_expected(a, n).unwrap()
                );
            }
        }
    }
}
