//! Verification reports and the parallel sweep driver.
//!
//! A report serializes as
//!
//! ```json
//! { "identity": "theorem1", "range": {"n_max": 100, "a_max": 100},
//!   "cases": 10100, "counterexamples": [], "status": "pass" }
//! ```
//!
//! Sweeps split their outer parameter across a fixed-size worker pool and
//! merge per-parameter results in ascending order, so the report is
//! identical for any worker count.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::arith::ExactRational;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// One failing input with the value the identity predicts and the value
/// actually computed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub inputs: Map<String, Value>,
    pub expected: Value,
    pub actual: Value,
}

impl Counterexample {
    pub fn new<I, K>(inputs: I, expected: impl Into<Value>, actual: impl Into<Value>) -> Self
    where
        I: IntoIterator<Item = (K, Value)>,
        K: Into<String>,
    {
        Counterexample {
            inputs: inputs.into_iter().map(|(k, v)| (k.into(), v)).collect(),
            expected: expected.into(),
            actual: actual.into(),
        }
    }
}

/// Rationals go into reports as `"p/q"` strings (or plain integers when the
/// denominator is 1) so no precision is lost.
pub fn rational_value(r: &ExactRational) -> Value {
    if r.is_integer() {
        if let Ok(v) = i64::try_from(r.numer()) {
            return Value::from(v);
        }
    }
    Value::String(r.to_string())
}

/// Big integers go in as JSON numbers when they fit in `i64`, otherwise as
/// decimal strings.
pub fn big_int_value(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) => Value::from(x),
        Err(_) => Value::String(v.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub range: Map<String, Value>,
    pub cases: u64,
    pub counterexamples: Vec<Counterexample>,
    pub status: Status,
}

impl VerificationReport {
    /// Assembles a report; status follows from the counterexample list.
    pub fn new(
        identity: impl Into<String>,
        range: Map<String, Value>,
        cases: u64,
        counterexamples: Vec<Counterexample>,
    ) -> Result<Self> {
        if cases == 0 {
            return Err(Error::domain("VerificationReport::new", "no cases checked"));
        }
        let status = if counterexamples.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        Ok(VerificationReport {
            identity: identity.into(),
            range,
            cases,
            counterexamples,
            status,
        })
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Human-readable form of the range, e.g. `"a_max=100, n_max=100"`.
    pub fn range_description(&self) -> String {
        self.range
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(", ")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Builds a JSON object from key/value pairs.
pub fn range_map<I, K, V>(entries: I) -> Map<String, Value>
where
    I: IntoIterator<Item = (K, V)>,
    K: Into<String>,
    V: Into<Value>,
{
    entries
        .into_iter()
        .map(|(k, v)| (k.into(), v.into()))
        .collect()
}

/// Result of checking every case for one outer parameter value.
#[derive(Debug, Default, Clone)]
pub struct Batch {
    pub cases: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl Batch {
    pub fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> Counterexample) {
        self.cases += 1;
        if !ok {
            self.counterexamples.push(counterexample());
        }
    }
}

/// Worker-count setting for sweeps. `None` uses available parallelism.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Jobs(pub Option<usize>);

impl Jobs {
    pub fn count(self) -> usize {
        self.0.unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
    }

    /// Runs `f` on a dedicated pool of this size.
    pub fn install<R: Send>(self, f: impl FnOnce() -> R + Send) -> R {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.count().max(1))
            .build()
            .expect("thread pool");
        pool.install(f)
    }
}

/// Evaluates `per_item` on each element of `items` in parallel and merges the
/// batches in input order.
pub fn sweep<T, F>(items: Vec<T>, jobs: Jobs, per_item: F) -> Batch
where
    T: Send + Sync,
    F: Fn(&T) -> Batch + Send + Sync,
{
    let batches: Vec<Batch> = jobs.install(|| items.par_iter().map(&per_item).collect());
    let mut merged = Batch::default();
    for b in batches {
        merged.cases += b.cases;
        merged.counterexamples.extend(b.counterexamples);
    }
    merged
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_tracks_counterexamples() {
        let r = VerificationReport::new("x", Map::new(), 3, vec![]).unwrap();
        assert!(r.passed());
        let ce = Counterexample::new([("n", Value::from(4))], 4, 8);
        let r = VerificationReport::new("x", Map::new(), 3, vec![ce]).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert!(VerificationReport::new("x", Map::new(), 0, vec![]).is_err());
    }

    #[test]
    fn json_shape() {
        let ce = Counterexample::new([("a", Value::from(2)), ("n", Value::from(4))], -2, 0);
        let r = VerificationReport::new(
            "theorem1",
            range_map([("n_max", 4u64), ("a_max", 4)]),
            20,
            vec![ce],
        )
        .unwrap();
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["identity"], "theorem1");
        assert_eq!(v["cases"], 20);
        assert_eq!(v["status"], "fail");
        assert_eq!(v["range"]["n_max"], 4);
        assert_eq!(v["counterexamples"][0]["inputs"]["a"], 2);
        assert_eq!(v["counterexamples"][0]["expected"], -2);
        assert_eq!(r.range_description(), "a_max=4, n_max=4");
    }

    #[test]
    fn rationals_serialize_exactly() {
        let half = ExactRational::new(BigInt::from(-3), BigInt::from(2));
        assert_eq!(rational_value(&half), Value::String("-3/2".into()));
        let six = ExactRational::from_integer(BigInt::from(6));
        assert_eq!(rational_value(&six), Value::from(6));
    }

    #[test]
    fn sweep_order_independent_of_jobs() {
        let run = |jobs| {
            sweep((1..200u64).collect(), Jobs(Some(jobs)), |&n| {
                let mut b = Batch::default();
                b.check(n % 7 != 0, || {
                    Counterexample::new([("n", Value::from(n))], 0, n)
                });
                b
            })
        };
        let one = run(1);
        let many = run(8);
        assert_eq!(one.cases, 199);
        assert_eq!(one.counterexamples, many.counterexamples);
        assert_eq!(one.counterexamples.len(), 28);
    }
}
