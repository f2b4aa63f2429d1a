//! Versioned JSON reports and label helpers.

use cotor::suites::Outcome;
use cotor::{Backend, BackendCaps, CotorsionPair, Subcat, Tcp};
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA: &str = "cotor.report/1";

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub command: String,
    pub backend: String,
    pub caps: BackendCaps,
    pub cap: usize,
    pub seed: u64,
    pub outcome: Outcome,
    pub result: Value,
}

/// What a command produced, before the common envelope is added.
pub struct Output {
    pub outcome: Outcome,
    pub body: Body,
}

pub enum Body {
    Json(Value),
    Text(String),
}

impl Output {
    pub fn json(outcome: Outcome, v: Value) -> Self {
        Output {
            outcome,
            body: Body::Json(v),
        }
    }

    pub fn pass(v: Value) -> Self {
        Self::json(Outcome::Pass, v)
    }
}

pub fn set(b: &(impl Backend + ?Sized), s: Subcat) -> Vec<String> {
    s.labels(b)
}

pub fn pair(b: &(impl Backend + ?Sized), p: CotorsionPair) -> Value {
    json!({ "U": set(b, p.u), "V": set(b, p.v) })
}

pub fn tcp(b: &(impl Backend + ?Sized), p: &Tcp) -> Value {
    json!({ "S": set(b, p.s), "T": set(b, p.t), "U": set(b, p.u), "V": set(b, p.v) })
}

/// The worse of two outcomes.
pub fn worst(a: Outcome, b: Outcome) -> Outcome {
    use Outcome::*;
    match (a, b) {
        (Violation, _) | (_, Violation) => Violation,
        (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
        _ => Pass,
    }
}
