//! JSON report documents. Rationals are always strings.

use derivscope::linalg::Matrix;
use derivscope::verifier::CheckReport;
use derivscope::Rational;
use serde_json::{json, Map, Value};

pub fn rational(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn rationals(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(rational).collect())
}

/// Row-major array of rows.
pub fn matrix(m: &Matrix) -> Value {
    Value::Array(m.row_vectors().map(rationals).collect())
}

pub fn check(r: &CheckReport) -> Value {
    let witness = match &r.witness {
        None => Value::Null,
        Some(w) => json!({
            "description": w.description,
            "indices": w.indices,
            "values": rationals(&w.values),
        }),
    };
    json!({
        "check_name": r.check_name,
        "subject": r.subject,
        "parameters": rationals(&r.parameters),
        "status": r.status.as_str(),
        "witness": witness,
        "notes": r.notes,
    })
}

/// `{"tool_version", "subject", "command", "params", "results", "pass"}`, in
/// that order.
pub fn document(subject: &str, command: &str, params: Map<String, Value>, results: Vec<Value>, pass: bool) -> Value {
    let mut doc = Map::new();
    doc.insert("tool_version".into(), env!("CARGO_PKG_VERSION").into());
    doc.insert("subject".into(), subject.into());
    doc.insert("command".into(), command.into());
    doc.insert("params".into(), Value::Object(params));
    doc.insert("results".into(), Value::Array(results));
    doc.insert("pass".into(), pass.into());
    Value::Object(doc)
}
