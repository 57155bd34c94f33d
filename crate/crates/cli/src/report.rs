//! JSON and text rendering of results.
//!
//! Every JSON document carries `"schema": "laperm.report/1"` and a
//! `"command"` field. Numbers are written as decimal strings.

use std::fmt::Write as _;

use laperm_core::enumeration::{family_label, RankedGraph};
use laperm_core::verify::{Minimizer, VerificationReport};
use laperm_core::{CharPoly, Graph};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "laperm.report/1";

pub fn num(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

pub fn opt_num(x: Option<impl ToString>) -> Value {
    x.map_or(Value::Null, num)
}

pub fn graph_json(g: &Graph) -> Value {
    let edges: Vec<Value> = g.edges().into_iter().map(|(u, v)| json!([num(u), num(v)])).collect();
    json!({ "n": num(g.order()), "edges": edges })
}

pub fn coeffs_json(p: &CharPoly) -> Value {
    Value::Array(p.coefficients().iter().map(num).collect())
}

/// Wraps a payload into a versioned document.
pub fn document(command: &str, payload: Value) -> Value {
    let mut map = Map::new();
    map.insert("schema".into(), Value::String(SCHEMA.into()));
    map.insert("command".into(), Value::String(command.into()));
    if let Value::Object(fields) = payload {
        map.extend(fields);
    }
    Value::Object(map)
}

pub fn error_document(command: &str, kind: &str, message: &str) -> Value {
    document(command, json!({ "error": { "kind": kind, "message": message } }))
}

/// `closed form X, engine Y [equal]`, or just the engine value.
pub fn paired(closed: Option<&BigInt>, engine: &BigInt) -> String {
    match closed {
        Some(c) => format!("closed form {c}, engine {engine} [{}]", marker(c == engine)),
        None => format!("engine {engine}"),
    }
}

pub fn marker(equal: bool) -> &'static str {
    if equal {
        "equal"
    } else {
        "MISMATCH"
    }
}

pub fn ranked_json(entries: &[RankedGraph]) -> Value {
    Value::Array(
        entries
            .iter()
            .enumerate()
            .map(|(i, e)| {
                json!({
                    "rank": num(i + 1),
                    "family": e.family.as_ref().map(|f| f.to_string()),
                    "value": num(&e.value),
                    "graph": graph_json(&e.graph),
                })
            })
            .collect(),
    )
}

pub fn ranked_text(entries: &[RankedGraph]) -> String {
    let mut out = String::new();
    for (i, e) in entries.iter().enumerate() {
        let _ = writeln!(out, "{:>4}  {:<40} {}", i + 1, family_label(e.family.as_ref()), e.value);
    }
    out
}

fn minimizer_json(m: &Minimizer) -> Value {
    json!({
        "scope": m.scope,
        "rank": num(m.rank),
        "family": m.family.as_ref().map(|f| f.to_string()),
        "value": num(&m.value),
        "expected": opt_num(m.expected.as_ref()),
        "graph": graph_json(&m.graph),
    })
}

pub fn verification_json(r: &VerificationReport) -> Value {
    let p = &r.params;
    json!({
        "theorem": r.theorem.as_str(),
        "params": {
            "n": num(p.n),
            "p": opt_num(p.p),
            "q": opt_num(p.p.map(|x| p.n - x)),
            "d": opt_num(p.d),
        },
        "status": r.status.as_str(),
        "class_size": num(r.class_size),
        "minimizers": r.minimizers.iter().map(minimizer_json).collect::<Vec<_>>(),
        "mismatches": r.mismatches.iter().map(|m| json!({
            "scope": m.scope,
            "message": m.message,
            "graph": m.graph.as_ref().map(graph_json),
        })).collect::<Vec<_>>(),
        "counterexample": r.counterexample.as_ref().map(graph_json),
        "observations": r.observations,
    })
}

pub fn verification_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    let p = &r.params;
    let _ = write!(out, "{} n={}", r.theorem, p.n);
    if let Some(x) = p.p {
        let _ = write!(out, " p={x} q={}", p.n - x);
    }
    if let Some(d) = p.d {
        let _ = write!(out, " d={d}");
    }
    let _ = writeln!(out, ": {}", r.status);
    let _ = writeln!(out, "class size: {}", r.class_size);
    if !r.minimizers.is_empty() {
        let _ = writeln!(out, "minimizers:");
        for m in &r.minimizers {
            let _ = writeln!(
                out,
                "  {} rank {}: {}: {}",
                m.scope,
                m.rank,
                family_label(m.family.as_ref()),
                paired(m.expected.as_ref(), &m.value)
            );
        }
    }
    if !r.observations.is_empty() {
        let _ = writeln!(out, "observations:");
        for o in &r.observations {
            let _ = writeln!(out, "  {o}");
        }
    }
    if !r.mismatches.is_empty() {
        let _ = writeln!(out, "mismatches:");
        for m in &r.mismatches {
            let _ = writeln!(out, "  {}: {}", m.scope, m.message);
        }
    }
    if let Some(g) = &r.counterexample {
        let _ = writeln!(out, "counterexample:");
        out.push_str(&crate::io::write_edge_list(g));
    }
    out
}
