//! JSON rendering of connectivity reports. Subsets serialize as sorted
//! integer arrays; infinity serializes as the string "infinity"; field order
//! is fixed so identical invocations produce identical bytes.

use serde::Serialize;
use serde_json::{json, Value};
use usg_core::report::{ConnectivityReport, ExhaustionToken, KappaPrime};
use usg_core::UniformSubsetGraph;

use crate::cert::subset_of;

#[derive(Debug, Serialize)]
struct ReportDocument {
    graph: Value,
    kappa: u64,
    kappa_witness: Value,
    kappa_prime: Value,
    witness: Value,
    #[serde(skip_serializing_if = "Value::is_null")]
    exhaustion: Value,
    method: Value,
    agreement: Option<bool>,
    notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

pub fn report_to_json(g: &UniformSubsetGraph, rep: &ConnectivityReport) -> String {
    let subsets = |ranks: &[u32]| -> Value {
        Value::Array(ranks.iter().map(|&r| json!(subset_of(g, r))).collect())
    };
    let (kappa_prime, exhaustion) = match &rep.kappa_prime {
        KappaPrime::Finite(v) => (json!(v), Value::Null),
        KappaPrime::Infinity(token) => {
            let t = match token {
                ExhaustionToken::OracleExhaustion { max_size_checked } => json!({
                    "kind": "oracle-exhaustion",
                    "max_size_checked": max_size_checked,
                }),
                ExhaustionToken::CompleteGraph => json!({"kind": "complete-graph"}),
            };
            (json!("infinity"), t)
        }
    };
    let witness = match &rep.kappa_prime_witness {
        None => Value::Null,
        Some(cert) => json!({
            "cut": subsets(cert.cut.ranks()),
            "components": Value::Array(
                cert.components.iter().map(|c| subsets(c)).collect()
            ),
            "min_component_order": cert.min_component_order,
            "is_super": cert.is_super,
        }),
    };
    let doc = ReportDocument {
        graph: json!({"n": rep.graph.n, "k": rep.graph.k, "t": rep.graph.t}),
        kappa: rep.kappa,
        kappa_witness: rep
            .kappa_witness
            .as_ref()
            .map(|w| subsets(w.ranks()))
            .unwrap_or(Value::Null),
        kappa_prime,
        witness,
        exhaustion,
        method: serde_json::to_value(rep.method).expect("method serializes"),
        agreement: rep.agreement,
        notes: rep.notes.clone(),
        elapsed_ms: rep.elapsed.map(|d| d.as_millis() as u64),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}
