//! Labelled path families and the certificate checker that validates them.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::graph::UniformSubsetGraph;

/// A single path as a rank sequence, tagged with its construction label
/// (`P_3`, `T_20`, `Q_5`, `II.i(j=6)`, ...).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledPath {
    pub label: String,
    pub ranks: Vec<u32>,
}

/// A note for a path or configuration that a template cannot realise at the
/// given parameters (missing fresh entries), flagged instead of fabricated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmittedPath {
    pub label: String,
    pub reason: String,
}

/// An ordered family of paths with its disjointness and entry-containment
/// side conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathFamily {
    pub paths: Vec<LabeledPath>,
    /// Every internal vertex must contain this entry.
    pub required_entry: Option<u32>,
    /// No internal vertex may touch these ranks.
    pub forbidden_vertices: Vec<u32>,
    /// Paths the template could not realise at these parameters.
    pub omitted: Vec<OmittedPath>,
}

/// Per-check outcome of the path family verifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathVerification {
    pub adjacency_ok: bool,
    pub internally_disjoint: bool,
    pub required_entry_ok: bool,
    pub forbidden_avoided: bool,
    pub endpoints_ok: bool,
    pub pass: bool,
    pub failures: Vec<String>,
}

/// Checks a path family against the graph: (a) consecutive adjacency,
/// (b) internal disjointness across the whole family (endpoints excluded,
/// and no endpoint may reappear internally), (c) required-entry containment,
/// (d) forbidden-vertex avoidance, (e) endpoint membership in the given
/// source and target sets. Failures are reported, never raised.
pub fn verify_path_family(
    g: &UniformSubsetGraph,
    fam: &PathFamily,
    sources: &[u32],
    targets: &[u32],
) -> PathVerification {
    let mut v = PathVerification {
        adjacency_ok: true,
        internally_disjoint: true,
        required_entry_ok: true,
        forbidden_avoided: true,
        endpoints_ok: true,
        pass: true,
        failures: Vec::new(),
    };
    let nv = g.vertex_count() as u32;
    let mut internal_owner: HashMap<u32, &str> = HashMap::new();
    let mut endpoint_set: Vec<u32> = sources.iter().chain(targets).copied().collect();
    endpoint_set.sort_unstable();
    endpoint_set.dedup();

    for p in &fam.paths {
        if p.ranks.len() < 2 {
            v.adjacency_ok = false;
            v.failures.push(format!("{}: fewer than two vertices", p.label));
            continue;
        }
        if let Some(&bad) = p.ranks.iter().find(|&&r| r >= nv) {
            v.adjacency_ok = false;
            v.failures
                .push(format!("{}: rank {bad} out of range", p.label));
            continue;
        }
        for w in p.ranks.windows(2) {
            if !g.adjacent(w[0], w[1]) {
                v.adjacency_ok = false;
                v.failures.push(format!(
                    "{}: {} and {} are not adjacent",
                    p.label,
                    g.vertex(w[0]),
                    g.vertex(w[1])
                ));
            }
        }
        if !sources.contains(&p.ranks[0]) {
            v.endpoints_ok = false;
            v.failures.push(format!(
                "{}: starts at {} which is not a source",
                p.label,
                g.vertex(p.ranks[0])
            ));
        }
        if !targets.contains(p.ranks.last().unwrap()) {
            v.endpoints_ok = false;
            v.failures.push(format!(
                "{}: ends at {} which is not a target",
                p.label,
                g.vertex(*p.ranks.last().unwrap())
            ));
        }
        for &r in &p.ranks[1..p.ranks.len() - 1] {
            if endpoint_set.binary_search(&r).is_ok() {
                v.internally_disjoint = false;
                v.failures.push(format!(
                    "{}: endpoint {} reappears internally",
                    p.label,
                    g.vertex(r)
                ));
            }
            if let Some(other) = internal_owner.insert(r, p.label.as_str()) {
                v.internally_disjoint = false;
                v.failures.push(format!(
                    "{}: internal vertex {} already used by {}",
                    p.label,
                    g.vertex(r),
                    other
                ));
            }
            if let Some(e) = fam.required_entry {
                if !g.vertex(r).contains(e) {
                    v.required_entry_ok = false;
                    v.failures.push(format!(
                        "{}: internal vertex {} lacks entry {e}",
                        p.label,
                        g.vertex(r)
                    ));
                }
            }
            if fam.forbidden_vertices.binary_search(&r).is_ok() {
                v.forbidden_avoided = false;
                v.failures.push(format!(
                    "{}: internal vertex {} is forbidden",
                    p.label,
                    g.vertex(r)
                ));
            }
        }
    }
    v.pass = v.adjacency_ok
        && v.internally_disjoint
        && v.required_entry_ok
        && v.forbidden_avoided
        && v.endpoints_ok;
    v
}
