//! Graph file formats: DIMACS, JSON and edge-list. Output bytes are
//! deterministic for fixed inputs; parsing rebuilds the canonical graph and
//! checks the file against it.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use usg_core::{GraphParams, UniformSubsetGraph};

use crate::args::GraphFormat;
use crate::CliError;

/// DIMACS: 1-based vertex numbers equal to lexicographic rank, with a
/// comment block recording the parameters and the rank-to-subset map.
pub fn write_dimacs(g: &UniformSubsetGraph) -> String {
    let p = g.params();
    let mut out = String::new();
    let _ = writeln!(out, "c uniform subset graph G(n,k,t)");
    let _ = writeln!(out, "c n {} k {} t {}", p.n, p.k, p.t);
    for r in 0..g.vertex_count() as u32 {
        let entries: Vec<String> = g
            .vertex(r)
            .entries()
            .iter()
            .map(|e| e.to_string())
            .collect();
        let _ = writeln!(out, "c rank {} = {{{}}}", r + 1, entries.join(","));
    }
    let _ = writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonGraph {
    n: u32,
    k: u32,
    t: u32,
    vertices: Vec<Vec<u32>>,
    edges: Vec<(u32, u32)>,
}

pub fn write_json(g: &UniformSubsetGraph) -> String {
    let p = g.params();
    let doc = JsonGraph {
        n: p.n,
        k: p.k,
        t: p.t,
        vertices: g.vertices().iter().map(|v| v.entries()).collect(),
        edges: g.edges(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph serializes");
    s.push('\n');
    s
}

pub fn write_edge_list(g: &UniformSubsetGraph) -> String {
    let p = g.params();
    let mut out = String::new();
    let _ = writeln!(out, "# usg-graph n={} k={} t={}", p.n, p.k, p.t);
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

pub fn write_graph(g: &UniformSubsetGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dimacs => write_dimacs(g),
        GraphFormat::Json => write_json(g),
        GraphFormat::EdgeList => write_edge_list(g),
    }
}

/// Parses any of the three formats (detected from content), rebuilds the
/// canonical graph and verifies the file's size and edge set against it.
pub fn parse_graph(text: &str) -> Result<UniformSubsetGraph, CliError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        parse_json(text)
    } else if trimmed.starts_with("# usg-graph") {
        parse_edge_list(text)
    } else if text.lines().any(|l| l.starts_with("p edge")) {
        parse_dimacs(text)
    } else {
        Err(CliError::usage(
            "unrecognized graph format (expected DIMACS, JSON, or edge-list)",
        ))
    }
}

fn rebuild(n: u32, k: u32, t: u32) -> Result<UniformSubsetGraph, CliError> {
    Ok(UniformSubsetGraph::build(GraphParams::new(n, k, t)?)?)
}

fn check_edges(
    g: &UniformSubsetGraph,
    declared: &mut Vec<(u32, u32)>,
) -> Result<(), CliError> {
    let nv = g.vertex_count() as u32;
    for &(u, v) in declared.iter() {
        if u >= nv || v >= nv {
            return Err(CliError::usage(format!(
                "edge ({},{}) out of range for {} vertices",
                u + 1,
                v + 1,
                nv
            )));
        }
    }
    declared.sort_unstable();
    declared.dedup();
    if *declared != g.edges() {
        return Err(CliError::invalid(
            "edge set does not match the canonical construction for these parameters",
        ));
    }
    Ok(())
}

fn parse_dimacs(text: &str) -> Result<UniformSubsetGraph, CliError> {
    let mut params: Option<(u32, u32, u32)> = None;
    let mut counts: Option<(usize, usize)> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for line in text.lines() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["c", "n", n, "k", k, "t", t] => {
                params = Some((
                    n.parse().map_err(bad("n"))?,
                    k.parse().map_err(bad("k"))?,
                    t.parse().map_err(bad("t"))?,
                ));
            }
            ["p", "edge", nv, ne] => {
                counts = Some((nv.parse().map_err(bad("V"))?, ne.parse().map_err(bad("E"))?));
            }
            ["e", u, v] => {
                let u: u32 = u.parse().map_err(bad("edge endpoint"))?;
                let v: u32 = v.parse().map_err(bad("edge endpoint"))?;
                if u == 0 || v == 0 {
                    return Err(CliError::usage("DIMACS vertex ids are 1-based"));
                }
                edges.push((u.min(v) - 1, u.max(v) - 1));
            }
            _ => {}
        }
    }
    let (n, k, t) =
        params.ok_or_else(|| CliError::usage("missing 'c n .. k .. t ..' comment line"))?;
    let (nv, ne) = counts.ok_or_else(|| CliError::usage("missing 'p edge' line"))?;
    let g = rebuild(n, k, t)?;
    if nv != g.vertex_count() || ne != g.edge_count() {
        return Err(CliError::invalid(
            "problem line does not match the canonical construction",
        ));
    }
    check_edges(&g, &mut edges)?;
    Ok(g)
}

fn parse_json(text: &str) -> Result<UniformSubsetGraph, CliError> {
    let doc: JsonGraph =
        serde_json::from_str(text).map_err(|e| CliError::usage(format!("json parse: {e}")))?;
    let g = rebuild(doc.n, doc.k, doc.t)?;
    let declared: Vec<Vec<u32>> = doc.vertices;
    let canonical: Vec<Vec<u32>> = g.vertices().iter().map(|v| v.entries()).collect();
    if declared != canonical {
        return Err(CliError::invalid(
            "vertex list does not match the canonical lexicographic order",
        ));
    }
    let mut edges = doc.edges;
    check_edges(&g, &mut edges)?;
    Ok(g)
}

fn parse_edge_list(text: &str) -> Result<UniformSubsetGraph, CliError> {
    let mut params: Option<(u32, u32, u32)> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("# usg-graph") {
            let mut n = None;
            let mut k = None;
            let mut t = None;
            for kv in rest.split_whitespace() {
                if let Some((key, val)) = kv.split_once('=') {
                    let val: u32 = val.parse().map_err(bad(key))?;
                    match key {
                        "n" => n = Some(val),
                        "k" => k = Some(val),
                        "t" => t = Some(val),
                        _ => {}
                    }
                }
            }
            params = Some((
                n.ok_or_else(|| CliError::usage("edge-list header missing n"))?,
                k.ok_or_else(|| CliError::usage("edge-list header missing k"))?,
                t.ok_or_else(|| CliError::usage("edge-list header missing t"))?,
            ));
        } else if !line.trim().is_empty() && !line.starts_with('#') {
            let mut it = line.split_whitespace();
            let u: u32 = it
                .next()
                .ok_or_else(|| CliError::usage("bad edge line"))?
                .parse()
                .map_err(bad("edge endpoint"))?;
            let v: u32 = it
                .next()
                .ok_or_else(|| CliError::usage("bad edge line"))?
                .parse()
                .map_err(bad("edge endpoint"))?;
            if u == 0 || v == 0 {
                return Err(CliError::usage("edge-list vertex ids are 1-based"));
            }
            edges.push((u.min(v) - 1, u.max(v) - 1));
        }
    }
    let (n, k, t) = params.ok_or_else(|| CliError::usage("missing edge-list header"))?;
    let g = rebuild(n, k, t)?;
    check_edges(&g, &mut edges)?;
    Ok(g)
}

fn bad(what: &str) -> impl Fn(std::num::ParseIntError) -> CliError + '_ {
    move |e| CliError::usage(format!("bad {what}: {e}"))
}
