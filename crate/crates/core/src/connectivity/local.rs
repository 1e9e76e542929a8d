//! Local vertex connectivity between two non-adjacent terminals, with
//! Menger-style extraction of internally disjoint paths from the flow.

use super::flow::PairNet;
use crate::error::Error;
use crate::graph::UniformSubsetGraph;
use crate::Result;

fn check_terminals(g: &UniformSubsetGraph, s: u32, t: u32) -> Result<()> {
    let len = g.vertex_count() as u32;
    for r in [s, t] {
        if r >= len {
            return Err(Error::RankRange { rank: r, len });
        }
    }
    if s == t {
        return Err(Error::InvalidParams("terminals must differ".into()));
    }
    if g.adjacent(s, t) {
        return Err(Error::AdjacentTerminals { s, t });
    }
    Ok(())
}

/// The minimum number of vertices (excluding the terminals) whose removal
/// separates `s` from `t`; equals the maximum number of internally disjoint
/// `s`-`t` paths.
pub fn local_vertex_connectivity(g: &UniformSubsetGraph, s: u32, t: u32) -> Result<u32> {
    check_terminals(g, s, t)?;
    let mut net = PairNet::build(g, s, t, &[], &[]);
    Ok(net.solve())
}

/// A maximum family of internally disjoint `s`-`t` paths, decomposed from the
/// maximum flow. Each path is a rank sequence from `s` to `t`.
pub fn internally_disjoint_paths(g: &UniformSubsetGraph, s: u32, t: u32) -> Result<Vec<Vec<u32>>> {
    check_terminals(g, s, t)?;
    let mut net = PairNet::build(g, s, t, &[], &[]);
    net.solve();
    Ok(net.disjoint_paths())
}
