//! Minimum vertex separator between two contracted vertex-disjoint edges.

use super::flow::EdgePairNet;
use super::VertexCut;
use crate::error::Error;
use crate::graph::UniformSubsetGraph;
use crate::Result;

/// Outcome of separating two edges.
#[derive(Debug, Clone)]
pub enum EdgePairSeparator {
    /// A minimum-cardinality vertex set, disjoint from the four endpoints,
    /// whose removal puts the two edges in different components.
    Separator { size: u32, cut: VertexCut },
    /// Some endpoint of one edge is adjacent to an endpoint of the other, so
    /// no separator exists.
    Inseparable,
}

/// Contracts each edge to a terminal and runs vertex-split max-flow. The size
/// is a lower bound for any super vertex-cut splitting the two edges apart.
pub fn min_edge_pair_separator(
    g: &UniformSubsetGraph,
    e: (u32, u32),
    f: (u32, u32),
) -> Result<EdgePairSeparator> {
    let len = g.vertex_count() as u32;
    for r in [e.0, e.1, f.0, f.1] {
        if r >= len {
            return Err(Error::RankRange { rank: r, len });
        }
    }
    for (a, b) in [e, f] {
        if !g.adjacent(a, b) {
            return Err(Error::InvalidPair(format!("({a},{b}) is not an edge")));
        }
    }
    let ends = [e.0, e.1];
    if ends.contains(&f.0) || ends.contains(&f.1) {
        return Err(Error::InvalidPair("edges share a vertex".into()));
    }
    let Some(mut net) = EdgePairNet::build(g, e, f) else {
        return Ok(EdgePairSeparator::Inseparable);
    };
    let size = net.solve();
    let cut = VertexCut::new(g, net.min_cut())?;
    debug_assert_eq!(cut.len() as u32, size);
    Ok(EdgePairSeparator::Separator { size, cut })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::components;
    use crate::subset::SubsetVertex;

    fn rank(g: &UniformSubsetGraph, entries: &[u32]) -> u32 {
        g.rank_of(&SubsetVertex::from_entries(entries, g.params().n).unwrap())
            .unwrap()
    }

    #[test]
    fn octahedron_edge_pairs_are_inseparable() {
        // In J(4,2) every pair of disjoint edges has adjacent endpoints.
        let g = UniformSubsetGraph::johnson(4, 2).unwrap();
        let edges = g.edges();
        let mut any = false;
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                if [e.0, e.1].contains(&f.0) || [e.0, e.1].contains(&f.1) {
                    continue;
                }
                any = true;
                assert!(matches!(
                    min_edge_pair_separator(&g, e, f).unwrap(),
                    EdgePairSeparator::Inseparable
                ));
            }
        }
        assert!(any);
    }

    #[test]
    fn complete_graph_pairs_inseparable() {
        let g = UniformSubsetGraph::johnson(5, 1).unwrap();
        let e = (0u32, 1u32);
        let f = (2u32, 3u32);
        assert!(matches!(
            min_edge_pair_separator(&g, e, f).unwrap(),
            EdgePairSeparator::Inseparable
        ));
    }

    #[test]
    fn j62_seed_edges_and_the_grid_separator() {
        // Component seeds {1,2}~{1,3} and {4,5}~{4,6}; the 3x3 grid of pairs
        // {a,b} with a in {1,2,3}, b in {4,5,6} is a valid separator, so the
        // minimum is at most 9.
        let g = UniformSubsetGraph::johnson(6, 2).unwrap();
        let e = (rank(&g, &[1, 2]), rank(&g, &[1, 3]));
        let f = (rank(&g, &[4, 5]), rank(&g, &[4, 6]));
        let sep = min_edge_pair_separator(&g, e, f).unwrap();
        let EdgePairSeparator::Separator { size, cut } = sep else {
            panic!("expected a separator");
        };
        assert!(size <= 9, "flow bound must not exceed the grid separator");
        // The realised cut really separates the contracted edges.
        let comps = components(&g, &cut).unwrap();
        let find = |r: u32| comps.iter().position(|c| c.contains(&r)).unwrap();
        assert_eq!(find(e.0), find(e.1));
        assert_eq!(find(f.0), find(f.1));
        assert_ne!(find(e.0), find(f.0));
        // The grid itself separates as well.
        let mut grid = Vec::new();
        for a in 1..=3u32 {
            for b in 4..=6u32 {
                grid.push(rank(&g, &[a, b]));
            }
        }
        let grid_cut = VertexCut::new(&g, grid).unwrap();
        let comps = components(&g, &grid_cut).unwrap();
        let find = |r: u32| comps.iter().position(|c| c.contains(&r)).unwrap();
        assert_ne!(find(e.0), find(f.0));
    }

    #[test]
    fn overlapping_edges_rejected() {
        let g = UniformSubsetGraph::johnson(6, 2).unwrap();
        let e = (rank(&g, &[1, 2]), rank(&g, &[1, 3]));
        let f = (rank(&g, &[1, 2]), rank(&g, &[2, 3]));
        assert!(matches!(
            min_edge_pair_separator(&g, e, f),
            Err(Error::InvalidPair(_))
        ));
        let not_edge = (rank(&g, &[1, 2]), rank(&g, &[3, 4]));
        assert!(matches!(
            min_edge_pair_separator(&g, not_edge, f),
            Err(Error::InvalidPair(_))
        ));
    }
}
