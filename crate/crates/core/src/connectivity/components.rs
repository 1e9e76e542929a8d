//! Connected components of an induced subgraph and cut certificates.

use serde::{Deserialize, Serialize};

use super::VertexCut;
use crate::bitset::BitSet;
use crate::error::Error;
use crate::graph::UniformSubsetGraph;
use crate::Result;

/// A verified description of what removing a cut does to the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutCertificate {
    pub cut: VertexCut,
    /// Components of `G - cut`: each sorted ascending, ordered by smallest
    /// member.
    pub components: Vec<Vec<u32>>,
    pub min_component_order: u64,
    pub is_disconnecting: bool,
    /// Disconnecting with every component of order at least two.
    pub is_super: bool,
}

/// Connected components of the subgraph induced on `V - removed`, each listed
/// in increasing rank order, components ordered by smallest member.
pub fn components(g: &UniformSubsetGraph, removed: &VertexCut) -> Result<Vec<Vec<u32>>> {
    let n = g.vertex_count();
    if removed.len() == n {
        return Err(Error::EmptyRemainder);
    }
    let mut gone = BitSet::new(n);
    for &r in removed.ranks() {
        gone.insert(r as usize);
    }
    let mut out = Vec::new();
    let mut seen = gone.clone();
    let mut stack = Vec::new();
    for seed in 0..n {
        if seen.contains(seed) {
            continue;
        }
        let mut comp = vec![seed as u32];
        seen.insert(seed);
        stack.push(seed as u32);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen.contains(w as usize) {
                    seen.insert(w as usize);
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    Ok(out)
}

/// Certifies a candidate cut: component structure, disconnection, and the
/// super property (no isolated vertex remains).
pub fn is_super_vertex_cut(g: &UniformSubsetGraph, cut: &VertexCut) -> Result<CutCertificate> {
    let comps = components(g, cut)?;
    let min_order = comps.iter().map(|c| c.len() as u64).min().unwrap_or(0);
    let is_disconnecting = comps.len() >= 2;
    Ok(CutCertificate {
        cut: cut.clone(),
        min_component_order: min_order,
        is_disconnecting,
        is_super: is_disconnecting && min_order >= 2,
        components: comps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::SubsetVertex;

    fn rank(g: &UniformSubsetGraph, entries: &[u32]) -> u32 {
        g.rank_of(&SubsetVertex::from_entries(entries, g.params().n).unwrap())
            .unwrap()
    }

    #[test]
    fn empty_cut_on_connected_graph() {
        let g = UniformSubsetGraph::johnson(5, 2).unwrap();
        let comps = components(&g, &VertexCut::new(&g, []).unwrap()).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 10);
        let cert = is_super_vertex_cut(&g, &VertexCut::new(&g, []).unwrap()).unwrap();
        assert!(!cert.is_disconnecting && !cert.is_super);
    }

    #[test]
    fn octahedron_antipodal_split() {
        // J(4,2) minus N({1,2}) leaves the two singletons {1,2} and {3,4}.
        let g = UniformSubsetGraph::johnson(4, 2).unwrap();
        let v12 = rank(&g, &[1, 2]);
        let cut = VertexCut::new(&g, g.neighbors(v12).to_vec()).unwrap();
        let comps = components(&g, &cut).unwrap();
        assert_eq!(comps, vec![vec![v12], vec![rank(&g, &[3, 4])]]);
        let cert = is_super_vertex_cut(&g, &cut).unwrap();
        assert!(cert.is_disconnecting);
        assert!(!cert.is_super);
        assert_eq!(cert.min_component_order, 1);
    }

    #[test]
    fn neighborhood_cut_isolates_center() {
        let g = UniformSubsetGraph::johnson(6, 3).unwrap();
        let cut = VertexCut::new(&g, g.neighbors(0).to_vec()).unwrap();
        let cert = is_super_vertex_cut(&g, &cut).unwrap();
        assert!(cert.is_disconnecting);
        assert!(!cert.is_super);
        assert!(cert.components.contains(&vec![0]));
    }

    #[test]
    fn removing_everything_errors() {
        let g = UniformSubsetGraph::johnson(3, 2).unwrap();
        assert!(matches!(
            VertexCut::new(&g, 0..3),
            Err(Error::EmptyRemainder)
        ));
        assert!(matches!(
            VertexCut::new(&g, [7]),
            Err(Error::RankRange { rank: 7, len: 3 })
        ));
    }

    #[test]
    fn certificate_soundness_roundtrip() {
        let g = UniformSubsetGraph::johnson(5, 2).unwrap();
        let cut = VertexCut::new(&g, [0, 3, 4, 7]).unwrap();
        let cert = is_super_vertex_cut(&g, &cut).unwrap();
        assert_eq!(components(&g, &cert.cut).unwrap(), cert.components);
    }
}
