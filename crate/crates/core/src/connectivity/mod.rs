//! Exact vertex connectivity and super-connectivity with verifiable
//! certificates, plus an independent brute-force oracle for cross-validation.

mod components;
mod flow;
mod global;
mod local;
mod oracle;
mod pair;
mod search;

pub use components::{components, is_super_vertex_cut, CutCertificate};
pub use global::{global_vertex_connectivity, GlobalConnectivity};
pub use local::{internally_disjoint_paths, local_vertex_connectivity};
pub use oracle::{
    all_minimum_super_cuts, min_cut_structure_check, super_cut_oracle, OracleReport,
    StructureCheckReport,
};
pub use pair::{min_edge_pair_separator, EdgePairSeparator};
pub use search::{super_connectivity_exact, SearchLimits, SuperCutSearch};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::UniformSubsetGraph;
use crate::Result;

/// A candidate separator: a set of vertex ranks, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexCut(Vec<u32>);

impl VertexCut {
    /// Builds a cut from ranks of `g`, sorting and deduplicating. The cut may
    /// not contain every vertex of the graph.
    pub fn new(g: &UniformSubsetGraph, ranks: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut v: Vec<u32> = ranks.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        let len = g.vertex_count() as u32;
        if let Some(&bad) = v.iter().find(|&&r| r >= len) {
            return Err(Error::RankRange { rank: bad, len });
        }
        if v.len() == g.vertex_count() {
            return Err(Error::EmptyRemainder);
        }
        Ok(VertexCut(v))
    }

    #[inline]
    pub fn ranks(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, rank: u32) -> bool {
        self.0.binary_search(&rank).is_ok()
    }
}
