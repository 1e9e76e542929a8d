//! Construction of uniform subset graphs and graph-level operations:
//! adjacency, entry filters, the two named isomorphisms.

use crate::bitset::BitSet;
use crate::combin::{binomial, k_subsets_lex, lex_rank};
use crate::error::Error;
use crate::subset::{GraphParams, SubsetVertex};
use crate::Result;

/// Whether two k-subsets are adjacent under the intersection-size-t rule.
pub fn is_adjacent(u: &SubsetVertex, v: &SubsetVertex, params: &GraphParams) -> Result<bool> {
    if u.size() != params.k || v.size() != params.k {
        return Err(Error::InvalidVertex(format!(
            "expected {}-subsets, got {u} and {v}",
            params.k
        )));
    }
    Ok(u != v && u.intersection_size(v) == params.t)
}

/// All `C(n, k)` vertices in lexicographic order. The position in this list
/// is the vertex's canonical rank, stable across runs.
pub fn enumerate_vertices(params: &GraphParams) -> Vec<SubsetVertex> {
    k_subsets_lex(params.n, params.k)
        .iter()
        .map(|s| SubsetVertex::from_entries(s, params.n).expect("enumerated subset is valid"))
        .collect()
}

/// An immutable uniform subset graph with full adjacency.
///
/// Vertices are identified by their canonical rank. The structure is safe to
/// share read-only between any number of workers.
#[derive(Debug, Clone)]
pub struct UniformSubsetGraph {
    params: GraphParams,
    vertices: Vec<SubsetVertex>,
    adj: Vec<Vec<u32>>,
    adj_mask: Vec<BitSet>,
    edge_count: usize,
}

/// Full adjacency is materialised, so construction is guarded.
const MAX_VERTICES: u64 = 2_000_000;

impl UniformSubsetGraph {
    pub fn build(params: GraphParams) -> Result<Self> {
        let count = binomial(params.n as u64, params.k as u64);
        if count > MAX_VERTICES {
            return Err(Error::TooLarge(format!(
                "C({},{}) = {count} vertices exceed the construction limit of {MAX_VERTICES}",
                params.n, params.k
            )));
        }
        let vertices = enumerate_vertices(&params);
        let v = vertices.len();
        debug_assert_eq!(v as u64, binomial(params.n as u64, params.k as u64));
        let mut adj = vec![Vec::new(); v];
        let mut adj_mask = vec![BitSet::new(v); v];
        let mut edge_count = 0;
        for i in 0..v {
            for j in i + 1..v {
                if vertices[i].intersection_size(&vertices[j]) == params.t {
                    adj[i].push(j as u32);
                    adj[j].push(i as u32);
                    adj_mask[i].insert(j);
                    adj_mask[j].insert(i);
                    edge_count += 1;
                }
            }
        }
        Ok(UniformSubsetGraph {
            params,
            vertices,
            adj,
            adj_mask,
            edge_count,
        })
    }

    pub fn johnson(n: u32, k: u32) -> Result<Self> {
        Self::build(GraphParams::johnson(n, k)?)
    }

    #[inline]
    pub fn params(&self) -> &GraphParams {
        &self.params
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn vertex(&self, rank: u32) -> &SubsetVertex {
        &self.vertices[rank as usize]
    }

    #[inline]
    pub fn vertices(&self) -> &[SubsetVertex] {
        &self.vertices
    }

    #[inline]
    pub fn neighbors(&self, rank: u32) -> &[u32] {
        &self.adj[rank as usize]
    }

    #[inline]
    pub fn neighbor_mask(&self, rank: u32) -> &BitSet {
        &self.adj_mask[rank as usize]
    }

    #[inline]
    pub fn degree(&self, rank: u32) -> usize {
        self.adj[rank as usize].len()
    }

    #[inline]
    pub fn adjacent(&self, a: u32, b: u32) -> bool {
        self.adj_mask[a as usize].contains(b as usize)
    }

    /// Canonical rank of a vertex of this graph.
    pub fn rank_of(&self, v: &SubsetVertex) -> Result<u32> {
        if v.size() != self.params.k {
            return Err(Error::InvalidVertex(format!(
                "{v} is not a {}-subset",
                self.params.k
            )));
        }
        let entries = v.entries();
        if entries.last().is_some_and(|&e| e > self.params.n) {
            return Err(Error::InvalidVertex(format!(
                "{v} has entries above n={}",
                self.params.n
            )));
        }
        Ok(lex_rank(self.params.n, &entries) as u32)
    }

    /// All edges as rank pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.vertex_count() as u32 {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let v = self.vertex_count();
        if v == 0 {
            return false;
        }
        let mut seen = BitSet::new(v);
        let mut stack = vec![0u32];
        seen.insert(0);
        let mut cnt = 1;
        while let Some(u) = stack.pop() {
            for &w in self.neighbors(u) {
                if !seen.contains(w as usize) {
                    seen.insert(w as usize);
                    cnt += 1;
                    stack.push(w);
                }
            }
        }
        cnt == v
    }

    pub fn is_complete(&self) -> bool {
        let v = self.vertex_count();
        self.edge_count == v * (v - 1) / 2
    }

    /// The set `beta_r` of ranks of all vertices containing the entry `r`.
    pub fn vertices_containing_entry(&self, r: u32) -> Result<Vec<u32>> {
        if r == 0 || r > self.params.n {
            return Err(Error::InvalidEntry {
                entry: r,
                n: self.params.n,
            });
        }
        Ok((0..self.vertex_count() as u32)
            .filter(|&i| self.vertex(i).contains(r))
            .collect())
    }

    /// Deletes `beta_r` and relabels the survivors over a ground set of size
    /// `n - 1`, yielding a graph verified equal to `G(n-1, k, t)` together
    /// with the mapping from new ranks to old ranks.
    pub fn delete_entry_subgraph(&self, r: u32) -> Result<(UniformSubsetGraph, Vec<u32>)> {
        if r == 0 || r > self.params.n {
            return Err(Error::InvalidEntry {
                entry: r,
                n: self.params.n,
            });
        }
        if self.params.n < self.params.k + 1 {
            return Err(Error::DegenerateGraph { n: self.params.n });
        }
        let reduced = GraphParams::new(self.params.n - 1, self.params.k, self.params.t)?;
        let target = UniformSubsetGraph::build(reduced)?;
        // Survivors, relabelled: entries above r shift down by one.
        let mut old_of_new: Vec<(u32, u32)> = Vec::with_capacity(target.vertex_count());
        for old in 0..self.vertex_count() as u32 {
            let v = self.vertex(old);
            if v.contains(r) {
                continue;
            }
            let relabelled: Vec<u32> = v
                .entries()
                .iter()
                .map(|&e| if e > r { e - 1 } else { e })
                .collect();
            let new_rank =
                target.rank_of(&SubsetVertex::from_entries(&relabelled, reduced.n)?)?;
            old_of_new.push((new_rank, old));
        }
        old_of_new.sort_unstable();
        let mapping: Vec<u32> = old_of_new.iter().map(|&(_, old)| old).collect();
        // Verify the relabelling is an isomorphism onto the fresh build.
        for new_a in 0..mapping.len() as u32 {
            for &new_b in target.neighbors(new_a) {
                if !self.adjacent(mapping[new_a as usize], mapping[new_b as usize]) {
                    return Err(Error::InvalidVertex(
                        "entry deletion produced a non-isomorphic subgraph".into(),
                    ));
                }
            }
            let old_deg = self
                .neighbors(mapping[new_a as usize])
                .iter()
                .filter(|&&w| !self.vertex(w).contains(r))
                .count();
            if old_deg != target.degree(new_a) {
                return Err(Error::InvalidVertex(
                    "entry deletion produced a non-isomorphic subgraph".into(),
                ));
            }
        }
        Ok((target, mapping))
    }

    /// The complement bijection `x -> {1,...,n} - x` from `J(n, k)` onto
    /// `J(n, n-k)`, verified to preserve adjacency both ways.
    pub fn complement_isomorphism(&self) -> Result<(UniformSubsetGraph, Vec<u32>)> {
        if !self.params.is_johnson() {
            return Err(Error::Unsupported(
                "complement isomorphism applies to Johnson mode only".into(),
            ));
        }
        let n = self.params.n;
        let k = self.params.k;
        if n == k {
            return Err(Error::DegenerateGraph { n });
        }
        let target = UniformSubsetGraph::build(GraphParams::johnson(n, n - k)?)?;
        let mut bijection = Vec::with_capacity(self.vertex_count());
        for rank in 0..self.vertex_count() as u32 {
            bijection.push(target.rank_of(&self.vertex(rank).complement(n))?);
        }
        for a in 0..self.vertex_count() as u32 {
            for &b in self.neighbors(a) {
                if !target.adjacent(bijection[a as usize], bijection[b as usize]) {
                    return Err(Error::InvalidVertex(
                        "complement map failed to preserve an edge".into(),
                    ));
                }
            }
        }
        if self.edge_count != target.edge_count {
            return Err(Error::InvalidVertex(
                "complement map failed to preserve non-edges".into(),
            ));
        }
        Ok((target, bijection))
    }
}
