//! Explicit super vertex-cut templates for Johnson graphs.

use crate::connectivity::VertexCut;
use crate::error::Error;
use crate::graph::UniformSubsetGraph;
use crate::subset::SubsetVertex;
use crate::Result;

/// The minimum super vertex-cut of `J(n, 2)` built from three distinct
/// entries: all pairs with exactly one entry inside the triple. Its size is
/// `3(n - 3)`; removal splits the graph into the triangle on the triple and
/// the pairs avoiding it.
pub fn cut_jn2(g: &UniformSubsetGraph, triple: [u32; 3]) -> Result<VertexCut> {
    let p = *g.params();
    if !p.is_johnson() || p.k != 2 {
        return Err(Error::Unsupported("cut template applies to J(n,2)".into()));
    }
    if p.n < 6 {
        return Err(Error::Unsupported(format!(
            "J({},2) has no super vertex-cut",
            p.n
        )));
    }
    let mut t = triple;
    t.sort_unstable();
    if t[0] == t[1] || t[1] == t[2] {
        return Err(Error::InvalidParams("triple entries must be distinct".into()));
    }
    for &e in &t {
        if e == 0 || e > p.n {
            return Err(Error::InvalidEntry { entry: e, n: p.n });
        }
    }
    let mut ranks = Vec::with_capacity(3 * (p.n as usize - 3));
    for &a in &t {
        for b in 1..=p.n {
            if t.contains(&b) {
                continue;
            }
            let v = SubsetVertex::from_entries(&[a, b], p.n)?;
            ranks.push(g.rank_of(&v)?);
        }
    }
    VertexCut::new(g, ranks)
}

/// The neighbourhood of an edge of `J(n, k)`: the union of the three
/// neighbour classes of the adjacent pair `x`, `x_k^{k+1}`. Removing it
/// leaves the pair as a component of order two; the size is
/// `(2k-1)(n-k) - k`.
#[derive(Debug, Clone)]
pub struct EdgeNeighborhoodCut {
    pub base: SubsetVertex,
    pub partner: SubsetVertex,
    /// Common neighbours of the pair; `(k-1) + (n-k-1)` vertices.
    pub s1: Vec<SubsetVertex>,
    /// Neighbours of the base only; `(k-1)(n-k-1)` vertices.
    pub s2: Vec<SubsetVertex>,
    /// Neighbours of the partner only; `(k-1)(n-k-1)` vertices.
    pub s3: Vec<SubsetVertex>,
}

impl EdgeNeighborhoodCut {
    pub fn total_size(&self) -> usize {
        self.s1.len() + self.s2.len() + self.s3.len()
    }

    pub fn to_vertex_cut(&self, g: &UniformSubsetGraph) -> Result<VertexCut> {
        let ranks: Result<Vec<u32>> = self
            .s1
            .iter()
            .chain(&self.s2)
            .chain(&self.s3)
            .map(|v| g.rank_of(v))
            .collect();
        VertexCut::new(g, ranks?)
    }
}

/// Builds the edge-neighbourhood cut with canonical base `x = {1, ..., k}`
/// and partner `x_k^{k+1}`, optionally relabelled by a permutation of the
/// ground set (`relabel[i-1]` is the image of entry `i`).
pub fn cut_edge_neighborhood(
    g: &UniformSubsetGraph,
    relabel: Option<&[u32]>,
) -> Result<EdgeNeighborhoodCut> {
    let p = *g.params();
    if !p.is_johnson() {
        return Err(Error::Unsupported(
            "edge-neighbourhood cut applies to Johnson graphs".into(),
        ));
    }
    let (n, k) = (p.n, p.k);
    if k < 3 || n < k + 3 {
        return Err(Error::Unsupported(format!(
            "edge-neighbourhood cut needs k >= 3 and n >= k+3, got J({n},{k})"
        )));
    }
    validate_relabel(n, relabel)?;
    let perm = |e: u32| relabel.map_or(e, |p| p[(e - 1) as usize]);
    let mk = |entries: &[u32]| -> Result<SubsetVertex> {
        let mapped: Vec<u32> = entries.iter().map(|&e| perm(e)).collect();
        SubsetVertex::from_entries(&mapped, n)
    };
    let xs: Vec<u32> = (1..=k).collect();
    let base = mk(&xs)?;
    let swap_of = |removes: &[u32], adds: &[u32]| -> Result<SubsetVertex> {
        let mut entries: Vec<u32> = xs.clone();
        entries.retain(|e| !removes.contains(e));
        entries.extend_from_slice(adds);
        mk(&entries)
    };
    let partner = swap_of(&[k], &[k + 1])?;
    let mut s1 = Vec::new();
    for i in 1..k {
        s1.push(swap_of(&[i], &[k + 1])?);
    }
    for j in k + 2..=n {
        s1.push(swap_of(&[k], &[j])?);
    }
    let mut s2 = Vec::new();
    let mut s3 = Vec::new();
    for i in 1..k {
        for j in k + 2..=n {
            s2.push(swap_of(&[i], &[j])?);
            s3.push(swap_of(&[i, k], &[k + 1, j])?);
        }
    }
    let cut = EdgeNeighborhoodCut {
        base,
        partner,
        s1,
        s2,
        s3,
    };
    debug_assert_eq!(
        cut.total_size() as u64,
        (2 * k as u64 - 1) * (n - k) as u64 - k as u64
    );
    Ok(cut)
}

pub(crate) fn validate_relabel(n: u32, relabel: Option<&[u32]>) -> Result<()> {
    if let Some(p) = relabel {
        if p.len() != n as usize {
            return Err(Error::InvalidParams(format!(
                "relabel permutation must have length n = {n}"
            )));
        }
        let mut seen = vec![false; n as usize + 1];
        for &img in p {
            if img == 0 || img > n || seen[img as usize] {
                return Err(Error::InvalidParams(
                    "relabel is not a permutation of 1..=n".into(),
                ));
            }
            seen[img as usize] = true;
        }
    }
    Ok(())
}
