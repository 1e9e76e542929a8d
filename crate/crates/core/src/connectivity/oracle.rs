//! Independent brute-force oracle: exhaustive subset enumeration over small
//! graphs. This is the only component allowed to conclude that no super
//! vertex-cut exists, and it cross-validates the flow search.

use super::components::is_super_vertex_cut;
use super::global::global_vertex_connectivity;
use super::{CutCertificate, VertexCut};
use crate::combin::binomial;
use crate::error::Error;
use crate::exec::{map_collect, Parallelism};
use crate::graph::UniformSubsetGraph;
use crate::Result;

/// Result of the exhaustive super vertex-cut search.
#[derive(Debug, Clone)]
pub struct OracleReport {
    /// The super-connectivity, or `None` when no super vertex-cut exists.
    pub kappa_prime: Option<u64>,
    pub cut: Option<VertexCut>,
    pub certificate: Option<CutCertificate>,
    /// Exhaustion token: all sizes `1..=exhausted_to` were fully enumerated
    /// without finding a super vertex-cut. Present exactly when
    /// `kappa_prime` is `None`.
    pub exhausted_to: Option<u64>,
    pub subsets_checked: u64,
}

fn adjacency_masks(g: &UniformSubsetGraph) -> Vec<u64> {
    (0..g.vertex_count() as u32)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u64, |acc, &w| acc | 1u64 << w)
        })
        .collect()
}

/// Removal leaves no isolated vertex and at least two components. With no
/// isolated vertices, disconnection already implies every component has
/// order at least two.
fn is_super_mask(adj: &[u64], full: u64, removed: u64) -> bool {
    let survivors = full & !removed;
    if survivors == 0 {
        return false;
    }
    let mut rest = survivors;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & survivors == 0 {
            return false; // isolated vertex
        }
    }
    !connected_mask(adj, survivors)
}

/// Connectivity of the induced subgraph on `survivors` (assumed nonempty).
fn connected_mask(adj: &[u64], survivors: u64) -> bool {
    let mut reached = 1u64 << survivors.trailing_zeros();
    loop {
        let mut grown = reached;
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            grown |= adj[v] & survivors;
        }
        if grown == reached {
            return reached == survivors;
        }
        reached = grown;
    }
}

/// At least two components after removal (isolated vertices count as
/// components).
fn disconnects_mask(adj: &[u64], full: u64, removed: u64) -> bool {
    let survivors = full & !removed;
    survivors != 0 && !connected_mask(adj, survivors)
}

/// Applies `check` to every `size`-subset mask of `0..nv`, in chunks, and
/// collects the masks that pass. Enumeration order is numeric (Gosper), but
/// all hits of the size are collected, so the outcome is order-free.
fn sweep_size<F>(nv: u32, size: u32, par: Parallelism, check: F) -> (Vec<u64>, u64)
where
    F: Fn(u64) -> bool + Sync + Send,
{
    const CHUNK: usize = 1 << 16;
    let end = if nv == 64 { u64::MAX } else { 1u64 << nv };
    let mut mask = (1u64 << size) - 1;
    let mut hits = Vec::new();
    let mut checked = 0u64;
    let mut buf = Vec::with_capacity(CHUNK);
    let mut done = false;
    while !done {
        buf.clear();
        while buf.len() < CHUNK {
            if mask >= end {
                done = true;
                break;
            }
            buf.push(mask);
            // Gosper's hack: next mask with the same population count.
            let low = mask & mask.wrapping_neg();
            let Some(ripple) = mask.checked_add(low) else {
                done = true;
                break;
            };
            mask = ((mask ^ ripple) >> (2 + low.trailing_zeros())) | ripple;
        }
        checked += buf.len() as u64;
        let found = map_collect(par, &buf, || (), |_, &m| check(m).then_some(m));
        hits.extend(found.into_iter().flatten());
    }
    (hits, checked)
}

fn mask_to_ranks(mask: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros());
        m &= m - 1;
    }
    out
}

fn oracle_guard(g: &UniformSubsetGraph, cap: usize) -> Result<u64> {
    if g.params().is_degenerate() {
        return Err(Error::DegenerateGraph { n: g.params().n });
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let nv = g.vertex_count();
    if nv > cap.min(64) {
        return Err(Error::TooLarge(format!(
            "{nv} vertices exceed the oracle cap of {}; use the flow search",
            cap.min(64)
        )));
    }
    let full = if nv == 64 { u64::MAX } else { (1u64 << nv) - 1 };
    Ok(full)
}

/// Exhaustive search: enumerates vertex subsets in increasing cardinality up
/// to `|V| - 4` (a super vertex-cut leaves two components of order two or
/// more) and returns the first size admitting a super vertex-cut, or proves
/// none exists.
pub fn super_cut_oracle(
    g: &UniformSubsetGraph,
    cap: usize,
    par: Parallelism,
) -> Result<OracleReport> {
    let full = oracle_guard(g, cap)?;
    let adj = adjacency_masks(g);
    let nv = g.vertex_count() as u32;
    let mut checked = 0u64;
    for size in 1..=nv.saturating_sub(4) {
        let (hits, n) = sweep_size(nv, size, par, |m| is_super_mask(&adj, full, m));
        checked += n;
        if let Some(best) = hits
            .into_iter()
            .map(mask_to_ranks)
            .min()
        {
            let cut = VertexCut::new(g, best)?;
            let certificate = is_super_vertex_cut(g, &cut)?;
            debug_assert!(certificate.is_super);
            return Ok(OracleReport {
                kappa_prime: Some(size as u64),
                cut: Some(cut),
                certificate: Some(certificate),
                exhausted_to: None,
                subsets_checked: checked,
            });
        }
    }
    Ok(OracleReport {
        kappa_prime: None,
        cut: None,
        certificate: None,
        exhausted_to: Some(nv.saturating_sub(4) as u64),
        subsets_checked: checked,
    })
}

/// All minimum super vertex-cuts, sorted lexicographically by rank sequence.
/// Empty when no super vertex-cut exists.
pub fn all_minimum_super_cuts(
    g: &UniformSubsetGraph,
    cap: usize,
    par: Parallelism,
) -> Result<Vec<VertexCut>> {
    let full = oracle_guard(g, cap)?;
    let adj = adjacency_masks(g);
    let nv = g.vertex_count() as u32;
    for size in 1..=nv.saturating_sub(4) {
        let (hits, _) = sweep_size(nv, size, par, |m| is_super_mask(&adj, full, m));
        if !hits.is_empty() {
            let mut cuts: Vec<Vec<u32>> = hits.into_iter().map(mask_to_ranks).collect();
            cuts.sort();
            return cuts.into_iter().map(|c| VertexCut::new(g, c)).collect();
        }
    }
    Ok(Vec::new())
}

/// Result of the exhaustive minimum-vertex-cut structure check.
#[derive(Debug, Clone)]
pub struct StructureCheckReport {
    pub kappa: u64,
    /// Number of distinct minimum vertex cuts found.
    pub cuts_found: u64,
    /// Every minimum vertex cut is the neighbourhood of some vertex.
    pub all_neighborhoods: bool,
    pub first_violation: Option<VertexCut>,
}

/// Enumerates every kappa-sized subset and confirms the only disconnecting
/// ones are vertex neighbourhoods. Complete graphs report vacuously.
pub fn min_cut_structure_check(
    g: &UniformSubsetGraph,
    max_subsets: u64,
    par: Parallelism,
) -> Result<StructureCheckReport> {
    let full = oracle_guard(g, 64)?;
    let nv = g.vertex_count() as u32;
    if g.is_complete() {
        return Ok(StructureCheckReport {
            kappa: nv as u64 - 1,
            cuts_found: 0,
            all_neighborhoods: true,
            first_violation: None,
        });
    }
    let kappa = global_vertex_connectivity(g, par)?.kappa;
    let work = binomial(nv as u64, kappa);
    if work > max_subsets {
        return Err(Error::TooLarge(format!(
            "C({nv},{kappa}) = {work} subsets exceed the guard of {max_subsets}"
        )));
    }
    let adj = adjacency_masks(g);
    let (cuts, _) = sweep_size(nv, kappa as u32, par, |m| disconnects_mask(&adj, full, m));
    let neighborhoods: std::collections::HashSet<u64> = adj.iter().copied().collect();
    let mut violation = None;
    for &m in &cuts {
        if !neighborhoods.contains(&m) {
            violation = Some(m);
            break;
        }
    }
    Ok(StructureCheckReport {
        kappa,
        cuts_found: cuts.len() as u64,
        all_neighborhoods: violation.is_none(),
        first_violation: violation
            .map(|m| VertexCut::new(g, mask_to_ranks(m)))
            .transpose()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::GraphParams;

    #[test]
    fn j52_proved_infinite() {
        let g = UniformSubsetGraph::johnson(5, 2).unwrap();
        let rep = super_cut_oracle(&g, 24, Parallelism::Sequential).unwrap();
        assert_eq!(rep.kappa_prime, None);
        assert_eq!(rep.exhausted_to, Some(6));
        assert!(rep.subsets_checked > 0);
    }

    #[test]
    fn j62_oracle_agrees_with_theorem() {
        let g = UniformSubsetGraph::johnson(6, 2).unwrap();
        let rep = super_cut_oracle(&g, 24, Parallelism::Sequential).unwrap();
        assert_eq!(rep.kappa_prime, Some(9));
        assert!(rep.certificate.unwrap().is_super);
    }

    #[test]
    fn petersen_oracle() {
        let g = UniformSubsetGraph::build(GraphParams::new(5, 2, 0).unwrap()).unwrap();
        let rep = super_cut_oracle(&g, 24, Parallelism::Sequential).unwrap();
        assert_eq!(rep.kappa_prime, Some(4));
    }

    #[test]
    fn cap_enforced() {
        let g = UniformSubsetGraph::johnson(7, 2).unwrap(); // 21 vertices
        assert!(matches!(
            super_cut_oracle(&g, 20, Parallelism::Sequential),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn all_minimum_cuts_j62() {
        let g = UniformSubsetGraph::johnson(6, 2).unwrap();
        let cuts = all_minimum_super_cuts(&g, 24, Parallelism::Sequential).unwrap();
        assert!(!cuts.is_empty());
        assert!(cuts.iter().all(|c| c.len() == 9));
        for c in &cuts {
            assert!(is_super_vertex_cut(&g, c).unwrap().is_super);
        }
        // Sorted and unique.
        for w in cuts.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn structure_check_small_johnson() {
        // Every minimum vertex cut of J(4,2) and J(5,2) is a neighbourhood.
        for (n, k) in [(4u32, 2u32), (5, 2)] {
            let g = UniformSubsetGraph::johnson(n, k).unwrap();
            let rep = min_cut_structure_check(&g, 10_000_000, Parallelism::Sequential).unwrap();
            assert_eq!(rep.kappa, (k * (n - k)) as u64);
            assert!(rep.all_neighborhoods, "J({n},{k})");
            // Antipodal vertices of the octahedron share neighbourhoods, so
            // the distinct cut count can be below the vertex count.
            assert!(rep.cuts_found >= g.vertex_count() as u64 / 2);
        }
    }

    #[test]
    fn structure_check_complete_is_vacuous() {
        let g = UniformSubsetGraph::johnson(5, 1).unwrap();
        let rep = min_cut_structure_check(&g, 10_000_000, Parallelism::Sequential).unwrap();
        assert_eq!((rep.kappa, rep.cuts_found), (4, 0));
        assert!(rep.all_neighborhoods);
    }
}
