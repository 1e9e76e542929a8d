//! Exact super-connectivity by flow-guided branch-and-bound.
//!
//! The super-connectivity equals the minimum, over pairs of non-adjacent
//! vertices (s, t), of the smallest vertex set that separates s from t and
//! leaves no isolated vertex: any such set is a super vertex-cut, and a
//! minimum super vertex-cut separates every s in one component from every t
//! in another. Each pair is relaxed to a plain minimum vertex cut via
//! max-flow; when the realised cut isolates a vertex w, the search branches:
//! each neighbour of w may be forced to survive, or w itself joins the cut.
//!
//! Pruning uses strictly-greater comparisons against the incumbent, so every
//! node whose bound does not exceed the final optimum is explored under any
//! scheduling. The result (value and lexicographically least witness among
//! the per-pair optima) is therefore identical for any worker count.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use super::components::is_super_vertex_cut;
use super::{CutCertificate, VertexCut};
use crate::bitset::BitSet;
use crate::error::Error;
use crate::exec::{map_collect, Parallelism};
use crate::graph::UniformSubsetGraph;
use crate::Result;

const INF: u32 = u32::MAX / 4;
const NONE: u32 = u32::MAX;

/// Limits for the branch-and-bound search.
#[derive(Debug, Clone, Copy)]
pub struct SearchLimits {
    /// Only look for super vertex-cuts of at most this size.
    pub max_cut_size: Option<u64>,
    /// Abort after this many branch nodes.
    pub max_branch_nodes: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_cut_size: None,
            max_branch_nodes: 10_000_000,
        }
    }
}

/// A verified minimum super vertex-cut found by the flow search.
#[derive(Debug, Clone)]
pub struct SuperCutSearch {
    pub size: u64,
    pub cut: VertexCut,
    pub certificate: CutCertificate,
    pub pairs_examined: u64,
    pub branch_nodes: u64,
}

/// Fixed flow-network topology for one terminal pair; only capacities change
/// during the branch-and-bound, so node states clone cheaply.
struct PairTopo {
    to: Vec<u32>,
    head_start: Vec<u32>,
    head_list: Vec<u32>,
    split: Vec<u32>,
    base_cap: Vec<u32>,
    source: u32,
    sink: u32,
}

#[derive(Clone)]
struct FlowState {
    cap: Vec<u32>,
    flow: u32,
}

struct Workspace {
    level: Vec<i32>,
    iter: Vec<u32>,
    queue: Vec<u32>,
    reach: Vec<bool>,
    cut_mask: BitSet,
}

impl Workspace {
    fn new(nv: usize) -> Self {
        Workspace {
            level: vec![-1; 2 * nv],
            iter: vec![0; 2 * nv],
            queue: Vec::with_capacity(2 * nv),
            reach: vec![false; 2 * nv],
            cut_mask: BitSet::new(nv),
        }
    }
}

impl PairTopo {
    fn build(g: &UniformSubsetGraph, s: u32, t: u32) -> Self {
        let nv = g.vertex_count();
        let nodes = 2 * nv as u32;
        let mut arcs: Vec<(u32, u32, u32)> = Vec::new(); // from, to, cap
        let mut split = vec![NONE; nv];
        for v in 0..nv as u32 {
            let cap = if v == s || v == t { INF } else { 1 };
            split[v as usize] = 2 * arcs.len() as u32;
            arcs.push((2 * v, 2 * v + 1, cap));
        }
        for u in 0..nv as u32 {
            for &v in g.neighbors(u) {
                arcs.push((2 * u + 1, 2 * v, INF));
            }
        }
        let mut to = Vec::with_capacity(2 * arcs.len());
        let mut base_cap = Vec::with_capacity(2 * arcs.len());
        let mut deg = vec![0u32; nodes as usize];
        for &(f, tt, c) in &arcs {
            to.push(tt);
            base_cap.push(c);
            to.push(f);
            base_cap.push(0);
            deg[f as usize] += 1;
            deg[tt as usize] += 1;
        }
        let mut head_start = vec![0u32; nodes as usize + 1];
        for i in 0..nodes as usize {
            head_start[i + 1] = head_start[i] + deg[i];
        }
        let mut fill = head_start.clone();
        let mut head_list = vec![0u32; to.len()];
        for (i, &(f, tt, _)) in arcs.iter().enumerate() {
            let e = 2 * i as u32;
            head_list[fill[f as usize] as usize] = e;
            fill[f as usize] += 1;
            head_list[fill[tt as usize] as usize] = e + 1;
            fill[tt as usize] += 1;
        }
        PairTopo {
            to,
            head_start,
            head_list,
            split,
            base_cap,
            source: 2 * s,
            sink: 2 * t + 1,
        }
    }

    fn fresh_state(&self, forced_out: &[u32], forced_in: &[u32]) -> FlowState {
        let mut cap = self.base_cap.clone();
        for &u in forced_out {
            cap[self.split[u as usize] as usize] = INF;
        }
        for &w in forced_in {
            cap[self.split[w as usize] as usize] = 0;
        }
        FlowState { cap, flow: 0 }
    }

    fn bfs(&self, st: &FlowState, ws: &mut Workspace) -> bool {
        ws.level.fill(-1);
        ws.level[self.source as usize] = 0;
        ws.queue.clear();
        ws.queue.push(self.source);
        let mut qi = 0;
        while qi < ws.queue.len() {
            let u = ws.queue[qi];
            qi += 1;
            let (a, b) = (
                self.head_start[u as usize] as usize,
                self.head_start[u as usize + 1] as usize,
            );
            for &e in &self.head_list[a..b] {
                let v = self.to[e as usize];
                if st.cap[e as usize] > 0 && ws.level[v as usize] < 0 {
                    ws.level[v as usize] = ws.level[u as usize] + 1;
                    if v == self.sink {
                        return true;
                    }
                    ws.queue.push(v);
                }
            }
        }
        false
    }

    fn dfs(&self, st: &mut FlowState, ws: &mut Workspace, u: u32, pushed: u32) -> u32 {
        if u == self.sink {
            return pushed;
        }
        let (a, b) = (
            self.head_start[u as usize],
            self.head_start[u as usize + 1],
        );
        while ws.iter[u as usize] < b - a {
            let e = self.head_list[(a + ws.iter[u as usize]) as usize];
            let v = self.to[e as usize];
            if st.cap[e as usize] > 0 && ws.level[v as usize] == ws.level[u as usize] + 1 {
                let got = self.dfs(st, ws, v, pushed.min(st.cap[e as usize]));
                if got > 0 {
                    st.cap[e as usize] -= got;
                    st.cap[(e ^ 1) as usize] += got;
                    return got;
                }
            }
            ws.iter[u as usize] += 1;
        }
        0
    }

    /// Augments until maximal; resumable after capacity increases.
    fn solve(&self, st: &mut FlowState, ws: &mut Workspace) -> u32 {
        while self.bfs(st, ws) {
            ws.iter.fill(0);
            loop {
                let got = self.dfs(st, ws, self.source, INF);
                if got == 0 {
                    break;
                }
                st.flow += got;
            }
        }
        st.flow
    }

    /// The realised minimum cut: vertices whose split arc crosses the
    /// source-side residual boundary. Appends into `out`, sorted.
    fn min_cut(&self, st: &FlowState, ws: &mut Workspace, out: &mut Vec<u32>) {
        ws.reach.fill(false);
        ws.reach[self.source as usize] = true;
        ws.queue.clear();
        ws.queue.push(self.source);
        let mut qi = 0;
        while qi < ws.queue.len() {
            let u = ws.queue[qi];
            qi += 1;
            let (a, b) = (
                self.head_start[u as usize] as usize,
                self.head_start[u as usize + 1] as usize,
            );
            for &e in &self.head_list[a..b] {
                let v = self.to[e as usize] as usize;
                if st.cap[e as usize] > 0 && !ws.reach[v] {
                    ws.reach[v] = true;
                    ws.queue.push(v as u32);
                }
            }
        }
        out.clear();
        for v in 0..self.split.len() {
            let e = self.split[v] as usize;
            // Deleted vertices (zero total split capacity) are not cut
            // members even when they sit on the residual boundary.
            if st.cap[e] + st.cap[e ^ 1] == 0 {
                continue;
            }
            if ws.reach[2 * v] && !ws.reach[2 * v + 1] {
                out.push(v as u32);
            }
        }
    }
}

struct SearchCtx<'a> {
    g: &'a UniformSubsetGraph,
    global_best: &'a AtomicU64,
    node_counter: &'a AtomicU64,
    budget: u64,
    budget_hit: &'a AtomicBool,
}

struct PairBest {
    value: u64,
    cut: Vec<u32>,
}

/// Lowest-ranked vertex isolated by `cut_mask`, if any.
fn lowest_isolated(g: &UniformSubsetGraph, cut_mask: &BitSet) -> Option<u32> {
    for v in 0..g.vertex_count() {
        if !cut_mask.contains(v) && cut_mask.covers(g.neighbor_mask(v as u32).words()) {
            return Some(v as u32);
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn bnb(
    ctx: &SearchCtx,
    topo: &PairTopo,
    ws: &mut Workspace,
    st: FlowState,
    forced_in: &mut Vec<u32>,
    forced_out: &mut Vec<u32>,
    s: u32,
    t: u32,
    best: &mut PairBest,
) -> std::ops::ControlFlow<()> {
    use std::ops::ControlFlow::*;
    if ctx.node_counter.fetch_add(1, Ordering::Relaxed) + 1 > ctx.budget {
        ctx.budget_hit.store(true, Ordering::Relaxed);
        return Break(());
    }
    if st.flow >= INF {
        // The forced survivors connect the terminals: no separator exists
        // under this node's constraints.
        return Continue(());
    }
    let bound = forced_in.len() as u64 + st.flow as u64;
    let limit = best
        .value
        .min(ctx.global_best.load(Ordering::Relaxed).saturating_add(1));
    if bound >= limit {
        return Continue(());
    }
    let mut cut = Vec::new();
    topo.min_cut(&st, ws, &mut cut);
    ws.cut_mask.clear();
    for &v in cut.iter().chain(forced_in.iter()) {
        ws.cut_mask.insert(v as usize);
    }
    match lowest_isolated(ctx.g, &ws.cut_mask) {
        None => {
            // Feasible: the cut separates s and t and isolates nothing.
            let mut full: Vec<u32> = cut.iter().chain(forced_in.iter()).copied().collect();
            full.sort_unstable();
            debug_assert_eq!(full.len() as u64, bound);
            if bound < best.value {
                best.value = bound;
                best.cut = full;
                ctx.global_best.fetch_min(bound, Ordering::Relaxed);
            }
            Continue(())
        }
        Some(w) => {
            // Keep one neighbour of w alive, in rank order...
            for &u in ctx.g.neighbors(w) {
                if forced_in.contains(&u) {
                    continue;
                }
                forced_out.push(u);
                let mut child = st.clone();
                child.cap[topo.split[u as usize] as usize] = INF;
                topo.solve(&mut child, ws);
                let status = bnb(ctx, topo, ws, child, forced_in, forced_out, s, t, best);
                forced_out.pop();
                status?;
            }
            // ... or put w itself into the cut.
            if w != s && w != t && !forced_out.contains(&w) {
                forced_in.push(w);
                let mut child = topo.fresh_state(forced_out, forced_in);
                topo.solve(&mut child, ws);
                let status = bnb(ctx, topo, ws, child, forced_in, forced_out, s, t, best);
                forced_in.pop();
                status?;
            }
            Continue(())
        }
    }
}

/// One terminal pair: root relaxation plus branch-and-bound. Returns the
/// pair's best feasible cut, if it found one no larger than the prevailing
/// incumbent.
fn solve_pair(ctx: &SearchCtx, ws: &mut Workspace, s: u32, t: u32) -> Option<PairBest> {
    let topo = PairTopo::build(ctx.g, s, t);
    let mut st = topo.fresh_state(&[], &[]);
    let lb = topo.solve(&mut st, ws) as u64;
    if lb > ctx.global_best.load(Ordering::Relaxed) {
        return None;
    }
    let mut best = PairBest {
        value: u64::MAX,
        cut: Vec::new(),
    };
    let mut forced_in = Vec::new();
    let mut forced_out = Vec::new();
    let _ = bnb(
        ctx,
        &topo,
        ws,
        st,
        &mut forced_in,
        &mut forced_out,
        s,
        t,
        &mut best,
    );
    (best.value != u64::MAX).then_some(best)
}

/// Cheap greedy repair used to seed the incumbent: follow the first branch
/// (described above) until feasible or the incumbent is exceeded.
fn greedy_seed(ctx: &SearchCtx, ws: &mut Workspace, s: u32, t: u32) -> (u64, Option<u64>) {
    let topo = PairTopo::build(ctx.g, s, t);
    let mut st = topo.fresh_state(&[], &[]);
    let lb = topo.solve(&mut st, ws) as u64;
    let mut forced_out: Vec<u32> = Vec::new();
    let mut cut = Vec::new();
    loop {
        let bound = st.flow as u64;
        if st.flow >= INF || bound > ctx.global_best.load(Ordering::Relaxed) {
            return (lb, None);
        }
        topo.min_cut(&st, ws, &mut cut);
        ws.cut_mask.clear();
        for &v in &cut {
            ws.cut_mask.insert(v as usize);
        }
        match lowest_isolated(ctx.g, &ws.cut_mask) {
            None => {
                ctx.global_best.fetch_min(bound, Ordering::Relaxed);
                return (lb, Some(bound));
            }
            Some(w) => {
                let Some(&u) = ctx
                    .g
                    .neighbors(w)
                    .iter()
                    .find(|&&u| !forced_out.contains(&u))
                else {
                    return (lb, None);
                };
                forced_out.push(u);
                st.cap[topo.split[u as usize] as usize] = INF;
                topo.solve(&mut st, ws);
            }
        }
    }
}

/// Exact super-connectivity with certificate by branch-and-bound over all
/// non-adjacent terminal pairs.
///
/// Never concludes `+infinity`: when no super vertex-cut exists the search
/// exhausts every pair and reports [`Error::NoSuperCutFound`], deferring the
/// infinity claim to the exhaustive oracle.
pub fn super_connectivity_exact(
    g: &UniformSubsetGraph,
    limits: &SearchLimits,
    par: Parallelism,
) -> Result<SuperCutSearch> {
    if g.params().is_degenerate() {
        return Err(Error::DegenerateGraph { n: g.params().n });
    }
    if g.vertex_count() < 4 {
        return Err(Error::Unsupported(
            "a super vertex-cut needs at least four vertices".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let nv = g.vertex_count() as u32;
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    for s in 0..nv {
        for t in s + 1..nv {
            if !g.adjacent(s, t) {
                pairs.push((s, t));
            }
        }
    }
    if pairs.is_empty() {
        // Complete graph: no two vertices can be separated.
        return Err(Error::NoSuperCutFound);
    }

    let start_best = limits.max_cut_size.unwrap_or(u64::MAX - 1);
    let global_best = AtomicU64::new(start_best);
    let node_counter = AtomicU64::new(0);
    let budget_hit = AtomicBool::new(false);
    let ctx = SearchCtx {
        g,
        global_best: &global_best,
        node_counter: &node_counter,
        budget: limits.max_branch_nodes,
        budget_hit: &budget_hit,
    };

    // Phase 1: root relaxations and greedy repairs to seed the incumbent.
    let scans = map_collect(
        par,
        &pairs,
        || Workspace::new(g.vertex_count()),
        |ws, &(s, t)| greedy_seed(&ctx, ws, s, t),
    );
    let lower = scans.iter().map(|&(lb, _)| lb).min().unwrap_or(0);

    // Phase 2: exact branch-and-bound per pair.
    let results = map_collect(
        par,
        &pairs,
        || Workspace::new(g.vertex_count()),
        |ws, &(s, t)| solve_pair(&ctx, ws, s, t),
    );

    let best = results
        .into_iter()
        .flatten()
        .min_by(|a, b| a.value.cmp(&b.value).then_with(|| a.cut.cmp(&b.cut)));
    let branch_nodes = node_counter.load(Ordering::Relaxed);

    if budget_hit.load(Ordering::Relaxed) {
        return Err(Error::BudgetExceeded {
            budget: limits.max_branch_nodes,
            lower,
            upper: best.map(|b| b.value).unwrap_or(u64::MAX),
        });
    }
    let Some(best) = best else {
        return match limits.max_cut_size {
            Some(bound) => Err(Error::SizeBoundExceeded { bound, lower }),
            None => Err(Error::NoSuperCutFound),
        };
    };
    let cut = VertexCut::new(g, best.cut)?;
    let certificate = is_super_vertex_cut(g, &cut)?;
    debug_assert!(certificate.is_super);
    Ok(SuperCutSearch {
        size: best.value,
        cut,
        certificate,
        pairs_examined: pairs.len() as u64,
        branch_nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::GraphParams;

    #[test]
    fn j62_super_connectivity_is_nine() {
        let g = UniformSubsetGraph::johnson(6, 2).unwrap();
        let got =
            super_connectivity_exact(&g, &SearchLimits::default(), Parallelism::Sequential)
                .unwrap();
        assert_eq!(got.size, 9);
        assert!(got.certificate.is_super);
        assert_eq!(got.cut.len(), 9);
    }

    #[test]
    fn petersen_super_connectivity_is_four() {
        let g = UniformSubsetGraph::build(GraphParams::new(5, 2, 0).unwrap()).unwrap();
        let got =
            super_connectivity_exact(&g, &SearchLimits::default(), Parallelism::Sequential)
                .unwrap();
        assert_eq!(got.size, 4);
        assert!(got.certificate.is_super);
    }

    #[test]
    fn j52_has_no_super_cut_via_flow() {
        let g = UniformSubsetGraph::johnson(5, 2).unwrap();
        assert!(matches!(
            super_connectivity_exact(&g, &SearchLimits::default(), Parallelism::Sequential),
            Err(Error::NoSuperCutFound)
        ));
    }

    #[test]
    fn size_bound_reports_exceeded() {
        let g = UniformSubsetGraph::johnson(6, 2).unwrap();
        let limits = SearchLimits {
            max_cut_size: Some(8),
            ..Default::default()
        };
        assert!(matches!(
            super_connectivity_exact(&g, &limits, Parallelism::Sequential),
            Err(Error::SizeBoundExceeded { bound: 8, .. })
        ));
    }

    #[test]
    fn tiny_budget_reports_exceeded() {
        let g = UniformSubsetGraph::johnson(6, 2).unwrap();
        let limits = SearchLimits {
            max_branch_nodes: 3,
            ..Default::default()
        };
        assert!(matches!(
            super_connectivity_exact(&g, &limits, Parallelism::Sequential),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn worker_counts_agree_on_value_and_witness() {
        let g = UniformSubsetGraph::johnson(6, 2).unwrap();
        let a = super_connectivity_exact(&g, &SearchLimits::default(), Parallelism::Sequential)
            .unwrap();
        let b = super_connectivity_exact(&g, &SearchLimits::default(), Parallelism::Threads(4))
            .unwrap();
        assert_eq!(a.size, b.size);
        assert_eq!(a.cut.ranks(), b.cut.ranks());
    }
}
