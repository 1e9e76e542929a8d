//! Unit-capacity max-flow kernel (Dinic) over vertex-split networks.
//!
//! Splitting each vertex `v` into `in(v) -> out(v)` with capacity one turns
//! minimum vertex separators into minimum edge cuts, which is the standard
//! Menger reduction. Networks are small (a few hundred nodes), so the solver
//! favours simplicity and cheap cloning over asymptotics.

use crate::bitset::BitSet;
use crate::graph::UniformSubsetGraph;

pub const INF: u32 = u32::MAX / 4;

const NO_EDGE: u32 = u32::MAX;

/// Resumable Dinic solver. Edge `e`'s reverse is `e ^ 1`; capacities are
/// residual.
#[derive(Debug, Clone)]
pub struct Dinic {
    to: Vec<u32>,
    cap: Vec<u32>,
    head: Vec<Vec<u32>>,
    level: Vec<i32>,
    iter: Vec<u32>,
    pub flow: u32,
}

impl Dinic {
    pub fn new(nodes: usize) -> Self {
        Dinic {
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); nodes],
            level: vec![-1; nodes],
            iter: vec![0; nodes],
            flow: 0,
        }
    }

    pub fn add_edge(&mut self, from: u32, to: u32, cap: u32) -> u32 {
        let e = self.to.len() as u32;
        self.to.push(to);
        self.cap.push(cap);
        self.head[from as usize].push(e);
        self.to.push(from);
        self.cap.push(0);
        self.head[to as usize].push(e + 1);
        e
    }

    /// Flow pushed through a forward edge that was created with reverse
    /// capacity zero.
    pub fn flow_on(&self, e: u32) -> u32 {
        self.cap[(e ^ 1) as usize]
    }

    fn bfs(&mut self, s: u32, t: u32) -> bool {
        self.level.fill(-1);
        self.level[s as usize] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u as usize] {
                let v = self.to[e as usize];
                if self.cap[e as usize] > 0 && self.level[v as usize] < 0 {
                    self.level[v as usize] = self.level[u as usize] + 1;
                    if v == t {
                        return true;
                    }
                    queue.push_back(v);
                }
            }
        }
        false
    }

    fn dfs(&mut self, u: u32, t: u32, pushed: u32) -> u32 {
        if u == t {
            return pushed;
        }
        while (self.iter[u as usize] as usize) < self.head[u as usize].len() {
            let e = self.head[u as usize][self.iter[u as usize] as usize];
            let v = self.to[e as usize];
            if self.cap[e as usize] > 0 && self.level[v as usize] == self.level[u as usize] + 1 {
                let got = self.dfs(v, t, pushed.min(self.cap[e as usize]));
                if got > 0 {
                    self.cap[e as usize] -= got;
                    self.cap[(e ^ 1) as usize] += got;
                    return got;
                }
            }
            self.iter[u as usize] += 1;
        }
        0
    }

    /// Augments from the current state until no augmenting path remains and
    /// returns the total flow. Safe to call again after capacity increases.
    pub fn max_flow(&mut self, s: u32, t: u32) -> u32 {
        while self.bfs(s, t) {
            self.iter.fill(0);
            loop {
                let got = self.dfs(s, t, INF);
                if got == 0 {
                    break;
                }
                self.flow += got;
            }
        }
        self.flow
    }

    /// Nodes reachable from `s` in the residual network.
    pub fn residual_reachable(&self, s: u32) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s as usize] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &e in &self.head[u as usize] {
                let v = self.to[e as usize] as usize;
                if self.cap[e as usize] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v as u32);
                }
            }
        }
        seen
    }
}

/// Vertex-split network between two non-adjacent terminal vertices.
///
/// Node ids: `in(v) = 2v`, `out(v) = 2v + 1`; source is `in(s)`, sink is
/// `out(t)`. Terminal and force-surviving vertices get infinite split
/// capacity, deleted vertices are omitted entirely.
#[derive(Debug, Clone)]
pub struct PairNet {
    pub dinic: Dinic,
    split_edge: Vec<u32>,
    s: u32,
    t: u32,
    nv: usize,
}

impl PairNet {
    pub fn build(
        g: &UniformSubsetGraph,
        s: u32,
        t: u32,
        forced_out: &[u32],
        deleted: &[u32],
    ) -> PairNet {
        let nv = g.vertex_count();
        let mut dinic = Dinic::new(2 * nv);
        let mut split_edge = vec![NO_EDGE; nv];
        let mut out_mask = BitSet::new(nv);
        for &v in forced_out {
            out_mask.insert(v as usize);
        }
        let mut del_mask = BitSet::new(nv);
        for &v in deleted {
            del_mask.insert(v as usize);
        }
        for v in 0..nv as u32 {
            if del_mask.contains(v as usize) {
                continue;
            }
            let cap = if v == s || v == t || out_mask.contains(v as usize) {
                INF
            } else {
                1
            };
            split_edge[v as usize] = dinic.add_edge(2 * v, 2 * v + 1, cap);
        }
        for u in 0..nv as u32 {
            if del_mask.contains(u as usize) {
                continue;
            }
            for &v in g.neighbors(u) {
                if !del_mask.contains(v as usize) {
                    dinic.add_edge(2 * u + 1, 2 * v, INF);
                }
            }
        }
        PairNet {
            dinic,
            split_edge,
            s,
            t,
            nv,
        }
    }

    pub fn solve(&mut self) -> u32 {
        self.dinic.max_flow(2 * self.s, 2 * self.t + 1)
    }

    /// The minimum vertex cut realised by the current maximum flow: vertices
    /// whose split arc crosses the source-side residual boundary. Sorted.
    pub fn min_cut(&self) -> Vec<u32> {
        let reach = self.dinic.residual_reachable(2 * self.s);
        let mut cut = Vec::with_capacity(self.dinic.flow as usize);
        for v in 0..self.nv as u32 {
            if self.split_edge[v as usize] == NO_EDGE || v == self.s || v == self.t {
                continue;
            }
            if reach[2 * v as usize] && !reach[2 * v as usize + 1] {
                cut.push(v);
            }
        }
        cut
    }

    /// Decomposes the current flow into internally disjoint `s`-`t` paths.
    pub fn disjoint_paths(&self) -> Vec<Vec<u32>> {
        let value = self.dinic.flow as usize;
        let mut used: Vec<u32> = (0..self.dinic.to.len())
            .step_by(2)
            .map(|e| self.dinic.flow_on(e as u32))
            .collect();
        let mut paths = Vec::with_capacity(value);
        for _ in 0..value {
            let mut path = vec![self.s];
            let mut node = 2 * self.s + 1;
            'walk: loop {
                for &e in &self.dinic.head[node as usize] {
                    if e % 2 != 0 || used[e as usize / 2] == 0 {
                        continue;
                    }
                    let nxt = self.dinic.to[e as usize];
                    if nxt == node {
                        continue;
                    }
                    used[e as usize / 2] -= 1;
                    let v = nxt / 2;
                    path.push(v);
                    if v == self.t {
                        break 'walk;
                    }
                    // Consume the split arc and continue from out(v).
                    used[self.split_edge[v as usize] as usize / 2] -= 1;
                    node = 2 * v + 1;
                    continue 'walk;
                }
                unreachable!("flow decomposition ran out of arcs");
            }
            paths.push(path);
        }
        paths
    }
}

/// Network for separating two contracted vertex-disjoint edges. Endpoints are
/// merged into a fresh source and sink; everything else is split as usual.
pub struct EdgePairNet {
    pub dinic: Dinic,
    split_edge: Vec<u32>,
    nv: usize,
    source: u32,
}

impl EdgePairNet {
    /// Returns `None` when an endpoint of `e` is adjacent to an endpoint of
    /// `f` (the contracted terminals would be adjacent, so no separator
    /// exists).
    pub fn build(g: &UniformSubsetGraph, e: (u32, u32), f: (u32, u32)) -> Option<EdgePairNet> {
        let nv = g.vertex_count();
        let ends = [e.0, e.1, f.0, f.1];
        for &a in &[e.0, e.1] {
            for &b in &[f.0, f.1] {
                if g.adjacent(a, b) {
                    return None;
                }
            }
        }
        let source = 2 * nv as u32;
        let sink = source + 1;
        let mut dinic = Dinic::new(2 * nv + 2);
        let mut split_edge = vec![NO_EDGE; nv];
        let is_end = |v: u32| ends.contains(&v);
        for v in 0..nv as u32 {
            if !is_end(v) {
                split_edge[v as usize] = dinic.add_edge(2 * v, 2 * v + 1, 1);
            }
        }
        let mut from_source = BitSet::new(nv);
        let mut to_sink = BitSet::new(nv);
        for &a in &[e.0, e.1] {
            for &v in g.neighbors(a) {
                if !is_end(v) {
                    from_source.insert(v as usize);
                }
            }
        }
        for &c in &[f.0, f.1] {
            for &v in g.neighbors(c) {
                if !is_end(v) {
                    to_sink.insert(v as usize);
                }
            }
        }
        for v in from_source.iter_ones() {
            dinic.add_edge(source, 2 * v as u32, INF);
        }
        for v in to_sink.iter_ones() {
            dinic.add_edge(2 * v as u32 + 1, sink, INF);
        }
        for u in 0..nv as u32 {
            if is_end(u) {
                continue;
            }
            for &v in g.neighbors(u) {
                if !is_end(v) {
                    dinic.add_edge(2 * u + 1, 2 * v, INF);
                }
            }
        }
        Some(EdgePairNet {
            dinic,
            split_edge,
            nv,
            source,
        })
    }

    pub fn solve(&mut self) -> u32 {
        self.dinic.max_flow(self.source, self.source + 1)
    }

    pub fn min_cut(&self) -> Vec<u32> {
        let reach = self.dinic.residual_reachable(self.source);
        let mut cut = Vec::new();
        for v in 0..self.nv as u32 {
            if self.split_edge[v as usize] == NO_EDGE {
                continue;
            }
            if reach[2 * v as usize] && !reach[2 * v as usize + 1] {
                cut.push(v);
            }
        }
        cut
    }
}
