//! Quick kernel timing: exact super-connectivity of J(n, k) with stats.
//!
//!     cargo run --release -p usg-core --example probe -- 8 3

use std::time::Instant;

use usg_core::connectivity::{super_connectivity_exact, SearchLimits};
use usg_core::exec::Parallelism;
use usg_core::UniformSubsetGraph;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n: u32 = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(7);
    let k: u32 = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(3);
    let g = UniformSubsetGraph::johnson(n, k).unwrap();
    println!(
        "J({n},{k}): {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );
    let t0 = Instant::now();
    let limits = SearchLimits {
        max_branch_nodes: 500_000_000,
        ..Default::default()
    };
    match super_connectivity_exact(&g, &limits, Parallelism::Default) {
        Ok(r) => println!(
            "kappa' = {}  |cut| = {}  pairs = {}  branch nodes = {}  elapsed = {:?}",
            r.size,
            r.cut.len(),
            r.pairs_examined,
            r.branch_nodes,
            t0.elapsed()
        ),
        Err(e) => println!("no result: {e}  elapsed = {:?}", t0.elapsed()),
    }
}
