//! Helpers shared by the integration suites.

use cfgeo::graph::Graph;
use cfgeo::rng::SplitMix64;

/// Erdős–Rényi-style seeded random graph; `edge_percent` in 0..=100.
pub fn random_graph(n: usize, edge_percent: u64, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.next_below(100) < edge_percent {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are valid")
}

/// Subgraph induced by `vertices`, renumbered 0..len in the given order.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Graph {
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in vertices.iter().enumerate() {
        index[v] = i;
    }
    let mut edges = Vec::new();
    for (i, &v) in vertices.iter().enumerate() {
        for &w in g.neighbors(v) {
            let j = index[w as usize];
            if j != usize::MAX && i < j {
                edges.push((i, j));
            }
        }
    }
    Graph::new(vertices.len(), &edges).expect("induced edges are valid")
}

#[allow(dead_code)]
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let offset = a.n();
    let mut edges: Vec<(usize, usize)> = a.edges().collect();
    edges.extend(b.edges().map(|(u, v)| (u + offset, v + offset)));
    Graph::new(a.n() + b.n(), &edges).expect("shifted edges are valid")
}
