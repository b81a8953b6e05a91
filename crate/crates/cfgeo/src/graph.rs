//! Finite simple graphs with dense integer vertex ids.
//!
//! Adjacency is stored in compressed sparse-row form (per-vertex sorted
//! neighbor slices) so that gadget constructions with tens of millions of
//! edges stay affordable; neighbor ids are `u32` internally.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint out of range for {2} vertices")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("self-loop ({0}, {0}) is not allowed")]
    SelfLoop(usize),
}

/// Undirected simple graph on vertices `0..n`.
///
/// Invariants established at construction and relied on everywhere:
/// adjacency is symmetric, sorted, free of duplicates and self-loops, and
/// every neighbor id is in range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    offsets: Vec<usize>,
    adj: Vec<u32>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges may appear in either
    /// orientation and more than once; the adjacency is symmetrized and
    /// deduplicated. Out-of-range endpoints and self-loops are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange(u, v, n));
            }
        }
        Ok(Self::from_edge_stream(n, |emit| {
            for &(u, v) in edges {
                emit(u as u32, v as u32);
            }
        }))
    }

    /// Builds a graph from a deterministic edge stream that is replayed
    /// twice (degree pass, fill pass). Endpoints must be valid and distinct;
    /// duplicates are tolerated. Used by the gadget generators, whose largest
    /// outputs would double peak memory if staged through an edge `Vec`.
    pub(crate) fn from_edge_stream(n: usize, stream: impl Fn(&mut dyn FnMut(u32, u32))) -> Graph {
        let mut degree = vec![0usize; n];
        stream(&mut |u, v| {
            debug_assert!(u != v && (u as usize) < n && (v as usize) < n);
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        });

        let mut offsets = Vec::with_capacity(n + 1);
        let mut total = 0usize;
        offsets.push(0);
        for d in &degree {
            total += d;
            offsets.push(total);
        }

        let mut adj = vec![0u32; total];
        let mut cursor = offsets[..n].to_vec();
        stream(&mut |u, v| {
            adj[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            adj[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        });

        // Sort each bucket, then drop duplicate entries in one compaction.
        for v in 0..n {
            adj[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        let mut write = 0usize;
        let mut new_offsets = Vec::with_capacity(n + 1);
        new_offsets.push(0);
        let mut read_start = 0usize;
        for v in 0..n {
            let read_end = offsets[v + 1];
            let mut prev: Option<u32> = None;
            for i in read_start..read_end {
                let w = adj[i];
                if prev != Some(w) {
                    adj[write] = w;
                    write += 1;
                    prev = Some(w);
                }
            }
            new_offsets.push(write);
            read_start = read_end;
        }
        adj.truncate(write);
        adj.shrink_to_fit();

        Graph {
            n,
            offsets: new_offsets,
            adj,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.len() / 2
    }

    /// Sorted open neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| u < v as usize)
                .map(move |&v| (u, v as usize))
        })
    }

    /// BFS distances from `source`; unreachable vertices are `None`.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::new();
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in self.neighbors(v) {
                if dist[w as usize].is_none() {
                    dist[w as usize] = Some(d + 1);
                    queue.push_back(w as usize);
                }
            }
        }
        dist
    }
}

/// Diameter of a graph; disconnected graphs have no finite diameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Unbounded,
}

/// Maximum shortest-path distance over all vertex pairs. The empty graph has
/// diameter 0 by convention; disconnected graphs are `Unbounded`.
pub fn diameter(g: &Graph) -> Diameter {
    if g.n() == 0 {
        return Diameter::Finite(0);
    }
    let mut max = 0usize;
    for v in 0..g.n() {
        for d in g.bfs_distances(v) {
            match d {
                Some(d) => max = max.max(d),
                None => return Diameter::Unbounded,
            }
        }
    }
    Diameter::Finite(max)
}
