//! Exhaustive census of conflict-free chromatic numbers over all graphs on
//! up to `max_n` vertices.
//!
//! Graphs are enumerated one isomorphism class at a time: every class on n
//! vertices arises by attaching a new vertex to some class on n−1 vertices,
//! so we extend canonical representatives level by level and deduplicate by
//! canonical form (minimum edge bitmask over all vertex permutations).

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::coloring::Mode;
use crate::graph::Graph;
use crate::solver::cf_chromatic_number;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum CensusError {
    #[error(
        "census up to n = {max_n} exceeds the guard of {guard}; pass a larger guard explicitly"
    )]
    AboveGuard { max_n: usize, guard: usize },
}

pub const DEFAULT_CENSUS_GUARD: usize = 7;

/// Maximum conflict-free chromatic number (closed mode) over all graphs on
/// n vertices, for each n in 1..=max_n. Guarded to `DEFAULT_CENSUS_GUARD`.
pub fn census(max_n: usize) -> Result<BTreeMap<usize, usize>, CensusError> {
    census_with_guard(max_n, DEFAULT_CENSUS_GUARD)
}

pub fn census_with_guard(
    max_n: usize,
    guard: usize,
) -> Result<BTreeMap<usize, usize>, CensusError> {
    if max_n > guard {
        return Err(CensusError::AboveGuard { max_n, guard });
    }
    let mut table = BTreeMap::new();
    if max_n == 0 {
        return Ok(table);
    }
    let mut level: BTreeSet<u64> = BTreeSet::new();
    level.insert(0); // K_1
    table.insert(1, 1);
    for n in 2..=max_n {
        let perms = permutations(n);
        let mut next: BTreeSet<u64> = BTreeSet::new();
        for &code in &level {
            // Attach vertex n-1 with every possible neighborhood.
            for mask in 0u64..(1 << (n - 1)) {
                let mut extended = code;
                for w in 0..(n - 1) {
                    if mask & (1 << w) != 0 {
                        extended |= 1 << pair_index(w, n - 1);
                    }
                }
                next.insert(canonical_code(extended, n, &perms));
            }
        }
        let mut max_chi = 0;
        for &code in &next {
            let g = graph_from_code(code, n);
            let (chi, _) = cf_chromatic_number(&g, Mode::Closed)
                .expect("closed-mode chromatic number always exists");
            max_chi = max_chi.max(chi);
        }
        table.insert(n, max_chi);
        level = next;
    }
    Ok(table)
}

/// Number of isomorphism classes per level; exposed for cross-checks.
pub fn canonical_graph_count(n: usize) -> usize {
    let mut level: BTreeSet<u64> = BTreeSet::new();
    level.insert(0);
    for m in 2..=n {
        let perms = permutations(m);
        let mut next = BTreeSet::new();
        for &code in &level {
            for mask in 0u64..(1 << (m - 1)) {
                let mut extended = code;
                for w in 0..(m - 1) {
                    if mask & (1 << w) != 0 {
                        extended |= 1 << pair_index(w, m - 1);
                    }
                }
                next.insert(canonical_code(extended, m, &perms));
            }
        }
        level = next;
    }
    level.len()
}

/// Index of the unordered pair {i, j}, i < j, in colexicographic order.
fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn canonical_code(code: u64, n: usize, perms: &[Vec<usize>]) -> u64 {
    let mut best = u64::MAX;
    for perm in perms {
        let mut permuted = 0u64;
        for j in 1..n {
            for i in 0..j {
                if code & (1 << pair_index(i, j)) != 0 {
                    let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                    permuted |= 1 << pair_index(a, b);
                }
            }
        }
        best = best.min(permuted);
    }
    best
}

fn graph_from_code(code: u64, n: usize) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code & (1 << pair_index(i, j)) != 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("codes only contain valid pairs")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}
