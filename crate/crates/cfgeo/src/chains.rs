//! Chains: m mutually intersecting objects such that every index interval
//! [i, j] ⊆ {1..m} is witnessed by a region covered by exactly those
//! objects. Abstractly this is the hypergraph of all intervals on {1..m};
//! a conflict-free coloring must give every interval a uniquely colored
//! element, which forces ⌊log₂ m⌋ + 1 colors. The ruler coloring
//! (color(i) = ν₂(i) + 1) attains the bound.

use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum ChainError {
    #[error("chains have at least one element")]
    EmptyChain,
    #[error("chain oracle is exhaustive and guarded to m <= {guard}, got m = {m}")]
    AboveGuard { m: usize, guard: usize },
}

pub const CHAIN_ORACLE_GUARD: usize = 8;

/// A chain of length m; its hyperedges are implicitly all index intervals
/// [i, j] with 1 ≤ i ≤ j ≤ m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainSpec {
    m: usize,
}

impl ChainSpec {
    pub fn new(m: usize) -> Result<ChainSpec, ChainError> {
        if m == 0 {
            return Err(ChainError::EmptyChain);
        }
        Ok(ChainSpec { m })
    }

    pub fn length(&self) -> usize {
        self.m
    }

    /// All hyperedges as 1-based inclusive position ranges, in (i, j) order.
    pub fn intervals(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.m).flat_map(move |i| (i..=self.m).map(move |j| (i, j)))
    }
}

/// Minimum colors for a chain of length m, with the ruler coloring as a
/// witness (1-indexed positions; `witness[i-1]` is the color of element i).
/// The witness is checked against every interval before returning.
pub fn chain_min_colors(m: usize) -> (usize, Vec<usize>) {
    assert!(m >= 1, "chains have at least one element");
    let k = m.ilog2() as usize + 1;
    let witness: Vec<usize> = (1..=m).map(|i| i.trailing_zeros() as usize + 1).collect();
    assert!(
        chain_coloring_is_conflict_free(&witness),
        "ruler coloring must give every interval a unique element"
    );
    debug_assert_eq!(witness.iter().max(), Some(&k));
    (k, witness)
}

/// Does every interval [i, j] contain an element whose color is unique
/// within the interval? O(m²) incremental scan.
pub fn chain_coloring_is_conflict_free(colors: &[usize]) -> bool {
    let m = colors.len();
    let max_color = colors.iter().copied().max().unwrap_or(0);
    for i in 0..m {
        let mut counts = vec![0usize; max_color + 1];
        let mut uniques = 0usize;
        for &c in &colors[i..m] {
            counts[c] += 1;
            if counts[c] == 1 {
                uniques += 1;
            } else if counts[c] == 2 {
                uniques -= 1;
            }
            if uniques == 0 {
                return false;
            }
        }
    }
    true
}

/// Brute-force minimum color count over all full colorings of the chain.
/// Independent of the ruler construction; guarded to small m.
pub fn chain_oracle(m: usize) -> Result<usize, ChainError> {
    if m > CHAIN_ORACLE_GUARD {
        return Err(ChainError::AboveGuard {
            m,
            guard: CHAIN_ORACLE_GUARD,
        });
    }
    assert!(m >= 1, "chains have at least one element");
    for k in 1..=m {
        let mut colors = vec![1usize; m];
        if try_all(&mut colors, 0, k) {
            return Ok(k);
        }
    }
    unreachable!("m distinct colors always work");
}

fn try_all(colors: &mut Vec<usize>, idx: usize, k: usize) -> bool {
    if idx == colors.len() {
        return chain_coloring_is_conflict_free(colors);
    }
    for c in 1..=k {
        colors[idx] = c;
        if try_all(colors, idx + 1, k) {
            return true;
        }
    }
    false
}
