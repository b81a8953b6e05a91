//! Domination number, minimum-dominating-set structure checks, and the
//! minimum number of colored vertices over all conflict-free colorings.

use crate::coloring::{verify_cf, Mode, PartialColoring};
use crate::graph::{diameter, Diameter, Graph};

/// Exact domination number via branch and bound seeded with a greedy upper
/// bound. Intended for n ≤ 40 or so; the empty graph has γ = 0.
pub fn domination_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let greedy = greedy_dominating_set(g).len();
    let mut best = greedy;
    let mut covered = vec![0usize; g.n()];
    branch(g, &mut covered, g.n(), 0, &mut best);
    best
}

fn greedy_dominating_set(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut covered = vec![false; n];
    let mut uncovered = n;
    let mut set = Vec::new();
    while uncovered > 0 {
        let mut best_v = 0;
        let mut best_gain = 0;
        for v in 0..n {
            let gain = std::iter::once(v as u32)
                .chain(g.neighbors(v).iter().copied())
                .filter(|&w| !covered[w as usize])
                .count();
            if gain > best_gain {
                best_gain = gain;
                best_v = v;
            }
        }
        set.push(best_v);
        for w in std::iter::once(best_v as u32).chain(g.neighbors(best_v).iter().copied()) {
            if !covered[w as usize] {
                covered[w as usize] = true;
                uncovered -= 1;
            }
        }
    }
    set
}

fn branch(g: &Graph, covered: &mut [usize], uncovered: usize, chosen: usize, best: &mut usize) {
    if uncovered == 0 {
        *best = (*best).min(chosen);
        return;
    }
    if chosen + 1 >= *best {
        return;
    }
    // Coarse bound: each further pick covers at most Δ+1 vertices.
    let max_cover = (0..g.n()).map(|v| g.degree(v) + 1).max().unwrap_or(1);
    if chosen + uncovered.div_ceil(max_cover) >= *best {
        return;
    }
    // Branch on who dominates the uncovered vertex with fewest candidates.
    let v = (0..g.n())
        .filter(|&v| covered[v] == 0)
        .min_by_key(|&v| g.degree(v))
        .unwrap();
    let candidates: Vec<usize> = std::iter::once(v as u32)
        .chain(g.neighbors(v).iter().copied())
        .map(|w| w as usize)
        .collect();
    for u in candidates {
        let mut newly = 0;
        for w in std::iter::once(u as u32).chain(g.neighbors(u).iter().copied()) {
            if covered[w as usize] == 0 {
                newly += 1;
            }
            covered[w as usize] += 1;
        }
        branch(g, covered, uncovered - newly, chosen + 1, best);
        for w in std::iter::once(u as u32).chain(g.neighbors(u).iter().copied()) {
            covered[w as usize] -= 1;
        }
    }
}

fn is_dominating(g: &Graph, set: &[usize]) -> bool {
    let mut covered = vec![false; g.n()];
    for &u in set {
        covered[u] = true;
        for &w in g.neighbors(u) {
            covered[w as usize] = true;
        }
    }
    covered.iter().all(|&c| c)
}

/// All dominating sets of exactly the given size, ascending lexicographically.
pub fn dominating_sets_of_size(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        g: &Graph,
        size: usize,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            if is_dominating(g, current) {
                out.push(current.clone());
            }
            return;
        }
        let remaining = size - current.len();
        for v in start..g.n().saturating_sub(remaining - 1) {
            current.push(v);
            rec(g, size, v + 1, current, out);
            current.pop();
        }
    }
    rec(g, size, 0, &mut current, &mut out);
    out
}

/// Structure checks for unit disk graphs squeezed into a 2×2 square that
/// would need a third color.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AreaConditions {
    /// γ(G) = 3 and in every minimum dominating set each pair of dominators
    /// has a common neighbor distinct from and non-adjacent to the third
    /// (the witness that the set lies on a 6-cycle).
    pub cond1: bool,
    /// The graph has diameter exactly 2.
    pub cond2: bool,
}

pub fn check_area_conditions(g: &Graph) -> AreaConditions {
    let cond2 = diameter(g) == Diameter::Finite(2);
    let gamma = domination_number(g);
    if gamma != 3 {
        return AreaConditions {
            cond1: false,
            cond2,
        };
    }
    let mut cond1 = true;
    'sets: for set in dominating_sets_of_size(g, 3) {
        for i in 0..3 {
            for j in (i + 1)..3 {
                let a = set[i];
                let b = set[j];
                let third = set[3 - i - j];
                let witness = (0..g.n()).any(|x| {
                    x != a
                        && x != b
                        && x != third
                        && g.has_edge(x, a)
                        && g.has_edge(x, b)
                        && !g.has_edge(x, third)
                });
                if !witness {
                    cond1 = false;
                    break 'sets;
                }
            }
        }
    }
    AreaConditions { cond1, cond2 }
}

/// Minimum number of colored vertices over all valid conflict-free
/// k-colorings of `g` (closed mode), or `None` if no such coloring exists.
/// Exhaustive search ordered by colored-set size; desk scale only.
pub fn min_colored_vertices(g: &Graph, k: usize) -> Option<usize> {
    assert!(k >= 1, "palette must contain at least one color");
    for size in 0..=g.n() {
        let mut chosen = Vec::new();
        if try_size(g, k, 0, size, &mut chosen) {
            return Some(size);
        }
    }
    None
}

fn try_size(g: &Graph, k: usize, start: usize, remaining: usize, chosen: &mut Vec<usize>) -> bool {
    if remaining == 0 {
        return color_subset(g, k, chosen, 0, 0, &mut vec![None; g.n()]);
    }
    for v in start..=g.n().saturating_sub(remaining) {
        chosen.push(v);
        if try_size(g, k, v + 1, remaining - 1, chosen) {
            chosen.pop();
            return true;
        }
        chosen.pop();
    }
    false
}

fn color_subset(
    g: &Graph,
    k: usize,
    chosen: &[usize],
    idx: usize,
    max_used: usize,
    assignment: &mut Vec<Option<usize>>,
) -> bool {
    if idx == chosen.len() {
        let coloring = PartialColoring::new(k, assignment.clone()).expect("colors stay in palette");
        return verify_cf(g, &coloring, Mode::Closed)
            .expect("length matches by construction")
            .valid;
    }
    // New colors enter in canonical order, pruning palette symmetries.
    for c in 1..=k.min(max_used + 1) {
        assignment[chosen[idx]] = Some(c);
        if color_subset(g, k, chosen, idx + 1, max_used.max(c), assignment) {
            assignment[chosen[idx]] = None;
            return true;
        }
        assignment[chosen[idx]] = None;
    }
    false
}
