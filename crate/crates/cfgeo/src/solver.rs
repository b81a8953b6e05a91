//! Exact decision and optimization for conflict-free k-colorability.
//!
//! The pruned backtracking solver is the workhorse; an unpruned brute-force
//! enumerator over all partial colorings is kept alongside it as an
//! anti-bug oracle for small graphs, and a specialized perfect-code search
//! answers the one-color question.

use crate::coloring::{Mode, PartialColoring};
use crate::graph::Graph;

/// Result of a budgeted solve. `OutOfBudget` is an explicit "inconclusive"
/// outcome, distinct from proven infeasibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Colorable(PartialColoring),
    Infeasible,
    OutOfBudget,
}

impl SolveOutcome {
    pub fn into_option(self) -> Option<PartialColoring> {
        match self {
            SolveOutcome::Colorable(c) => Some(c),
            SolveOutcome::Infeasible => None,
            SolveOutcome::OutOfBudget => panic!("solver ran out of budget"),
        }
    }
}

/// Outcome of the chromatic-number search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChromaticOutcome {
    Found {
        k: usize,
        witness: PartialColoring,
    },
    /// No palette of any size works. Only possible in open mode, where an
    /// isolated vertex has nothing to draw a uniquely colored neighbor from.
    NoneExists,
    OutOfBudget,
}

/// Decides conflict-free k-colorability, returning a witness on success.
/// Deterministic: fixed search order, so repeated runs yield the same
/// witness (the first complete assignment in that order).
pub fn is_cf_k_colorable(g: &Graph, k: usize, mode: Mode) -> Option<PartialColoring> {
    solve_cf_k(g, k, mode, None).into_option()
}

/// Budgeted variant: `budget` caps the number of node expansions.
pub fn solve_cf_k(g: &Graph, k: usize, mode: Mode, budget: Option<u64>) -> SolveOutcome {
    Searcher::new(g, k, mode, budget).run()
}

/// Smallest k admitting a conflict-free coloring, with witness. `None` is
/// only possible in open mode (isolated vertex).
pub fn cf_chromatic_number(g: &Graph, mode: Mode) -> Option<(usize, PartialColoring)> {
    match cf_chromatic_number_with_budget(g, mode, None) {
        ChromaticOutcome::Found { k, witness } => Some((k, witness)),
        ChromaticOutcome::NoneExists => None,
        ChromaticOutcome::OutOfBudget => unreachable!("no budget was set"),
    }
}

/// Chromatic search with a per-k node budget.
pub fn cf_chromatic_number_with_budget(
    g: &Graph,
    mode: Mode,
    budget: Option<u64>,
) -> ChromaticOutcome {
    // Coloring every vertex with a distinct color is valid in closed mode,
    // and in open mode whenever no vertex is isolated; so k = n decides.
    for k in 0..=g.n() {
        match solve_cf_k(g, k, mode, budget) {
            SolveOutcome::Colorable(witness) => return ChromaticOutcome::Found { k, witness },
            SolveOutcome::Infeasible => continue,
            SolveOutcome::OutOfBudget => return ChromaticOutcome::OutOfBudget,
        }
    }
    ChromaticOutcome::NoneExists
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Value {
    Unset,
    Uncolored,
    Color(u32),
}

enum DfsResult {
    Found,
    Exhausted,
    Budget,
}

/// Backtracking search. Vertex domains are {uncolored, 1..=k}. A vertex is
/// pruned as soon as no color can possibly occur exactly once in its
/// neighborhood: every color either already occurs twice among decided
/// vertices, or occurs zero times with no undecided neighbor left to take
/// it. Colors are introduced in canonical order (the i-th distinct color
/// used is color i), which breaks palette symmetry.
///
/// The next branching vertex is the one with the most decided neighbors
/// (ties: more decided-uncolored neighbors, higher degree, lower id).
/// This fail-first order lets the Lemma-style gadget arguments bite early:
/// once both attached copies of a subgadget are decided, the vertex they
/// guard is checked immediately.
struct Searcher<'g> {
    g: &'g Graph,
    k: usize,
    nbhd: Vec<Vec<u32>>,
    values: Vec<Value>,
    counts: Vec<Vec<u32>>,
    undecided: Vec<u32>,
    decided_nb: Vec<u32>,
    uncolored_nb: Vec<u32>,
    unset_left: usize,
    nodes: u64,
    budget: Option<u64>,
    witness: Option<PartialColoring>,
}

impl<'g> Searcher<'g> {
    fn new(g: &'g Graph, k: usize, mode: Mode, budget: Option<u64>) -> Self {
        let n = g.n();
        let nbhd: Vec<Vec<u32>> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).to_vec();
                if mode == Mode::Closed {
                    let pos = nb.partition_point(|&w| (w as usize) < v);
                    nb.insert(pos, v as u32);
                }
                nb
            })
            .collect();
        let undecided = nbhd.iter().map(|nb| nb.len() as u32).collect();
        Searcher {
            g,
            k,
            nbhd,
            values: vec![Value::Unset; n],
            counts: vec![vec![0; k + 1]; n],
            undecided,
            decided_nb: vec![0; n],
            uncolored_nb: vec![0; n],
            unset_left: n,
            nodes: 0,
            budget,
            witness: None,
        }
    }

    fn run(mut self) -> SolveOutcome {
        // A vertex with an empty neighborhood (open mode), or any vertex
        // when k = 0, can never gain a uniquely colored neighbor.
        for v in 0..self.g.n() {
            if !self.feasible(v) {
                return SolveOutcome::Infeasible;
            }
        }
        match self.dfs(0) {
            DfsResult::Found => SolveOutcome::Colorable(self.witness.expect("witness recorded")),
            DfsResult::Exhausted => SolveOutcome::Infeasible,
            DfsResult::Budget => SolveOutcome::OutOfBudget,
        }
    }

    fn feasible(&self, v: usize) -> bool {
        let counts = &self.counts[v];
        let free = self.undecided[v] > 0;
        (1..=self.k).any(|c| counts[c] == 1 || (counts[c] == 0 && free))
    }

    fn select(&self) -> Option<usize> {
        let mut best: Option<(u32, u32, usize, usize)> = None;
        for v in 0..self.g.n() {
            if self.values[v] != Value::Unset {
                continue;
            }
            let key = (
                self.decided_nb[v],
                self.uncolored_nb[v],
                self.g.degree(v),
                v,
            );
            let better = match best {
                None => true,
                Some((d, u, deg, id)) => {
                    (key.0, key.1, key.2, std::cmp::Reverse(key.3))
                        > (d, u, deg, std::cmp::Reverse(id))
                }
            };
            if better {
                best = Some(key);
            }
        }
        best.map(|(_, _, _, v)| v)
    }

    fn assign(&mut self, v: usize, value: Value) -> bool {
        self.values[v] = value;
        self.unset_left -= 1;
        let i = match value {
            Value::Color(c) => c as usize,
            _ => 0,
        };
        for idx in 0..self.nbhd[v].len() {
            let u = self.nbhd[v][idx] as usize;
            self.undecided[u] -= 1;
            if i > 0 {
                self.counts[u][i] += 1;
            }
        }
        for &u in self.g.neighbors(v) {
            self.decided_nb[u as usize] += 1;
            if value == Value::Uncolored {
                self.uncolored_nb[u as usize] += 1;
            }
        }
        // Only vertices whose neighborhood contains v can have worsened.
        (0..self.nbhd[v].len()).all(|idx| self.feasible(self.nbhd[v][idx] as usize))
    }

    fn unassign(&mut self, v: usize, value: Value) {
        let i = match value {
            Value::Color(c) => c as usize,
            _ => 0,
        };
        for idx in 0..self.nbhd[v].len() {
            let u = self.nbhd[v][idx] as usize;
            self.undecided[u] += 1;
            if i > 0 {
                self.counts[u][i] -= 1;
            }
        }
        for &u in self.g.neighbors(v) {
            self.decided_nb[u as usize] -= 1;
            if value == Value::Uncolored {
                self.uncolored_nb[u as usize] -= 1;
            }
        }
        self.values[v] = Value::Unset;
        self.unset_left += 1;
    }

    fn dfs(&mut self, max_used: u32) -> DfsResult {
        let Some(v) = self.select() else {
            // Complete assignment: every neighborhood is fully decided and
            // passed the feasibility check, which is exactly the
            // conflict-free condition.
            self.record_witness();
            return DfsResult::Found;
        };
        let color_limit = (max_used + 1).min(self.k as u32);
        for choice in 0..=color_limit {
            let value = if choice == 0 {
                Value::Uncolored
            } else {
                Value::Color(choice)
            };
            self.nodes += 1;
            if let Some(b) = self.budget {
                if self.nodes > b {
                    return DfsResult::Budget;
                }
            }
            let ok = self.assign(v, value);
            if ok {
                match self.dfs(max_used.max(choice)) {
                    DfsResult::Exhausted => {}
                    found_or_budget => {
                        self.unassign(v, value);
                        return found_or_budget;
                    }
                }
            }
            self.unassign(v, value);
        }
        DfsResult::Exhausted
    }

    fn record_witness(&mut self) {
        let assignment = self
            .values
            .iter()
            .map(|v| match v {
                Value::Color(c) => Some(*c as usize),
                _ => None,
            })
            .collect();
        self.witness =
            Some(PartialColoring::new(self.k, assignment).expect("solver colors stay in palette"));
    }
}

/// Vertex sets S such that every closed neighborhood contains exactly one
/// member of S (perfect codes), i.e.
/// conflict-free 1-colorings in closed mode. Returns the first solution of
/// the deterministic search, as a sorted vertex set, or `None`.
pub fn is_cf_1_colorable(g: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    enumerate_cf1_colorings(g, |s| {
        found = Some(s.to_vec());
        false
    });
    found
}

/// Enumerates every perfect code of `g`, invoking `visit` with each solution
/// as a sorted vertex set; return `false` from the visitor to stop early.
pub fn enumerate_cf1_colorings(g: &Graph, mut visit: impl FnMut(&[usize]) -> bool) {
    let n = g.n();
    let mut dominated = vec![false; n];
    let mut set = Vec::new();
    let mut emit = |s: &[usize]| {
        let mut sorted = s.to_vec();
        sorted.sort_unstable();
        visit(&sorted)
    };
    cf1_rec(g, &mut dominated, 0, &mut set, &mut emit);
}

fn cf1_rec(
    g: &Graph,
    dominated: &mut [bool],
    undominated_from: usize,
    set: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let mut v = undominated_from;
    while v < g.n() && dominated[v] {
        v += 1;
    }
    if v == g.n() {
        return visit(set);
    }
    // Exactly one member of S must lie in N[v]; branch over it. A candidate
    // is viable only if its whole closed neighborhood is still undominated,
    // otherwise some vertex would be dominated twice.
    let mut candidates: Vec<usize> = g.neighbors(v).iter().map(|&w| w as usize).collect();
    candidates.push(v);
    candidates.sort_unstable();
    for u in candidates {
        let viable = !dominated[u] && g.neighbors(u).iter().all(|&w| !dominated[w as usize]);
        if !viable {
            continue;
        }
        dominated[u] = true;
        for &w in g.neighbors(u) {
            dominated[w as usize] = true;
        }
        set.push(u);
        let keep_going = cf1_rec(g, dominated, v, set, visit);
        set.pop();
        dominated[u] = false;
        for &w in g.neighbors(u) {
            dominated[w as usize] = false;
        }
        if !keep_going {
            return false;
        }
    }
    true
}

/// Unpruned brute-force oracle: enumerates all (k+1)^n partial colorings and
/// checks each complete assignment. Exponential; guarded to small n.
pub fn brute_force_cf_k(g: &Graph, k: usize, mode: Mode) -> Option<PartialColoring> {
    let mut found = None;
    brute_force_for_each_valid(g, k, mode, |c| {
        found = Some(c.clone());
        false
    });
    found
}

/// Visits every valid conflict-free k-coloring of `g` (all (k+1)^n
/// assignments are tried; no pruning). Visitor returns `false` to stop.
pub fn brute_force_for_each_valid(
    g: &Graph,
    k: usize,
    mode: Mode,
    mut visit: impl FnMut(&PartialColoring) -> bool,
) {
    let n = g.n();
    assert!(n <= 24, "brute-force oracle is for small graphs only");
    let masks: Vec<u64> = (0..n)
        .map(|v| {
            let mut m = 0u64;
            for &w in g.neighbors(v) {
                m |= 1 << w;
            }
            if mode == Mode::Closed {
                m |= 1 << v;
            }
            m
        })
        .collect();
    let mut color_masks = vec![0u64; k + 1];
    let mut assignment = vec![None; n];
    brute_rec(
        g,
        k,
        &masks,
        &mut color_masks,
        &mut assignment,
        0,
        &mut visit,
    );
}

fn brute_rec(
    g: &Graph,
    k: usize,
    masks: &[u64],
    color_masks: &mut Vec<u64>,
    assignment: &mut Vec<Option<usize>>,
    v: usize,
    visit: &mut impl FnMut(&PartialColoring) -> bool,
) -> bool {
    if v == g.n() {
        let valid =
            (0..g.n()).all(|u| (1..=k).any(|c| (masks[u] & color_masks[c]).count_ones() == 1));
        if valid {
            let coloring = PartialColoring::new(k, assignment.clone()).expect("palette respected");
            return visit(&coloring);
        }
        return true;
    }
    for choice in 0..=k {
        if choice > 0 {
            color_masks[choice] |= 1 << v;
            assignment[v] = Some(choice);
        }
        let keep_going = brute_rec(g, k, masks, color_masks, assignment, v + 1, visit);
        if choice > 0 {
            color_masks[choice] &= !(1 << v);
            assignment[v] = None;
        }
        if !keep_going {
            return false;
        }
    }
    true
}
