//! Reduction from positive 1-in-3-SAT to conflict-free 1-colorability.
//!
//! For a formula φ with k clauses, the graph G(φ) has, per variable, a cycle
//! of length 12k whose every third vertex is a *true vertex*; per clause, a
//! clause vertex c adjacent to three port vertices d1, d2, d3 plus two
//! nonadjacent enforcer vertices adjacent to exactly {d1, d2, d3}; and a
//! path of length 3 from each d_i to a dedicated true vertex of the
//! corresponding variable. In any conflict-free 1-coloring the enforcers
//! force exactly one of d1, d2, d3 to be colored, a cycle is colored on
//! exactly one of its three every-third rotations, and the connecting paths
//! tie "d_i colored" to "the variable's true vertices are colored" — so
//! G(φ) is 1-colorable iff φ has an assignment with exactly one true
//! variable per clause. That equivalence is certified by tests at desk
//! scale, not assumed.

use thiserror::Error;

use crate::generators::{GadgetGraph, Provenance, Role};
use crate::graph::Graph;
use crate::solver::enumerate_cf1_colorings;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum ReductionError {
    #[error("clause {index} references variable {var}, but only {vars} variables are declared")]
    VariableOutOfRange {
        index: usize,
        var: usize,
        vars: usize,
    },
    #[error("clause {index} must have three distinct variables, got {triple:?}")]
    NonDistinctClause { index: usize, triple: [usize; 3] },
    #[error("formula must have at least one clause")]
    NoClauses,
    #[error("variable {var} occurs in no clause")]
    UnusedVariable { var: usize },
    #[error("gadget analysis is guarded to {guard} vertices, G(φ) has {size}")]
    AboveGuard { size: usize, guard: usize },
    #[error("gadget analysis aborted after {cap} colorings")]
    TooManySolutions { cap: usize },
}

/// Positive 1-in-3 formula: clauses are unordered triples of distinct
/// variables; there are no negated literals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Formula1in3 {
    var_count: usize,
    clauses: Vec<[usize; 3]>,
}

impl Formula1in3 {
    pub fn new(var_count: usize, clauses: Vec<[usize; 3]>) -> Result<Formula1in3, ReductionError> {
        for (index, triple) in clauses.iter().enumerate() {
            for &var in triple {
                if var >= var_count {
                    return Err(ReductionError::VariableOutOfRange {
                        index,
                        var,
                        vars: var_count,
                    });
                }
            }
            if triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2] {
                return Err(ReductionError::NonDistinctClause {
                    index,
                    triple: *triple,
                });
            }
        }
        Ok(Formula1in3 { var_count, clauses })
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn clauses(&self) -> &[[usize; 3]] {
        &self.clauses
    }

    /// Brute-force 1-in-3 satisfiability: is there an assignment making
    /// exactly one variable of every clause true?
    pub fn is_satisfiable(&self) -> bool {
        assert!(
            self.var_count <= 24,
            "brute-force check is for small formulas"
        );
        (0u32..(1 << self.var_count)).any(|mask| {
            self.clauses
                .iter()
                .all(|triple| triple.iter().filter(|&&v| mask & (1 << v) != 0).count() == 1)
        })
    }
}

/// Layout of the generated G(φ), mapping structure back to vertex ids.
#[derive(Clone, Debug)]
pub struct ReductionLayout {
    /// Start of each variable cycle; cycles have length `12 * clause_count`.
    pub cycle_start: Vec<usize>,
    pub cycle_len: usize,
    /// Per clause: (clause vertex, [d1, d2, d3], [enforcer1, enforcer2]).
    pub clause_vertices: Vec<(usize, [usize; 3], [usize; 2])>,
}

/// Builds G(φ). Fails if the formula has no clauses or leaves a variable
/// unused (such a variable would have no true vertex to tie its cycle to
/// any clause, making the reduction vacuous for it).
pub fn gen_reduction(phi: &Formula1in3) -> Result<GadgetGraph, ReductionError> {
    gen_reduction_with_layout(phi).map(|(g, _)| g)
}

pub fn gen_reduction_with_layout(
    phi: &Formula1in3,
) -> Result<(GadgetGraph, ReductionLayout), ReductionError> {
    let k = phi.clauses().len();
    if k == 0 {
        return Err(ReductionError::NoClauses);
    }
    for var in 0..phi.var_count() {
        if !phi.clauses().iter().any(|t| t.contains(&var)) {
            return Err(ReductionError::UnusedVariable { var });
        }
    }

    let cycle_len = 12 * k;
    let n_vars = phi.var_count();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut roles: Vec<Role> = Vec::new();

    let cycle_start: Vec<usize> = (0..n_vars).map(|v| v * cycle_len).collect();
    for &start in &cycle_start {
        for i in 0..cycle_len {
            edges.push((start + i, start + (i + 1) % cycle_len));
            roles.push(if i % 3 == 0 {
                Role::TrueVertex
            } else {
                Role::CycleVertex
            });
        }
    }

    // Each variable hands out a fresh true vertex (positions 0, 3, 6, ...)
    // per clause occurrence; a cycle of length 12k has 4k of them, enough
    // for a variable occurring in every clause.
    let mut next_true_slot = vec![0usize; n_vars];
    let mut cursor = n_vars * cycle_len;
    let mut clause_vertices = Vec::new();
    for triple in phi.clauses() {
        let clause_vertex = cursor;
        roles.push(Role::ClauseVertex);
        cursor += 1;
        let mut ports = [0usize; 3];
        for (slot, &var) in triple.iter().enumerate() {
            let d = cursor;
            let p1 = cursor + 1;
            let p2 = cursor + 2;
            roles.extend([Role::PathVertex, Role::PathVertex, Role::PathVertex]);
            cursor += 3;
            ports[slot] = d;
            let true_vertex = cycle_start[var] + 3 * next_true_slot[var];
            next_true_slot[var] += 1;
            edges.push((clause_vertex, d));
            edges.push((d, p1));
            edges.push((p1, p2));
            edges.push((p2, true_vertex));
        }
        let enforcers = [cursor, cursor + 1];
        roles.extend([Role::Enforcer, Role::Enforcer]);
        cursor += 2;
        for &j in &enforcers {
            for &d in &ports {
                edges.push((j, d));
            }
        }
        clause_vertices.push((clause_vertex, ports, enforcers));
    }

    let graph = Graph::new(cursor, &edges).expect("construction stays in range");
    debug_assert_eq!(roles.len(), graph.n());
    Ok((
        GadgetGraph {
            graph,
            roles,
            provenance: Provenance::Reduction {
                formula: phi.clone(),
            },
        },
        ReductionLayout {
            cycle_start,
            cycle_len,
            clause_vertices,
        },
    ))
}

/// Structural facts certified over *all* conflict-free 1-colorings of G(φ).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetFlags {
    /// Every clause vertex is uncolored in every valid coloring.
    pub clause_uncolored: bool,
    /// Every variable cycle is colored on exactly one of its three
    /// every-third rotations in every valid coloring.
    pub every_third: bool,
}

pub const GADGET_ANALYSIS_GUARD: usize = 160;
const GADGET_SOLUTION_CAP: usize = 1_000_000;

/// Enumerates every conflict-free 1-coloring of G(φ) and checks the clause
/// and cycle structure on each. Errors out (rather than sampling) if the
/// instance is too large to enumerate exhaustively.
pub fn verify_gadget_properties(phi: &Formula1in3) -> Result<GadgetFlags, ReductionError> {
    let (gadget, layout) = gen_reduction_with_layout(phi)?;
    let n = gadget.graph.n();
    if n > GADGET_ANALYSIS_GUARD {
        return Err(ReductionError::AboveGuard {
            size: n,
            guard: GADGET_ANALYSIS_GUARD,
        });
    }
    let mut clause_uncolored = true;
    let mut every_third = true;
    let mut solutions = 0usize;
    let mut overflow = false;
    enumerate_cf1_colorings(&gadget.graph, |set| {
        solutions += 1;
        if solutions > GADGET_SOLUTION_CAP {
            overflow = true;
            return false;
        }
        let mut colored = vec![false; n];
        for &v in set {
            colored[v] = true;
        }
        for &(c, _, _) in &layout.clause_vertices {
            if colored[c] {
                clause_uncolored = false;
            }
        }
        for &start in &layout.cycle_start {
            if !is_every_third_rotation(&colored[start..start + layout.cycle_len]) {
                every_third = false;
            }
        }
        true
    });
    if overflow {
        return Err(ReductionError::TooManySolutions {
            cap: GADGET_SOLUTION_CAP,
        });
    }
    Ok(GadgetFlags {
        clause_uncolored,
        every_third,
    })
}

fn is_every_third_rotation(colored: &[bool]) -> bool {
    debug_assert_eq!(colored.len() % 3, 0);
    (0..3).any(|r| colored.iter().enumerate().all(|(i, &c)| c == (i % 3 == r)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::is_cf_1_colorable;

    fn formula(vars: usize, clauses: &[[usize; 3]]) -> Formula1in3 {
        Formula1in3::new(vars, clauses.to_vec()).unwrap()
    }

    #[test]
    fn formula_validation() {
        assert!(matches!(
            Formula1in3::new(3, vec![[0, 1, 3]]),
            Err(ReductionError::VariableOutOfRange { .. })
        ));
        assert!(matches!(
            Formula1in3::new(3, vec![[0, 1, 1]]),
            Err(ReductionError::NonDistinctClause { .. })
        ));
        assert!(matches!(
            gen_reduction(&formula(3, &[])),
            Err(ReductionError::NoClauses)
        ));
        assert!(matches!(
            gen_reduction(&formula(4, &[[0, 1, 2]])),
            Err(ReductionError::UnusedVariable { var: 3 })
        ));
    }

    #[test]
    fn satisfiability_brute_force() {
        assert!(formula(3, &[[0, 1, 2]]).is_satisfiable());
        // Each variable occurs in three of the four triples, so the number
        // of (clause, true var) incidences would have to be 3t = 4.
        let unsat = formula(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]);
        assert!(!unsat.is_satisfiable());
    }

    #[test]
    fn single_clause_reduction_shape() {
        let phi = formula(3, &[[0, 1, 2]]);
        let (gadget, layout) = gen_reduction_with_layout(&phi).unwrap();
        // Three 12-cycles plus clause vertex, 3 ports, 6 path vertices,
        // 2 enforcers.
        assert_eq!(gadget.graph.n(), 3 * 12 + 12);
        assert_eq!(layout.cycle_len, 12);
        let (c, ports, enforcers) = layout.clause_vertices[0];
        assert_eq!(gadget.roles[c], Role::ClauseVertex);
        for d in ports {
            assert!(gadget.graph.has_edge(c, d));
            assert!(gadget.graph.has_edge(enforcers[0], d));
            assert!(gadget.graph.has_edge(enforcers[1], d));
        }
        assert!(!gadget.graph.has_edge(enforcers[0], enforcers[1]));
        assert!(!gadget.graph.has_edge(c, enforcers[0]));
        // True vertices sit every third position along each cycle.
        for v in 0..3 {
            let start = layout.cycle_start[v];
            for i in 0..12 {
                let expected = if i % 3 == 0 {
                    Role::TrueVertex
                } else {
                    Role::CycleVertex
                };
                assert_eq!(gadget.roles[start + i], expected);
            }
        }
    }

    #[test]
    fn satisfiable_single_clause_is_one_colorable() {
        let phi = formula(3, &[[0, 1, 2]]);
        let gadget = gen_reduction(&phi).unwrap();
        assert!(phi.is_satisfiable());
        assert!(is_cf_1_colorable(&gadget.graph).is_some());
    }

    #[test]
    fn unsatisfiable_formula_is_not_one_colorable() {
        let phi = formula(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]);
        let gadget = gen_reduction(&phi).unwrap();
        assert!(!phi.is_satisfiable());
        assert!(is_cf_1_colorable(&gadget.graph).is_none());
    }

    #[test]
    fn gadget_flags_on_single_clause() {
        let phi = formula(3, &[[0, 1, 2]]);
        let flags = verify_gadget_properties(&phi).unwrap();
        assert!(flags.clause_uncolored);
        assert!(flags.every_third);
    }

    #[test]
    fn gadget_flags_with_shared_variable() {
        let phi = formula(5, &[[0, 1, 2], [0, 3, 4]]);
        let flags = verify_gadget_properties(&phi).unwrap();
        assert!(flags.clause_uncolored);
        assert!(flags.every_third);
    }

    #[test]
    fn analysis_guard_trips_on_large_formulas() {
        let phi = formula(6, &[[0, 1, 2], [3, 4, 5], [0, 3, 4], [1, 2, 5], [0, 1, 5]]);
        assert!(matches!(
            verify_gadget_properties(&phi),
            Err(ReductionError::AboveGuard { .. })
        ));
    }

    #[test]
    fn rotation_predicate() {
        assert!(is_every_third_rotation(&[
            true, false, false, true, false, false
        ]));
        assert!(is_every_third_rotation(&[
            false, false, true, false, false, true
        ]));
        assert!(!is_every_third_rotation(&[
            true, false, false, false, true, false
        ]));
        assert!(!is_every_third_rotation(&[false; 6]));
    }
}
