//! Lower-bound gadget families, named example graphs, and seeded random
//! instances.
//!
//! The G_n family composes a base clique K_n with recursively built copies:
//! two disjoint copies of G_{n−1} attached to each base vertex and two
//! disjoint copies of G_{n−2} attached to each base pair force every base
//! vertex to be colored with a distinct color, so χ_CF(G_n) = n. The D_k
//! family replaces the clique by a chain of 2^(k−1) mutually intersecting
//! objects, with two copies of D_{k−1} per chain interval.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::geometry::{GeoObject, GeoShape, GeometricInstance, Point, Rational, ShapeKind};
use crate::graph::Graph;
use crate::recurrences::{gen_dk_size, recurrence_gn, to_usize};
use crate::reduction::Formula1in3;
use crate::rng::SplitMix64;
use num_traits::{Signed, ToPrimitive};

#[derive(Error, Debug, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("construction parameter must be at least 1")]
    ZeroParameter,
}

/// Role a vertex plays inside a generated construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    /// Vertex of the base clique of G_n (or of G_1/G_2 at the top level).
    BaseClique,
    /// Vertex inside an attached copy of G_level or D_level.
    Copy {
        level: u32,
    },
    /// Chain vertex of D_k, 1-based position along the chain.
    Chain {
        index: u32,
    },
    ClauseVertex,
    Enforcer,
    TrueVertex,
    CycleVertex,
    PathVertex,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::BaseClique => write!(f, "base-clique"),
            Role::Copy { level } => write!(f, "copy:{level}"),
            Role::Chain { index } => write!(f, "chain:{index}"),
            Role::ClauseVertex => write!(f, "clause-vertex"),
            Role::Enforcer => write!(f, "enforcer"),
            Role::TrueVertex => write!(f, "true-vertex"),
            Role::CycleVertex => write!(f, "cycle-vertex"),
            Role::PathVertex => write!(f, "path-vertex"),
        }
    }
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> Result<Role, String> {
        match s {
            "base-clique" => return Ok(Role::BaseClique),
            "clause-vertex" => return Ok(Role::ClauseVertex),
            "enforcer" => return Ok(Role::Enforcer),
            "true-vertex" => return Ok(Role::TrueVertex),
            "cycle-vertex" => return Ok(Role::CycleVertex),
            "path-vertex" => return Ok(Role::PathVertex),
            _ => {}
        }
        if let Some(level) = s.strip_prefix("copy:") {
            return level
                .parse()
                .map(|level| Role::Copy { level })
                .map_err(|e| format!("bad copy level: {e}"));
        }
        if let Some(index) = s.strip_prefix("chain:") {
            return index
                .parse()
                .map(|index| Role::Chain { index })
                .map_err(|e| format!("bad chain index: {e}"));
        }
        Err(format!("unknown role {s:?}"))
    }
}

/// Construction parameters a gadget graph was generated from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Gn { n: usize },
    Dk { k: usize },
    Reduction { formula: Formula1in3 },
}

/// A generated graph together with per-vertex role labels.
#[derive(Clone, Debug)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub provenance: Provenance,
}

/// G_n: χ_CF(G_n) = n. G_1 is a single vertex, G_2 = C_4; for n ≥ 3 a base
/// clique K_n carries two copies of G_{n−1} per vertex (adjacent to exactly
/// that vertex) and two copies of G_{n−2} per pair (adjacent to exactly that
/// pair). Vertex count equals `recurrence_gn(n)`.
pub fn gen_gn(n: usize) -> Result<GadgetGraph, GeneratorError> {
    if n == 0 {
        return Err(GeneratorError::ZeroParameter);
    }
    let sizes: Vec<usize> = std::iter::once(0)
        .chain((1..=n).map(|i| to_usize(&recurrence_gn(i))))
        .collect();
    let total = sizes[n];
    let graph = Graph::from_edge_stream(total, |emit| emit_gn(n, 0, &sizes, emit));

    let mut roles = vec![Role::BaseClique; total];
    if n >= 3 {
        let mut cursor = n;
        for _v in 0..n {
            for _ in 0..2 {
                let level = (n - 1) as u32;
                roles[cursor..cursor + sizes[n - 1]].fill(Role::Copy { level });
                cursor += sizes[n - 1];
            }
        }
        for _v in 0..n {
            for _w in (_v + 1)..n {
                for _ in 0..2 {
                    let level = (n - 2) as u32;
                    roles[cursor..cursor + sizes[n - 2]].fill(Role::Copy { level });
                    cursor += sizes[n - 2];
                }
            }
        }
        debug_assert_eq!(cursor, total);
    }
    Ok(GadgetGraph {
        graph,
        roles,
        provenance: Provenance::Gn { n },
    })
}

fn emit_gn(n: usize, offset: usize, sizes: &[usize], emit: &mut dyn FnMut(u32, u32)) {
    match n {
        1 => {}
        2 => {
            let o = offset as u32;
            emit(o, o + 1);
            emit(o + 1, o + 2);
            emit(o + 2, o + 3);
            emit(o + 3, o);
        }
        _ => {
            for i in 0..n {
                for j in (i + 1)..n {
                    emit((offset + i) as u32, (offset + j) as u32);
                }
            }
            let mut cursor = offset + n;
            for v in 0..n {
                for _ in 0..2 {
                    emit_gn(n - 1, cursor, sizes, emit);
                    for w in cursor..cursor + sizes[n - 1] {
                        emit((offset + v) as u32, w as u32);
                    }
                    cursor += sizes[n - 1];
                }
            }
            for v in 0..n {
                for w in (v + 1)..n {
                    for _ in 0..2 {
                        emit_gn(n - 2, cursor, sizes, emit);
                        for u in cursor..cursor + sizes[n - 2] {
                            emit((offset + v) as u32, u as u32);
                            emit((offset + w) as u32, u as u32);
                        }
                        cursor += sizes[n - 2];
                    }
                }
            }
        }
    }
}

/// Index ranges of the base clique and its attached G_{n−1} copies, for
/// gadget-level analysis: (base vertex, two copy ranges) per base vertex.
pub fn gn_vertex_gadgets(n: usize) -> Vec<(usize, [std::ops::Range<usize>; 2])> {
    if n < 3 {
        return Vec::new();
    }
    let sizes: Vec<usize> = std::iter::once(0)
        .chain((1..=n).map(|i| to_usize(&recurrence_gn(i))))
        .collect();
    let mut out = Vec::new();
    let mut cursor = n;
    for v in 0..n {
        let first = cursor..cursor + sizes[n - 1];
        cursor += sizes[n - 1];
        let second = cursor..cursor + sizes[n - 1];
        cursor += sizes[n - 1];
        out.push((v, [first, second]));
    }
    out
}

/// D_k: χ_CF(D_k) = k. D_1 is a single vertex; for k ≥ 2 a chain of
/// m = 2^(k−1) pairwise-adjacent vertices carries, for every interval
/// [i, j] of chain positions, two disjoint copies of D_{k−1} whose vertices
/// are adjacent to exactly the chain vertices i..j.
pub fn gen_dk(k: usize) -> Result<GadgetGraph, GeneratorError> {
    if k == 0 {
        return Err(GeneratorError::ZeroParameter);
    }
    let sizes: Vec<usize> = std::iter::once(0)
        .chain((1..=k).map(|i| to_usize(&gen_dk_size(i))))
        .collect();
    let total = sizes[k];
    let graph = Graph::from_edge_stream(total, |emit| emit_dk(k, 0, &sizes, emit));

    let mut roles = vec![Role::Chain { index: 1 }; total];
    if k >= 2 {
        let m = 1usize << (k - 1);
        for (i, role) in roles.iter_mut().enumerate().take(m) {
            *role = Role::Chain {
                index: (i + 1) as u32,
            };
        }
        roles[m..].fill(Role::Copy {
            level: (k - 1) as u32,
        });
    }
    Ok(GadgetGraph {
        graph,
        roles,
        provenance: Provenance::Dk { k },
    })
}

fn emit_dk(k: usize, offset: usize, sizes: &[usize], emit: &mut dyn FnMut(u32, u32)) {
    if k == 1 {
        return;
    }
    let m = 1usize << (k - 1);
    for i in 0..m {
        for j in (i + 1)..m {
            emit((offset + i) as u32, (offset + j) as u32);
        }
    }
    let mut cursor = offset + m;
    for i in 0..m {
        for j in i..m {
            for _ in 0..2 {
                emit_dk(k - 1, cursor, sizes, emit);
                for u in cursor..cursor + sizes[k - 1] {
                    for c in i..=j {
                        emit((offset + c) as u32, u as u32);
                    }
                }
                cursor += sizes[k - 1];
            }
        }
    }
}

/// Bull graph: triangle {0, 1, 2} with pendant 3 at 0 and pendant 4 at 1.
pub fn bull_graph() -> Graph {
    Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)]).expect("static edge list")
}

/// The Bull as a unit interval instance: length-2 intervals centered at
/// 0, 2, 3, 4, 6 (ids in center order; the triangle is {1, 2, 3}).
pub fn bull_interval_instance() -> GeometricInstance {
    GeometricInstance::intervals(
        [0i64, 2, 3, 4, 6]
            .iter()
            .map(|&c| {
                (
                    crate::geometry::rational_int(c - 1),
                    crate::geometry::rational_int(c + 1),
                )
            })
            .collect(),
    )
    .expect("static intervals are well-formed")
}

pub fn c4_graph() -> Graph {
    Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).expect("static edge list")
}

/// Star K_{1,leaves}: center 0.
pub fn star_graph(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::new(leaves + 1, &edges).expect("static edge list")
}

/// Path on n vertices.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges).expect("static edge list")
}

/// Grid resolution for random coordinates: multiples of 1/1000 keep the
/// instances exact and reproducible.
const GRID: i64 = 1000;

/// Seeded random instance with centers in [0, width] × [0, height], snapped
/// to the 1/1000 grid. Interval instances take lo from [0, width] and
/// length from [0, height]; non-unit disks and squares get an extent from
/// (0, 1]. Deterministic per seed.
pub fn random_instance(
    kind: ShapeKind,
    n: usize,
    width: &Rational,
    height: &Rational,
    seed: u64,
) -> GeometricInstance {
    assert!(!width.is_negative() && !height.is_negative());
    let mut rng = SplitMix64::new(seed);
    let width_steps = grid_steps(width);
    let height_steps = grid_steps(height);
    let sample = |steps: u64, rng: &mut SplitMix64| -> Rational {
        crate::geometry::rational(rng.next_below(steps + 1) as i64, GRID)
    };
    let objects: Vec<GeoObject> = (0..n)
        .map(|id| {
            let shape = match kind {
                ShapeKind::UnitDisk
                | ShapeKind::UnitSquare
                | ShapeKind::Disk
                | ShapeKind::Square => {
                    let x = sample(width_steps, &mut rng);
                    let y = sample(height_steps, &mut rng);
                    let center = Point::new(x, y);
                    match kind {
                        ShapeKind::UnitDisk => GeoShape::UnitDisk { center },
                        ShapeKind::UnitSquare => GeoShape::UnitSquare { center },
                        ShapeKind::Disk => GeoShape::Disk {
                            center,
                            radius: crate::geometry::rational(
                                rng.next_range(1, GRID as u64) as i64,
                                GRID,
                            ),
                        },
                        ShapeKind::Square => GeoShape::Square {
                            center,
                            half_side: crate::geometry::rational(
                                rng.next_range(1, GRID as u64) as i64,
                                GRID,
                            ),
                        },
                        ShapeKind::Interval => unreachable!(),
                    }
                }
                ShapeKind::Interval => {
                    let lo = sample(width_steps, &mut rng);
                    let len = sample(height_steps, &mut rng);
                    let hi = &lo + &len;
                    GeoShape::Interval { lo, hi }
                }
            };
            GeoObject { id, shape }
        })
        .collect();
    GeometricInstance::new(kind, objects).expect("generated objects are well-formed")
}

fn grid_steps(bound: &Rational) -> u64 {
    (bound * crate::geometry::rational_int(GRID))
        .floor()
        .to_integer()
        .to_u64()
        .expect("bound fits the grid")
}
