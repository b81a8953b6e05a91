//! Partial vertex colorings and the conflict-free verification predicate.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring covers {coloring} vertices but the graph has {graph}")]
    LengthMismatch { coloring: usize, graph: usize },
    #[error("vertex {vertex} has color {color} outside the palette 1..={palette}")]
    ColorOutOfPalette {
        vertex: usize,
        color: usize,
        palette: usize,
    },
}

/// Which neighborhood a vertex draws its conflict-free neighbor from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// `N[v] = N(v) ∪ {v}` — the default everywhere.
    Closed,
    /// `N(v)` — supported by the verifier and solver only; none of the
    /// constructive algorithms make guarantees in this mode.
    Open,
}

/// Assignment of colors from `{1..=palette_size}` to a subset of vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialColoring {
    palette_size: usize,
    assignment: Vec<Option<usize>>,
}

impl PartialColoring {
    /// All-uncolored coloring on `n` vertices.
    pub fn empty(n: usize, palette_size: usize) -> PartialColoring {
        PartialColoring {
            palette_size,
            assignment: vec![None; n],
        }
    }

    pub fn new(
        palette_size: usize,
        assignment: Vec<Option<usize>>,
    ) -> Result<PartialColoring, ColoringError> {
        for (v, c) in assignment.iter().enumerate() {
            if let Some(c) = c {
                if *c == 0 || *c > palette_size {
                    return Err(ColoringError::ColorOutOfPalette {
                        vertex: v,
                        color: *c,
                        palette: palette_size,
                    });
                }
            }
        }
        Ok(PartialColoring {
            palette_size,
            assignment,
        })
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn color(&self, v: usize) -> Option<usize> {
        self.assignment[v]
    }

    pub fn set(&mut self, v: usize, color: Option<usize>) {
        if let Some(c) = color {
            assert!(c >= 1 && c <= self.palette_size, "color out of palette");
        }
        self.assignment[v] = color;
    }

    /// Vertices that carry a color, ascending.
    pub fn colored_vertices(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.assignment
            .iter()
            .enumerate()
            .filter_map(|(v, c)| c.map(|c| (v, c)))
    }

    pub fn colored_count(&self) -> usize {
        self.assignment.iter().filter(|c| c.is_some()).count()
    }

    /// Largest color in use (0 if nothing is colored).
    pub fn max_color_used(&self) -> usize {
        self.assignment.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn distinct_colors_used(&self) -> usize {
        let mut seen = vec![false; self.palette_size + 1];
        let mut count = 0;
        for c in self.assignment.iter().flatten() {
            if !seen[*c] {
                seen[*c] = true;
                count += 1;
            }
        }
        count
    }
}

/// Outcome of conflict-free verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    /// Vertices lacking a conflict-free neighbor, ascending.
    pub violations: Vec<usize>,
    pub mode: Mode,
}

/// Checks whether `c` is a conflict-free coloring of `g`: every vertex must
/// see, in its (closed or open) neighborhood, some vertex whose color occurs
/// exactly once among the colored vertices of that neighborhood.
pub fn verify_cf(
    g: &Graph,
    c: &PartialColoring,
    mode: Mode,
) -> Result<VerifyReport, ColoringError> {
    if c.len() != g.n() {
        return Err(ColoringError::LengthMismatch {
            coloring: c.len(),
            graph: g.n(),
        });
    }
    let mut counts = vec![0usize; c.palette_size() + 1];
    let mut touched = Vec::new();
    let mut violations = Vec::new();
    for v in 0..g.n() {
        for &w in g.neighbors(v) {
            if let Some(col) = c.color(w as usize) {
                if counts[col] == 0 {
                    touched.push(col);
                }
                counts[col] += 1;
            }
        }
        if mode == Mode::Closed {
            if let Some(col) = c.color(v) {
                if counts[col] == 0 {
                    touched.push(col);
                }
                counts[col] += 1;
            }
        }
        let ok = touched.iter().any(|&col| counts[col] == 1);
        if !ok {
            violations.push(v);
        }
        for col in touched.drain(..) {
            counts[col] = 0;
        }
    }
    Ok(VerifyReport {
        valid: violations.is_empty(),
        violations,
        mode,
    })
}
