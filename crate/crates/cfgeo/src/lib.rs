//! Conflict-free coloring of geometric intersection graphs.
//!
//! A conflict-free k-coloring assigns one of k colors to *some* vertices of a
//! graph so that every vertex sees, in its closed neighborhood, a color that
//! occurs there exactly once. This crate provides:
//!
//! - graph types, verification, and structural checks ([`graph`],
//!   [`coloring`], [`domination`]);
//! - an exact solver for the conflict-free chromatic number, an unpruned
//!   brute-force oracle, a perfect-code fast path for the one-color case,
//!   and a small-graph census ([`solver`], [`census`]);
//! - exact rational geometry for unit disks, disks, unit squares, squares
//!   and intervals, with intersection-graph construction and SVG rendering
//!   ([`geometry`], [`svg`]);
//! - the greedy strip colorings: two colors per height-√3 unit-disk strip,
//!   six colors for arbitrary unit-disk graphs, four for unit squares, two
//!   for interval graphs ([`strips`]);
//! - lower-bound and hardness gadget generators: the recursive G_n family,
//!   the D_k chain family, chain colorings, and the reduction from positive
//!   1-in-3-SAT to conflict-free 1-colorability ([`generators`], [`chains`],
//!   [`reduction`], [`recurrences`]);
//! - text formats for graphs, colorings, instances and formulas ([`io`]).

pub mod census;
pub mod chains;
pub mod coloring;
pub mod domination;
pub mod generators;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod recurrences;
pub mod reduction;
pub mod rng;
pub mod solver;
pub mod strips;
pub mod svg;

pub use coloring::{verify_cf, Mode, PartialColoring, VerifyReport};
pub use graph::{diameter, Diameter, Graph};
pub use solver::{cf_chromatic_number, is_cf_1_colorable, is_cf_k_colorable};
