//! Unique-maximum and conflict-free vertex colorings with respect to paths.
//!
//! A coloring is *unique-maximum* when on every simple path the largest
//! color occurs exactly once (equivalently: an ordered coloring / vertex
//! ranking), and *conflict-free* when every simple path has some color
//! occurring exactly once. This crate provides:
//!
//! - the graph core: immutable graphs, vertex subsets, separators, minor
//!   operations carrying induced colorings, and budgeted simple-path
//!   enumeration ([`graph`]);
//! - generators for the families of interest, including square grids and
//!   the recursive hedgehog family ([`generate`]);
//! - the verifiers — polynomial for unique-maximum, budgeted exhaustive
//!   search for conflict-free — plus the explicit coloring constructions
//!   ([`coloring`]);
//! - exact solvers for all three chromatic numbers and evaluators for the
//!   published grid bounds ([`solve`]);
//! - the connected component game (whose value equals the unique-maximum
//!   chromatic number), the path game (a lower bound for the conflict-free
//!   one), and the quadruple-based strategy translation between grids of
//!   double and half side ([`game`]);
//! - the reduction tying conflict-free verification to Hamiltonian path
//!   ([`reduction`]).

pub mod coloring;
pub mod game;
pub mod generate;
pub mod graph;
pub mod reduction;
pub mod rng;
pub mod solve;

pub use coloring::{Coloring, Verdict, VerifyKind};
pub use graph::{Graph, PathWitness, VertexSubset};
