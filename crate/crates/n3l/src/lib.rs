//! A laboratory for the no-three-in-line problem: place as many points as
//! possible on an `n x n` grid so that no three of them lie on a common
//! straight line (any slope, not just rows, columns and diagonals).
//!
//! The crate bundles four ways of attacking the problem plus the shared
//! machinery they sit on:
//!
//! - [`solver`] — exact branch-and-bound over the line-constraint model,
//!   with a subset brute-force oracle for tiny grids.
//! - [`greedy`] — randomized greedy saturation with one-step lookahead,
//!   the workhorse for training-data generation.
//! - [`boost`] — an iterative loop that trains a small autoregressive
//!   transformer ([`model`]) on the best configurations found so far
//!   ([`pool`]) and samples new candidates from it.
//! - [`rl`] — a grid-placement environment and a PPO trainer.
//!
//! Geometry lives in [`grid`] and [`lines`]; the tiny tape-based autodiff
//! engine behind the neural parts lives in [`nn`].

pub mod boost;
pub mod greedy;
pub mod grid;
pub mod lines;
pub mod model;
pub mod nn;
pub mod pool;
pub mod render;
pub mod rl;
pub mod solver;

mod seeds;

pub use grid::{collinear, GridConfig, GridError, Point, Rotation, Symmetry, TokenSeq};
pub use lines::{build_line_table, LineConstraint, LineKey, LineTable};
pub use solver::{brute_force_max, solve_exact, SolveBudget, SolveReport};
