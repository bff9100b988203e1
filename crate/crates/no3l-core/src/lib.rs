//! Exact counting, exhaustive search, and heuristic numerics for the
//! no-three-in-line problem on the n×n lattice grid.
//!
//! The crate is organised around the quantities of the problem rather than
//! around one algorithm:
//!
//! - [`grid`] — lattice points, point sets, and the collinearity predicate
//!   everything else is built on. Integer-only, overflow-proofed for side
//!   lengths up to 2³⁰.
//! - [`census`] — `t_n`, the exact number of collinear triples in the grid,
//!   by an O(n²) difference-vector aggregation and by a brute-force oracle,
//!   plus the comparison against the (3/π²)·n⁴·ln n asymptotic.
//! - [`solver`] — backtracking search for maximum no-three-in-line sets:
//!   finds `f_n` witnesses, proves optimality on small grids, and counts all
//!   maximum solutions exhaustively at tiny n.
//! - [`heuristic`] — the probabilistic estimate chain in log-space: triple
//!   probability, independence survival, the solution-count estimate, and
//!   both the corrected and the historically erroneous leading exponents
//!   with their conjectured constants.
//! - [`montecarlo`] — seeded Monte Carlo stress tests of the independence
//!   assumption: empirical survival and triple-collinearity rates with
//!   standard errors, and the log-scale gap against the analytic prediction.
//!
//! All search and counting results are exact integers (up to 128-bit);
//! probability-like quantities are carried in log-space throughout because
//! raw survival probabilities underflow f64 well below the grid sizes of
//! interest.
//!
//! The crate is `no_std`-compatible (with `alloc`): disable the default
//! `std` feature and enable `libm` for float math. The `std` feature
//! additionally provides wall-clock solver budgets and threaded drivers for
//! the census, solver, and Monte Carlo kernels.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("no3l-core needs float math: enable the `std` feature (default) or `libm`");

pub mod census;
pub mod grid;
pub mod heuristic;
pub mod math;
pub mod montecarlo;
pub mod rng;
pub mod solver;

pub use grid::{collinear, interior_count, is_no3l, GridError, GridPoint, GridSize, PointSet};
