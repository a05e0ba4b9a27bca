//! Domination numbers of the 3D queen graph.
//!
//! A queen on the cubic board `{0,..,n-1}^3` attacks along 13 line families;
//! this crate computes how few queens dominate the whole board. It provides:
//!
//! * [`board`] — geometry, canonical directions, neighbourhoods, adjacency
//! * [`coverage`] — inner-core coverage by queen position type
//! * [`symmetry`] — the order-48 cube group, orbits, canonical placements
//! * [`bounds`] — volume, projection, and lifting bounds on the answer
//! * [`solver`] — exact branch and bound with first-queen-decomposition
//!   optimality certificates
//! * [`verifier`] — an independent checker that re-derives adjacency from
//!   the move definition
//! * [`ilp`] — LP-format export of the set-cover model for external replay
//! * [`formats`] — the JSON solution, certificate, and cache file formats
//!
//! The `examples/` directory shows one runnable program per capability; the
//! `q3d` binary wraps the same calls as subcommands.

pub mod board;
pub mod bounds;
pub mod cli;
pub mod coverage;
pub mod error;
pub mod formats;
pub mod ilp;
pub mod solver;
pub mod symmetry;
pub mod tables;
pub mod verifier;

pub use board::{
    build_adjacency, canonical_directions, closed_neighbourhood, line_through, Adjacency,
    BoardSpec, Cell, CellSet, Direction, Placement,
};
pub use bounds::{bounds_report, gamma2, project, volume_lower_bound, BoundsReport};
pub use coverage::{
    classify, kappa_exact, kappa_formula, parity_f, parity_minimizers, strata_summary,
    CoverageReport, KappaValue, PositionType, StrataSummary,
};
pub use error::{Error, Result};
pub use solver::{
    attempt_n7, certify_infeasible, certify_value, greedy_upper_bound, solve_exact,
    OptimalityCertificate, SolveLimits, SolveOptions, SolveResult, SolveStatus,
};
pub use symmetry::{
    all_elements, canonical_placement, cell_orbit, in_fundamental_domain, FundamentalDomain,
    SymmetryElement,
};
pub use verifier::{check_certificate, check_kappa, is_dominating, VerificationOutcome};
