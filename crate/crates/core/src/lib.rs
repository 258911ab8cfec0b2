//! Connected domination on grid graphs.
//!
//! The grid graph with `m` columns and `n` rows has a vertex at every cell
//! `(x, y)` with `1 <= x <= m`, `1 <= y <= n` and edges between
//! orthogonally adjacent cells. A connected dominating set (CDS) is a
//! vertex subset that induces a connected subgraph and has every grid
//! vertex in its closed neighborhood; the connected domination number is
//! the minimum size of such a set.
//!
//! The crate provides four layers:
//!
//! - [`bounds`]: the closed-form connected domination number for grids with
//!   both sides at least 4 ([`gamma_formula`]), the exact small-side values
//!   ([`known_small_gamma`]), and two independent bounds used as
//!   cross-checks.
//! - [`construct`]: an explicit optimal CDS witness for every grid with
//!   both sides at least 4 ([`build_cds`]), verifiable with
//!   [`VertexSet::is_cds`].
//! - [`solver`]: an exact branch-and-bound solver ([`solve_gamma`]) and
//!   minimum-CDS enumerator ([`enumerate_mcds`]) for small grids,
//!   independent of the formula and the witnesses.
//! - [`regularize`]: the stepwise rewriting of a minimum CDS into a
//!   frame-regular normal form ([`run_routine`]), with per-step records and
//!   a post-run audit suite ([`audit_final`]).

pub mod bounds;
pub mod construct;
pub mod grid;
pub mod regularize;
pub mod solver;

pub use bounds::{
    a_prime, c_prime, fujie_bounds, gamma_formula, known_small_gamma, r_bar_prime,
    sn_lower_bound, BoundsError, GammaBreakdown,
};
pub use construct::{build_cds, cardinality_closed_form, CaseTag, ConstructError, ConstructionCase};
pub use grid::{neighbors, GridDims, GridError, Vertex, VertexSet};
pub use regularize::{
    apply_case, apply_record, audit_final, audit_step, classify, run_routine, AuditReport,
    CaseLabel, CheckResult, Classification, RegularityFrame, RegularizeError, RoutineOutcome,
    RoutineTrace, StepRecord,
};
pub use solver::{
    enumerate_mcds, normalize_origin, solve_gamma, solve_gamma_with_ceiling, McdsEnumeration,
    SolveResult, SolverError,
};
