//! Stepwise rewriting of a minimum connected dominating set into a
//! frame-regular normal form.
//!
//! A [`RegularityFrame`] names a staircase-shaped region of the grid; a set
//! regular for a frame satisfies fixed membership and absence constraints
//! around it. The [`run_routine`] driver starts from the seed frame
//! `(0, 2)-(1, 2)` and repeatedly applies the case whose guard holds
//! ([`apply_case`]), each one a cardinality-preserving exchange of cells
//! outside the regular region, until the terminal case fires. The audit
//! layer ([`audit_final`], [`audit_step`]) re-derives the vertex-class
//! counts of the result and checks the coverage identities they satisfy.

mod audit;
mod cases;
mod classify;
mod frame;
mod mobile;
mod routine;
mod swap;

pub use audit::{apply_record, audit_final, audit_step, AuditReport, CheckResult};
pub use cases::{apply_case, CaseLabel, StepRecord};
pub use classify::{classify, Classification};
pub use frame::{
    explain_irregularity, frame_constraints, irregular_part, is_frame_regular, regular_part,
    FrameConstraints, FrameMode, RegularityFrame, RegularizeError,
};
pub use mobile::{find_mobiles, least_irregular_path_between, mobile_on_path};
pub use routine::{run_routine, RoutineOutcome, RoutineTrace};
pub use swap::{exchange, lt_shift, mv_swap, LtVariant, SwapKind};
