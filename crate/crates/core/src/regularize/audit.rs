//! Post-run audits: counts the vertex classes of the final set, checks the
//! per-class coverage identities, and re-validates every recorded step.
//!
//! Check failures are reported inside the returned structures rather than
//! raised, so a caller can print a full scorecard from one run.

use serde::Serialize;

use crate::bounds::{a_prime, c_prime, r_bar_prime};
use crate::grid::{neighbors, VertexSet};
use crate::regularize::cases::{CaseLabel, StepRecord};
use crate::regularize::classify::classify;
use crate::regularize::frame::{
    frame_constraints, is_frame_regular, regular_part, RegularizeError,
};

/// One named audit check with its outcome.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &str, pass: bool, detail: String) -> Self {
        Self {
            name: name.to_string(),
            pass,
            detail,
        }
    }
}

/// Scorecard for a finished routine run.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    /// Number of executed steps.
    pub tau: usize,
    /// Dominators in the final set.
    pub d: usize,
    /// Connectors in the final set.
    pub c: usize,
    /// Irregular vertices in the final set.
    pub r_bar: usize,
    /// Grid vertices not dominated by any regular vertex of the final set.
    pub a: usize,
    /// Grid vertices dominated by at least one dominator.
    pub dominated_by_dominators: usize,
    pub checks: Vec<CheckResult>,
}

impl AuditReport {
    /// True when every check passed.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// All grid vertices with a member of `set` in their closed neighborhood.
fn dominated_by(set: &VertexSet) -> Result<VertexSet, RegularizeError> {
    let dims = set.dims();
    let mut out = VertexSet::empty(dims);
    for v in set.iter() {
        out.insert(v)?;
        for w in neighbors(v, dims)? {
            out.insert(w)?;
        }
    }
    Ok(out)
}

fn is_corner_turn(label: CaseLabel) -> bool {
    matches!(label, CaseLabel::C31 | CaseLabel::C32 | CaseLabel::C33)
}

/// Audits the final set of a routine run against the full trace.
///
/// The named checks: `PCR` (no pre-connectors survive), `DR` (dominators
/// dominate exactly three vertices each, net), `CR0` (connector coverage is
/// redundant), `PQ` (corner coordinates stay congruent to 2 modulo 3 after
/// the first turn), `IR` (irregular and undominated counts match the
/// closed-form predictions), `CR1` (enough connectors), `Eq1` and `Eq2`
/// (the two global counting identities).
pub fn audit_final(
    d_tau: &VertexSet,
    trace: &[StepRecord],
) -> Result<AuditReport, RegularizeError> {
    let last = trace.last().ok_or_else(|| {
        RegularizeError::Precondition("cannot audit an empty trace".to_string())
    })?;
    let dims = d_tau.dims();
    let frame = last.frame_after;
    let class = classify(d_tau, &frame)?;
    let d = class.dominators.len();
    let c = class.connectors.len();
    let r_bar = class.irregular.len();
    let covered_by_regular = dominated_by(&regular_part(d_tau, &frame)?)?;
    let total = (dims.m as usize) * (dims.n as usize);
    let a = total - covered_by_regular.len();
    let by_dominators = dominated_by(&class.dominators)?;
    let dominated_by_dominators = by_dominators.len();

    let oracle = |v: Result<u32, crate::bounds::BoundsError>| {
        v.map_err(|e| RegularizeError::Precondition(e.to_string()))
    };
    let a_pred = oracle(a_prime(dims.m, dims.n))? as usize;
    let r_pred = oracle(r_bar_prime(dims.m, dims.n))? as usize;
    let c_pred = oracle(c_prime(dims.m, dims.n))? as usize;

    let mut checks = Vec::new();
    checks.push(CheckResult::new(
        "PCR",
        class.preconnectors.len() == 0,
        format!("{} pre-connectors in the final set", class.preconnectors.len()),
    ));
    checks.push(CheckResult::new(
        "DR",
        dominated_by_dominators == 3 * d,
        format!("{dominated_by_dominators} vertices dominated by {d} dominators (want {})", 3 * d),
    ));
    let by_connectors = dominated_by(&class.connectors)?;
    let uncovered = by_connectors.difference(&by_dominators)?;
    checks.push(CheckResult::new(
        "CR0",
        uncovered.len() == 0,
        if uncovered.len() == 0 {
            "every connector-dominated vertex is dominator-dominated".to_string()
        } else {
            format!("connector-only coverage at {uncovered}")
        },
    ));
    checks.push(pq_check(trace));
    checks.push(CheckResult::new(
        "IR",
        a == a_pred && r_bar == r_pred,
        format!("a = {a} (want {a_pred}), irregular = {r_bar} (want {r_pred})"),
    ));
    checks.push(CheckResult::new(
        "CR1",
        c >= c_pred,
        format!("{c} connectors (want at least {c_pred})"),
    ));
    checks.push(CheckResult::new(
        "Eq1",
        total == 3 * d + a,
        format!("{}*{} = {total} vs 3*{d} + {a} = {}", dims.m, dims.n, 3 * d + a),
    ));
    checks.push(CheckResult::new(
        "Eq2",
        d_tau.len() == d + c + r_bar,
        format!("|set| = {} vs {d} + {c} + {r_bar} = {}", d_tau.len(), d + c + r_bar),
    ));

    Ok(AuditReport {
        tau: trace.len(),
        d,
        c,
        r_bar,
        a,
        dominated_by_dominators,
        checks,
    })
}

/// Corner-coordinate congruences along the trace: every frame before the
/// first corner turn keeps the seed corner `(0, 2)`; the turn and everything
/// after it keep both corner coordinates congruent to 2 modulo 3.
fn pq_check(trace: &[StepRecord]) -> CheckResult {
    let first_turn = trace
        .iter()
        .position(|r| is_corner_turn(r.case_label))
        .unwrap_or(trace.len());
    let mut bad = Vec::new();
    for (i, rec) in trace.iter().enumerate() {
        let seed_ok =
            |f: &crate::regularize::frame::RegularityFrame| f.p_prime == 0 && f.q_prime == 2;
        let turned_ok =
            |f: &crate::regularize::frame::RegularityFrame| f.p_prime % 3 == 2 && f.q_prime % 3 == 2;
        let before_ok = if i <= first_turn {
            seed_ok(&rec.frame_before)
        } else {
            turned_ok(&rec.frame_before)
        };
        let after_ok = if i < first_turn {
            seed_ok(&rec.frame_after)
        } else {
            turned_ok(&rec.frame_after)
        };
        if !before_ok || !after_ok {
            bad.push(format!("step {i} ({} -> {})", rec.frame_before, rec.frame_after));
        }
    }
    CheckResult::new(
        "PQ",
        bad.is_empty(),
        if bad.is_empty() {
            "corner coordinates respect the modulo-3 schedule".to_string()
        } else {
            format!("off-schedule corners at {}", bad.join(", "))
        },
    )
}

/// Replays one recorded step on a set: removes `removed`, adds `added`,
/// validating memberships.
pub fn apply_record(d: &VertexSet, rec: &StepRecord) -> Result<VertexSet, RegularizeError> {
    let dims = d.dims();
    let removed = VertexSet::from_coords(dims, rec.removed.iter().map(|v| (v.x, v.y)))?;
    let added = VertexSet::from_coords(dims, rec.added.iter().map(|v| (v.x, v.y)))?;
    if !removed.is_subset_of(d)? {
        return Err(RegularizeError::Precondition(format!(
            "record removes cells not in the set: {removed}"
        )));
    }
    if !added.is_disjoint_from(d)? {
        return Err(RegularizeError::Precondition(format!(
            "record adds cells already in the set: {added}"
        )));
    }
    let mut out = d.difference(&removed)?;
    for v in added.iter() {
        out.insert(v)?;
    }
    Ok(out)
}

/// Re-validates one recorded step from the before/after sets: swap legality,
/// cardinality, connectivity and domination, target regularity, regular-part
/// growth, the pre-connector lifecycle, and the per-class coverage ledger.
pub fn audit_step(
    d_before: &VertexSet,
    d_after: &VertexSet,
    rec: &StepRecord,
) -> Result<Vec<CheckResult>, RegularizeError> {
    let dims = d_before.dims();
    let region = frame_constraints(&rec.frame_before, dims)?.regular_region;
    let removed = VertexSet::from_coords(dims, rec.removed.iter().map(|v| (v.x, v.y)))?;
    let added = VertexSet::from_coords(dims, rec.added.iter().map(|v| (v.x, v.y)))?;
    let mut checks = Vec::new();
    checks.push(CheckResult::new(
        "swap-legality",
        rec.removed.len() == rec.added.len()
            && removed.is_subset_of(d_before)?
            && removed.is_disjoint_from(&region)?
            && added.is_disjoint_from(d_before)?
            && added.is_disjoint_from(&region)?,
        format!("removed {removed}, added {added}"),
    ));
    checks.push(CheckResult::new(
        "cardinality",
        d_after.len() == d_before.len(),
        format!("{} -> {}", d_before.len(), d_after.len()),
    ));
    checks.push(CheckResult::new(
        "connected-dominating",
        d_after.is_cds(),
        "result stays a connected dominating set".to_string(),
    ));
    checks.push(CheckResult::new(
        "target-regular",
        is_frame_regular(d_after, &rec.frame_after),
        format!("regular for {}", rec.frame_after),
    ));
    let grow_before = regular_part(d_before, &rec.frame_before)?.len();
    let grow_after = regular_part(d_after, &rec.frame_after)?.len();
    let terminal = rec.case_label == CaseLabel::C34;
    checks.push(CheckResult::new(
        "regular-growth",
        if terminal {
            grow_after >= grow_before
        } else {
            grow_after > grow_before
        },
        format!("|regular part| {grow_before} -> {grow_after}"),
    ));
    if is_frame_regular(d_after, &rec.frame_after) {
        let class = classify(d_after, &rec.frame_after)?;
        let want_pre = if is_corner_turn(rec.case_label) { 1 } else { 0 };
        checks.push(CheckResult::new(
            "preconnector-count",
            class.preconnectors.len() == want_pre,
            format!(
                "{} pre-connectors after {} (want {want_pre})",
                class.preconnectors.len(),
                rec.case_label
            ),
        ));
        let covered = dominated_by(&class.dominators.union(&class.preconnectors)?)?;
        let want = 3 * class.dominators.len()
            + if rec.frame_after.is_completed(dims) { 0 } else { 1 };
        checks.push(CheckResult::new(
            "coverage-ledger",
            covered.len() == want,
            format!(
                "{} vertices covered by dominators and pre-connectors (want {want})",
                covered.len()
            ),
        ));
    }
    Ok(checks)
}
