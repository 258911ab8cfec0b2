//! Swap primitives: the validated exchange helper, the anchored move of a
//! mobile to a gap two cells from an anchor, and the run shift that slides a
//! settled run one line outward.
//!
//! Every primitive validates its result: the exchanged cells must be
//! irregular for the acting frame, cardinality must be preserved, and the
//! outcome must still be a connected dominating set. Failures surface as
//! errors instead of corrupt states.

use crate::grid::{Vertex, VertexSet};
use crate::regularize::frame::{
    frame_constraints, is_frame_regular, FrameMode, RegularityFrame, RegularizeError,
};
use crate::regularize::mobile::mobile_on_path;

/// Direction of an anchored move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwapKind {
    /// Anchor `(x, y)`, far cell `(x + 2, y)`, gap `(x + 1, y)`.
    Horizontal,
    /// Anchor `(x, y)`, far cell `(x, y + 2)`, gap `(x, y + 1)`.
    Vertical,
}

/// Applies `removed -> added` to `d` after checking the exchange is legal
/// for `frame`: removed cells are irregular members, added cells are new and
/// outside the regular region, sizes match, and the result is a connected
/// dominating set.
pub fn exchange(
    d: &VertexSet,
    frame: &RegularityFrame,
    removed: &VertexSet,
    added: &VertexSet,
) -> Result<VertexSet, RegularizeError> {
    let constraints = frame_constraints(frame, d.dims())?;
    if removed.len() != added.len() {
        return Err(RegularizeError::LemmaViolation(format!(
            "exchange must preserve cardinality: removing {} adding {}",
            removed.len(),
            added.len()
        )));
    }
    if !removed.is_subset_of(d)? {
        return Err(RegularizeError::LemmaViolation(
            "exchange removes cells that are not members".to_string(),
        ));
    }
    if !removed.is_disjoint_from(&constraints.regular_region)? {
        return Err(RegularizeError::LemmaViolation(
            "exchange removes regular cells".to_string(),
        ));
    }
    if !added.is_disjoint_from(d)? {
        return Err(RegularizeError::LemmaViolation(
            "exchange adds cells that are already members".to_string(),
        ));
    }
    if !added.is_disjoint_from(&constraints.regular_region)? {
        return Err(RegularizeError::LemmaViolation(
            "exchange adds cells inside the regular region".to_string(),
        ));
    }
    let result = d.difference(removed)?.union(added)?;
    if !result.is_cds() {
        return Err(RegularizeError::LemmaViolation(
            "exchange breaks domination or connectivity".to_string(),
        ));
    }
    Ok(result)
}

/// Moves a mobile into the gap next to an anchor: the anchor is a regular
/// member, the far cell two steps away is an irregular member, and the gap
/// between them is empty. A least-irregular path from anchor to far cell
/// supplies the mobile that is removed; the gap cell is added.
pub fn mv_swap(
    d: &VertexSet,
    frame: &RegularityFrame,
    kind: SwapKind,
    anchor: Vertex,
) -> Result<VertexSet, RegularizeError> {
    let dims = d.dims();
    frame.validate(dims)?;
    if !frame.is_completed(dims) {
        return Err(RegularizeError::Precondition(format!(
            "anchored move requires a completed frame, got {frame}"
        )));
    }
    let (far, gap) = match kind {
        SwapKind::Horizontal => {
            (Vertex::new(anchor.x + 2, anchor.y), Vertex::new(anchor.x + 1, anchor.y))
        }
        SwapKind::Vertical => {
            (Vertex::new(anchor.x, anchor.y + 2), Vertex::new(anchor.x, anchor.y + 1))
        }
    };
    if !dims.contains(far) {
        return Err(RegularizeError::Precondition(format!(
            "far cell {far} is outside the grid"
        )));
    }
    if d.contains(gap) {
        return Err(RegularizeError::Precondition(format!(
            "gap cell {gap} is already a member"
        )));
    }
    // With the frame completed there is no open head to protect, so the
    // path search runs over all members; the exchange below still rejects
    // any move that breaks domination or connectivity.
    let exclusions = VertexSet::empty(dims);
    let (mobile, _path) = mobile_on_path(d, frame, anchor, far, &exclusions)?;
    let removed = VertexSet::from_vertices(dims, [mobile])?;
    let added = VertexSet::from_vertices(dims, [gap])?;
    exchange(d, frame, &removed, &added)
}

/// Variant selector for the run shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LtVariant {
    /// Column run beside the frame corner: precondition cells
    /// `(p' + 2, q + 1)` present and `(p' + 3, q + 1)` absent.
    I,
    /// Row run above the frame corner: precondition cells
    /// `(p' + 1, q + 2)` present and `(p' + 1, q + 3)` absent.
    Ii,
    /// Column run against the left edge of a base frame `(0, 2)-(m, 2)`:
    /// precondition cells `(1, 3)` present and `(2, 3)` absent.
    Iii,
}

/// Slides a maximal run one line outward next to a completed frame, opening
/// the diagonal target frame. Returns the new set and the target frame.
pub(crate) fn lt_shift_with_frame(
    d: &VertexSet,
    frame: &RegularityFrame,
    variant: LtVariant,
) -> Result<(VertexSet, RegularityFrame), RegularizeError> {
    let dims = d.dims();
    let mode = frame.validate(dims)?;
    if !frame.is_completed(dims) {
        return Err(RegularizeError::Precondition(format!(
            "run shift needs a completed frame, got {frame}"
        )));
    }
    match mode {
        FrameMode::AlongRow => lt_shift_along_row(d, frame, variant),
        FrameMode::AlongColumn => {
            let mirrored_variant = match variant {
                LtVariant::I => LtVariant::Ii,
                LtVariant::Ii => LtVariant::I,
                LtVariant::Iii => LtVariant::Iii,
            };
            let (set, target) =
                lt_shift_along_row(&d.transpose(), &frame.transposed(), mirrored_variant)?;
            Ok((set.transpose(), target.transposed()))
        }
    }
}

/// Public entry point returning just the rewritten set.
pub fn lt_shift(
    d: &VertexSet,
    frame: &RegularityFrame,
    variant: LtVariant,
) -> Result<VertexSet, RegularizeError> {
    lt_shift_with_frame(d, frame, variant).map(|(set, _)| set)
}

fn lt_shift_along_row(
    d: &VertexSet,
    frame: &RegularityFrame,
    variant: LtVariant,
) -> Result<(VertexSet, RegularityFrame), RegularizeError> {
    let dims = d.dims();
    let (pp, q) = (frame.p_prime, frame.q);
    match variant {
        LtVariant::I => {
            if pp < 2 {
                return Err(RegularizeError::Precondition(format!(
                    "column-run shift needs a corner at column 2 or beyond, got {frame}"
                )));
            }
            if pp + 3 > dims.m || q + 1 > dims.n {
                return Err(RegularizeError::Precondition(format!(
                    "column-run target does not fit the grid from {frame}"
                )));
            }
            let target = RegularityFrame::new(pp + 3, q, pp + 3, q + 1);
            shift_column_run(d, frame, pp + 2, q, target)
        }
        LtVariant::Iii => {
            if pp != 0 || q != 2 {
                return Err(RegularizeError::Precondition(format!(
                    "edge-run shift applies only to base frames, got {frame}"
                )));
            }
            let target = RegularityFrame::new(2, 2, 2, 3);
            shift_column_run(d, frame, 1, 2, target)
        }
        LtVariant::Ii => {
            if pp < 2 {
                return Err(RegularizeError::Precondition(format!(
                    "row-run shift needs a corner at column 2 or beyond, got {frame}"
                )));
            }
            if pp + 1 > dims.m || q + 3 > dims.n {
                return Err(RegularizeError::Precondition(format!(
                    "row-run target does not fit the grid from {frame}"
                )));
            }
            let target = RegularityFrame::new(pp, q + 3, pp + 1, q + 3);
            shift_row_run(d, frame, q + 2, pp, target)
        }
    }
}

/// Core of variants I and III: a maximal run in column `run_x` starting at
/// row `base_q + 1`, with the neighbor column `run_x + 1` empty beside it,
/// slides right; when the run ends at a missing cell instead, it is replaced
/// by the diagonal in column `run_x + 1` and an anchored move fills the
/// target seed.
fn shift_column_run(
    d: &VertexSet,
    frame: &RegularityFrame,
    run_x: u32,
    base_q: u32,
    target: RegularityFrame,
) -> Result<(VertexSet, RegularityFrame), RegularizeError> {
    let dims = d.dims();
    let n = dims.n;
    if !(d.has(run_x, base_q + 1) && !d.has(run_x + 1, base_q + 1)) {
        return Err(RegularizeError::Precondition(format!(
            "run shift needs ({run_x}, {}) present and ({}, {}) absent",
            base_q + 1,
            run_x + 1,
            base_q + 1
        )));
    }
    let mut top = base_q + 1;
    while top + 1 <= n && d.has(run_x, top + 1) && !d.has(run_x + 1, top + 1) {
        top += 1;
    }
    let removed =
        VertexSet::from_coords(dims, (base_q + 1..=top).map(|y| (run_x, y)))?;
    let ends_cleanly = top == n || (d.has(run_x, top + 1) && d.has(run_x + 1, top + 1));
    let result = if ends_cleanly {
        let added =
            VertexSet::from_coords(dims, (base_q + 1..=top).map(|y| (run_x + 1, y)))?;
        exchange(d, frame, &removed, &added)?
    } else {
        // The run ends at a gap: replace it by the diagonal one line right
        // and one row up, then pull a mobile into the target seed.
        let added =
            VertexSet::from_coords(dims, (base_q + 1..=top).map(|y| (run_x + 1, y + 1)))?;
        let shifted = exchange(d, frame, &removed, &added)?;
        mv_swap(&shifted, frame, SwapKind::Vertical, Vertex::new(run_x + 1, base_q))?
    };
    if !is_frame_regular(&result, &target) {
        return Err(RegularizeError::LemmaViolation(format!(
            "run shift left the set irregular for {target}: {}",
            crate::regularize::frame::explain_irregularity(&result, &target)
        )));
    }
    Ok((result, target))
}

/// Mirror of [`shift_column_run`]: a maximal run in row `run_y` starting at
/// column `base_p + 1` slides up, or is replaced by the diagonal plus an
/// anchored move.
fn shift_row_run(
    d: &VertexSet,
    frame: &RegularityFrame,
    run_y: u32,
    base_p: u32,
    target: RegularityFrame,
) -> Result<(VertexSet, RegularityFrame), RegularizeError> {
    let dims = d.dims();
    let m = dims.m;
    if !(d.has(base_p + 1, run_y) && !d.has(base_p + 1, run_y + 1)) {
        return Err(RegularizeError::Precondition(format!(
            "run shift needs ({}, {run_y}) present and ({}, {}) absent",
            base_p + 1,
            base_p + 1,
            run_y + 1
        )));
    }
    let mut end = base_p + 1;
    while end + 1 <= m && d.has(end + 1, run_y) && !d.has(end + 1, run_y + 1) {
        end += 1;
    }
    let removed = VertexSet::from_coords(dims, (base_p + 1..=end).map(|x| (x, run_y)))?;
    let ends_cleanly = end == m || (d.has(end + 1, run_y) && d.has(end + 1, run_y + 1));
    let result = if ends_cleanly {
        let added =
            VertexSet::from_coords(dims, (base_p + 1..=end).map(|x| (x, run_y + 1)))?;
        exchange(d, frame, &removed, &added)?
    } else {
        let added =
            VertexSet::from_coords(dims, (base_p + 1..=end).map(|x| (x + 1, run_y + 1)))?;
        let shifted = exchange(d, frame, &removed, &added)?;
        mv_swap(&shifted, frame, SwapKind::Horizontal, Vertex::new(base_p, run_y + 1))?
    };
    if !is_frame_regular(&result, &target) {
        return Err(RegularizeError::LemmaViolation(format!(
            "run shift left the set irregular for {target}: {}",
            crate::regularize::frame::explain_irregularity(&result, &target)
        )));
    }
    Ok((result, target))
}
