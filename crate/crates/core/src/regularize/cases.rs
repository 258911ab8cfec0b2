//! Routine cases: the per-step rewrites that advance a regularity frame
//! across the grid. Each application returns the rewritten set, the advanced
//! frame, and a record of the exchanged cells.
//!
//! Every case is a validation-gated decision tree: candidate exchanges are
//! tried in a fixed order and the first one that yields a connected
//! dominating set of unchanged size, regular for the target frame, wins.
//! Exhausting a tree raises an error instead of guessing.

use std::fmt;

use serde::Serialize;

use crate::grid::{GridDims, Vertex, VertexSet};
use crate::regularize::frame::{
    explain_irregularity, frame_constraints, is_frame_regular, FrameMode, RegularityFrame,
    RegularizeError,
};
use crate::regularize::mobile::{find_mobiles, least_irregular_path_between};
use crate::regularize::swap::{exchange, lt_shift_with_frame, mv_swap, LtVariant, SwapKind};

/// Which rewrite a routine step performed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseLabel {
    /// Head extends one cell along the frame row.
    #[serde(rename = "C1")]
    C1,
    /// Head extends one cell along the frame column.
    #[serde(rename = "C2")]
    C2,
    /// First corner turn off the completed base frame.
    #[serde(rename = "C31")]
    C31,
    /// Corner turn into a new row pass at `(p', q'+3)-(p'+1, q'+3)`.
    #[serde(rename = "C32")]
    C32,
    /// Corner turn into a new column pass at `(p'+3, q')-(p'+3, q'+1)`.
    #[serde(rename = "C33")]
    C33,
    /// Terminal step: the frame fits no further extension.
    #[serde(rename = "C34")]
    C34,
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseLabel::C1 => "C1",
            CaseLabel::C2 => "C2",
            CaseLabel::C31 => "C31",
            CaseLabel::C32 => "C32",
            CaseLabel::C33 => "C33",
            CaseLabel::C34 => "C34",
        };
        f.write_str(s)
    }
}

/// One executed step: the case, the frames around it, and the net exchange.
#[derive(Debug, Clone, Serialize)]
pub struct StepRecord {
    #[serde(rename = "case")]
    pub case_label: CaseLabel,
    pub frame_before: RegularityFrame,
    pub frame_after: RegularityFrame,
    pub removed: Vec<Vertex>,
    pub added: Vec<Vertex>,
}

/// Guard for [`CaseLabel::C32`] on a completed frame.
pub(crate) fn guard_c32(f: &RegularityFrame, dims: GridDims) -> bool {
    f.p_prime != 0 && f.p_prime + 2 <= dims.m && f.q_prime + 4 <= dims.n
}

/// Guard for [`CaseLabel::C33`] on a completed frame.
pub(crate) fn guard_c33(f: &RegularityFrame, dims: GridDims) -> bool {
    f.p_prime != 0 && f.p_prime + 4 <= dims.m && f.q_prime + 2 <= dims.n
}

/// Guard for [`CaseLabel::C34`] on a completed frame: the head row or column
/// is one short of the far edge, or the corner sits in the final 2x2 window
/// of corner positions.
pub(crate) fn guard_c34(
    f: &RegularityFrame,
    mode: FrameMode,
    dims: GridDims,
) -> bool {
    let by_mode = match mode {
        FrameMode::AlongColumn => f.p + 1 == dims.m,
        FrameMode::AlongRow => f.q + 1 == dims.n,
    };
    let boxed = f.p_prime + 3 >= dims.m
        && f.p_prime + 2 <= dims.m
        && f.q_prime + 3 >= dims.n
        && f.q_prime + 2 <= dims.n;
    by_mode || boxed
}

/// Applies one routine case to a frame-regular set.
pub fn apply_case(
    d: &VertexSet,
    f: &RegularityFrame,
    label: CaseLabel,
) -> Result<(VertexSet, RegularityFrame, StepRecord), RegularizeError> {
    let dims = d.dims();
    let mode = f.validate(dims)?;
    if !is_frame_regular(d, f) {
        return Err(RegularizeError::NotRegular {
            frame: *f,
            why: explain_irregularity(d, f),
        });
    }
    let completed = f.is_completed(dims);
    let guard_ok = match label {
        CaseLabel::C1 => mode == FrameMode::AlongRow && f.p + 1 <= dims.m,
        CaseLabel::C2 => mode == FrameMode::AlongColumn && f.q + 1 <= dims.n,
        CaseLabel::C31 => completed && f.p_prime == 0,
        CaseLabel::C32 => completed && f.p_prime != 0 && guard_c32(f, dims),
        CaseLabel::C33 => completed && f.p_prime != 0 && guard_c33(f, dims),
        CaseLabel::C34 => completed && guard_c34(f, mode, dims),
    };
    if !guard_ok {
        return Err(RegularizeError::Precondition(format!(
            "case {label} does not apply to frame {f} on a {}x{} grid",
            dims.m, dims.n
        )));
    }
    let (d_after, f_after) = match label {
        CaseLabel::C1 => c1_apply(d, f)?,
        CaseLabel::C2 => {
            let (dt, ft) = c1_apply(&d.transpose(), &f.transposed())?;
            (dt.transpose(), ft.transposed())
        }
        CaseLabel::C31 => l6_apply(d, f)?,
        CaseLabel::C32 => match mode {
            FrameMode::AlongRow => l9_engine(d, f, EngineSide::B)?,
            FrameMode::AlongColumn => {
                let (dt, ft) = l9_engine(&d.transpose(), &f.transposed(), EngineSide::A)?;
                (dt.transpose(), ft.transposed())
            }
        },
        CaseLabel::C33 => match mode {
            FrameMode::AlongRow => l9_engine(d, f, EngineSide::A)?,
            FrameMode::AlongColumn => {
                let (dt, ft) = l9_engine(&d.transpose(), &f.transposed(), EngineSide::B)?;
                (dt.transpose(), ft.transposed())
            }
        },
        CaseLabel::C34 => (d.clone(), *f),
    };
    finish_step(label, d, f, d_after, f_after)
}

/// Builds the step record and re-checks the step invariants: the exchange
/// touches only cells outside the before-frame's regular region, preserves
/// cardinality, keeps the set a connected dominating set, and lands regular
/// for the after-frame.
fn finish_step(
    label: CaseLabel,
    d_before: &VertexSet,
    f_before: &RegularityFrame,
    d_after: VertexSet,
    f_after: RegularityFrame,
) -> Result<(VertexSet, RegularityFrame, StepRecord), RegularizeError> {
    let region = frame_constraints(f_before, d_before.dims())?.regular_region;
    let removed = d_before.difference(&d_after)?;
    let added = d_after.difference(d_before)?;
    let fail = |why: &str| {
        Err(RegularizeError::LemmaViolation(format!(
            "case {label} at {f_before} produced an illegal step: {why}"
        )))
    };
    if !removed.is_disjoint_from(&region)? {
        return fail("a regular cell was removed");
    }
    if !added.is_disjoint_from(&region)? {
        return fail("a cell inside the regular region was added");
    }
    if d_after.len() != d_before.len() {
        return fail("cardinality changed");
    }
    if !d_after.is_cds() {
        return fail("result is not a connected dominating set");
    }
    if !is_frame_regular(&d_after, &f_after) {
        return fail("result is not regular for the target frame");
    }
    let record = StepRecord {
        case_label: label,
        frame_before: *f_before,
        frame_after: f_after,
        removed: removed.iter().collect(),
        added: added.iter().collect(),
    };
    Ok((d_after, f_after, record))
}

/// Builds an exchange candidate from coordinate lists and applies it if all
/// cells fit the grid, the exchange is legal, and the result is regular for
/// `target`. `None` means "try the next candidate".
fn try_swap(
    d: &VertexSet,
    legality: &RegularityFrame,
    target: &RegularityFrame,
    removed: &[(u32, u32)],
    added: &[(u32, u32)],
) -> Option<VertexSet> {
    let dims = d.dims();
    let in_range =
        |&(x, y): &(u32, u32)| 1 <= x && x <= dims.m && 1 <= y && y <= dims.n;
    if !removed.iter().all(in_range) || !added.iter().all(in_range) {
        return None;
    }
    let removed = VertexSet::from_coords(dims, removed.iter().copied()).ok()?;
    let added = VertexSet::from_coords(dims, added.iter().copied()).ok()?;
    let out = exchange(d, legality, &removed, &added).ok()?;
    is_frame_regular(&out, target).then_some(out)
}

/// Extends an along-row frame head by one cell: target `(p', q)-(p+1, q)`.
///
/// The decision tree, in order: keep the set when the new head cell is
/// already a member; move a mobile off a least-irregular path that bypasses
/// the head; otherwise try the local exchanges that free a cell next to the
/// head, nearest first.
fn c1_apply(
    d: &VertexSet,
    f: &RegularityFrame,
) -> Result<(VertexSet, RegularityFrame), RegularizeError> {
    let dims = d.dims();
    let (m, n) = (dims.m, dims.n);
    let (pp, p, q) = (f.p_prime, f.p, f.q);
    let target = RegularityFrame::new(pp, q, p + 1, q);
    let mem = |x: u32, y: u32| 1 <= x && x <= m && 1 <= y && y <= n && d.has(x, y);

    // The head cell is already a member.
    if d.has(p + 1, q) && is_frame_regular(d, &target) {
        return Ok((d.clone(), target));
    }

    // A least-irregular path from the cell behind the head to the member two
    // cells ahead. When it bypasses the head, a mobile on it can move into
    // the gap; when it does not, its course picks the exchange below.
    let mut detour_path: Option<Vec<Vertex>> = None;
    if p >= 2 && p + 2 <= m && d.has(p + 2, q) && d.has(p - 1, q) {
        let none = VertexSet::empty(dims);
        if let Ok(path) = least_irregular_path_between(
            d,
            f,
            Vertex::new(p - 1, q),
            Vertex::new(p + 2, q),
            &none,
        ) {
            detour_path = Some(path);
        }
    }
    if let Some(path) = &detour_path {
        let head = Vertex::new(p, q);
        let above = Vertex::new(p, q + 1);
        if !path.contains(&head) && !path.contains(&above) {
            if let Ok(mobiles) = find_mobiles(d, f) {
                let mut on_path: Vec<Vertex> =
                    path.iter().copied().filter(|v| mobiles.contains(*v)).collect();
                on_path.sort();
                for v in on_path {
                    if let Some(out) =
                        try_swap(d, f, &target, &[(v.x, v.y)], &[(p + 1, q)])
                    {
                        return Ok((out, target));
                    }
                }
            }
        }
    }
    let ahead_above = match &detour_path {
        Some(path) => path.contains(&Vertex::new(p, q + 2)),
        None => mem(p, q + 2),
    };

    struct Candidate {
        guard: bool,
        removed: Vec<(u32, u32)>,
        added: Vec<(u32, u32)>,
    }
    let candidates = [
        // A member below-adjacent to the new head frees itself.
        Candidate {
            guard: mem(p + 1, q.wrapping_sub(2)),
            removed: vec![(p + 1, q - 2)],
            added: vec![(p + 1, q)],
        },
        Candidate {
            guard: mem(p, q - 1),
            removed: vec![(p, q - 1)],
            added: vec![(p + 1, q)],
        },
        // The member above the old head frees itself; safe when the column
        // continues above it.
        Candidate {
            guard: mem(p, q + 1) && ahead_above,
            removed: vec![(p, q + 1)],
            added: vec![(p + 1, q)],
        },
        // A corner of members around the gap rotates forward.
        Candidate {
            guard: mem(p + 2, q + 1) && q + 2 <= n && p + 3 <= m,
            removed: vec![(p, q + 1), (p + 2, q + 1), (p + 2, q - 1)],
            added: vec![(p + 1, q), (p + 1, q + 2), (p + 3, q)],
        },
        Candidate {
            guard: mem(p + 2, q + 1) && q + 2 <= n && p + 2 == m,
            removed: vec![(p, q + 1), (p + 2, q + 1)],
            added: vec![(p + 1, q), (p + 1, q + 2)],
        },
        Candidate {
            guard: mem(p + 2, q + 1) && q + 1 == n,
            removed: vec![(p, q + 1)],
            added: vec![(p + 1, q)],
        },
        Candidate {
            guard: !mem(p + 2, q + 1) && mem(p + 1, q + 2) && mem(p, q + 1),
            removed: vec![(p, q + 1)],
            added: vec![(p + 1, q)],
        },
        // The column fragment two cells ahead folds onto the frame row.
        Candidate {
            guard: mem(p + 2, q.wrapping_sub(2)) && mem(p + 2, q - 1) && p + 3 <= m,
            removed: vec![(p + 2, q - 1), (p + 2, q - 2)],
            added: vec![(p + 1, q), (p + 3, q - 2)],
        },
        Candidate {
            guard: mem(p + 2, q - 1),
            removed: vec![(p + 2, q - 1)],
            added: vec![(p + 1, q)],
        },
    ];
    for c in candidates {
        if !c.guard {
            continue;
        }
        if let Some(out) = try_swap(d, f, &target, &c.removed, &c.added) {
            return Ok((out, target));
        }
    }
    Err(RegularizeError::LemmaViolation(format!(
        "no row extension of {f} applies to this set"
    )))
}

/// First corner turn: rewrites a set regular for the completed base frame
/// `(0, 2)-(m, 2)` into one regular for `(2, 2)-(2, 3)`.
fn l6_apply(
    d: &VertexSet,
    f: &RegularityFrame,
) -> Result<(VertexSet, RegularityFrame), RegularizeError> {
    let target = RegularityFrame::new(2, 2, 2, 3);
    if d.has(2, 3) {
        if is_frame_regular(d, &target) {
            return Ok((d.clone(), target));
        }
        return Err(RegularizeError::LemmaViolation(format!(
            "corner cell (2, 3) is a member but the set is not regular for {target}: {}",
            explain_irregularity(d, &target)
        )));
    }
    if d.has(1, 3) {
        return lt_shift_with_frame(d, f, LtVariant::Iii);
    }
    if d.has(2, 4) {
        let out = mv_swap(d, f, SwapKind::Vertical, Vertex::new(2, 2))?;
        if !is_frame_regular(&out, &target) {
            return Err(RegularizeError::LemmaViolation(format!(
                "anchored move left the set irregular for {target}: {}",
                explain_irregularity(&out, &target)
            )));
        }
        return Ok((out, target));
    }
    corner_relay(d, f, &target)
}

/// Re-lays the corner when none of `(2, 3)`, `(1, 3)`, `(2, 4)` is a member.
///
/// Such a set keeps the two columns beside the origin empty above the base
/// row and descends to it further right, so no single anchored move can fill
/// `(2, 3)`. The smallest exchange that adds `(2, 3)` and stays a connected
/// dominating set regular for the target wins; candidates are drawn from a
/// corner window and tried in lexicographic order, smallest exchange first.
fn corner_relay(
    d: &VertexSet,
    f: &RegularityFrame,
    target: &RegularityFrame,
) -> Result<(VertexSet, RegularityFrame), RegularizeError> {
    let dims = d.dims();
    let region = frame_constraints(f, dims)?.regular_region;
    let wx = dims.m.min(6);
    let wy = dims.n.min(6);
    let movable: Vec<Vertex> = d
        .difference(&region)?
        .iter()
        .filter(|v| v.x <= wx && v.y <= wy)
        .collect();
    let mut landing_pool = Vec::new();
    for x in 1..=wx {
        for y in 3..=wy {
            let v = Vertex::new(x, y);
            if !d.contains(v) && v != Vertex::new(2, 3) {
                landing_pool.push(v);
            }
        }
    }
    for k in 1..=3usize {
        for removed in lex_combinations(&movable, k) {
            let removed: Vec<(u32, u32)> = removed.iter().map(|v| (v.x, v.y)).collect();
            for extra in lex_combinations(&landing_pool, k - 1) {
                let mut added = vec![(2, 3)];
                added.extend(extra.iter().map(|v| (v.x, v.y)));
                if let Some(out) = try_swap(d, f, target, &removed, &added) {
                    return Ok((out, *target));
                }
            }
        }
    }
    Err(RegularizeError::LemmaViolation(
        "no corner exchange of up to three cells reaches the first turn".to_string(),
    ))
}

/// All `k`-element subsets of `pool`, in lexicographic index order.
fn lex_combinations(pool: &[Vertex], k: usize) -> Vec<Vec<Vertex>> {
    if k > pool.len() {
        return Vec::new();
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut out = Vec::new();
    loop {
        out.push(idx.iter().map(|&i| pool[i]).collect());
        let mut advanced = false;
        let mut i = k;
        while i > 0 {
            i -= 1;
            if idx[i] + (k - i) < pool.len() {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return out;
        }
    }
}

/// Which diagonal target a corner turn lands on, in the normalized
/// along-row orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EngineSide {
    /// Column-pass seed `(p'+3, q')-(p'+3, q'+1)`.
    A,
    /// Row-pass seed `(p', q'+3)-(p'+1, q'+3)`.
    B,
}

/// Corner-turn engine on a normalized completed along-row frame
/// `(pp, q)-(m, q)`. Tries the local rewrites for the wanted side in proof
/// order; at the proven boundary offset it falls back to the opposite side
/// and converts that landing into the wanted target.
fn l9_engine(
    d: &VertexSet,
    f: &RegularityFrame,
    want: EngineSide,
) -> Result<(VertexSet, RegularityFrame), RegularizeError> {
    let dims = d.dims();
    if !f.is_completed(dims) || f.mode() != Some(FrameMode::AlongRow) {
        return Err(RegularizeError::Precondition(format!(
            "corner engine needs a completed along-row frame, got {f}"
        )));
    }
    let (pp, q) = (f.p_prime, f.q);
    match want {
        EngineSide::A => {
            if let Some(res) = a_steps(d, f) {
                return Ok(res);
            }
            if q + 3 == dims.n {
                if let Some((landed, frame)) = b_steps(d, f) {
                    return convert_b_landing_to_a(d, f, landed, frame);
                }
            }
            Err(RegularizeError::LemmaViolation(format!(
                "no column-pass corner turn applies at {f}"
            )))
        }
        EngineSide::B => {
            if let Some(res) = b_steps(d, f) {
                return Ok(res);
            }
            if pp + 3 == dims.m {
                if let Some((landed, frame)) = a_steps(d, f) {
                    return convert_a_landing_to_b(d, f, landed, frame);
                }
            }
            Err(RegularizeError::LemmaViolation(format!(
                "no row-pass corner turn applies at {f}"
            )))
        }
    }
}

/// Rewrites toward the column-pass seed `(pp+3, q)-(pp+3, q+1)`.
fn a_steps(d: &VertexSet, f: &RegularityFrame) -> Option<(VertexSet, RegularityFrame)> {
    let dims = d.dims();
    let n = dims.n;
    let (pp, q) = (f.p_prime, f.q);
    let a_target = RegularityFrame::new(pp + 3, q, pp + 3, q + 1);
    if d.has(pp + 3, q + 1) && is_frame_regular(d, &a_target) {
        return Some((d.clone(), a_target));
    }
    if d.has(pp + 2, q + 1) && !d.has(pp + 3, q + 1) {
        if let Ok(res) = lt_shift_with_frame(d, f, LtVariant::I) {
            return Some(res);
        }
    }
    // One row below the top edge: pull the stray top-edge member down, then
    // shift the run.
    if q + 2 == n && d.has(pp + 1, n) && !d.has(pp + 2, n - 1) {
        if let Some(step1) = try_plain_swap(d, f, (pp + 1, n), (pp + 2, n - 1)) {
            if let Ok(res) = lt_shift_with_frame(&step1, f, LtVariant::I) {
                return Some(res);
            }
        }
    }
    if q + 2 <= n && d.has(pp + 3, q + 2) && !d.has(pp + 3, q + 1) {
        if let Ok(out) = mv_swap(d, f, SwapKind::Vertical, Vertex::new(pp + 3, q)) {
            if is_frame_regular(&out, &a_target) {
                return Some((out, a_target));
            }
        }
    }
    None
}

/// Rewrites toward the row-pass seed `(pp, q+3)-(pp+1, q+3)`.
fn b_steps(d: &VertexSet, f: &RegularityFrame) -> Option<(VertexSet, RegularityFrame)> {
    let dims = d.dims();
    let m = dims.m;
    let (pp, q) = (f.p_prime, f.q);
    let b_target = RegularityFrame::new(pp, q + 3, pp + 1, q + 3);
    if d.has(pp + 1, q + 3) && is_frame_regular(d, &b_target) {
        return Some((d.clone(), b_target));
    }
    if d.has(pp + 1, q + 2) && !d.has(pp + 1, q + 3) {
        if let Ok(res) = lt_shift_with_frame(d, f, LtVariant::Ii) {
            return Some(res);
        }
    }
    if pp + 2 == m && d.has(m, q + 1) && !d.has(m - 1, q + 2) {
        if let Some(step1) = try_plain_swap(d, f, (m, q + 1), (m - 1, q + 2)) {
            if let Ok(res) = lt_shift_with_frame(&step1, f, LtVariant::Ii) {
                return Some(res);
            }
        }
    }
    if pp + 2 <= m && d.has(pp + 2, q + 3) && !d.has(pp + 1, q + 3) {
        if let Ok(out) = mv_swap(d, f, SwapKind::Horizontal, Vertex::new(pp, q + 3)) {
            if is_frame_regular(&out, &b_target) {
                return Some((out, b_target));
            }
        }
    }
    None
}

/// Single-cell legality-checked exchange without a target-frame check.
fn try_plain_swap(
    d: &VertexSet,
    legality: &RegularityFrame,
    removed: (u32, u32),
    added: (u32, u32),
) -> Option<VertexSet> {
    let dims = d.dims();
    let removed = VertexSet::from_coords(dims, [removed]).ok()?;
    let added = VertexSet::from_coords(dims, [added]).ok()?;
    exchange(d, legality, &removed, &added).ok()
}

/// Converts a row-pass landing at the top edge (`q + 3 == n`) into the
/// column-pass target: extend the landed frame along row `n` twice, then
/// fold the two extension cells onto column `pp + 3`.
fn convert_b_landing_to_a(
    d0: &VertexSet,
    f0: &RegularityFrame,
    landed: VertexSet,
    landed_frame: RegularityFrame,
) -> Result<(VertexSet, RegularityFrame), RegularizeError> {
    let dims = d0.dims();
    let n = dims.n;
    let (pp, q) = (f0.p_prime, f0.q);
    let a_target = RegularityFrame::new(pp + 3, q, pp + 3, q + 1);
    let (d1, f1) = c1_apply(&landed, &landed_frame)?;
    let (d2, _f2) = c1_apply(&d1, &f1)?;
    let removed = VertexSet::from_coords(dims, [(pp + 1, n), (pp + 2, n)])?;
    let added = VertexSet::from_coords(dims, [(pp + 3, n - 2), (pp + 3, n - 1)])?;
    let out = exchange(&d2, f0, &removed, &added)?;
    if !is_frame_regular(&out, &a_target) {
        return Err(RegularizeError::LemmaViolation(format!(
            "top-edge conversion left the set irregular for {a_target}: {}",
            explain_irregularity(&out, &a_target)
        )));
    }
    Ok((out, a_target))
}

/// Mirror of [`convert_b_landing_to_a`] for a column-pass landing at the
/// right edge (`pp + 3 == m`).
fn convert_a_landing_to_b(
    d0: &VertexSet,
    f0: &RegularityFrame,
    landed: VertexSet,
    landed_frame: RegularityFrame,
) -> Result<(VertexSet, RegularityFrame), RegularizeError> {
    let dims = d0.dims();
    let m = dims.m;
    let (pp, q) = (f0.p_prime, f0.q);
    let b_target = RegularityFrame::new(pp, q + 3, pp + 1, q + 3);
    let c2 = |dd: &VertexSet, ff: &RegularityFrame| -> Result<(VertexSet, RegularityFrame), RegularizeError> {
        let (dt, ft) = c1_apply(&dd.transpose(), &ff.transposed())?;
        Ok((dt.transpose(), ft.transposed()))
    };
    let (d1, f1) = c2(&landed, &landed_frame)?;
    let (d2, _f2) = c2(&d1, &f1)?;
    let removed = VertexSet::from_coords(dims, [(m, q + 1), (m, q + 2)])?;
    let added = VertexSet::from_coords(dims, [(m - 2, q + 3), (m - 1, q + 3)])?;
    let out = exchange(&d2, f0, &removed, &added)?;
    if !is_frame_regular(&out, &b_target) {
        return Err(RegularizeError::LemmaViolation(format!(
            "right-edge conversion left the set irregular for {b_target}: {}",
            explain_irregularity(&out, &b_target)
        )));
    }
    Ok((out, b_target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridDims;

    fn set(m: u32, n: u32, coords: &[(u32, u32)]) -> VertexSet {
        VertexSet::from_coords(GridDims::new(m, n).unwrap(), coords.iter().copied()).unwrap()
    }

    #[test]
    fn row_extension_identity() {
        let d = set(4, 4, &[(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (4, 3)]);
        let f = RegularityFrame::new(0, 2, 3, 2);
        let (out, frame, rec) = apply_case(&d, &f, CaseLabel::C1).unwrap();
        assert_eq!(out, d);
        assert_eq!(frame, RegularityFrame::new(0, 2, 4, 2));
        assert!(rec.removed.is_empty() && rec.added.is_empty());
        assert_eq!(rec.case_label, CaseLabel::C1);
    }

    #[test]
    fn row_extension_corner_rotation_from_single_column() {
        // Head at (1, 2) with the occupied column at x = 3: the three-cell
        // rotation moves (1, 3), (3, 3), (3, 1) onto (2, 2), (2, 4), (4, 2).
        let d = set(4, 4, &[(1, 2), (1, 3), (2, 3), (3, 1), (3, 2), (3, 3), (3, 4)]);
        let f = RegularityFrame::new(0, 2, 1, 2);
        let (out, frame, rec) = apply_case(&d, &f, CaseLabel::C1).unwrap();
        assert_eq!(frame, RegularityFrame::new(0, 2, 2, 2));
        assert_eq!(
            out,
            set(4, 4, &[(1, 2), (2, 2), (2, 3), (2, 4), (3, 2), (3, 4), (4, 2)])
        );
        assert_eq!(rec.removed, vec![Vertex::new(1, 3), Vertex::new(3, 1), Vertex::new(3, 3)]);
        assert_eq!(rec.added, vec![Vertex::new(2, 2), Vertex::new(2, 4), Vertex::new(4, 2)]);
    }

    #[test]
    fn first_corner_identity_branch() {
        let d = set(4, 4, &[(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (4, 3)]);
        let f = RegularityFrame::new(0, 2, 4, 2);
        let (out, frame, _rec) = apply_case(&d, &f, CaseLabel::C31).unwrap();
        assert_eq!(out, d);
        assert_eq!(frame, RegularityFrame::new(2, 2, 2, 3));
    }

    #[test]
    fn first_corner_anchored_move_branch() {
        let d = set(4, 4, &[(1, 2), (2, 2), (3, 2), (4, 2), (3, 3), (3, 4), (2, 4)]);
        let f = RegularityFrame::new(0, 2, 4, 2);
        let (out, frame, rec) = apply_case(&d, &f, CaseLabel::C31).unwrap();
        assert_eq!(frame, RegularityFrame::new(2, 2, 2, 3));
        assert_eq!(
            out,
            set(4, 4, &[(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (3, 4)])
        );
        assert_eq!(rec.removed, vec![Vertex::new(3, 3)]);
        assert_eq!(rec.added, vec![Vertex::new(2, 3)]);
    }

    #[test]
    fn first_corner_run_shift_branch() {
        let d = set(4, 4, &[(1, 2), (2, 2), (3, 2), (4, 2), (1, 3), (3, 3), (3, 4)]);
        let f = RegularityFrame::new(0, 2, 4, 2);
        let (out, frame, _rec) = apply_case(&d, &f, CaseLabel::C31).unwrap();
        assert_eq!(frame, RegularityFrame::new(2, 2, 2, 3));
        assert!(out.has(2, 3) && out.has(2, 4) && !out.has(1, 3));
    }

    #[test]
    fn column_extension_is_the_transposed_row_extension() {
        let d = set(4, 4, &[(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (4, 3)]);
        let f = RegularityFrame::new(2, 2, 2, 3);
        let (out, frame, rec) = apply_case(&d, &f, CaseLabel::C2).unwrap();
        assert_eq!(out, d);
        assert_eq!(frame, RegularityFrame::new(2, 2, 2, 4));
        assert_eq!(rec.case_label, CaseLabel::C2);
    }

    #[test]
    fn terminal_case_records_identity() {
        let d = set(4, 4, &[(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (4, 3)]);
        let f = RegularityFrame::new(2, 2, 2, 4);
        let (out, frame, rec) = apply_case(&d, &f, CaseLabel::C34).unwrap();
        assert_eq!(out, d);
        assert_eq!(frame, f);
        assert!(rec.removed.is_empty() && rec.added.is_empty());
    }

    #[test]
    fn guards_reject_wrong_labels() {
        let d = set(4, 4, &[(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (4, 3)]);
        // C1 on a column-mode frame.
        assert!(matches!(
            apply_case(&d, &RegularityFrame::new(2, 2, 2, 3), CaseLabel::C1),
            Err(RegularizeError::Precondition(_))
        ));
        // Corner turns on a non-completed frame.
        assert!(matches!(
            apply_case(&d, &RegularityFrame::new(0, 2, 3, 2), CaseLabel::C31),
            Err(RegularizeError::Precondition(_))
        ));
        // C32 needs a nonzero corner.
        assert!(matches!(
            apply_case(&d, &RegularityFrame::new(0, 2, 4, 2), CaseLabel::C32),
            Err(RegularizeError::Precondition(_))
        ));
    }

    #[test]
    fn terminal_guard_matches_frame_shapes() {
        let dims = GridDims::new(4, 4).unwrap();
        let f = RegularityFrame::new(2, 2, 2, 4);
        assert!(guard_c34(&f, FrameMode::AlongColumn, dims));
        let dims76 = GridDims::new(7, 6).unwrap();
        // Corner (2, 2) on 7x6 is not boxed and the head is not one short.
        let g = RegularityFrame::new(2, 2, 2, 6);
        assert!(!guard_c34(&g, FrameMode::AlongColumn, dims76));
        // Along-row head one short of the top edge.
        let h = RegularityFrame::new(2, 5, 7, 5);
        assert!(guard_c34(&h, FrameMode::AlongRow, dims76));
    }

}
