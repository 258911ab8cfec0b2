//! Driver loop: starting from the seed frame `(0, 2)-(1, 2)`, repeatedly
//! selects and applies the one case whose guard holds, sweeping the frame
//! across the grid until the terminal case fires.

use crate::grid::{GridDims, VertexSet};
use crate::regularize::cases::{
    apply_case, guard_c32, guard_c33, guard_c34, CaseLabel, StepRecord,
};
use crate::regularize::frame::{
    regular_part, FrameMode, RegularityFrame, RegularizeError,
};

/// The ordered step records of one routine run.
pub type RoutineTrace = Vec<StepRecord>;

/// Result of a full routine run: the rewritten set, the frame it is regular
/// for, and every step taken.
#[derive(Debug, Clone)]
pub struct RoutineOutcome {
    pub final_set: VertexSet,
    pub final_frame: RegularityFrame,
    pub steps: RoutineTrace,
}

/// Picks the unique case whose guard holds for the current frame. When both
/// corner-turn guards hold, the row-pass turn is preferred, which keeps
/// traces deterministic.
fn select_case(f: &RegularityFrame, dims: GridDims) -> Result<CaseLabel, RegularizeError> {
    let mode = f.validate(dims)?;
    if !f.is_completed(dims) {
        return Ok(match mode {
            FrameMode::AlongRow => CaseLabel::C1,
            FrameMode::AlongColumn => CaseLabel::C2,
        });
    }
    if f.p_prime == 0 {
        return Ok(CaseLabel::C31);
    }
    if guard_c34(f, mode, dims) {
        return Ok(CaseLabel::C34);
    }
    match (guard_c32(f, dims), guard_c33(f, dims)) {
        (true, _) => Ok(CaseLabel::C32),
        (false, true) => Ok(CaseLabel::C33),
        (false, false) => Err(RegularizeError::RoutineStuck(format!(
            "no case guard holds for completed frame {f} on a {}x{} grid",
            dims.m, dims.n
        ))),
    }
}

/// Rewrites a connected dominating set, step by step, into one that is
/// regular for a terminal frame. The input must live on a grid with both
/// sides at least 4 and must be regular for the seed frame `(0, 2)-(1, 2)`.
///
/// Every step preserves cardinality and the connected-dominating property,
/// and strictly grows the regular part, so the loop terminates.
pub fn run_routine(d0: &VertexSet) -> Result<RoutineOutcome, RegularizeError> {
    let dims = d0.dims();
    if dims.m < 4 || dims.n < 4 {
        return Err(RegularizeError::Precondition(format!(
            "the routine needs both grid sides at least 4, got {}x{}",
            dims.m, dims.n
        )));
    }
    if !d0.is_cds() {
        return Err(RegularizeError::Precondition(
            "the input is not a connected dominating set".to_string(),
        ));
    }
    let mut d = d0.clone();
    let mut f = RegularityFrame::new(0, 2, 1, 2);
    let mut steps = Vec::new();
    let cap = (dims.m as usize) * (dims.n as usize) * 4 + 64;
    loop {
        if steps.len() > cap {
            return Err(RegularizeError::RoutineStuck(format!(
                "step cap {cap} exceeded at frame {f}"
            )));
        }
        let label = select_case(&f, dims)?;
        let grew = regular_part(&d, &f)?.len();
        let (d_next, f_next, record) = apply_case(&d, &f, label)?;
        if label != CaseLabel::C34 {
            let now = regular_part(&d_next, &f_next)?.len();
            if now <= grew {
                return Err(RegularizeError::RoutineStuck(format!(
                    "case {label} at {f} did not grow the regular part ({grew} -> {now})"
                )));
            }
        }
        d = d_next;
        f = f_next;
        steps.push(record);
        if label == CaseLabel::C34 {
            break;
        }
    }
    Ok(RoutineOutcome {
        final_set: d,
        final_frame: f,
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_cds;
    use crate::grid::GridDims;

    fn set(m: u32, n: u32, coords: &[(u32, u32)]) -> VertexSet {
        VertexSet::from_coords(GridDims::new(m, n).unwrap(), coords.iter().copied()).unwrap()
    }

    fn labels(out: &RoutineOutcome) -> Vec<CaseLabel> {
        out.steps.iter().map(|s| s.case_label).collect()
    }

    #[test]
    fn constructed_4x4_witness_runs_to_the_terminal_frame() {
        let d0 = build_cds(4, 4).unwrap().0;
        let out = run_routine(&d0).unwrap();
        use CaseLabel::*;
        assert_eq!(labels(&out), vec![C1, C1, C1, C31, C2, C34]);
        assert_eq!(out.final_set.len(), d0.len());
        assert!(out.final_set.is_cds());
        assert_eq!(out.final_frame, RegularityFrame::new(2, 2, 2, 4));
    }

    #[test]
    fn run_shift_input_reaches_the_golden_final_set() {
        let d0 = set(4, 4, &[(1, 2), (2, 2), (3, 2), (4, 2), (1, 3), (3, 3), (3, 4)]);
        let out = run_routine(&d0).unwrap();
        assert_eq!(
            out.final_set,
            set(4, 4, &[(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (3, 4)])
        );
        assert_eq!(out.final_frame, RegularityFrame::new(2, 2, 2, 4));
    }

    #[test]
    fn rejects_small_grids() {
        let d0 = set(3, 5, &[(1, 2), (2, 2), (3, 2), (2, 3), (2, 4)]);
        assert!(matches!(
            run_routine(&d0),
            Err(RegularizeError::Precondition(_))
        ));
    }

    #[test]
    fn rejects_disconnected_input() {
        let d0 = set(
            4,
            4,
            &[(1, 2), (2, 2), (4, 2), (2, 4), (4, 4), (1, 4), (4, 1)],
        );
        assert!(matches!(
            run_routine(&d0),
            Err(RegularizeError::Precondition(_))
        ));
    }

    #[test]
    fn rejects_seed_irregular_input() {
        // A connected dominating set missing (1, 2).
        let d0 = set(4, 4, &[(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (4, 2), (3, 4)]);
        assert!(d0.is_cds());
        assert!(matches!(
            run_routine(&d0),
            Err(RegularizeError::NotRegular { .. })
        ));
    }

    #[test]
    fn every_step_has_matching_frames() {
        let d0 = build_cds(4, 5).unwrap().0;
        let out = run_routine(&d0).unwrap();
        assert_eq!(out.steps.first().unwrap().frame_before, RegularityFrame::new(0, 2, 1, 2));
        for pair in out.steps.windows(2) {
            assert_eq!(pair[0].frame_after, pair[1].frame_before);
        }
        assert_eq!(out.steps.last().unwrap().frame_after, out.final_frame);
    }
}
