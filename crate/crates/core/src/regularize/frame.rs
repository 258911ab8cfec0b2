//! Regularity frames and the structural constraints they impose.
//!
//! A frame `(p', q')-(p, q)` marks how far the regularization routine has
//! settled a set. It comes in two modes: along a row (`q' == q`, the head
//! advances over `x` in row `q`) and along a column (`p' == p`, the head
//! advances over `y` in column `p`). For each valid frame there are three
//! derived vertex sets: cells the set must contain, cells it must avoid, and
//! the regular region (positions counted as settled).

use serde::Serialize;
use std::fmt;

use crate::grid::{GridDims, GridError, Vertex, VertexSet};

/// Errors raised by the regularization machinery.
#[derive(Debug, thiserror::Error)]
pub enum RegularizeError {
    #[error(transparent)]
    Grid(#[from] GridError),
    /// The four frame fields do not describe a frame on this grid.
    #[error("invalid frame {frame} on {m}x{n} grid: {why}")]
    InvalidFrame { frame: RegularityFrame, m: u32, n: u32, why: String },
    /// An operation needed a frame-regular set and the set is not.
    #[error("set is not regular for frame {frame}: {why}")]
    NotRegular { frame: RegularityFrame, why: String },
    /// An operation was called in a state outside its documented domain.
    #[error("precondition unmet: {0}")]
    Precondition(String),
    /// No path joins the two endpoints inside the set minus exclusions.
    #[error("no path from {from} to {to} inside the set avoiding exclusions")]
    NoPath { from: Vertex, to: Vertex },
    /// A guaranteed transformation failed to produce a valid result. This
    /// indicates a state outside the guarantees, or a bug.
    #[error("transformation guarantee failed: {0}")]
    LemmaViolation(String),
    /// The driver could not select an applicable step.
    #[error("routine stuck: {0}")]
    RoutineStuck(String),
}

/// Frame orientation, derived from the field pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameMode {
    /// `q' == q`: the head `(p, q)` advances along row `q`.
    AlongRow,
    /// `p' == p`: the head `(p, q)` advances along column `p`.
    AlongColumn,
}

/// A regularization frame `(p', q')-(p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegularityFrame {
    pub p_prime: u32,
    pub q_prime: u32,
    pub p: u32,
    pub q: u32,
}

impl fmt::Display for RegularityFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})-({}, {})", self.p_prime, self.q_prime, self.p, self.q)
    }
}

impl RegularityFrame {
    pub fn new(p_prime: u32, q_prime: u32, p: u32, q: u32) -> Self {
        Self { p_prime, q_prime, p, q }
    }

    /// The frame mirrored across the main diagonal.
    pub fn transposed(&self) -> Self {
        Self { p_prime: self.q_prime, q_prime: self.p_prime, p: self.q, q: self.p }
    }

    /// Derived orientation; `None` when the fields fit neither pattern.
    pub fn mode(&self) -> Option<FrameMode> {
        let along_row = self.q_prime == self.q && self.p_prime != self.p;
        let along_column = self.p_prime == self.p && self.q_prime != self.q;
        match (along_row, along_column) {
            (true, false) => Some(FrameMode::AlongRow),
            (false, true) => Some(FrameMode::AlongColumn),
            _ => None,
        }
    }

    /// Checks the frame fields against the grid.
    pub fn validate(&self, dims: GridDims) -> Result<FrameMode, RegularizeError> {
        let fail = |why: &str| {
            Err(RegularizeError::InvalidFrame {
                frame: *self,
                m: dims.m,
                n: dims.n,
                why: why.to_string(),
            })
        };
        match self.mode() {
            None => fail("fields fit neither the along-row nor the along-column pattern"),
            Some(FrameMode::AlongRow) => {
                if !(2 <= self.q && self.q <= dims.n) {
                    return fail("row index q must be between 2 and n");
                }
                if !(self.p_prime < self.p && self.p <= dims.m) {
                    return fail("need p' < p <= m");
                }
                Ok(FrameMode::AlongRow)
            }
            Some(FrameMode::AlongColumn) => {
                if !(2 <= self.p && self.p <= dims.m) {
                    return fail("column index p must be between 2 and m");
                }
                if !(self.q_prime < self.q && self.q <= dims.n) {
                    return fail("need q' < q <= n");
                }
                Ok(FrameMode::AlongColumn)
            }
        }
    }

    /// True when the head has reached the far edge for its mode.
    pub fn is_completed(&self, dims: GridDims) -> bool {
        match self.mode() {
            Some(FrameMode::AlongRow) => self.p == dims.m,
            Some(FrameMode::AlongColumn) => self.q == dims.n,
            None => false,
        }
    }
}

/// The three vertex sets a frame induces.
#[derive(Debug, Clone)]
pub struct FrameConstraints {
    /// Cells a regular set must contain.
    pub required: VertexSet,
    /// Cells a regular set must avoid.
    pub forbidden: VertexSet,
    /// Positions counted as settled; the regular part of a set `D` is
    /// `D` intersected with this region.
    pub regular_region: VertexSet,
}

fn insert_row(set: &mut VertexSet, y: u32, x_from: u32, x_to: u32) {
    for x in x_from..=x_to {
        set.insert(Vertex::new(x, y)).expect("clause cells are in range");
    }
}

fn insert_col(set: &mut VertexSet, x: u32, y_from: u32, y_to: u32) {
    for y in y_from..=y_to {
        set.insert(Vertex::new(x, y)).expect("clause cells are in range");
    }
}

/// Constraint clauses for an along-row frame `(pp, q)-(p, q)`.
fn along_row_constraints(frame: &RegularityFrame, dims: GridDims) -> FrameConstraints {
    let (pp, p, q) = (frame.p_prime, frame.p, frame.q);
    let (m, n) = (dims.m, dims.n);

    let mut required = VertexSet::empty(dims);
    // The settled stretch of row q.
    insert_row(&mut required, q, pp + 1, p);
    if q >= 4 {
        // The previous settled row, three below, reaches the far edge.
        insert_row(&mut required, q - 3, pp + 1, m);
        if pp >= 2 {
            // Column p' is filled from that row upward.
            insert_col(&mut required, pp, q - 3, n);
        }
    }
    if q == 2 && pp >= 1 {
        // Base frames have column p' filled completely.
        insert_col(&mut required, pp, 1, n);
    }

    let mut forbidden = VertexSet::empty(dims);
    if pp + 1 <= p - 1 {
        // Row q - 1 is empty over the working stretch, which is only
        // nonempty once the frame is at least two cells wide.
        insert_row(&mut forbidden, q - 1, pp + 1, p - 1);
    }
    if p == m {
        forbidden.insert(Vertex::new(m, q - 1)).expect("in range");
    }
    if q >= 3 {
        insert_row(&mut forbidden, q - 2, pp + 1, p);
    }
    if pp >= 2 {
        insert_col(&mut forbidden, pp - 1, q - 1, n);
        if q >= 3 {
            insert_col(&mut forbidden, pp - 1, q - 2, n);
        }
    }
    if q >= 5 {
        insert_row(&mut forbidden, q - 4, pp + 1, m);
    }
    if q + 1 == n && pp + 1 <= p - 1 {
        insert_row(&mut forbidden, n, pp + 1, p - 1);
    }

    let mut regular_region = VertexSet::empty(dims);
    insert_row(&mut regular_region, q, pp + 1, p);
    if pp + 1 <= p - 1 {
        insert_row(&mut regular_region, q - 1, pp + 1, p - 1);
    }
    if q >= 3 {
        insert_row(&mut regular_region, q - 2, pp + 1, p);
    }
    if q >= 4 {
        for y in 1..=q - 3 {
            insert_row(&mut regular_region, y, pp + 1, m);
        }
    }
    for x in 1..=pp {
        insert_col(&mut regular_region, x, 1, n);
    }

    FrameConstraints { required, forbidden, regular_region }
}

/// The required, forbidden, and regular-region sets induced by a frame.
pub fn frame_constraints(
    frame: &RegularityFrame,
    dims: GridDims,
) -> Result<FrameConstraints, RegularizeError> {
    match frame.validate(dims)? {
        FrameMode::AlongRow => Ok(along_row_constraints(frame, dims)),
        FrameMode::AlongColumn => {
            let mirrored = along_row_constraints(&frame.transposed(), dims.transposed());
            Ok(FrameConstraints {
                required: mirrored.required.transpose(),
                forbidden: mirrored.forbidden.transpose(),
                regular_region: mirrored.regular_region.transpose(),
            })
        }
    }
}

/// True when the set satisfies every frame constraint. Invalid frames are
/// never regular.
pub fn is_frame_regular(d: &VertexSet, frame: &RegularityFrame) -> bool {
    match frame_constraints(frame, d.dims()) {
        Ok(c) => {
            c.required.is_subset_of(d).unwrap_or(false)
                && c.forbidden.is_disjoint_from(d).unwrap_or(false)
        }
        Err(_) => false,
    }
}

/// Reports why a set fails a frame's constraints, for error messages.
pub fn explain_irregularity(d: &VertexSet, frame: &RegularityFrame) -> String {
    match frame_constraints(frame, d.dims()) {
        Ok(c) => {
            let missing: Vec<String> = c
                .required
                .iter()
                .filter(|v| !d.contains(*v))
                .map(|v| v.to_string())
                .collect();
            let present: Vec<String> =
                c.forbidden.iter().filter(|v| d.contains(*v)).map(|v| v.to_string()).collect();
            let mut parts = Vec::new();
            if !missing.is_empty() {
                parts.push(format!("missing required {}", missing.join(", ")));
            }
            if !present.is_empty() {
                parts.push(format!("contains forbidden {}", present.join(", ")));
            }
            if parts.is_empty() {
                "regular".to_string()
            } else {
                parts.join("; ")
            }
        }
        Err(e) => e.to_string(),
    }
}

/// The regular part of the set: members inside the frame's region.
pub fn regular_part(d: &VertexSet, frame: &RegularityFrame) -> Result<VertexSet, RegularizeError> {
    let constraints = frame_constraints(frame, d.dims())?;
    Ok(d.intersection(&constraints.regular_region)?)
}

/// The irregular part of the set: members outside the frame's region.
pub fn irregular_part(
    d: &VertexSet,
    frame: &RegularityFrame,
) -> Result<VertexSet, RegularizeError> {
    let constraints = frame_constraints(frame, d.dims())?;
    Ok(d.difference(&constraints.regular_region)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(m: u32, n: u32) -> GridDims {
        GridDims::new(m, n).unwrap()
    }

    fn coords(set: &VertexSet) -> Vec<(u32, u32)> {
        set.iter().map(|v| (v.x, v.y)).collect()
    }

    #[test]
    fn base_frame_constraints() {
        let frame = RegularityFrame::new(0, 2, 1, 2);
        let c = frame_constraints(&frame, dims(4, 4)).unwrap();
        assert_eq!(coords(&c.required), vec![(1, 2)]);
        assert_eq!(c.forbidden.len(), 0, "a one-cell base frame forbids nothing");
        assert_eq!(coords(&c.regular_region), vec![(1, 2)]);
    }

    #[test]
    fn along_column_frame_constraints() {
        let frame = RegularityFrame::new(2, 2, 2, 3);
        let c = frame_constraints(&frame, dims(4, 4)).unwrap();
        for v in [(2, 3), (1, 2), (2, 2), (3, 2), (4, 2)] {
            assert!(c.required.has(v.0, v.1), "required must contain {v:?}");
        }
        assert!(!c.forbidden.has(1, 3), "a one-cell head stretch forbids nothing beside it");
        for v in [(1, 1), (2, 1), (3, 1), (4, 1)] {
            assert!(c.forbidden.has(v.0, v.1), "forbidden must contain {v:?}");
        }
    }

    #[test]
    fn completed_row_frame_region() {
        let frame = RegularityFrame::new(0, 2, 4, 2);
        let c = frame_constraints(&frame, dims(4, 4)).unwrap();
        assert_eq!(
            coords(&c.regular_region),
            vec![(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2), (4, 2)]
        );
        assert_eq!(coords(&c.required), vec![(1, 2), (2, 2), (3, 2), (4, 2)]);
        assert_eq!(coords(&c.forbidden), vec![(1, 1), (2, 1), (3, 1), (4, 1)]);
    }

    #[test]
    fn required_is_inside_region_and_disjoint_from_forbidden() {
        let d = dims(9, 8);
        for frame in [
            RegularityFrame::new(0, 2, 1, 2),
            RegularityFrame::new(0, 2, 9, 2),
            RegularityFrame::new(2, 2, 2, 8),
            RegularityFrame::new(2, 5, 3, 5),
            RegularityFrame::new(2, 5, 9, 5),
            RegularityFrame::new(5, 5, 5, 6),
            RegularityFrame::new(2, 2, 2, 5),
            RegularityFrame::new(5, 2, 5, 8),
            RegularityFrame::new(2, 5, 2, 8),
        ] {
            let c = frame_constraints(&frame, d).unwrap();
            assert!(
                c.required.is_subset_of(&c.regular_region).unwrap(),
                "required outside region for {frame}"
            );
            assert!(
                c.required.is_disjoint_from(&c.forbidden).unwrap(),
                "required meets forbidden for {frame}"
            );
        }
    }

    #[test]
    fn constraints_commute_with_transposition() {
        let d = dims(7, 9);
        for frame in [
            RegularityFrame::new(0, 2, 4, 2),
            RegularityFrame::new(2, 2, 2, 6),
            RegularityFrame::new(2, 5, 4, 5),
            RegularityFrame::new(5, 2, 5, 4),
        ] {
            let direct = frame_constraints(&frame, d).unwrap();
            let mirrored = frame_constraints(&frame.transposed(), d.transposed()).unwrap();
            assert_eq!(direct.required, mirrored.required.transpose());
            assert_eq!(direct.forbidden, mirrored.forbidden.transpose());
            assert_eq!(direct.regular_region, mirrored.regular_region.transpose());
        }
    }

    #[test]
    fn frame_validation() {
        let d = dims(4, 4);
        assert_eq!(RegularityFrame::new(0, 2, 1, 2).validate(d).unwrap(), FrameMode::AlongRow);
        assert_eq!(RegularityFrame::new(2, 2, 2, 4).validate(d).unwrap(), FrameMode::AlongColumn);
        assert!(RegularityFrame::new(2, 2, 2, 2).validate(d).is_err());
        assert!(RegularityFrame::new(1, 2, 1, 2).validate(d).is_err());
        assert!(RegularityFrame::new(0, 2, 5, 2).validate(d).is_err());
        assert!(RegularityFrame::new(0, 1, 2, 1).validate(d).is_err());
        assert!(RegularityFrame::new(1, 2, 3, 4).validate(d).is_err());
    }

    #[test]
    fn completion() {
        let d = dims(4, 5);
        assert!(RegularityFrame::new(0, 2, 4, 2).is_completed(d));
        assert!(!RegularityFrame::new(0, 2, 3, 2).is_completed(d));
        assert!(RegularityFrame::new(2, 2, 2, 5).is_completed(d));
        assert!(!RegularityFrame::new(2, 2, 2, 4).is_completed(d));
    }

    #[test]
    fn regularity_check_on_small_sets() {
        let d = dims(4, 4);
        let set = VertexSet::from_coords(
            d,
            [(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (4, 3)],
        )
        .unwrap();
        assert!(is_frame_regular(&set, &RegularityFrame::new(0, 2, 1, 2)));
        assert!(is_frame_regular(&set, &RegularityFrame::new(0, 2, 4, 2)));
        let mut with_corner = set.clone();
        with_corner.insert(Vertex::new(1, 1)).unwrap();
        assert!(is_frame_regular(&with_corner, &RegularityFrame::new(0, 2, 1, 2)));
        assert!(!is_frame_regular(&with_corner, &RegularityFrame::new(0, 2, 2, 2)));
        assert!(!is_frame_regular(&with_corner, &RegularityFrame::new(0, 2, 4, 2)));
    }

    #[test]
    fn regular_and_irregular_parts_partition_the_set() {
        let d = dims(4, 4);
        let set = VertexSet::from_coords(
            d,
            [(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (4, 3)],
        )
        .unwrap();
        let frame = RegularityFrame::new(0, 2, 4, 2);
        let regular = regular_part(&set, &frame).unwrap();
        let irregular = irregular_part(&set, &frame).unwrap();
        assert_eq!(coords(&regular), vec![(1, 2), (2, 2), (3, 2), (4, 2)]);
        assert_eq!(coords(&irregular), vec![(2, 3), (2, 4), (4, 3)]);
        assert_eq!(regular.union(&irregular).unwrap(), set);
    }
}
