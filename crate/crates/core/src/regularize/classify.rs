//! Classification of the regular part of a set into connectors,
//! pre-connectors, and dominators.
//!
//! A connector sits between settled stretches and only re-covers vertices
//! that dominators already cover; a pre-connector is a freshly placed cell
//! that will become part of the next settled stretch; every other regular
//! vertex is a dominator. The three classes partition the regular part, and
//! the irregular part is reported alongside them.

use crate::grid::{Vertex, VertexSet};
use crate::regularize::frame::{
    frame_constraints, is_frame_regular, RegularityFrame, RegularizeError,
};

/// Partition of a frame-regular set.
#[derive(Debug, Clone)]
pub struct Classification {
    pub connectors: VertexSet,
    pub preconnectors: VertexSet,
    pub dominators: VertexSet,
    pub irregular: VertexSet,
}

struct RegularView<'a> {
    regular: &'a VertexSet,
}

impl RegularView<'_> {
    /// Membership that treats out-of-grid coordinates as absent. The checked
    /// patterns step at most one cell, so coordinate 0 is the only underflow
    /// and is mapped to an absent cell.
    fn has(&self, x: u32, y: u32) -> bool {
        x >= 1 && y >= 1 && self.regular.has(x, y)
    }

    fn is_connector(&self, v: Vertex) -> bool {
        let (x, y) = (v.x, v.y);
        let first = self.has(x + 1, y)
            && self.has(x.wrapping_sub(1), y)
            && self.has(x.wrapping_sub(1), y.wrapping_sub(1))
            && self.has(x.wrapping_sub(1), y + 1)
            && !self.has(x, y.wrapping_sub(1));
        let second = self.has(x, y + 1)
            && self.has(x, y.wrapping_sub(1))
            && self.has(x.wrapping_sub(1), y.wrapping_sub(1))
            && self.has(x + 1, y.wrapping_sub(1))
            && !self.has(x.wrapping_sub(1), y);
        first || second
    }

    fn is_preconnector(&self, v: Vertex) -> bool {
        let (x, y) = (v.x, v.y);
        let first = self.has(x.wrapping_sub(1), y)
            && self.has(x.wrapping_sub(1), y.wrapping_sub(1))
            && self.has(x.wrapping_sub(1), y + 1)
            && !self.has(x, y.wrapping_sub(1))
            && !self.has(x + 1, y);
        let second = self.has(x, y.wrapping_sub(1))
            && self.has(x.wrapping_sub(1), y.wrapping_sub(1))
            && self.has(x + 1, y.wrapping_sub(1))
            && !self.has(x.wrapping_sub(1), y)
            && !self.has(x, y + 1);
        first || second
    }
}

/// Splits a frame-regular set into connectors, pre-connectors, dominators,
/// and the irregular remainder. Fails when the set is not regular for the
/// frame.
pub fn classify(
    d: &VertexSet,
    frame: &RegularityFrame,
) -> Result<Classification, RegularizeError> {
    let constraints = frame_constraints(frame, d.dims())?;
    if !is_frame_regular(d, frame) {
        return Err(RegularizeError::NotRegular {
            frame: *frame,
            why: crate::regularize::frame::explain_irregularity(d, frame),
        });
    }
    let regular = d.intersection(&constraints.regular_region)?;
    let irregular = d.difference(&constraints.regular_region)?;
    let view = RegularView { regular: &regular };

    let mut connectors = VertexSet::empty(d.dims());
    let mut preconnectors = VertexSet::empty(d.dims());
    let mut dominators = VertexSet::empty(d.dims());
    for v in regular.iter() {
        if view.is_connector(v) {
            connectors.insert(v)?;
        } else if view.is_preconnector(v) {
            preconnectors.insert(v)?;
        } else {
            dominators.insert(v)?;
        }
    }
    Ok(Classification { connectors, preconnectors, dominators, irregular })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridDims;

    fn set(m: u32, n: u32, coords: &[(u32, u32)]) -> VertexSet {
        VertexSet::from_coords(GridDims::new(m, n).unwrap(), coords.iter().copied()).unwrap()
    }

    #[test]
    fn base_frame_has_one_dominator() {
        let d = set(4, 4, &[(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (4, 3)]);
        let c = classify(&d, &RegularityFrame::new(0, 2, 1, 2)).unwrap();
        assert_eq!(c.dominators.len(), 1);
        assert!(c.dominators.has(1, 2));
        assert!(c.connectors.is_empty());
        assert!(c.preconnectors.is_empty());
        assert_eq!(c.irregular.len(), 6);
    }

    #[test]
    fn completed_base_row_is_all_dominators() {
        let d = set(4, 4, &[(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (4, 3)]);
        let c = classify(&d, &RegularityFrame::new(0, 2, 4, 2)).unwrap();
        assert_eq!(c.dominators.len(), 4);
        assert!(c.connectors.is_empty());
        assert!(c.preconnectors.is_empty());
        assert_eq!(c.irregular.len(), 3);
    }

    #[test]
    fn fresh_column_cell_is_a_preconnector() {
        // State right after the first corner step on a 4x4 grid.
        let d = set(4, 4, &[(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (4, 3)]);
        let c = classify(&d, &RegularityFrame::new(2, 2, 2, 3)).unwrap();
        assert_eq!(c.preconnectors.len(), 1);
        assert!(c.preconnectors.has(2, 3));
        assert_eq!(c.dominators.len(), 4);
        assert!(c.connectors.is_empty());
        assert_eq!(c.irregular.len(), 2);
    }

    #[test]
    fn settled_column_cell_becomes_a_connector() {
        let d = set(4, 4, &[(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (3, 4)]);
        let c = classify(&d, &RegularityFrame::new(2, 2, 2, 4)).unwrap();
        assert!(c.connectors.has(2, 3));
        assert_eq!(c.connectors.len(), 1);
        assert_eq!(c.dominators.len(), 5);
        assert!(c.preconnectors.is_empty());
        assert_eq!(c.irregular.len(), 1);
        assert!(c.irregular.has(3, 4));
    }

    #[test]
    fn classification_partitions_the_set() {
        let d = set(4, 4, &[(1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (3, 4)]);
        let c = classify(&d, &RegularityFrame::new(2, 2, 2, 4)).unwrap();
        let rebuilt = c
            .connectors
            .union(&c.preconnectors)
            .unwrap()
            .union(&c.dominators)
            .unwrap()
            .union(&c.irregular)
            .unwrap();
        assert_eq!(rebuilt, d);
        let total =
            c.connectors.len() + c.preconnectors.len() + c.dominators.len() + c.irregular.len();
        assert_eq!(total, d.len());
    }

    #[test]
    fn irregular_input_is_rejected() {
        let d = set(4, 4, &[(1, 1), (1, 2), (2, 2), (3, 2), (4, 2), (2, 3), (2, 4)]);
        let err = classify(&d, &RegularityFrame::new(0, 2, 2, 2)).unwrap_err();
        assert!(matches!(err, RegularizeError::NotRegular { .. }));
    }
}
