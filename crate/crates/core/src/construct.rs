//! Explicit minimum-size connected dominating set witnesses for grids with
//! both sides at least 4.
//!
//! Every witness is assembled from five parts: a full anchor row (part A), a
//! partial anchor column (part B), evenly spaced full columns or rows (part
//! C), short column stubs near the far edge (part D), and a small corner
//! patch (part E). The part shapes depend only on the residues of `m` and `n`
//! modulo 3.

use serde::Serialize;
use thiserror::Error;

use crate::grid::{GridDims, GridError, VertexSet};

/// Errors raised by the witness builder.
#[derive(Debug, Error)]
pub enum ConstructError {
    /// Witness construction covers grids with both sides at least 4.
    #[error("construction requires m >= 4 and n >= 4, got {m}x{n}")]
    DomainTooSmall { m: u32, n: u32 },
    #[error(transparent)]
    Grid(#[from] GridError),
}

/// Residue case that selected the witness shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseTag {
    /// Both sides divisible by 3 (always realized through the column or row
    /// orientation below, whichever is smaller).
    #[serde(rename = "(0,0)")]
    ZeroZero,
    /// `m` divisible by 3: part C is a set of full columns.
    #[serde(rename = "(0,*)")]
    ZeroStar,
    /// `n` divisible by 3: part C is a set of full rows.
    #[serde(rename = "(*,0)")]
    StarZero,
    #[serde(rename = "(1,1)")]
    OneOne,
    #[serde(rename = "(1,2)")]
    OneTwo,
    #[serde(rename = "(2,1)")]
    TwoOne,
    #[serde(rename = "(2,2)")]
    TwoTwo,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text = match self {
            CaseTag::ZeroZero => "(0,0)",
            CaseTag::ZeroStar => "(0,*)",
            CaseTag::StarZero => "(*,0)",
            CaseTag::OneOne => "(1,1)",
            CaseTag::OneTwo => "(1,2)",
            CaseTag::TwoOne => "(2,1)",
            CaseTag::TwoTwo => "(2,2)",
        };
        f.write_str(text)
    }
}

/// The selected case together with the five witness parts. The parts are
/// pairwise disjoint and their union is the witness.
#[derive(Debug, Clone, Serialize)]
pub struct ConstructionCase {
    pub tag: CaseTag,
    #[serde(rename = "A")]
    pub part_a: VertexSet,
    #[serde(rename = "B")]
    pub part_b: VertexSet,
    #[serde(rename = "C")]
    pub part_c: VertexSet,
    #[serde(rename = "D")]
    pub part_d: VertexSet,
    #[serde(rename = "E")]
    pub part_e: VertexSet,
}

/// Values `5, 8, 11, ..` up to `upper` inclusive; empty when `upper < 5`.
fn spaced(upper: u32) -> impl Iterator<Item = u32> {
    (5..=upper).step_by(3)
}

fn column_prefers_m(m: u32, n: u32) -> bool {
    m % 3 == 0 && (n % 3 != 0 || (n + 1) * m <= (m + 1) * n)
}

/// Builds a minimum-size connected dominating set witness for the grid,
/// returning the vertex set and the case decomposition that produced it.
///
/// # Examples
///
/// ```
/// use cds_grid::{build_cds, gamma_formula};
/// let (witness, case) = build_cds(4, 4).unwrap();
/// assert!(witness.is_cds());
/// assert_eq!(witness.len() as u32, gamma_formula(4, 4).unwrap().gamma);
/// assert_eq!(case.tag.to_string(), "(1,1)");
/// ```
pub fn build_cds(m: u32, n: u32) -> Result<(VertexSet, ConstructionCase), ConstructError> {
    if m < 4 || n < 4 {
        return Err(ConstructError::DomainTooSmall { m, n });
    }
    let dims = GridDims::new(m, n).expect("sides are at least 4");

    let part_a = VertexSet::from_coords(dims, (1..=m).map(|x| (x, 2)))?;
    let part_b = VertexSet::from_coords(dims, (3..=n).map(|y| (2, y)))?;
    let mut part_c = VertexSet::empty(dims);
    let mut part_d = VertexSet::empty(dims);
    let mut part_e = VertexSet::empty(dims);

    let tag = if column_prefers_m(m, n) {
        for x in spaced(m - 1) {
            for y in 3..=n {
                part_c.insert(crate::grid::Vertex::new(x, y))?;
            }
        }
        CaseTag::ZeroStar
    } else if n % 3 == 0 {
        for y in spaced(n - 1) {
            for x in 3..=m {
                part_c.insert(crate::grid::Vertex::new(x, y))?;
            }
        }
        CaseTag::StarZero
    } else {
        match (m % 3, n % 3) {
            (1, 1) => {
                fill_rows(&mut part_c, spaced(n - 2), m)?;
                fill_cols(&mut part_d, spaced(m - 2), n - 1..=n)?;
                part_e.insert(crate::grid::Vertex::new(m, n - 1))?;
                CaseTag::OneOne
            }
            (1, 2) => {
                fill_rows(&mut part_c, spaced(n - 3), m)?;
                fill_cols(&mut part_d, spaced(m - 2), n - 2..=n)?;
                part_e.insert(crate::grid::Vertex::new(m, n - 2))?;
                part_e.insert(crate::grid::Vertex::new(m, n - 1))?;
                CaseTag::OneTwo
            }
            (2, 1) => {
                fill_rows(&mut part_c, spaced(n - 2), m)?;
                fill_cols(&mut part_d, spaced(m - 3), n - 1..=n)?;
                part_e.insert(crate::grid::Vertex::new(m, n - 1))?;
                part_e.insert(crate::grid::Vertex::new(m, n))?;
                CaseTag::TwoOne
            }
            (2, 2) => {
                fill_rows(&mut part_c, spaced(n - 3), m)?;
                fill_cols(&mut part_d, spaced(m - 3), n - 2..=n)?;
                part_e.insert(crate::grid::Vertex::new(m, n - 2))?;
                part_e.insert(crate::grid::Vertex::new(m, n - 1))?;
                part_e.insert(crate::grid::Vertex::new(m, n))?;
                CaseTag::TwoTwo
            }
            _ => unreachable!("divisible cases handled above"),
        }
    };

    let witness = part_a
        .union(&part_b)?
        .union(&part_c)?
        .union(&part_d)?
        .union(&part_e)?;
    let case = ConstructionCase { tag, part_a, part_b, part_c, part_d, part_e };
    Ok((witness, case))
}

/// Part-C rows: each listed row filled from `x = 3` to `x = m`.
fn fill_rows(
    part: &mut VertexSet,
    rows: impl Iterator<Item = u32>,
    m: u32,
) -> Result<(), GridError> {
    for y in rows {
        for x in 3..=m {
            part.insert(crate::grid::Vertex::new(x, y))?;
        }
    }
    Ok(())
}

/// Part-D columns: each listed column filled over the given row range.
fn fill_cols(
    part: &mut VertexSet,
    cols: impl Iterator<Item = u32>,
    rows: std::ops::RangeInclusive<u32>,
) -> Result<(), GridError> {
    for x in cols {
        for y in rows.clone() {
            part.insert(crate::grid::Vertex::new(x, y))?;
        }
    }
    Ok(())
}

/// Size of the witness `build_cds(m, n)` produces, by the case-appropriate
/// closed form: `(n+1)m/3` for full columns, `(m+1)n/3` for full rows,
/// `(mn+m+n-3)/3` when both residues are 1, and `(mn+m+n-2)/3` otherwise.
pub fn cardinality_closed_form(m: u32, n: u32) -> Result<u32, ConstructError> {
    if m < 4 || n < 4 {
        return Err(ConstructError::DomainTooSmall { m, n });
    }
    Ok(if column_prefers_m(m, n) {
        (n + 1) * m / 3
    } else if n % 3 == 0 {
        (m + 1) * n / 3
    } else if m % 3 == 1 && n % 3 == 1 {
        (m * n + m + n - 3) / 3
    } else {
        (m * n + m + n - 2) / 3
    })
}
