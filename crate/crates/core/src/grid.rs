//! Grid-graph model: dimensions, vertices, vertex sets, adjacency, and the
//! domination and connectivity predicates used by every other module.
//!
//! A grid graph has vertices `(x, y)` with `1 <= x <= m` and `1 <= y <= n`;
//! two vertices are adjacent exactly when they differ by one in a single
//! coordinate.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised by grid-level operations.
#[derive(Debug, Error)]
pub enum GridError {
    /// A vertex lies outside the grid it was used with.
    #[error("vertex ({x}, {y}) is outside the {m}x{n} grid")]
    OutOfRange { x: u32, y: u32, m: u32, n: u32 },
    /// Two sets built over different grids were combined.
    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    DimsMismatch(u32, u32, u32, u32),
    /// A grid dimension was zero.
    #[error("invalid grid dimensions {0}x{1}: both sides must be at least 1")]
    InvalidDims(u32, u32),
    /// A serialized vertex set could not be parsed.
    #[error("malformed vertex-set JSON: {0}")]
    Json(String),
}

/// Dimensions of an `m`-by-`n` grid graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridDims {
    pub m: u32,
    pub n: u32,
}

impl GridDims {
    /// Creates dimensions, rejecting empty grids.
    pub fn new(m: u32, n: u32) -> Result<Self, GridError> {
        if m == 0 || n == 0 {
            return Err(GridError::InvalidDims(m, n));
        }
        Ok(Self { m, n })
    }

    /// Total number of vertices.
    pub fn cell_count(&self) -> u32 {
        self.m * self.n
    }

    /// Dimensions of the transposed grid.
    pub fn transposed(&self) -> Self {
        Self { m: self.n, n: self.m }
    }

    /// True when the vertex lies inside this grid.
    pub fn contains(&self, v: Vertex) -> bool {
        v.x >= 1 && v.x <= self.m && v.y >= 1 && v.y <= self.n
    }

    fn check(&self, v: Vertex) -> Result<(), GridError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GridError::OutOfRange { x: v.x, y: v.y, m: self.m, n: self.n })
        }
    }
}

impl fmt::Display for GridDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

/// A grid vertex with 1-based coordinates. Ordering is lexicographic by
/// `(x, y)`, which every deterministic tie-break in this crate relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[u32; 2]", into = "[u32; 2]")]
pub struct Vertex {
    pub x: u32,
    pub y: u32,
}

impl Vertex {
    pub fn new(x: u32, y: u32) -> Self {
        Self { x, y }
    }

    /// The mirrored vertex `(y, x)`.
    pub fn transposed(&self) -> Self {
        Self { x: self.y, y: self.x }
    }
}

impl From<[u32; 2]> for Vertex {
    fn from(a: [u32; 2]) -> Self {
        Self { x: a[0], y: a[1] }
    }
}

impl From<Vertex> for [u32; 2] {
    fn from(v: Vertex) -> Self {
        [v.x, v.y]
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for VertexSet {
    /// Members in lexicographic order, e.g. `{(1, 2), (2, 2)}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Open neighborhood of `v` in the grid, in lexicographic order.
///
/// # Examples
///
/// ```
/// use cds_grid::{neighbors, GridDims, Vertex};
/// let dims = GridDims::new(4, 4).unwrap();
/// let nbrs = neighbors(Vertex::new(1, 1), dims).unwrap();
/// assert_eq!(nbrs, vec![Vertex::new(1, 2), Vertex::new(2, 1)]);
/// ```
pub fn neighbors(v: Vertex, dims: GridDims) -> Result<Vec<Vertex>, GridError> {
    dims.check(v)?;
    let mut out = Vec::with_capacity(4);
    if v.x > 1 {
        out.push(Vertex::new(v.x - 1, v.y));
    }
    if v.y > 1 {
        out.push(Vertex::new(v.x, v.y - 1));
    }
    if v.y < dims.n {
        out.push(Vertex::new(v.x, v.y + 1));
    }
    if v.x < dims.m {
        out.push(Vertex::new(v.x + 1, v.y));
    }
    Ok(out)
}

/// Serialized form of a vertex set: `{"m": .., "n": .., "vertices": [[x, y], ..]}`
/// with the vertex list in lexicographic order.
#[derive(Serialize, Deserialize)]
struct CanonicalSet {
    m: u32,
    n: u32,
    vertices: Vec<[u32; 2]>,
}

/// A set of vertices bound to the grid it lives on.
///
/// Membership is kept in a sorted structure so all iteration is in
/// lexicographic order and serialization is canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    dims: GridDims,
    members: BTreeSet<Vertex>,
}

impl VertexSet {
    /// Empty set over the given grid.
    pub fn empty(dims: GridDims) -> Self {
        Self { dims, members: BTreeSet::new() }
    }

    /// Builds a set from an iterator of vertices, validating ranges.
    pub fn from_vertices<I>(dims: GridDims, vertices: I) -> Result<Self, GridError>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut set = Self::empty(dims);
        for v in vertices {
            set.insert(v)?;
        }
        Ok(set)
    }

    /// Builds a set from `(x, y)` pairs, validating ranges.
    pub fn from_coords<I>(dims: GridDims, coords: I) -> Result<Self, GridError>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        Self::from_vertices(dims, coords.into_iter().map(|(x, y)| Vertex::new(x, y)))
    }

    pub fn dims(&self) -> GridDims {
        self.dims
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.contains(&v)
    }

    /// Membership test by coordinates; out-of-grid coordinates are absent.
    pub fn has(&self, x: u32, y: u32) -> bool {
        self.members.contains(&Vertex::new(x, y))
    }

    /// Inserts a vertex. Returns whether the set changed.
    pub fn insert(&mut self, v: Vertex) -> Result<bool, GridError> {
        self.dims.check(v)?;
        Ok(self.members.insert(v))
    }

    /// Removes a vertex. Returns whether the set changed.
    pub fn remove(&mut self, v: Vertex) -> bool {
        self.members.remove(&v)
    }

    /// Iterates members in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members.iter().copied()
    }

    /// First member in lexicographic order.
    pub fn first(&self) -> Option<Vertex> {
        self.members.iter().next().copied()
    }

    fn check_same_dims(&self, other: &VertexSet) -> Result<(), GridError> {
        if self.dims != other.dims {
            return Err(GridError::DimsMismatch(
                self.dims.m,
                self.dims.n,
                other.dims.m,
                other.dims.n,
            ));
        }
        Ok(())
    }

    /// Set union over the same grid.
    pub fn union(&self, other: &VertexSet) -> Result<VertexSet, GridError> {
        self.check_same_dims(other)?;
        let members = self.members.union(&other.members).copied().collect();
        Ok(VertexSet { dims: self.dims, members })
    }

    /// Set difference `self` minus `other` over the same grid.
    pub fn difference(&self, other: &VertexSet) -> Result<VertexSet, GridError> {
        self.check_same_dims(other)?;
        let members = self.members.difference(&other.members).copied().collect();
        Ok(VertexSet { dims: self.dims, members })
    }

    /// Set intersection over the same grid.
    pub fn intersection(&self, other: &VertexSet) -> Result<VertexSet, GridError> {
        self.check_same_dims(other)?;
        let members = self.members.intersection(&other.members).copied().collect();
        Ok(VertexSet { dims: self.dims, members })
    }

    /// True when every member of `self` is in `other` (same grid required).
    pub fn is_subset_of(&self, other: &VertexSet) -> Result<bool, GridError> {
        self.check_same_dims(other)?;
        Ok(self.members.is_subset(&other.members))
    }

    /// True when the two sets share no member (same grid required).
    pub fn is_disjoint_from(&self, other: &VertexSet) -> Result<bool, GridError> {
        self.check_same_dims(other)?;
        Ok(self.members.is_disjoint(&other.members))
    }

    fn index(&self, v: Vertex) -> usize {
        ((v.x - 1) * self.dims.n + (v.y - 1)) as usize
    }

    /// True when every grid vertex is in the set or adjacent to a member.
    /// The empty set dominates nothing, so it returns false.
    pub fn is_dominating(&self) -> bool {
        if self.members.is_empty() {
            return false;
        }
        let total = self.dims.cell_count() as usize;
        let mut covered = vec![false; total];
        let mut seen = 0usize;
        let mark = |idx: usize, covered: &mut Vec<bool>, seen: &mut usize| {
            if !covered[idx] {
                covered[idx] = true;
                *seen += 1;
            }
        };
        for v in &self.members {
            mark(self.index(*v), &mut covered, &mut seen);
            for u in neighbors(*v, self.dims).expect("member is in range") {
                mark(self.index(u), &mut covered, &mut seen);
            }
        }
        seen == total
    }

    /// True when the induced subgraph on the set is connected. Singletons are
    /// connected; the empty set is not.
    pub fn is_connected(&self) -> bool {
        let Some(start) = self.first() else {
            return false;
        };
        let mut visited: BTreeSet<Vertex> = BTreeSet::new();
        let mut stack = vec![start];
        visited.insert(start);
        while let Some(v) = stack.pop() {
            for u in neighbors(v, self.dims).expect("member is in range") {
                if self.members.contains(&u) && visited.insert(u) {
                    stack.push(u);
                }
            }
        }
        visited.len() == self.members.len()
    }

    /// True when the set is a connected dominating set.
    pub fn is_cds(&self) -> bool {
        self.is_dominating() && self.is_connected()
    }

    /// The set mirrored across the main diagonal, on the transposed grid.
    pub fn transpose(&self) -> VertexSet {
        VertexSet {
            dims: self.dims.transposed(),
            members: self.members.iter().map(|v| v.transposed()).collect(),
        }
    }

    /// Canonical JSON rendering.
    pub fn to_canonical_json(&self) -> String {
        let repr = CanonicalSet {
            m: self.dims.m,
            n: self.dims.n,
            vertices: self.members.iter().map(|v| [v.x, v.y]).collect(),
        };
        serde_json::to_string(&repr).expect("serialization cannot fail")
    }

    /// Parses the canonical JSON rendering, validating ranges.
    pub fn from_canonical_json(text: &str) -> Result<VertexSet, GridError> {
        let repr: CanonicalSet =
            serde_json::from_str(text).map_err(|e| GridError::Json(e.to_string()))?;
        let dims = GridDims::new(repr.m, repr.n)?;
        Self::from_vertices(dims, repr.vertices.into_iter().map(Vertex::from))
    }

    /// ASCII rendering: one text row per grid row, row `y = 1` first, columns
    /// `x = 1..=m` left to right, `#` for members and `.` for non-members.
    pub fn to_ascii(&self) -> String {
        let mut out = String::with_capacity((self.dims.m as usize + 1) * self.dims.n as usize);
        for y in 1..=self.dims.n {
            for x in 1..=self.dims.m {
                out.push(if self.has(x, y) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = CanonicalSet {
            m: self.dims.m,
            n: self.dims.n,
            vertices: self.members.iter().map(|v| [v.x, v.y]).collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CanonicalSet::deserialize(deserializer)?;
        let dims = GridDims::new(repr.m, repr.n).map_err(serde::de::Error::custom)?;
        VertexSet::from_vertices(dims, repr.vertices.into_iter().map(Vertex::from))
            .map_err(serde::de::Error::custom)
    }
}
