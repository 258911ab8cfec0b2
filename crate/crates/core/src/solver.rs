//! Exact minimum connected dominating set solver for small grids.
//!
//! The solver enumerates candidate sets of increasing size k, walking cells
//! in ascending lexicographic order over a bitmask representation. Two sound
//! prunes keep the search small: a domination deficit bound (each added cell
//! dominates at most 5 new vertices) and a last-chance bound (once every
//! potential dominator of some undominated vertex is behind the cursor, the
//! branch is dead). Connectivity is checked at the leaves. The first
//! solution found at the optimal size is therefore the lexicographically
//! least witness, and full enumeration visits solutions in lexicographic
//! order.

use thiserror::Error;

use crate::grid::{GridDims, GridError, Vertex, VertexSet};

/// Default limit on the number of grid cells the solver accepts.
pub const DEFAULT_CELL_CEILING: u32 = 30;

/// Hard limit imposed by the bitmask representation.
const MASK_CELL_LIMIT: u32 = 60;

/// Errors raised by the solver.
#[derive(Debug, Error)]
pub enum SolverError {
    /// The grid has more cells than the configured ceiling.
    #[error("grid {m}x{n} has {cells} cells, above the solver ceiling of {ceiling}")]
    CapacityExceeded { m: u32, n: u32, cells: u32, ceiling: u32 },
    /// The node budget ran out before the search finished.
    #[error("search budget exhausted after {node_count} nodes")]
    Inconclusive { node_count: u64 },
    /// The input set violates a documented precondition.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Grid(#[from] GridError),
}

/// Result of an exact solve: the minimum size, the lexicographically least
/// witness, and the number of search nodes visited.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub gamma: u32,
    pub witness: VertexSet,
    pub node_count: u64,
}

/// All minimum-size connected dominating sets, possibly truncated at a cap.
#[derive(Debug, Clone)]
pub struct McdsEnumeration {
    pub gamma: u32,
    pub sets: Vec<VertexSet>,
    pub truncated: bool,
}

struct SearchContext {
    dims: GridDims,
    cells: u32,
    closed: Vec<u64>,
    adjacent: Vec<u64>,
    full: u64,
    node_count: u64,
    budget: Option<u64>,
}

enum SearchOutcome {
    /// Enumeration finished (either exhausted or stopped at the cap).
    Done,
    /// The per-call collector asked to stop early.
    Stopped,
}

impl SearchContext {
    fn new(m: u32, n: u32, ceiling: u32, budget: Option<u64>) -> Result<Self, SolverError> {
        let dims = GridDims::new(m, n)?;
        let cells = dims.cell_count();
        let effective_ceiling = ceiling.min(MASK_CELL_LIMIT);
        if cells > effective_ceiling {
            return Err(SolverError::CapacityExceeded {
                m,
                n,
                cells,
                ceiling: effective_ceiling,
            });
        }
        let total = cells as usize;
        let mut closed = vec![0u64; total];
        let mut adjacent = vec![0u64; total];
        for x in 1..=m {
            for y in 1..=n {
                let v = Vertex::new(x, y);
                let i = ((x - 1) * n + (y - 1)) as usize;
                let mut adj = 0u64;
                for u in crate::grid::neighbors(v, dims).expect("cell is in range") {
                    adj |= 1u64 << ((u.x - 1) * n + (u.y - 1));
                }
                adjacent[i] = adj;
                closed[i] = adj | (1u64 << i);
            }
        }
        let full = if cells == 64 { u64::MAX } else { (1u64 << cells) - 1 };
        Ok(Self { dims, cells, closed, adjacent, full, node_count: 0, budget })
    }

    fn vertex_of(&self, idx: u32) -> Vertex {
        Vertex::new(idx / self.dims.n + 1, idx % self.dims.n + 1)
    }

    fn mask_to_set(&self, mask: u64) -> VertexSet {
        let mut rest = mask;
        let mut vertices = Vec::new();
        while rest != 0 {
            let idx = rest.trailing_zeros();
            vertices.push(self.vertex_of(idx));
            rest &= rest - 1;
        }
        VertexSet::from_vertices(self.dims, vertices).expect("indices are in range")
    }

    fn connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        let seed = 1u64 << mask.trailing_zeros();
        let mut reached = seed;
        loop {
            let mut frontier = reached;
            let mut grown = reached;
            while frontier != 0 {
                let idx = frontier.trailing_zeros() as usize;
                grown |= self.adjacent[idx] & mask;
                frontier &= frontier - 1;
            }
            if grown == reached {
                return reached == mask;
            }
            reached = grown;
        }
    }

    /// Depth-first enumeration of all k-subsets in ascending index order that
    /// dominate the grid and induce a connected subgraph. `on_found` returns
    /// false to stop the search.
    fn extend(
        &mut self,
        k: u32,
        start: u32,
        picked: u32,
        chosen: u64,
        dominated: u64,
        on_found: &mut dyn FnMut(u64) -> bool,
    ) -> Result<SearchOutcome, SolverError> {
        self.node_count += 1;
        if let Some(budget) = self.budget {
            if self.node_count > budget {
                return Err(SolverError::Inconclusive { node_count: self.node_count });
            }
        }
        if picked == k {
            if dominated == self.full && self.connected(chosen) {
                if !on_found(chosen) {
                    return Ok(SearchOutcome::Stopped);
                }
            }
            return Ok(SearchOutcome::Done);
        }
        let remaining = k - picked;
        let undominated = self.full & !dominated;
        let deficit = undominated.count_ones();
        if deficit > 5 * remaining {
            return Ok(SearchOutcome::Done);
        }
        if undominated != 0 && start > 0 {
            // No cell at or beyond the cursor can dominate the lowest
            // undominated vertex: the branch is dead.
            let lowest = undominated.trailing_zeros();
            if self.closed[lowest as usize] >> start == 0 {
                return Ok(SearchOutcome::Done);
            }
        }
        if self.cells - start < remaining {
            return Ok(SearchOutcome::Done);
        }
        for idx in start..=self.cells - remaining {
            let outcome = self.extend(
                k,
                idx + 1,
                picked + 1,
                chosen | (1u64 << idx),
                dominated | self.closed[idx as usize],
                on_found,
            )?;
            if let SearchOutcome::Stopped = outcome {
                return Ok(SearchOutcome::Stopped);
            }
        }
        Ok(SearchOutcome::Done)
    }

    /// Smallest k admitting a connected dominating set, with the first
    /// witness found at that size.
    fn solve(&mut self) -> Result<(u32, u64), SolverError> {
        let lower = self.cells.div_ceil(5).max(1);
        for k in lower..=self.cells {
            let mut witness = None;
            self.extend(k, 0, 0, 0, 0, &mut |mask| {
                witness = Some(mask);
                false
            })?;
            if let Some(mask) = witness {
                return Ok((k, mask));
            }
        }
        unreachable!("the full vertex set is always a connected dominating set")
    }
}

fn context_for(
    m: u32,
    n: u32,
    ceiling: u32,
    budget: Option<u64>,
) -> Result<SearchContext, SolverError> {
    SearchContext::new(m, n, ceiling, budget)
}

/// Computes the exact minimum connected dominating set size by exhaustive
/// search, with the default cell ceiling. The witness returned is the
/// lexicographically least one.
///
/// `budget` caps the number of search nodes; exceeding it yields
/// [`SolverError::Inconclusive`].
pub fn solve_gamma(m: u32, n: u32, budget: Option<u64>) -> Result<SolveResult, SolverError> {
    solve_gamma_with_ceiling(m, n, budget, DEFAULT_CELL_CEILING)
}

/// Same as [`solve_gamma`] with an explicit cell ceiling (still bounded by
/// the bitmask limit of 60 cells).
pub fn solve_gamma_with_ceiling(
    m: u32,
    n: u32,
    budget: Option<u64>,
    ceiling: u32,
) -> Result<SolveResult, SolverError> {
    let mut ctx = context_for(m, n, ceiling, budget)?;
    let (gamma, mask) = ctx.solve()?;
    Ok(SolveResult { gamma, witness: ctx.mask_to_set(mask), node_count: ctx.node_count })
}

/// Enumerates every minimum-size connected dominating set in lexicographic
/// order, stopping after `cap` sets. `truncated` reports whether more
/// solutions exist beyond the cap.
pub fn enumerate_mcds(m: u32, n: u32, cap: usize) -> Result<McdsEnumeration, SolverError> {
    let mut ctx = context_for(m, n, DEFAULT_CELL_CEILING, None)?;
    let (gamma, _) = ctx.solve()?;
    let mut masks: Vec<u64> = Vec::new();
    let mut truncated = false;
    ctx.extend(gamma, 0, 0, 0, 0, &mut |mask| {
        if masks.len() == cap {
            truncated = true;
            return false;
        }
        masks.push(mask);
        true
    })?;
    let sets = masks.into_iter().map(|mask| ctx.mask_to_set(mask)).collect();
    Ok(McdsEnumeration { gamma, sets, truncated })
}

/// Reorients a connected dominating set so it contains the vertex `(1, 2)`:
/// returns the set unchanged when it already does, otherwise its transpose
/// when that contains `(1, 2)`. Any minimum-size connected dominating set on
/// a grid with both sides at least 4 satisfies one of the two.
pub fn normalize_origin(d: &VertexSet) -> Result<VertexSet, SolverError> {
    if !d.is_cds() {
        return Err(SolverError::InvariantViolation(
            "normalize_origin needs a connected dominating set".into(),
        ));
    }
    if d.has(1, 2) {
        return Ok(d.clone());
    }
    let t = d.transpose();
    if t.has(1, 2) {
        return Ok(t);
    }
    Err(SolverError::InvariantViolation(
        "set contains neither (1, 2) nor (2, 1); cannot anchor it".into(),
    ))
}
