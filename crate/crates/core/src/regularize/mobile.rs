//! Mobile vertices and minimum-irregularity paths.
//!
//! A mobile is an irregular member whose removal keeps the set dominating,
//! recognized by one of five local membership patterns. The path machinery
//! finds, inside the induced subgraph of the set minus some excluded cells,
//! the lexicographically least path between two endpoints that touches the
//! fewest irregular vertices; every such path carries a mobile in the states
//! the rewrite steps visit.

use std::collections::{HashMap, VecDeque};

use crate::grid::{neighbors, Vertex, VertexSet};
use crate::regularize::frame::{regular_part, RegularityFrame, RegularizeError};

/// Membership that treats out-of-grid coordinates as absent; coordinates
/// here never exceed the grid by more than one step.
fn member(d: &VertexSet, x: u32, y: u32) -> bool {
    x >= 1 && y >= 1 && d.has(x, y)
}

fn is_mobile_pattern(d: &VertexSet, v: Vertex) -> bool {
    let (x, y) = (v.x, v.y);
    let n = d.dims().n;
    let m = d.dims().m;
    // Interior, supported from the left.
    if member(d, x + 1, y)
        && member(d, x.wrapping_sub(1), y)
        && member(d, x.wrapping_sub(1), y.wrapping_sub(1))
        && member(d, x.wrapping_sub(1), y + 1)
    {
        return true;
    }
    // Top edge, supported from the left.
    if y == n && member(d, x + 1, n) && member(d, x.wrapping_sub(1), n)
        && member(d, x.wrapping_sub(1), n.wrapping_sub(1))
    {
        return true;
    }
    // Interior, supported from below.
    if member(d, x, y + 1)
        && member(d, x, y.wrapping_sub(1))
        && member(d, x.wrapping_sub(1), y.wrapping_sub(1))
        && member(d, x + 1, y.wrapping_sub(1))
    {
        return true;
    }
    // Right edge, supported from below.
    if x == m
        && member(d, m, y + 1)
        && member(d, m, y.wrapping_sub(1))
        && member(d, m.wrapping_sub(1), y.wrapping_sub(1))
    {
        return true;
    }
    // The fixed corner pattern.
    if x == 1 && y == 3 && member(d, 1, 4) && member(d, 1, 2) && member(d, 2, 2) {
        return true;
    }
    false
}

/// All mobiles of the set relative to the frame: irregular members matching
/// one of the removal-safe patterns.
pub fn find_mobiles(
    d: &VertexSet,
    frame: &RegularityFrame,
) -> Result<VertexSet, RegularizeError> {
    let regular = regular_part(d, frame)?;
    let mut out = VertexSet::empty(d.dims());
    for v in d.iter() {
        if !regular.contains(v) && is_mobile_pattern(d, v) {
            out.insert(v)?;
        }
    }
    Ok(out)
}

/// Lexicographically least path between `from` and `to` inside `nodes`,
/// among paths with the fewest irregular vertices. Vertices in `weight_one`
/// cost 1, all others cost 0; the cost of a path counts every vertex on it.
fn least_irregular_path(
    nodes: &VertexSet,
    weight_one: &VertexSet,
    from: Vertex,
    to: Vertex,
) -> Option<Vec<Vertex>> {
    let dims = nodes.dims();
    let weight = |v: Vertex| u32::from(weight_one.contains(v));

    // Zero-one breadth-first search for the minimum cost from every node to
    // the target, counting both endpoints.
    let mut dist: HashMap<Vertex, u32> = HashMap::new();
    let mut queue: VecDeque<Vertex> = VecDeque::new();
    dist.insert(to, weight(to));
    queue.push_back(to);
    while let Some(v) = queue.pop_front() {
        let dv = dist[&v];
        for u in neighbors(v, dims).expect("node is in range") {
            if !nodes.contains(u) {
                continue;
            }
            let cand = dv + weight(u);
            if dist.get(&u).is_none_or(|&old| cand < old) {
                dist.insert(u, cand);
                if weight(u) == 0 {
                    queue.push_front(u);
                } else {
                    queue.push_back(u);
                }
            }
        }
    }
    let best = *dist.get(&from)?;

    // Depth-first search in lexicographic neighbor order, pruned to exact
    // minimum cost; the first complete simple path found is the answer.
    fn dfs(
        nodes: &VertexSet,
        dims: crate::grid::GridDims,
        dist: &HashMap<Vertex, u32>,
        best: u32,
        acc: u32,
        current: Vertex,
        to: Vertex,
        path: &mut Vec<Vertex>,
        on_path: &mut VertexSet,
        weight: &dyn Fn(Vertex) -> u32,
    ) -> bool {
        if current == to {
            return true;
        }
        for u in neighbors(current, dims).expect("node is in range") {
            if !nodes.contains(u) || on_path.contains(u) {
                continue;
            }
            let next_acc = acc + weight(u);
            match dist.get(&u) {
                Some(&rest) if next_acc + rest - weight(u) <= best => {}
                _ => continue,
            }
            path.push(u);
            on_path.insert(u).expect("node is in range");
            if dfs(nodes, dims, dist, best, next_acc, u, to, path, on_path, weight) {
                return true;
            }
            on_path.remove(u);
            path.pop();
        }
        false
    }

    let mut path = vec![from];
    let mut on_path = VertexSet::empty(dims);
    on_path.insert(from).expect("endpoint is in range");
    let found = dfs(
        nodes,
        dims,
        &dist,
        best,
        weight(from),
        from,
        to,
        &mut path,
        &mut on_path,
        &|v| weight(v),
    );
    found.then_some(path)
}

/// Finds a path from the regular vertex `u` to the irregular vertex `v_bar`
/// through the set minus `exclusions`, minimizing the number of irregular
/// vertices touched. Ties favor the lexicographically least path.
pub fn least_irregular_path_between(
    d: &VertexSet,
    frame: &RegularityFrame,
    u: Vertex,
    v_bar: Vertex,
    exclusions: &VertexSet,
) -> Result<Vec<Vertex>, RegularizeError> {
    let regular = regular_part(d, frame)?;
    let irregular = d.difference(&regular)?;
    if !regular.contains(u) {
        return Err(RegularizeError::Precondition(format!(
            "path start {u} must be a regular member"
        )));
    }
    if !irregular.contains(v_bar) {
        return Err(RegularizeError::Precondition(format!(
            "path target {v_bar} must be an irregular member"
        )));
    }
    if exclusions.contains(u) || exclusions.contains(v_bar) {
        return Err(RegularizeError::Precondition(
            "path endpoints must not be excluded".to_string(),
        ));
    }
    let nodes = d.difference(exclusions)?;
    least_irregular_path(&nodes, &irregular, u, v_bar)
        .ok_or(RegularizeError::NoPath { from: u, to: v_bar })
}

/// Like [`least_irregular_path_between`], additionally returning the
/// lexicographically least mobile on the found path.
pub fn mobile_on_path(
    d: &VertexSet,
    frame: &RegularityFrame,
    u: Vertex,
    v_bar: Vertex,
    exclusions: &VertexSet,
) -> Result<(Vertex, Vec<Vertex>), RegularizeError> {
    let path = least_irregular_path_between(d, frame, u, v_bar, exclusions)?;
    let mobiles = find_mobiles(d, frame)?;
    let mobile = path
        .iter()
        .copied()
        .filter(|v| mobiles.contains(*v))
        .min()
        .ok_or_else(|| {
            RegularizeError::LemmaViolation(format!(
                "no mobile on the least-irregular path from {u} to {v_bar}"
            ))
        })?;
    Ok((mobile, path))
}
