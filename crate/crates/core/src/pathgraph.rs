//! The path graph of a graph with two distinguished vertices: its vertices
//! are the simple u-v paths, and two paths are adjacent when one arises
//! from the other by swapping a subpath against an internally disjoint
//! replacement. Includes the restricted variant whose edges are filtered by
//! a set of allowed exchange cycles, plus constructive connectivity and
//! diameter routines.

use thiserror::Error;

use crate::cycle::{as_cycle, Cycle};
use crate::cyclespace::CycleSet;
use crate::graph::{Graph, GraphError};
use crate::path::Path;

/// Paths are enumerated exhaustively, so the count is capped.
pub const DEFAULT_PATH_LIMIT: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathGraphError {
    #[error("vertex {0} out of range for a graph with {1} vertices")]
    UnknownVertex(usize, usize),
    #[error("endpoints {0} and {1} must differ")]
    EqualEndpoints(usize, usize),
    #[error("more than {0} paths, giving up")]
    TooManyPaths(usize),
    #[error("restriction cycle {index} is not a cycle of this graph")]
    ForeignCycle { index: usize },
    #[error("paths do not join the same vertex pair")]
    EndpointMismatch,
    #[error("paths are identical")]
    IdenticalPaths,
    #[error("path does not join the distinguished endpoints")]
    WrongEndpoints,
    #[error("no path joins {0} and {1}")]
    NoRoute(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// All simple paths from `u` to `v`, sorted by length and then by vertex
/// sequence. Fails once more than `limit` paths are found.
pub fn enumerate_uv_paths_limited(
    g: &Graph,
    u: usize,
    v: usize,
    limit: usize,
) -> Result<Vec<Path>, PathGraphError> {
    for w in [u, v] {
        if w >= g.vertex_count() {
            return Err(PathGraphError::UnknownVertex(w, g.vertex_count()));
        }
    }
    if u == v {
        return Err(PathGraphError::EqualEndpoints(u, v));
    }
    let mut paths = Vec::new();
    let mut stack = vec![u];
    let mut on_stack = vec![false; g.vertex_count()];
    on_stack[u] = true;
    // iterative DFS: per stack level, the index into the adjacency row that
    // is tried next
    let mut cursor = vec![0usize];
    while let Some(&w) = stack.last() {
        if w == v {
            if paths.len() == limit {
                return Err(PathGraphError::TooManyPaths(limit));
            }
            paths.push(Path::new(g, stack.clone())?);
            on_stack[w] = false;
            stack.pop();
            cursor.pop();
            continue;
        }
        let row = g.neighbors(w);
        let next = cursor.last_mut().unwrap();
        let mut advanced = false;
        while *next < row.len() {
            let (nb, _) = row[*next];
            *next += 1;
            if !on_stack[nb] {
                stack.push(nb);
                on_stack[nb] = true;
                cursor.push(0);
                advanced = true;
                break;
            }
        }
        if !advanced {
            on_stack[w] = false;
            stack.pop();
            cursor.pop();
        }
    }
    paths.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.vertices().cmp(b.vertices()))
    });
    Ok(paths)
}

/// [`enumerate_uv_paths_limited`] with the default cap.
pub fn enumerate_uv_paths(g: &Graph, u: usize, v: usize) -> Result<Vec<Path>, PathGraphError> {
    enumerate_uv_paths_limited(g, u, v, DEFAULT_PATH_LIMIT)
}

/// The vertices between which an exchange swaps subpaths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exchange {
    /// Last vertex of the longest common prefix.
    pub x: usize,
    /// First vertex of the longest common suffix.
    pub y: usize,
}

/// Decides adjacency of two paths with the same endpoints: they are
/// adjacent iff stripping the longest common prefix and suffix leaves
/// internally disjoint subpaths on both sides. Returns the exchange
/// endpoints on success; `None` for equal paths or paths with different
/// endpoints.
///
/// Maximality of the common prefix and suffix is canonical: when any valid
/// exchange pair exists, the maximal one is valid, so nothing is lost by
/// checking only it.
pub fn are_adjacent(s: &Path, t: &Path) -> Option<Exchange> {
    if s == t || s.first() != t.first() || s.last() != t.last() {
        return None;
    }
    let sv = s.vertices();
    let tv = t.vertices();
    let prefix = sv.iter().zip(tv.iter()).take_while(|(a, b)| a == b).count();
    let suffix = sv
        .iter()
        .rev()
        .zip(tv.iter().rev())
        .take_while(|(a, b)| a == b)
        .count();
    // distinct paths with shared endpoints diverge strictly between x and y
    let x = prefix - 1;
    debug_assert!(x + suffix < sv.len() && x + suffix < tv.len());
    let mid_s = &sv[prefix..sv.len() - suffix];
    let mid_t = &tv[prefix..tv.len() - suffix];
    if mid_s.iter().any(|w| mid_t.contains(w)) {
        return None;
    }
    Some(Exchange {
        x: sv[x],
        y: sv[sv.len() - suffix],
    })
}

/// The exchange cycle of two adjacent paths: their symmetric difference,
/// which adjacency forces to be a single cycle.
pub fn exchange_cycle(g: &Graph, s: &Path, t: &Path) -> Option<Cycle> {
    are_adjacent(s, t)?;
    let diff = s.edge_set(g) ^ t.edge_set(g);
    Some(as_cycle(g, &diff).expect("difference of adjacent paths is a cycle"))
}

/// An edge of the path graph: the indices of the two paths and the cycle
/// their exchange traces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathGraphEdge {
    pub a: usize,
    pub b: usize,
    pub exchange: Cycle,
}

/// The path graph (or its restriction): paths as vertices, exchanges as
/// edges.
#[derive(Debug, Clone)]
pub struct PathGraph {
    paths: Vec<Path>,
    edges: Vec<PathGraphEdge>,
    adjacency: Vec<Vec<u64>>,
}

impl PathGraph {
    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn path_count(&self) -> usize {
        self.paths.len()
    }

    pub fn edges(&self) -> &[PathGraphEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Index of a path in the sorted vertex list.
    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.paths.iter().position(|q| q == p)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a][b / 64] >> (b % 64) & 1 == 1
    }

    fn neighbors_of(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.paths.len()).filter(move |&b| self.has_edge(a, b))
    }

    /// Connected components as sorted index lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.paths.len()];
        let mut components = Vec::new();
        for start in 0..self.paths.len() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(w) = queue.pop_front() {
                for nb in self.neighbors_of(w) {
                    if !seen[nb] {
                        seen[nb] = true;
                        comp.push(nb);
                        queue.push_back(nb);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// Largest pairwise distance, or `None` when the path graph is
    /// disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        let p = self.paths.len();
        if p == 0 {
            return None;
        }
        let words = self.adjacency[0].len();
        let mut best = 0;
        for start in 0..p {
            let mut seen = vec![0u64; words];
            let mut frontier = vec![0u64; words];
            seen[start / 64] |= 1 << (start % 64);
            frontier[start / 64] |= 1 << (start % 64);
            let mut reached = 1;
            let mut dist = 0;
            loop {
                let mut next = vec![0u64; words];
                for a in 0..p {
                    if frontier[a / 64] >> (a % 64) & 1 == 1 {
                        for (w, row) in next.iter_mut().zip(&self.adjacency[a]) {
                            *w |= row;
                        }
                    }
                }
                for (n, s) in next.iter_mut().zip(&seen) {
                    *n &= !s;
                }
                let gained: u32 = next.iter().map(|w| w.count_ones()).sum();
                if gained == 0 {
                    break;
                }
                reached += gained as usize;
                dist += 1;
                for (s, n) in seen.iter_mut().zip(&next) {
                    *s |= n;
                }
                frontier = next;
            }
            if reached < p {
                return None;
            }
            best = best.max(dist);
        }
        Some(best)
    }
}

/// Builds the path graph of `(g, u, v)`, restricted to exchange cycles in
/// `restriction` when given. Warns but proceeds when `g` is not
/// 2-connected. Restriction cycles must be cycles of `g`.
pub fn build_path_graph(
    g: &Graph,
    u: usize,
    v: usize,
    restriction: Option<&CycleSet>,
) -> Result<PathGraph, PathGraphError> {
    build_path_graph_limited(g, u, v, restriction, DEFAULT_PATH_LIMIT)
}

/// [`build_path_graph`] with an explicit cap on the number of paths.
pub fn build_path_graph_limited(
    g: &Graph,
    u: usize,
    v: usize,
    restriction: Option<&CycleSet>,
    limit: usize,
) -> Result<PathGraph, PathGraphError> {
    if !g.is_two_connected() {
        log::warn!("graph is not 2-connected; the path graph may be disconnected");
    }
    if let Some(c) = restriction {
        for (index, cycle) in c.iter().enumerate() {
            let es = cycle.edge_set();
            if es.ambient_len() != g.edge_count() || as_cycle(g, es).is_err() {
                return Err(PathGraphError::ForeignCycle { index });
            }
        }
    }
    let paths = enumerate_uv_paths_limited(g, u, v, limit)?;
    let words = paths.len().div_ceil(64).max(1);
    let mut adjacency = vec![vec![0u64; words]; paths.len()];
    let mut edges = Vec::new();
    for a in 0..paths.len() {
        for b in a + 1..paths.len() {
            if are_adjacent(&paths[a], &paths[b]).is_none() {
                continue;
            }
            let diff = paths[a].edge_set(g) ^ paths[b].edge_set(g);
            let exchange = as_cycle(g, &diff).expect("difference of adjacent paths is a cycle");
            if let Some(c) = restriction {
                if !c.contains(&exchange) {
                    continue;
                }
            }
            adjacency[a][b / 64] |= 1 << (b % 64);
            adjacency[b][a / 64] |= 1 << (a % 64);
            edges.push(PathGraphEdge { a, b, exchange });
        }
    }
    Ok(PathGraph {
        paths,
        edges,
        adjacency,
    })
}

/// Bookkeeping of one merge step toward a target path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MergeState {
    /// Number of leading edges the source shares with the target.
    pub shared_prefix_edges: usize,
    /// Number of target edges the step copies beyond the shared prefix.
    pub detour_edges: usize,
    /// Position on the source where the copied segment reconnects.
    pub rejoin_index: usize,
}

/// One step of the merge walk: copy target edges beyond the shared prefix
/// until the first vertex already on the source, then rejoin the source
/// there. The result shares at least one more leading edge with the target.
pub fn merge_step(g: &Graph, s: &Path, t: &Path) -> Result<(Path, MergeState), PathGraphError> {
    if s.first() != t.first() || s.last() != t.last() {
        return Err(PathGraphError::EndpointMismatch);
    }
    if s == t {
        return Err(PathGraphError::IdenticalPaths);
    }
    let sv = s.vertices();
    let tv = t.vertices();
    let shared = sv.iter().zip(tv.iter()).take_while(|(a, b)| a == b).count() - 1;
    let mut on_s = vec![false; g.vertex_count()];
    for &w in sv {
        on_s[w] = true;
    }
    // t returns to s at v if nowhere earlier, so the detour is well defined
    let detour = (1..)
        .find(|&i| on_s[tv[shared + i]])
        .expect("paths share their last vertex");
    let rejoin = s.position(tv[shared + detour]).unwrap();
    if log::log_enabled!(log::Level::Trace) {
        let j = (1..)
            .find(|&i| tv.contains(&sv[shared + i]))
            .expect("paths share their last vertex");
        let l = tv.iter().position(|&w| w == sv[shared + j]).unwrap();
        log::trace!(
            "merge step: first source vertex beyond the prefix that lies on \
             the target is {} (source index {}, target index {})",
            sv[shared + j],
            shared + j,
            l
        );
    }
    let mut next = sv[..=shared].to_vec();
    next.extend_from_slice(&tv[shared + 1..=shared + detour]);
    next.extend_from_slice(&sv[rejoin + 1..]);
    let merged = Path::new(g, next)?;
    debug_assert!(are_adjacent(s, &merged).is_some());
    Ok((
        merged,
        MergeState {
            shared_prefix_edges: shared,
            detour_edges: detour,
            rejoin_index: rejoin,
        },
    ))
}

/// Walks from `s` to `t` through adjacent paths by repeated merge steps.
/// The walk includes both endpoints and takes at most `t.len()` steps,
/// since every step grows the shared prefix by at least one edge.
pub fn merge_walk(g: &Graph, s: &Path, t: &Path) -> Result<Vec<Path>, PathGraphError> {
    if s.first() != t.first() || s.last() != t.last() {
        return Err(PathGraphError::EndpointMismatch);
    }
    let mut walk = vec![s.clone()];
    while walk.last().unwrap() != t {
        let (next, state) = merge_step(g, walk.last().unwrap(), t)?;
        debug_assert!(walk.len() <= t.len(), "merge walk exceeded its bound");
        debug_assert!(state.shared_prefix_edges + state.detour_edges <= t.len());
        walk.push(next);
    }
    Ok(walk)
}

/// The lexicographically smallest shortest path from `u` to `v`: among all
/// shortest paths, at every step take the smallest next vertex.
pub fn lex_shortest_path(g: &Graph, u: usize, v: usize) -> Result<Path, PathGraphError> {
    for w in [u, v] {
        if w >= g.vertex_count() {
            return Err(PathGraphError::UnknownVertex(w, g.vertex_count()));
        }
    }
    let dist = g.distances_from(v);
    if dist[u].is_none() {
        return Err(PathGraphError::NoRoute(u, v));
    }
    let mut verts = vec![u];
    let mut cur = u;
    while cur != v {
        let d = dist[cur].unwrap();
        let (nb, _) = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&(nb, _)| dist[nb] == Some(d - 1))
            .expect("some neighbor is closer to the goal");
        verts.push(nb);
        cur = nb;
    }
    Ok(Path::new(g, verts)?)
}

/// A walk from `s` to `t` of length at most twice the u-v distance: merge
/// both into the lexicographically smallest shortest path and glue the two
/// walks back to back.
pub fn bounded_route(
    g: &Graph,
    u: usize,
    v: usize,
    s: &Path,
    t: &Path,
) -> Result<Vec<Path>, PathGraphError> {
    for p in [s, t] {
        if p.first() != u || p.last() != v {
            return Err(PathGraphError::WrongEndpoints);
        }
    }
    let mid = lex_shortest_path(g, u, v)?;
    let first = merge_walk(g, s, &mid)?;
    let second = merge_walk(g, t, &mid)?;
    let mut route = first;
    route.extend(second.into_iter().rev().skip(1));
    Ok(route)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{k4, path};

    #[test]
    fn k4_has_five_paths() {
        let g = k4();
        let paths = enumerate_uv_paths(&g, 0, 3).unwrap();
        let seqs: Vec<&[usize]> = paths.iter().map(|p| p.vertices()).collect();
        assert_eq!(
            seqs,
            vec![
                &[0, 3][..],
                &[0, 1, 3][..],
                &[0, 2, 3][..],
                &[0, 1, 2, 3][..],
                &[0, 2, 1, 3][..],
            ]
        );
    }

    #[test]
    fn path_enumeration_respects_limit() {
        let g = k4();
        assert_eq!(
            enumerate_uv_paths_limited(&g, 0, 3, 4).unwrap_err(),
            PathGraphError::TooManyPaths(4)
        );
        assert_eq!(enumerate_uv_paths_limited(&g, 0, 3, 5).unwrap().len(), 5);
    }

    #[test]
    fn path_enumeration_rejects_equal_endpoints() {
        let g = k4();
        assert_eq!(
            enumerate_uv_paths(&g, 1, 1).unwrap_err(),
            PathGraphError::EqualEndpoints(1, 1)
        );
    }

    #[test]
    fn direct_edge_adjacent_to_two_vertex_detour() {
        let g = k4();
        let s = path(&g, &[0, 3]);
        let t = path(&g, &[0, 1, 2, 3]);
        let ex = are_adjacent(&s, &t).unwrap();
        assert_eq!((ex.x, ex.y), (0, 3));
        let c = exchange_cycle(&g, &s, &t).unwrap();
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn crossing_detours_are_not_adjacent() {
        // the difference IS a 4-cycle, yet the middles share x and y, so no
        // single exchange produces one path from the other
        let g = k4();
        let s = path(&g, &[0, 1, 2, 3]);
        let t = path(&g, &[0, 2, 1, 3]);
        assert_eq!(are_adjacent(&s, &t), None);
        let diff = s.edge_set(&g) ^ t.edge_set(&g);
        assert!(as_cycle(&g, &diff).is_ok());
    }

    #[test]
    fn equal_paths_are_not_adjacent() {
        let g = k4();
        let s = path(&g, &[0, 1, 3]);
        assert_eq!(are_adjacent(&s, &s), None);
    }

    #[test]
    fn k4_path_graph_structure() {
        let g = k4();
        let pg = build_path_graph(&g, 0, 3, None).unwrap();
        assert_eq!(pg.path_count(), 5);
        // every pair except the two crossing detours is adjacent
        assert_eq!(pg.edge_count(), 9);
        assert_eq!(pg.components().len(), 1);
        assert_eq!(pg.diameter(), Some(2));
    }

    #[test]
    fn k4_restricted_path_graph_splits() {
        // allowed exchanges: the two triangles through uv and the square
        // through u, x, y, v; the crossing detour pair keeps no edge
        let g = k4();
        let c = CycleSet::new(vec![
            crate::cycle::cycle_from_vertices(&g, &[0, 1, 3]),
            crate::cycle::cycle_from_vertices(&g, &[0, 2, 3]),
            crate::cycle::cycle_from_vertices(&g, &[0, 1, 2, 3]),
        ])
        .unwrap();
        let pg = build_path_graph(&g, 0, 3, Some(&c)).unwrap();
        assert_eq!(pg.path_count(), 5);
        let comps = pg.components();
        assert_eq!(comps.len(), 2);
        // the crossing detour [0, 2, 1, 3] is isolated
        assert_eq!(comps[1], vec![4]);
        assert!(pg.diameter().is_none());
    }

    #[test]
    fn restriction_rejects_foreign_cycles() {
        let g = k4();
        let other = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let c = CycleSet::new(vec![crate::cycle::cycle_from_vertices(&other, &[0, 1, 2])]).unwrap();
        assert_eq!(
            build_path_graph(&g, 0, 3, Some(&c)).unwrap_err(),
            PathGraphError::ForeignCycle { index: 0 }
        );
    }

    #[test]
    fn merge_step_swaps_disjoint_middles() {
        let g = k4();
        let s = path(&g, &[0, 1, 3]);
        let t = path(&g, &[0, 2, 3]);
        let (next, state) = merge_step(&g, &s, &t).unwrap();
        assert_eq!(next.vertices(), &[0, 2, 3]);
        assert_eq!(state.shared_prefix_edges, 0);
        assert_eq!(state.detour_edges, 2);
        assert_eq!(state.rejoin_index, 2);
    }

    #[test]
    fn merge_step_shortens_detour() {
        let g = k4();
        let s = path(&g, &[0, 1, 2, 3]);
        let t = path(&g, &[0, 3]);
        let (next, state) = merge_step(&g, &s, &t).unwrap();
        assert_eq!(next.vertices(), &[0, 3]);
        assert_eq!(state.shared_prefix_edges, 0);
        assert_eq!(state.detour_edges, 1);
        assert_eq!(state.rejoin_index, 3);
    }

    #[test]
    fn merge_walk_reaches_target_within_bound() {
        let g = k4();
        let paths = enumerate_uv_paths(&g, 0, 3).unwrap();
        for s in &paths {
            for t in &paths {
                let walk = merge_walk(&g, s, t).unwrap();
                assert_eq!(walk.first().unwrap(), s);
                assert_eq!(walk.last().unwrap(), t);
                assert!(walk.len() <= t.len() + 1);
                for pair in walk.windows(2) {
                    assert!(are_adjacent(&pair[0], &pair[1]).is_some());
                }
            }
        }
    }

    #[test]
    fn lex_shortest_path_prefers_small_vertices() {
        let g = k4();
        let p = lex_shortest_path(&g, 1, 2).unwrap();
        assert_eq!(p.vertices(), &[1, 2]);
        let square = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p = lex_shortest_path(&square, 0, 2).unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2]);
    }

    #[test]
    fn bounded_route_respects_distance_bound() {
        let g = k4();
        let paths = enumerate_uv_paths(&g, 0, 3).unwrap();
        let d = g.distance(0, 3).unwrap();
        for s in &paths {
            for t in &paths {
                let route = bounded_route(&g, 0, 3, s, t).unwrap();
                assert_eq!(route.first().unwrap(), s);
                assert_eq!(route.last().unwrap(), t);
                assert!(
                    route.len() <= 2 * d + 1,
                    "route of {} steps",
                    route.len() - 1
                );
                for pair in route.windows(2) {
                    assert!(
                        are_adjacent(&pair[0], &pair[1]).is_some(),
                        "consecutive route paths must be adjacent"
                    );
                }
            }
        }
    }
}
