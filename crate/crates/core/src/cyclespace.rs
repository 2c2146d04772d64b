//! The cycle space of a graph over GF(2): rank computations, span checks,
//! fundamental cycles of a spanning tree, and exhaustive cycle enumeration.

use thiserror::Error;

use crate::cycle::{as_cycle, Cycle, NotCycle};
use crate::graph::{EdgeSet, Graph};

/// Cycle enumeration expands a basis of this size into all of its nonzero
/// combinations, so it is capped.
pub const MAX_ENUMERATION_DIMENSION: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleSpaceError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("cycle {index} is invalid: {reason}")]
    InvalidCycle { index: usize, reason: NotCycle },
    #[error("cycle {0} repeats an earlier cycle")]
    DuplicateCycle(usize),
    #[error("cycles belong to graphs with {0} and {1} edges")]
    AmbientMismatch(usize, usize),
    #[error("edge set with {0} edges does not span all {1} vertices as a tree")]
    NotSpanningTree(usize, usize),
    #[error("edge index {0} out of range for a graph with {1} edges")]
    UnknownEdge(usize, usize),
    #[error("vertex {0} out of range for a graph with {1} vertices")]
    UnknownVertex(usize, usize),
    #[error("cycle space dimension {0} exceeds the enumeration cap {MAX_ENUMERATION_DIMENSION}")]
    DimensionTooLarge(usize),
}

/// An ordered, duplicate-free collection of cycles of one ambient graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleSet {
    cycles: Vec<Cycle>,
}

impl CycleSet {
    pub fn empty() -> CycleSet {
        CycleSet { cycles: Vec::new() }
    }

    /// Validates pairwise distinctness and a common ambient graph.
    pub fn new(cycles: Vec<Cycle>) -> Result<CycleSet, CycleSpaceError> {
        let mut seen = std::collections::HashSet::new();
        for (i, c) in cycles.iter().enumerate() {
            let len = c.edge_set().ambient_len();
            let first = cycles[0].edge_set().ambient_len();
            if len != first {
                return Err(CycleSpaceError::AmbientMismatch(first, len));
            }
            if !seen.insert(c.edge_set().mask()) {
                return Err(CycleSpaceError::DuplicateCycle(i));
            }
        }
        Ok(CycleSet { cycles })
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Cycle> {
        self.cycles.iter()
    }

    pub fn get(&self, i: usize) -> &Cycle {
        &self.cycles[i]
    }

    pub fn as_slice(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn contains(&self, c: &Cycle) -> bool {
        self.contains_edge_set(c.edge_set())
    }

    pub fn contains_edge_set(&self, es: &EdgeSet) -> bool {
        self.cycles.iter().any(|c| c.edge_set() == es)
    }

    /// Appends a cycle unless an equal one is present; reports whether it
    /// was added.
    pub fn push_unique(&mut self, c: Cycle) -> bool {
        if self.contains(&c) {
            return false;
        }
        self.cycles.push(c);
        true
    }

    /// GF(2) rank of the cycles as vectors indexed by edge.
    pub fn rank(&self) -> usize {
        gf2_rank(self.cycles.iter().map(|c| c.edge_set().mask()))
    }
}

impl IntoIterator for CycleSet {
    type Item = Cycle;
    type IntoIter = std::vec::IntoIter<Cycle>;
    fn into_iter(self) -> Self::IntoIter {
        self.cycles.into_iter()
    }
}

impl<'a> IntoIterator for &'a CycleSet {
    type Item = &'a Cycle;
    type IntoIter = std::slice::Iter<'a, Cycle>;
    fn into_iter(self) -> Self::IntoIter {
        self.cycles.iter()
    }
}

/// Rank of a list of GF(2) vectors; pivots are chosen lowest edge index
/// first.
pub fn gf2_rank(rows: impl IntoIterator<Item = u128>) -> usize {
    let mut pivots: Vec<u128> = Vec::new();
    for mut row in rows {
        for &p in &pivots {
            if row & (p & p.wrapping_neg()) != 0 {
                row ^= p;
            }
        }
        if row != 0 {
            pivots.push(row);
            pivots.sort_unstable_by_key(|r| r.trailing_zeros());
        }
    }
    pivots.len()
}

/// Dimension of the cycle space of a connected graph: `m - n + 1`.
pub fn cycle_space_dimension(g: &Graph) -> Result<usize, CycleSpaceError> {
    if !g.is_connected() {
        return Err(CycleSpaceError::NotConnected);
    }
    Ok(g.edge_count() - g.vertex_count() + 1)
}

/// Outcome of comparing the span of a cycle set against the full cycle
/// space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpanCheck {
    pub rank: usize,
    pub dimension: usize,
    pub spans: bool,
}

/// Whether the given cycles span the whole cycle space of `g`.
pub fn spans_cycle_space(c: &CycleSet, g: &Graph) -> Result<SpanCheck, CycleSpaceError> {
    let dimension = cycle_space_dimension(g)?;
    if let Some(first) = c.as_slice().first() {
        if first.edge_set().ambient_len() != g.edge_count() {
            return Err(CycleSpaceError::AmbientMismatch(
                g.edge_count(),
                first.edge_set().ambient_len(),
            ));
        }
    }
    let rank = c.rank();
    Ok(SpanCheck {
        rank,
        dimension,
        spans: rank == dimension,
    })
}

/// A spanning tree of a connected graph, picked by BFS from vertex 0 taking
/// edges in adjacency order.
pub fn bfs_spanning_tree(g: &Graph) -> Result<EdgeSet, CycleSpaceError> {
    if !g.is_connected() {
        return Err(CycleSpaceError::NotConnected);
    }
    let mut tree = EdgeSet::empty(g.edge_count());
    if g.vertex_count() == 0 {
        return Ok(tree);
    }
    let mut seen = vec![false; g.vertex_count()];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(w) = queue.pop_front() {
        for &(nb, idx) in g.neighbors(w) {
            if !seen[nb] {
                seen[nb] = true;
                tree.insert(idx);
                queue.push_back(nb);
            }
        }
    }
    Ok(tree)
}

/// Fundamental cycles of a spanning tree: one cycle per non-tree edge, in
/// edge index order. The tree must have `n - 1` edges and reach every
/// vertex.
pub fn fundamental_cycles(g: &Graph, tree: &EdgeSet) -> Result<CycleSet, CycleSpaceError> {
    if tree.ambient_len() != g.edge_count() {
        return Err(CycleSpaceError::AmbientMismatch(
            g.edge_count(),
            tree.ambient_len(),
        ));
    }
    let n = g.vertex_count();
    // a single vertex has an empty spanning tree
    let spanning = if n <= 1 {
        tree.is_empty()
    } else {
        tree.count() == n - 1 && tree.vertices(g).len() == n && tree.induces_connected(g)
    };
    if !spanning {
        return Err(CycleSpaceError::NotSpanningTree(tree.count(), n));
    }
    let mut cycles = Vec::new();
    for e in 0..g.edge_count() {
        if tree.contains(e) {
            continue;
        }
        let (a, b) = g.endpoints(e);
        let mut es = tree_path_edges(g, tree, a, b);
        es.insert(e);
        let cycle = as_cycle(g, &es).expect("tree path plus chord closes into a cycle");
        cycles.push(cycle);
    }
    CycleSet::new(cycles)
}

/// Edge set of the unique tree path between two vertices.
fn tree_path_edges(g: &Graph, tree: &EdgeSet, a: usize, b: usize) -> EdgeSet {
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[a] = true;
    let mut queue = std::collections::VecDeque::from([a]);
    'bfs: while let Some(w) = queue.pop_front() {
        for &(nb, idx) in g.neighbors(w) {
            if tree.contains(idx) && !seen[nb] {
                seen[nb] = true;
                parent[nb] = Some((w, idx));
                if nb == b {
                    break 'bfs;
                }
                queue.push_back(nb);
            }
        }
    }
    let mut es = EdgeSet::empty(g.edge_count());
    let mut cur = b;
    while cur != a {
        let (p, idx) = parent[cur].expect("tree connects every vertex pair");
        es.insert(idx);
        cur = p;
    }
    es
}

/// Every cycle of the graph, produced by expanding a fundamental basis into
/// all nonzero GF(2) combinations and keeping those that form a single
/// cycle. Sorted by edge mask.
pub fn enumerate_all_cycles(g: &Graph) -> Result<CycleSet, CycleSpaceError> {
    let dim = cycle_space_dimension(g)?;
    if dim > MAX_ENUMERATION_DIMENSION {
        return Err(CycleSpaceError::DimensionTooLarge(dim));
    }
    let tree = bfs_spanning_tree(g)?;
    let basis: Vec<u128> = fundamental_cycles(g, &tree)?
        .iter()
        .map(|c| c.edge_set().mask())
        .collect();
    let mut cycles = Vec::new();
    let mut acc = 0u128;
    // Gray-code walk: combination i differs from i-1 in one basis element
    for i in 1u64..(1u64 << dim) {
        acc ^= basis[i.trailing_zeros() as usize];
        let es = EdgeSet::from_mask(g.edge_count(), acc);
        if let Ok(c) = as_cycle(g, &es) {
            cycles.push(c);
        }
    }
    cycles.sort();
    CycleSet::new(cycles)
}

/// All cycles through a given edge, sorted by edge mask.
pub fn cycles_through_edge(g: &Graph, e: usize) -> Result<CycleSet, CycleSpaceError> {
    if e >= g.edge_count() {
        return Err(CycleSpaceError::UnknownEdge(e, g.edge_count()));
    }
    let all = enumerate_all_cycles(g)?;
    CycleSet::new(all.into_iter().filter(|c| c.contains_edge(e)).collect())
}

/// All cycles through a given vertex, sorted by edge mask.
pub fn cycles_through_vertex(g: &Graph, w: usize) -> Result<CycleSet, CycleSpaceError> {
    if w >= g.vertex_count() {
        return Err(CycleSpaceError::UnknownVertex(w, g.vertex_count()));
    }
    let incident = g.incident_edges(w);
    let all = enumerate_all_cycles(g)?;
    CycleSet::new(
        all.into_iter()
            .filter(|c| !(*c.edge_set() & incident).is_empty())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::k4;

    #[test]
    fn dimension_of_k4_is_three() {
        assert_eq!(cycle_space_dimension(&k4()).unwrap(), 3);
    }

    #[test]
    fn dimension_needs_connectivity() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            cycle_space_dimension(&g).unwrap_err(),
            CycleSpaceError::NotConnected
        );
    }

    #[test]
    fn rank_of_k4_triangles_plus_dependent_cycle() {
        // {uxv, uyv, uxyv}: the third is NOT the sum of the first two, the
        // set is independent with rank 3 and spans the whole space
        let g = k4();
        let c = CycleSet::new(vec![
            crate::cycle::cycle_from_vertices(&g, &[0, 1, 3]),
            crate::cycle::cycle_from_vertices(&g, &[0, 2, 3]),
            crate::cycle::cycle_from_vertices(&g, &[0, 1, 2, 3]),
        ])
        .unwrap();
        let check = spans_cycle_space(&c, &g).unwrap();
        assert_eq!(check.rank, 3);
        assert_eq!(check.dimension, 3);
        assert!(check.spans);
    }

    #[test]
    fn dependent_triple_does_not_span() {
        // uxv + uyv = uxvy (as edge sets), so these three have rank 2
        let g = k4();
        let uxv = crate::cycle::cycle_from_vertices(&g, &[0, 1, 3]);
        let uyv = crate::cycle::cycle_from_vertices(&g, &[0, 2, 3]);
        let sum = as_cycle(&g, &(*uxv.edge_set() ^ *uyv.edge_set())).unwrap();
        let c = CycleSet::new(vec![uxv, uyv, sum]).unwrap();
        let check = spans_cycle_space(&c, &g).unwrap();
        assert_eq!(check.rank, 2);
        assert!(!check.spans);
    }

    #[test]
    fn fundamental_cycles_of_k4_star_tree() {
        // star at u: tree edges uv, ux, uy; chords xv, yv, xy
        let g = k4();
        let tree = EdgeSet::from_edges(6, &[0, 1, 2]).unwrap();
        let c = fundamental_cycles(&g, &tree).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(
            c.get(0).edge_set(),
            &EdgeSet::from_edges(6, &[0, 1, 3]).unwrap()
        );
        assert_eq!(
            c.get(1).edge_set(),
            &EdgeSet::from_edges(6, &[0, 2, 4]).unwrap()
        );
        assert_eq!(
            c.get(2).edge_set(),
            &EdgeSet::from_edges(6, &[1, 2, 5]).unwrap()
        );
        assert_eq!(c.rank(), 3);
    }

    #[test]
    fn fundamental_cycles_reject_non_tree() {
        let g = k4();
        let not_tree = EdgeSet::from_edges(6, &[0, 1, 3]).unwrap(); // a triangle
        assert_eq!(
            fundamental_cycles(&g, &not_tree).unwrap_err(),
            CycleSpaceError::NotSpanningTree(3, 4)
        );
        let too_few = EdgeSet::from_edges(6, &[0, 1]).unwrap();
        assert!(fundamental_cycles(&g, &too_few).is_err());
    }

    #[test]
    fn k4_has_seven_cycles() {
        let g = k4();
        let all = enumerate_all_cycles(&g).unwrap();
        assert_eq!(all.len(), 7);
        let triangles = all.iter().filter(|c| c.len() == 3).count();
        let squares = all.iter().filter(|c| c.len() == 4).count();
        assert_eq!((triangles, squares), (4, 3));
    }

    #[test]
    fn triangle_has_one_cycle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let all = enumerate_all_cycles(&g).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all.get(0).len(), 3);
    }

    #[test]
    fn cycles_through_k4_edge_and_vertex() {
        let g = k4();
        // edge uv lies on 2 triangles and 2 squares
        let through_uv = cycles_through_edge(&g, 0).unwrap();
        assert_eq!(through_uv.len(), 4);
        assert!(through_uv.iter().all(|c| c.contains_edge(0)));
        // vertex u misses only the triangle xyv
        let through_u = cycles_through_vertex(&g, 0).unwrap();
        assert_eq!(through_u.len(), 6);
        assert!(through_u.iter().all(|c| c.contains_vertex(0)));
    }

    #[test]
    fn cycle_set_rejects_duplicates() {
        let g = k4();
        let c = crate::cycle::cycle_from_vertices(&g, &[0, 1, 3]);
        assert_eq!(
            CycleSet::new(vec![c.clone(), c]).unwrap_err(),
            CycleSpaceError::DuplicateCycle(1)
        );
    }
}
