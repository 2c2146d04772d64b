//! Simple undirected graphs with stable edge indices, plus bitmask edge sets.
//!
//! Every other module works in terms of edge indices of a fixed ambient
//! graph, so the graph validates its edge list once at construction and
//! never changes afterwards.

use std::collections::VecDeque;

use thiserror::Error;

/// Edge sets are single 128-bit masks, so graphs are capped at 128 edges.
pub const MAX_EDGES: usize = 128;

/// Errors raised by graph construction and edge-set algebra.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) is a self-loop")]
    SelfLoop(usize, usize),
    #[error("edge ({0}, {1}) duplicates an earlier edge")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("graph has {0} edges, at most {MAX_EDGES} are supported")]
    TooManyEdges(usize),
    #[error("edge sets belong to graphs with {0} and {1} edges")]
    AmbientMismatch(usize, usize),
    #[error("edge index {0} out of range for a graph with {1} edges")]
    UnknownEdge(usize, usize),
    #[error("vertex {0} out of range for a graph with {1} vertices")]
    UnknownVertex(usize, usize),
    #[error("path has no vertices")]
    EmptyPath,
    #[error("path repeats vertex {0}")]
    RepeatedVertex(usize),
    #[error("consecutive path vertices {0} and {1} are not adjacent")]
    MissingEdge(usize, usize),
    #[error("paths do not join the same vertex pair")]
    EndpointMismatch,
    #[error("paths are identical")]
    IdenticalPaths,
    #[error("attachment paths share vertex {0}")]
    AttachmentsOverlap(usize),
    #[error("attachment path meets the cycle at {0} vertices, expected exactly one")]
    BadAttachment(usize),
    #[error("both attachment paths anchor at the same cycle vertex {0}")]
    EqualAnchors(usize),
}

/// A simple undirected graph. Edge `k` is always the `k`-th pair passed at
/// construction, and all higher-level structures refer to edges by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    labels: Vec<Option<String>>,
}

impl Graph {
    /// Builds a graph from a vertex count and an edge list, rejecting
    /// self-loops, duplicate edges and out-of-range endpoints.
    pub fn new(vertex_count: usize, edge_list: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if edge_list.len() > MAX_EDGES {
            return Err(GraphError::TooManyEdges(edge_list.len()));
        }
        let mut seen = std::collections::HashSet::new();
        let mut adj = vec![Vec::new(); vertex_count];
        for (idx, &(a, b)) in edge_list.iter().enumerate() {
            if a >= vertex_count || b >= vertex_count {
                return Err(GraphError::EndpointOutOfRange(a, b, vertex_count));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a, b));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(GraphError::DuplicateEdge(a, b));
            }
            adj[a].push((b, idx));
            adj[b].push((a, idx));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges: edge_list.to_vec(),
            adj,
            labels: vec![None; vertex_count],
        })
    }

    /// Attaches display labels to vertices; missing entries keep the index.
    pub fn with_labels(mut self, labels: Vec<(usize, String)>) -> Result<Graph, GraphError> {
        for (v, name) in labels {
            if v >= self.vertex_count {
                return Err(GraphError::UnknownVertex(v, self.vertex_count));
            }
            self.labels[v] = Some(name);
        }
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of edge `e` in the orientation given at construction.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Neighbors of `v` as `(neighbor, edge index)` pairs in neighbor order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Looks up the index of the edge joining `a` and `b`, if any.
    pub fn find_edge(&self, a: usize, b: usize) -> Option<usize> {
        if a >= self.vertex_count || b >= self.vertex_count {
            return None;
        }
        self.adj[a]
            .iter()
            .find(|&&(nb, _)| nb == b)
            .map(|&(_, idx)| idx)
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels[v].as_deref()
    }

    /// Display name of a vertex: its label when set, its index otherwise.
    pub fn vertex_name(&self, v: usize) -> String {
        match &self.labels[v] {
            Some(name) => name.clone(),
            None => v.to_string(),
        }
    }

    /// Bitmask of the edges incident to `v`.
    pub fn incident_edges(&self, v: usize) -> EdgeSet {
        let mut set = EdgeSet::empty(self.edge_count());
        for &(_, idx) in &self.adj[v] {
            set.insert(idx);
        }
        set
    }

    /// The full edge set of the graph.
    pub fn all_edges(&self) -> EdgeSet {
        let mut set = EdgeSet::empty(self.edge_count());
        for e in 0..self.edge_count() {
            set.insert(e);
        }
        set
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        self.reachable_from(0, None).iter().filter(|&&r| r).count() == self.vertex_count
    }

    /// True iff the graph is connected, has at least three vertices and no
    /// cut vertex.
    pub fn is_two_connected(&self) -> bool {
        if self.vertex_count < 3 || !self.is_connected() {
            return false;
        }
        (0..self.vertex_count).all(|v| {
            let start = if v == 0 { 1 } else { 0 };
            let reach = self.reachable_from(start, Some(v));
            (0..self.vertex_count).all(|w| w == v || reach[w])
        })
    }

    /// BFS distance between two vertices, `None` when unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return None;
        }
        let mut dist = vec![None; self.vertex_count];
        dist[u] = Some(0);
        let mut queue = VecDeque::from([u]);
        while let Some(w) = queue.pop_front() {
            if w == v {
                return dist[v];
            }
            for &(nb, _) in &self.adj[w] {
                if dist[nb].is_none() {
                    dist[nb] = Some(dist[w].unwrap() + 1);
                    queue.push_back(nb);
                }
            }
        }
        dist[v]
    }

    /// All BFS distances from `v`.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(w) = queue.pop_front() {
            for &(nb, _) in &self.adj[w] {
                if dist[nb].is_none() {
                    dist[nb] = Some(dist[w].unwrap() + 1);
                    queue.push_back(nb);
                }
            }
        }
        dist
    }

    fn reachable_from(&self, start: usize, skip: Option<usize>) -> Vec<bool> {
        let mut reach = vec![false; self.vertex_count];
        if Some(start) == skip || start >= self.vertex_count {
            return reach;
        }
        reach[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(w) = queue.pop_front() {
            for &(nb, _) in &self.adj[w] {
                if Some(nb) != skip && !reach[nb] {
                    reach[nb] = true;
                    queue.push_back(nb);
                }
            }
        }
        reach
    }
}

/// A set of edges of a fixed ambient graph, stored as a bitmask over edge
/// indices. The mask length always equals the ambient edge count, which is
/// how mismatched operands are detected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet {
    mask: u128,
    len: usize,
}

impl EdgeSet {
    pub fn empty(ambient_edges: usize) -> EdgeSet {
        assert!(ambient_edges <= MAX_EDGES);
        EdgeSet {
            mask: 0,
            len: ambient_edges,
        }
    }

    /// Builds a set from explicit edge indices, rejecting out-of-range ones.
    pub fn from_edges(ambient_edges: usize, edges: &[usize]) -> Result<EdgeSet, GraphError> {
        let mut set = EdgeSet::empty(ambient_edges);
        for &e in edges {
            if e >= ambient_edges {
                return Err(GraphError::UnknownEdge(e, ambient_edges));
            }
            set.insert(e);
        }
        Ok(set)
    }

    /// Wraps a raw mask; bits at or above the ambient edge count must be
    /// clear.
    pub fn from_mask(ambient_edges: usize, mask: u128) -> EdgeSet {
        assert!(ambient_edges <= MAX_EDGES);
        debug_assert!(ambient_edges == MAX_EDGES || mask >> ambient_edges == 0);
        EdgeSet {
            mask,
            len: ambient_edges,
        }
    }

    /// Mask length, i.e. the ambient graph's edge count.
    pub fn ambient_len(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, e: usize) {
        debug_assert!(e < self.len);
        self.mask |= 1u128 << e;
    }

    pub fn remove(&mut self, e: usize) {
        self.mask &= !(1u128 << e);
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.len && self.mask >> e & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn mask(&self) -> u128 {
        self.mask
    }

    /// Edge indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&e| self.mask >> e & 1 == 1)
    }

    pub fn is_subset_of(&self, other: &EdgeSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.mask & !other.mask == 0
    }

    /// Edges in exactly one of the two sets. Errors when the operands live
    /// in different ambient graphs.
    pub fn symmetric_difference(&self, other: &EdgeSet) -> Result<EdgeSet, GraphError> {
        if self.len != other.len {
            return Err(GraphError::AmbientMismatch(self.len, other.len));
        }
        Ok(EdgeSet {
            mask: self.mask ^ other.mask,
            len: self.len,
        })
    }

    /// Vertices incident to at least one edge of the set, ascending.
    pub fn vertices(&self, g: &Graph) -> Vec<usize> {
        let mut seen = vec![false; g.vertex_count()];
        for e in self.iter() {
            let (a, b) = g.endpoints(e);
            seen[a] = true;
            seen[b] = true;
        }
        (0..g.vertex_count()).filter(|&v| seen[v]).collect()
    }

    /// Degree of every vertex in the subgraph induced by the set.
    pub fn degrees(&self, g: &Graph) -> Vec<usize> {
        let mut deg = vec![0; g.vertex_count()];
        for e in self.iter() {
            let (a, b) = g.endpoints(e);
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// True iff the subgraph induced by the set is connected (ignoring
    /// vertices not incident to any of its edges). Empty sets count as
    /// connected.
    pub fn induces_connected(&self, g: &Graph) -> bool {
        let verts = self.vertices(g);
        let Some(&start) = verts.first() else {
            return true;
        };
        let mut reach = vec![false; g.vertex_count()];
        reach[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(w) = queue.pop_front() {
            for &(nb, idx) in g.neighbors(w) {
                if self.contains(idx) && !reach[nb] {
                    reach[nb] = true;
                    queue.push_back(nb);
                }
            }
        }
        verts.into_iter().all(|v| reach[v])
    }
}

macro_rules! edge_set_op {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait for EdgeSet {
            type Output = EdgeSet;
            fn $method(self, rhs: EdgeSet) -> EdgeSet {
                assert_eq!(self.len, rhs.len, "edge sets from different graphs");
                EdgeSet {
                    mask: self.mask $op rhs.mask,
                    len: self.len,
                }
            }
        }
    };
}

edge_set_op!(BitXor, bitxor, ^);
edge_set_op!(BitOr, bitor, |);
edge_set_op!(BitAnd, bitand, &);

impl std::ops::Sub for EdgeSet {
    type Output = EdgeSet;
    fn sub(self, rhs: EdgeSet) -> EdgeSet {
        assert_eq!(self.len, rhs.len, "edge sets from different graphs");
        EdgeSet {
            mask: self.mask & !rhs.mask,
            len: self.len,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::k4;
    use proptest::prelude::*;

    #[test]
    fn builds_k4_with_stable_edge_indices() {
        let g = k4();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.endpoints(0), (0, 3));
        assert_eq!(g.endpoints(5), (1, 2));
        assert_eq!(g.find_edge(3, 0), Some(0));
        assert_eq!(g.find_edge(0, 0), None);
    }

    #[test]
    fn builds_triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn rejects_duplicate_edge() {
        let err = Graph::new(4, &[(0, 1), (0, 1)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge(0, 1));
        // also when given with flipped endpoints
        let err = Graph::new(4, &[(0, 1), (1, 0)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge(1, 0));
    }

    #[test]
    fn rejects_self_loop_and_out_of_range() {
        assert_eq!(
            Graph::new(3, &[(1, 1)]).unwrap_err(),
            GraphError::SelfLoop(1, 1)
        );
        assert_eq!(
            Graph::new(3, &[(0, 3)]).unwrap_err(),
            GraphError::EndpointOutOfRange(0, 3, 3)
        );
    }

    #[test]
    fn two_connectedness() {
        assert!(k4().is_two_connected());
        // path u-x-v: x is a cut vertex
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!path.is_two_connected());
        let square = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(square.is_two_connected());
        // an edge alone has fewer than three vertices
        let edge = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(!edge.is_two_connected());
        let disconnected =
            Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!disconnected.is_two_connected());
    }

    #[test]
    fn distances() {
        let g = k4();
        assert_eq!(g.distance(0, 3), Some(1));
        let square = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(square.distance(0, 2), Some(2));
        let two = Graph::new(2, &[]).unwrap();
        assert_eq!(two.distance(0, 1), None);
    }

    #[test]
    fn symmetric_difference_examples() {
        let g = k4();
        let m = g.edge_count();
        let f = EdgeSet::from_edges(m, &[1, 3, 0]).unwrap(); // {ux, xv, uv}
        let h = EdgeSet::from_edges(m, &[2, 4, 0]).unwrap(); // {uy, yv, uv}
        assert!(f.symmetric_difference(&f).unwrap().is_empty());
        let d = f.symmetric_difference(&h).unwrap();
        assert_eq!(d, EdgeSet::from_edges(m, &[1, 3, 2, 4]).unwrap());
        let empty = EdgeSet::empty(m);
        assert_eq!(f.symmetric_difference(&empty).unwrap(), f);
        // mismatched ambient graphs
        let other = EdgeSet::empty(3);
        assert_eq!(
            f.symmetric_difference(&other).unwrap_err(),
            GraphError::AmbientMismatch(6, 3)
        );
    }

    proptest! {
        #[test]
        fn sym_diff_assoc_comm(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
            let len = 64;
            let mk = |m: u64| EdgeSet { mask: m as u128, len };
            let (a, b, c) = (mk(a), mk(b), mk(c));
            prop_assert_eq!(a ^ (b ^ c), (a ^ b) ^ c);
            prop_assert_eq!(a ^ b, b ^ a);
            prop_assert_eq!(a ^ a, EdgeSet::empty(len));
        }
    }
}
