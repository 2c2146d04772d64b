//! Cycles as edge sets, with a checked conversion from raw edge sets.

use thiserror::Error;

use crate::graph::{EdgeSet, Graph};

/// Why an edge set fails to be a single cycle.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NotCycle {
    #[error("edge set is empty")]
    Empty,
    #[error("vertex {0} has degree {1} in the edge set, expected 2")]
    WrongDegree(usize, usize),
    #[error("edge set splits into more than one connected piece")]
    Disconnected,
}

/// A single cycle of an ambient graph. Identity is the edge set; the vertex
/// sequence is kept in a canonical cyclic order for display and traversal.
#[derive(Debug, Clone)]
pub struct Cycle {
    edges: EdgeSet,
    vertices: Vec<usize>,
}

impl Cycle {
    pub fn edge_set(&self) -> &EdgeSet {
        &self.edges
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.edges.count()
    }

    /// Vertices in cyclic order, starting at the smallest vertex and moving
    /// toward its smaller neighbor on the cycle.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        self.edges.contains(e)
    }
}

impl PartialEq for Cycle {
    fn eq(&self, other: &Self) -> bool {
        self.edges == other.edges
    }
}

impl Eq for Cycle {}

impl std::hash::Hash for Cycle {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.edges.hash(state);
    }
}

impl PartialOrd for Cycle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cycle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.edges.cmp(&other.edges)
    }
}

/// Interprets an edge set as a cycle: every incident vertex must have degree
/// exactly 2 and the edges must form one connected piece.
pub fn as_cycle(g: &Graph, edges: &EdgeSet) -> Result<Cycle, NotCycle> {
    if edges.is_empty() {
        return Err(NotCycle::Empty);
    }
    let deg = edges.degrees(g);
    let verts = edges.vertices(g);
    for &v in &verts {
        if deg[v] != 2 {
            return Err(NotCycle::WrongDegree(v, deg[v]));
        }
    }
    // walk from the smallest vertex toward its smaller cycle neighbor;
    // all degrees are 2, so the walk closes into some cycle
    let start = verts[0];
    let mut order = vec![start];
    let mut used = EdgeSet::empty(edges.ambient_len());
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .find(|&&(_, idx)| edges.contains(idx) && !used.contains(idx));
        let Some(&(nb, idx)) = next else {
            break;
        };
        used.insert(idx);
        if nb == start {
            break;
        }
        order.push(nb);
        cur = nb;
    }
    if used != *edges {
        return Err(NotCycle::Disconnected);
    }
    Ok(Cycle {
        edges: *edges,
        vertices: order,
    })
}

/// Builds the cycle through the given vertices in order (closing the last
/// back to the first); panics if an edge is missing, so only for test and
/// fixture use.
pub fn cycle_from_vertices(g: &Graph, verts: &[usize]) -> Cycle {
    let mut edges = EdgeSet::empty(g.edge_count());
    for i in 0..verts.len() {
        let a = verts[i];
        let b = verts[(i + 1) % verts.len()];
        let e = g
            .find_edge(a, b)
            .unwrap_or_else(|| panic!("no edge ({a}, {b})"));
        edges.insert(e);
    }
    as_cycle(g, &edges).expect("vertex sequence does not close into a cycle")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::k4;

    #[test]
    fn accepts_triangle_in_k4() {
        let g = k4();
        let es = EdgeSet::from_edges(6, &[0, 1, 3]).unwrap(); // uv, ux, xv
        let c = as_cycle(&g, &es).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.vertices(), &[0, 1, 3]);
        assert_eq!(c.edge_set(), &es);
    }

    #[test]
    fn accepts_four_cycle_in_k4() {
        let g = k4();
        let es = EdgeSet::from_edges(6, &[1, 2, 3, 4]).unwrap(); // ux, uy, xv, yv
        let c = as_cycle(&g, &es).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.vertices(), &[0, 1, 3, 2]);
    }

    #[test]
    fn rejects_empty_set() {
        let g = k4();
        let es = EdgeSet::empty(6);
        assert_eq!(as_cycle(&g, &es).unwrap_err(), NotCycle::Empty);
    }

    #[test]
    fn rejects_path_by_degree() {
        let g = k4();
        let es = EdgeSet::from_edges(6, &[1, 3]).unwrap(); // u-x-v path
        assert_eq!(as_cycle(&g, &es).unwrap_err(), NotCycle::WrongDegree(0, 1));
    }

    #[test]
    fn rejects_two_disjoint_triangles() {
        // two triangles sharing no vertex
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let es = EdgeSet::from_edges(6, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(as_cycle(&g, &es).unwrap_err(), NotCycle::Disconnected);
    }

    #[test]
    fn rejects_high_degree_vertex() {
        let g = k4();
        let es = g.all_edges();
        assert_eq!(as_cycle(&g, &es).unwrap_err(), NotCycle::WrongDegree(0, 3));
    }

    #[test]
    fn cycle_identity_is_edge_set() {
        let g = k4();
        let a = cycle_from_vertices(&g, &[0, 1, 3]);
        let b = cycle_from_vertices(&g, &[1, 3, 0]);
        assert_eq!(a, b);
    }
}
