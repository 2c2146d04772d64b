//! Shared fixtures for unit tests.

use crate::graph::Graph;
use crate::path::Path;

/// K4 with u=0, x=1, y=2, v=3 and edge order uv, ux, uy, xv, yv, xy.
pub fn k4() -> Graph {
    Graph::new(4, &[(0, 3), (0, 1), (0, 2), (1, 3), (2, 3), (1, 2)]).unwrap()
}

pub fn path(g: &Graph, verts: &[usize]) -> Path {
    Path::new(g, verts.to_vec()).unwrap()
}
