//! Simple paths, monocles, and the structural classification of the union
//! of two paths with common endpoints.

use crate::cycle::{as_cycle, Cycle};
use crate::graph::{EdgeSet, Graph, GraphError};

/// A simple path in an ambient graph, stored as its vertex sequence together
/// with the edge indices between consecutive vertices. A single vertex is a
/// zero-length path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl Path {
    /// Validates that the vertex sequence is nonempty, repeats no vertex and
    /// steps along existing edges.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Path, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::EmptyPath);
        }
        let mut seen = vec![false; g.vertex_count()];
        for &v in &vertices {
            if v >= g.vertex_count() {
                return Err(GraphError::UnknownVertex(v, g.vertex_count()));
            }
            if seen[v] {
                return Err(GraphError::RepeatedVertex(v));
            }
            seen[v] = true;
        }
        let mut edges = Vec::with_capacity(vertices.len() - 1);
        for pair in vertices.windows(2) {
            match g.find_edge(pair[0], pair[1]) {
                Some(e) => edges.push(e),
                None => return Err(GraphError::MissingEdge(pair[0], pair[1])),
            }
        }
        Ok(Path { vertices, edges })
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// Number of edges.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn edge_set(&self, g: &Graph) -> EdgeSet {
        let mut set = EdgeSet::empty(g.edge_count());
        for &e in &self.edges {
            set.insert(e);
        }
        set
    }

    pub fn reversed(&self) -> Path {
        Path {
            vertices: self.vertices.iter().rev().copied().collect(),
            edges: self.edges.iter().rev().copied().collect(),
        }
    }

    /// Position of `v` in the vertex sequence.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }
}

/// A cycle with two vertex-disjoint paths attached to distinct cycle
/// vertices. Either attachment may be a single vertex (zero length).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monocle {
    cycle: Cycle,
    attach_a: Path,
    attach_b: Path,
}

impl Monocle {
    /// Checks the monocle shape: the attachments are vertex-disjoint from
    /// each other, each meets the cycle exactly in its last vertex, and the
    /// two anchor vertices differ.
    pub fn new(cycle: Cycle, attach_a: Path, attach_b: Path) -> Result<Monocle, GraphError> {
        for p in [&attach_a, &attach_b] {
            let on_cycle = p
                .vertices()
                .iter()
                .filter(|&&v| cycle.contains_vertex(v))
                .count();
            if on_cycle != 1 || !cycle.contains_vertex(p.last()) {
                return Err(GraphError::BadAttachment(on_cycle));
            }
        }
        if let Some(&v) = attach_a
            .vertices()
            .iter()
            .find(|&&v| attach_b.contains_vertex(v))
        {
            return Err(GraphError::AttachmentsOverlap(v));
        }
        if attach_a.last() == attach_b.last() {
            return Err(GraphError::EqualAnchors(attach_a.last()));
        }
        Ok(Monocle {
            cycle,
            attach_a,
            attach_b,
        })
    }

    pub fn cycle(&self) -> &Cycle {
        &self.cycle
    }

    /// Attachment path starting at the first path endpoint.
    pub fn attach_a(&self) -> &Path {
        &self.attach_a
    }

    /// Attachment path starting at the second path endpoint.
    pub fn attach_b(&self) -> &Path {
        &self.attach_b
    }

    /// Cycle vertex where the first attachment ends.
    pub fn anchor_a(&self) -> usize {
        self.attach_a.last()
    }

    /// Cycle vertex where the second attachment ends.
    pub fn anchor_b(&self) -> usize {
        self.attach_b.last()
    }

    /// All edges of the monocle: cycle plus both attachments.
    pub fn edge_set(&self, g: &Graph) -> EdgeSet {
        *self.cycle.edge_set() | self.attach_a.edge_set(g) | self.attach_b.edge_set(g)
    }

    /// All vertices of the monocle, ascending.
    pub fn vertex_set(&self, g: &Graph) -> Vec<usize> {
        let mut seen = vec![false; g.vertex_count()];
        for &v in self.cycle.vertices() {
            seen[v] = true;
        }
        for p in [&self.attach_a, &self.attach_b] {
            for &v in p.vertices() {
                seen[v] = true;
            }
        }
        (0..g.vertex_count()).filter(|&v| seen[v]).collect()
    }
}

/// Decides whether the union of two distinct paths with the same endpoints
/// is a monocle, by degree analysis of the union subgraph: trace an
/// attachment path from each endpoint and require the rest to be a single
/// cycle equal to the symmetric difference of the paths.
///
/// Returns `Ok(None)` when the union is not a monocle, and an error when the
/// paths do not share endpoints or are identical.
pub fn classify_union(g: &Graph, s: &Path, t: &Path) -> Result<Option<Monocle>, GraphError> {
    if s.first() != t.first() || s.last() != t.last() {
        return Err(GraphError::EndpointMismatch);
    }
    if s == t {
        return Err(GraphError::IdenticalPaths);
    }
    let union = s.edge_set(g) | t.edge_set(g);
    let deg = union.degrees(g);
    let (u, v) = (s.first(), s.last());
    let Some(attach_a) = trace_attachment(g, &union, &deg, u, v) else {
        return Ok(None);
    };
    let Some(attach_b) = trace_attachment(g, &union, &deg, v, u) else {
        return Ok(None);
    };
    if attach_a
        .vertices()
        .iter()
        .any(|&w| attach_b.contains_vertex(w))
    {
        return Ok(None);
    }
    let rest = union - (attach_a.edge_set(g) | attach_b.edge_set(g));
    let Ok(cycle) = as_cycle(g, &rest) else {
        return Ok(None);
    };
    if !cycle.contains_vertex(attach_a.last()) || !cycle.contains_vertex(attach_b.last()) {
        return Ok(None);
    }
    // every union vertex must be accounted for by the cycle or an attachment
    let covered =
        rest.vertices(g).len() + attach_a.vertices().len() + attach_b.vertices().len() - 2;
    if covered != union.vertices(g).len() {
        return Ok(None);
    }
    // the cycle of a monocle union is forced to be the symmetric difference
    if rest != s.edge_set(g) ^ t.edge_set(g) {
        return Ok(None);
    }
    Monocle::new(cycle, attach_a, attach_b).map(Some)
}

/// Follows the union subgraph from `start` through degree-2 vertices until a
/// degree-3 vertex (the anchor). A degree-2 start is its own anchor. Returns
/// `None` when the walk reaches a dead end, the opposite endpoint, or a
/// vertex of degree 4.
fn trace_attachment(
    g: &Graph,
    union: &EdgeSet,
    deg: &[usize],
    start: usize,
    other: usize,
) -> Option<Path> {
    if deg[start] == 2 {
        return Path::new(g, vec![start]).ok();
    }
    if deg[start] != 1 {
        return None;
    }
    let mut verts = vec![start];
    let mut prev_edge = None;
    let mut cur = start;
    loop {
        let (nb, idx) = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&(_, idx)| union.contains(idx) && Some(idx) != prev_edge)?;
        if nb == other || verts.contains(&nb) {
            return None;
        }
        verts.push(nb);
        match deg[nb] {
            3 => return Path::new(g, verts).ok(),
            2 => {
                prev_edge = Some(idx);
                cur = nb;
            }
            _ => return None,
        }
    }
}
