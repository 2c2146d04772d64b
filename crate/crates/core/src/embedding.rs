//! Plane embeddings as rotation systems, face traversal, and the cycle set
//! of internal faces.

use thiserror::Error;

use crate::cycle::{as_cycle, NotCycle};
use crate::cyclespace::{CycleSet, CycleSpaceError};
use crate::graph::{EdgeSet, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("rotation list has {0} rows for a graph with {1} vertices")]
    WrongVertexCount(usize, usize),
    #[error("rotation at vertex {0} is not a permutation of its incident edges")]
    NotIncidencePermutation(usize),
    #[error("edge index {0} out of range for a graph with {1} edges")]
    UnknownEdge(usize, usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error(
        "face count {faces} violates the Euler relation for {vertices} vertices and {edges} edges"
    )]
    EulerViolation {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("face is not a simple cycle: {0}")]
    FaceNotCycle(NotCycle),
    #[error("face walks edge {0} twice")]
    FaceRepeatsEdge(usize),
    #[error(transparent)]
    CycleSpace(#[from] CycleSpaceError),
}

/// A directed edge: `forward` means traversal from the first to the second
/// endpoint as given at graph construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dart {
    pub edge: usize,
    pub forward: bool,
}

impl Dart {
    pub fn new(edge: usize, forward: bool) -> Dart {
        Dart { edge, forward }
    }

    /// Vertex the dart leaves.
    pub fn tail(&self, g: &Graph) -> usize {
        let (a, b) = g.endpoints(self.edge);
        if self.forward {
            a
        } else {
            b
        }
    }

    /// Vertex the dart enters.
    pub fn head(&self, g: &Graph) -> usize {
        let (a, b) = g.endpoints(self.edge);
        if self.forward {
            b
        } else {
            a
        }
    }
}

/// A combinatorial plane embedding: a cyclic order of incident edges at
/// every vertex, plus an optional dart naming the outer face. Validated to
/// satisfy the Euler relation, so faces are well defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneEmbedding {
    rotation: Vec<Vec<usize>>,
    outer: Dart,
}

impl PlaneEmbedding {
    /// Validates the rotation system against the graph and checks the Euler
    /// relation. When `outer` is `None`, the face containing the forward
    /// dart of edge 0 is taken as the outer face.
    pub fn new(
        g: &Graph,
        rotation: Vec<Vec<usize>>,
        outer: Option<Dart>,
    ) -> Result<PlaneEmbedding, EmbeddingError> {
        if rotation.len() != g.vertex_count() {
            return Err(EmbeddingError::WrongVertexCount(
                rotation.len(),
                g.vertex_count(),
            ));
        }
        if !g.is_connected() {
            return Err(EmbeddingError::NotConnected);
        }
        for (v, row) in rotation.iter().enumerate() {
            let mut expected: Vec<usize> = g.neighbors(v).iter().map(|&(_, idx)| idx).collect();
            let mut got = row.clone();
            expected.sort_unstable();
            got.sort_unstable();
            if expected != got {
                return Err(EmbeddingError::NotIncidencePermutation(v));
            }
        }
        let outer = match outer {
            Some(d) => {
                if d.edge >= g.edge_count() {
                    return Err(EmbeddingError::UnknownEdge(d.edge, g.edge_count()));
                }
                d
            }
            None => Dart::new(0, true),
        };
        let emb = PlaneEmbedding { rotation, outer };
        let faces = emb.face_count(g);
        if g.vertex_count() + faces != g.edge_count() + 2 {
            return Err(EmbeddingError::EulerViolation {
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                faces,
            });
        }
        Ok(emb)
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn outer_dart(&self) -> Dart {
        self.outer
    }

    /// Successor of a dart in face traversal: arrive at the head, then leave
    /// along the next edge after the arrival edge in the rotation there.
    pub fn next_dart(&self, g: &Graph, d: Dart) -> Dart {
        let w = d.head(g);
        let row = &self.rotation[w];
        let pos = row
            .iter()
            .position(|&e| e == d.edge)
            .expect("dart edge incident to its head");
        let next_edge = row[(pos + 1) % row.len()];
        let (a, _) = g.endpoints(next_edge);
        Dart::new(next_edge, a == w)
    }

    /// All faces as dart sequences. Every dart lies in exactly one face;
    /// faces are listed by their smallest dart (edge index, forward first).
    pub fn faces(&self, g: &Graph) -> Vec<Vec<Dart>> {
        let mut seen = vec![false; 2 * g.edge_count()];
        let slot = |d: Dart| 2 * d.edge + usize::from(!d.forward);
        let mut faces = Vec::new();
        for e in 0..g.edge_count() {
            for forward in [true, false] {
                let start = Dart::new(e, forward);
                if seen[slot(start)] {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = start;
                loop {
                    seen[slot(d)] = true;
                    face.push(d);
                    d = self.next_dart(g, d);
                    if d == start {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        faces
    }

    fn face_count(&self, g: &Graph) -> usize {
        self.faces(g).len()
    }

    /// The face containing the outer dart.
    pub fn outer_face(&self, g: &Graph) -> Vec<Dart> {
        self.faces(g)
            .into_iter()
            .find(|f| f.contains(&self.outer))
            .expect("outer dart lies in some face")
    }
}

/// Edge set of a face (darts may repeat an edge when the face walks both
/// sides; such faces are not simple cycles).
fn face_edge_set(g: &Graph, face: &[Dart]) -> EdgeSet {
    let mut es = EdgeSet::empty(g.edge_count());
    for d in face {
        es.insert(d.edge);
    }
    es
}

/// The internal faces of the embedding as a cycle set, sorted by edge mask.
/// Every face other than the outer one must be a simple cycle, which holds
/// for plane embeddings of 2-connected graphs.
pub fn internal_faces(g: &Graph, emb: &PlaneEmbedding) -> Result<CycleSet, EmbeddingError> {
    let faces = emb.faces(g);
    let outer = emb.outer_dart();
    let mut cycles = Vec::new();
    for face in &faces {
        if face.contains(&outer) {
            continue;
        }
        let es = face_edge_set(g, face);
        if face.len() != es.count() {
            let mut counts = vec![0usize; g.edge_count()];
            for d in face {
                counts[d.edge] += 1;
            }
            let e = counts.iter().position(|&c| c > 1).unwrap();
            return Err(EmbeddingError::FaceRepeatsEdge(e));
        }
        let cycle = as_cycle(g, &es).map_err(EmbeddingError::FaceNotCycle)?;
        cycles.push(cycle);
    }
    cycles.sort();
    CycleSet::new(cycles).map_err(EmbeddingError::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclespace::spans_cycle_space;
    use crate::testutil::k4;

    /// K4 drawn with y inside the triangle u, x, v. Rotations are the
    /// counterclockwise order around each vertex.
    fn k4_embedding(g: &Graph) -> PlaneEmbedding {
        // u=(0,0), x=(2,0), v=(1,2), y=(1,0.7)
        let rotation = vec![
            vec![1, 2, 0], // u: toward x, then y, then v
            vec![3, 5, 1], // x: toward v, then y, then u
            vec![2, 5, 4], // y: toward u, then x, then v
            vec![0, 4, 3], // v: toward u, then y, then x
        ];
        PlaneEmbedding::new(g, rotation, None).unwrap()
    }

    #[test]
    fn k4_embedding_has_four_faces() {
        let g = k4();
        let emb = k4_embedding(&g);
        assert_eq!(emb.faces(&g).len(), 4);
    }

    #[test]
    fn k4_internal_faces_span_cycle_space() {
        let g = k4();
        let emb = k4_embedding(&g);
        let faces = internal_faces(&g, &emb).unwrap();
        assert_eq!(faces.len(), 3);
        assert!(faces.iter().all(|c| c.len() == 3));
        let check = spans_cycle_space(&faces, &g).unwrap();
        assert!(check.spans);
    }

    #[test]
    fn outer_face_choice_changes_internal_set() {
        let g = k4();
        let rotation = k4_embedding(&g).rotation().to_vec();
        // pick the outer face through edge xy instead
        let emb = PlaneEmbedding::new(&g, rotation, Some(Dart::new(5, true))).unwrap();
        let faces = internal_faces(&g, &emb).unwrap();
        assert_eq!(faces.len(), 3);
        let default_faces = internal_faces(&g, &k4_embedding(&g)).unwrap();
        assert_ne!(faces, default_faces);
    }

    #[test]
    fn rejects_non_permutation_rotation() {
        let g = k4();
        let mut rotation = k4_embedding(&g).rotation().to_vec();
        rotation[0] = vec![1, 1, 0];
        assert_eq!(
            PlaneEmbedding::new(&g, rotation, None).unwrap_err(),
            EmbeddingError::NotIncidencePermutation(0)
        );
    }

    #[test]
    fn rejects_non_planar_rotation() {
        // swapping two edges at y turns the embedding into one with fewer
        // faces, violating the Euler relation
        let g = k4();
        let mut rotation = k4_embedding(&g).rotation().to_vec();
        rotation[2] = vec![5, 2, 4];
        let err = PlaneEmbedding::new(&g, rotation, None).unwrap_err();
        assert!(matches!(err, EmbeddingError::EulerViolation { .. }));
    }

    #[test]
    fn square_embedding_single_internal_face() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let rotation = vec![vec![0, 3], vec![0, 1], vec![1, 2], vec![2, 3]];
        let emb = PlaneEmbedding::new(&g, rotation, None).unwrap();
        let faces = internal_faces(&g, &emb).unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces.get(0).len(), 4);
    }
}
