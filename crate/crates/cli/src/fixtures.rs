//! Canned graphs with straight-line drawings. Rotation systems are read
//! off vertex coordinates, so every fixture is planar by construction and
//! the outer face never has to be named by hand.

use pathspace_core::{cycle_from_vertices, CycleSet, Dart, Graph, PlaneEmbedding};

/// A 2-connected plane graph with a validated embedding.
pub struct PlaneFixture {
    pub name: &'static str,
    pub graph: Graph,
    pub embedding: PlaneEmbedding,
}

/// Rotation at each vertex: incident edges sorted by angle to the
/// neighbor, counterclockwise.
fn rotation_from_coords(g: &Graph, coords: &[(f64, f64)]) -> Vec<Vec<usize>> {
    (0..g.vertex_count())
        .map(|v| {
            let mut inc: Vec<(f64, usize)> = g
                .neighbors(v)
                .iter()
                .map(|&(nb, e)| {
                    let dx = coords[nb].0 - coords[v].0;
                    let dy = coords[nb].1 - coords[v].1;
                    (dy.atan2(dx), e)
                })
                .collect();
            inc.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("angles are finite"));
            inc.into_iter().map(|(_, e)| e).collect()
        })
        .collect()
}

/// Signed area of the polygon traced by a face, in coordinate order.
fn face_area(g: &Graph, coords: &[(f64, f64)], face: &[Dart]) -> f64 {
    let mut twice = 0.0;
    for (i, d) in face.iter().enumerate() {
        let (ax, ay) = coords[d.tail(g)];
        let (bx, by) = coords[face[(i + 1) % face.len()].tail(g)];
        twice += ax * by - bx * ay;
    }
    twice / 2.0
}

/// Builds the embedding of a straight-line drawing. The face traversal
/// convention walks bounded faces clockwise, so exactly one face comes out
/// with positive area: the unbounded one.
pub fn embed_drawing(g: &Graph, coords: &[(f64, f64)]) -> PlaneEmbedding {
    assert_eq!(coords.len(), g.vertex_count(), "one coordinate per vertex");
    let rotation = rotation_from_coords(g, coords);
    let probe = PlaneEmbedding::new(g, rotation.clone(), None).expect("drawing is planar");
    let mut outer = None;
    for face in probe.faces(g) {
        let area = face_area(g, coords, &face);
        assert!(area.abs() > 1e-9, "degenerate face in the drawing");
        if area > 0.0 {
            assert!(outer.is_none(), "two faces claim the outside");
            outer = Some(face[0]);
        }
    }
    let outer = outer.expect("some face is unbounded");
    PlaneEmbedding::new(g, rotation, Some(outer))
        .expect("renaming the outer face preserves validity")
}

fn drawing(
    name: &'static str,
    n: usize,
    edges: &[(usize, usize)],
    coords: &[(f64, f64)],
) -> PlaneFixture {
    let graph = Graph::new(n, edges).expect("fixture graph is well formed");
    let embedding = embed_drawing(&graph, coords);
    PlaneFixture {
        name,
        graph,
        embedding,
    }
}

/// The labeled K4 on vertices u, x, y, v with its canonical edge order.
pub fn k4_graph() -> Graph {
    Graph::new(4, &[(0, 3), (0, 1), (0, 2), (1, 3), (2, 3), (1, 2)])
        .and_then(|g| {
            g.with_labels(vec![
                (0, "u".to_string()),
                (1, "x".to_string()),
                (2, "y".to_string()),
                (3, "v".to_string()),
            ])
        })
        .expect("K4 is well formed")
}

/// K4 with endpoints u, v and the cycle set {uxv, uyv, uxyv}: the span of
/// the set covers the whole cycle space, yet one u-v path ends up
/// isolated in the restricted path graph.
pub fn k4_fixture() -> (Graph, usize, usize, CycleSet) {
    let g = k4_graph();
    let c = CycleSet::new(vec![
        cycle_from_vertices(&g, &[0, 1, 3]),
        cycle_from_vertices(&g, &[0, 2, 3]),
        cycle_from_vertices(&g, &[0, 1, 2, 3]),
    ])
    .expect("the three K4 cycles are distinct");
    (g, 0, 3, c)
}

/// Ten-plus plane 2-connected fixtures, smallest first.
pub fn plane_fixtures() -> Vec<PlaneFixture> {
    let mut out = Vec::new();
    out.push(drawing(
        "triangle",
        3,
        &[(0, 1), (0, 2), (1, 2)],
        &[(0.0, 0.0), (2.0, 0.0), (1.0, 1.5)],
    ));
    let square_coords = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
    out.push(drawing(
        "square",
        4,
        &[(0, 1), (0, 3), (1, 2), (2, 3)],
        &square_coords,
    ));
    out.push(drawing(
        "chorded-square",
        4,
        &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)],
        &square_coords,
    ));
    let k4 = k4_graph();
    out.push(PlaneFixture {
        name: "k4",
        embedding: embed_drawing(&k4, &[(0.0, 0.0), (2.0, 0.0), (1.0, 0.7), (1.0, 2.0)]),
        graph: k4,
    });
    let pentagon_coords: Vec<(f64, f64)> = (0..5)
        .map(|i| {
            let a = std::f64::consts::TAU * (i as f64) / 5.0;
            (a.cos(), a.sin())
        })
        .collect();
    out.push(drawing(
        "pentagon",
        5,
        &[(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)],
        &pentagon_coords,
    ));
    out.push(drawing(
        "chorded-pentagon",
        5,
        &[(0, 1), (0, 2), (0, 4), (1, 2), (2, 3), (3, 4)],
        &pentagon_coords,
    ));
    out.push(drawing(
        "house",
        5,
        &[(0, 1), (0, 3), (1, 2), (2, 3), (2, 4), (3, 4)],
        &[(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0), (1.0, 3.0)],
    ));
    out.push(drawing(
        "domino",
        6,
        &[(0, 1), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (4, 5)],
        &[
            (0.0, 0.0),
            (1.0, 0.0),
            (2.0, 0.0),
            (0.0, 1.0),
            (1.0, 1.0),
            (2.0, 1.0),
        ],
    ));
    out.push(drawing(
        "prism",
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
        ],
        &[
            (0.0, 0.0),
            (4.0, 0.0),
            (2.0, 3.5),
            (1.3, 0.7),
            (2.7, 0.7),
            (2.0, 2.2),
        ],
    ));
    out.push(drawing(
        "wheel5",
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (1, 5),
        ],
        &{
            let mut c = vec![(0.0, 0.0)];
            c.extend((0..5).map(|i| {
                let a = std::f64::consts::TAU * (i as f64) / 5.0;
                (2.0 * a.cos(), 2.0 * a.sin())
            }));
            c
        },
    ));
    out.push(drawing(
        "octahedron",
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 3),
            (1, 5),
            (2, 3),
            (2, 4),
            (3, 4),
            (3, 5),
            (4, 5),
        ],
        &[
            (0.0, 0.0),
            (6.0, 0.0),
            (3.0, 5.2),
            (3.9, 1.9),
            (2.1, 1.9),
            (3.0, 0.9),
        ],
    ));
    out.push(drawing(
        "wheel6",
        7,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (0, 6),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (1, 6),
        ],
        &{
            let mut c = vec![(0.0, 0.0)];
            c.extend((0..6).map(|i| {
                let a = std::f64::consts::TAU * (i as f64) / 6.0;
                (2.0 * a.cos(), 2.0 * a.sin())
            }));
            c
        },
    ));
    out.push(drawing(
        "cube",
        8,
        &[
            (0, 1),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 5),
            (2, 3),
            (2, 6),
            (3, 7),
            (4, 5),
            (4, 7),
            (5, 6),
            (6, 7),
        ],
        &[
            (0.0, 0.0),
            (4.0, 0.0),
            (4.0, 4.0),
            (0.0, 4.0),
            (1.0, 1.0),
            (3.0, 1.0),
            (3.0, 3.0),
            (1.0, 3.0),
        ],
    ));
    out.push(drawing(
        "grid3",
        9,
        &[
            (0, 1),
            (0, 3),
            (1, 2),
            (1, 4),
            (2, 5),
            (3, 4),
            (3, 6),
            (4, 5),
            (4, 7),
            (5, 8),
            (6, 7),
            (7, 8),
        ],
        &[
            (0.0, 0.0),
            (1.0, 0.0),
            (2.0, 0.0),
            (0.0, 1.0),
            (1.0, 1.0),
            (2.0, 1.0),
            (0.0, 2.0),
            (1.0, 2.0),
            (2.0, 2.0),
        ],
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use pathspace_core::internal_faces;

    #[test]
    fn fixture_collection_is_large_and_two_connected() {
        let fixtures = plane_fixtures();
        assert!(fixtures.len() >= 10);
        for f in &fixtures {
            assert!(f.graph.is_two_connected(), "{} is 2-connected", f.name);
        }
    }

    #[test]
    fn k4_drawing_has_the_three_faces_around_the_inner_vertex() {
        let f = plane_fixtures()
            .into_iter()
            .find(|f| f.name == "k4")
            .unwrap();
        let faces = internal_faces(&f.graph, &f.embedding).unwrap();
        let masks: Vec<u128> = faces.iter().map(|c| c.edge_set().mask()).collect();
        // uyv {0,2,4}, uxy {1,2,5}, xyv {3,4,5}; the outer face uxv is gone
        assert_eq!(masks, vec![0b010101, 0b100110, 0b111000]);
    }

    #[test]
    fn square_drawing_has_one_internal_face() {
        let f = plane_fixtures()
            .into_iter()
            .find(|f| f.name == "square")
            .unwrap();
        let faces = internal_faces(&f.graph, &f.embedding).unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces.get(0).edge_set().mask(), 0b1111);
    }

    #[test]
    fn face_counts_match_euler() {
        for f in plane_fixtures() {
            let n = f.graph.vertex_count();
            let m = f.graph.edge_count();
            let faces = f.embedding.faces(&f.graph).len();
            assert_eq!(n + faces, m + 2, "{}", f.name);
        }
    }

    #[test]
    fn k4_fixture_matches_the_reference_cycle_set() {
        let (g, u, v, c) = k4_fixture();
        assert_eq!((u, v), (0, 3));
        assert_eq!(g.vertex_name(1), "x");
        let masks: Vec<u128> = c.iter().map(|cy| cy.edge_set().mask()).collect();
        assert_eq!(masks, vec![0b001011, 0b010101, 0b110011]);
    }
}
