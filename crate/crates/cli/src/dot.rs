//! DOT rendering of path graphs. Output is a pure function of the
//! inputs: node order follows the path enumeration, edge order the path
//! graph's edge list.

use pathspace_core::{are_adjacent, Graph, PathGraph};
use std::fmt::Write;

#[derive(Default, Clone, Copy)]
pub struct DotOptions {
    /// Also draw, dashed, adjacencies whose exchange cycle the
    /// restriction excluded.
    pub show_excluded: bool,
}

pub fn export_dot(g: &Graph, pg: &PathGraph, opts: DotOptions) -> String {
    let mut out = String::from("graph pathgraph {\n");
    for (i, p) in pg.paths().iter().enumerate() {
        let label: Vec<String> = p.vertices().iter().map(|&v| g.vertex_name(v)).collect();
        writeln!(out, "  p{} [label=\"{}\"];", i, label.join("-")).expect("string write");
    }
    for e in pg.edges() {
        writeln!(out, "  p{} -- p{};", e.a, e.b).expect("string write");
    }
    if opts.show_excluded {
        for i in 0..pg.path_count() {
            for j in i + 1..pg.path_count() {
                if !pg.has_edge(i, j) && are_adjacent(&pg.paths()[i], &pg.paths()[j]).is_some() {
                    writeln!(out, "  p{} -- p{} [style=dashed];", i, j).expect("string write");
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::k4_fixture;
    use pathspace_core::{build_path_graph, CycleSet};

    #[test]
    fn restricted_k4_renders_the_isolated_path() {
        let (g, u, v, c) = k4_fixture();
        let pg = build_path_graph(&g, u, v, Some(&c)).unwrap();
        let text = export_dot(&g, &pg, DotOptions::default());
        assert!(text.contains("p4 [label=\"u-y-x-v\"];"));
        for line in text.lines() {
            assert!(
                !(line.contains("--") && line.contains("p4")),
                "p4 must stay isolated: {line}"
            );
        }
        assert_eq!(text, export_dot(&g, &pg, DotOptions::default()));
    }

    #[test]
    fn excluded_edges_come_out_dashed() {
        let (g, u, v, c) = k4_fixture();
        let pg = build_path_graph(&g, u, v, Some(&c)).unwrap();
        let full = build_path_graph(&g, u, v, None).unwrap();
        let text = export_dot(
            &g,
            &pg,
            DotOptions {
                show_excluded: true,
            },
        );
        let dashed = text.lines().filter(|l| l.contains("dashed")).count();
        assert_eq!(dashed, full.edge_count() - pg.edge_count());
    }

    #[test]
    fn empty_restriction_renders_no_edges() {
        let (g, u, v, _) = k4_fixture();
        let pg = build_path_graph(&g, u, v, Some(&CycleSet::empty())).unwrap();
        let text = export_dot(&g, &pg, DotOptions::default());
        assert!(!text.contains("--"));
        assert_eq!(text.lines().filter(|l| l.contains("label")).count(), 5);
    }
}
