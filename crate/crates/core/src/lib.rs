//! Path graphs of graphs with two distinguished vertices.
//!
//! Given a graph `G` and vertices `u`, `v`, the simple u-v paths form the
//! vertices of a new graph in which two paths are adjacent when one arises
//! from the other by exchanging a subpath against an internally disjoint
//! replacement; the exchanged parts then trace a cycle of `G`. This crate
//! builds these path graphs and their restrictions to a prescribed set of
//! allowed exchange cycles, analyzes the cycle space over GF(2), and
//! decides when a restriction keeps the path graph connected through a
//! closure of witness-backed exchange cycles.
//!
//! The modules build on each other in layers:
//!
//! * [`graph`]: graphs with stable edge indices, bitmask edge sets;
//! * [`cycle`], [`path`]: cycles, simple paths, and the monocle shape of a
//!   union of two paths;
//! * [`cyclespace`]: GF(2) rank, span checks, cycle enumeration;
//! * [`embedding`]: rotation systems and internal faces of plane graphs;
//! * [`pathgraph`]: the path graph, adjacency, components, diameter, and
//!   constructive routing between paths;
//! * [`deltastar`]: the witness property on exchange cycles, its closure,
//!   density, and two-step interpolation of forbidden exchanges;
//! * [`io`]: JSON wire formats.

pub mod cycle;
pub mod cyclespace;
pub mod deltastar;
pub mod embedding;
pub mod graph;
pub mod io;
pub mod path;
pub mod pathgraph;

pub use cycle::{as_cycle, cycle_from_vertices, Cycle, NotCycle};
pub use cyclespace::{
    bfs_spanning_tree, cycle_space_dimension, cycles_through_edge, cycles_through_vertex,
    enumerate_all_cycles, fundamental_cycles, gf2_rank, spans_cycle_space, CycleSet,
    CycleSpaceError, SpanCheck,
};
pub use deltastar::{
    cycles_in_unicycle_plus_edge, delta_star_closure, delta_star_closure_with_order,
    enumerate_unicycles_containing, extend_monocle_to_unicycle, has_property_delta_star,
    interpolate, is_delta_star_dense, project_walk, DeltaStarError, DeltaStarOutcome,
    DeltaStarWitness, Unicycle,
};
pub use embedding::{internal_faces, Dart, EmbeddingError, PlaneEmbedding};
pub use graph::{EdgeSet, Graph, GraphError, MAX_EDGES};
pub use path::{classify_union, Monocle, Path};
pub use pathgraph::{
    are_adjacent, bounded_route, build_path_graph, build_path_graph_limited, enumerate_uv_paths,
    enumerate_uv_paths_limited, exchange_cycle, lex_shortest_path, merge_step, merge_walk,
    Exchange, MergeState, PathGraph, PathGraphEdge, PathGraphError, DEFAULT_PATH_LIMIT,
};

#[cfg(test)]
pub(crate) mod testutil;
