//! Brute-force reference implementations. They share no routing logic
//! with the library: adjacency tries every split point, and the subset
//! scans use their own degree and connectivity code on raw edge masks.

use pathspace_core::{Cycle, Graph, Path};

/// Subpath-replacement adjacency, checked against every split: `t` must
/// keep a prefix and suffix of `s` and reroute the middle through
/// vertices that avoid `s` entirely.
pub fn paths_adjacent_by_replacement(s: &Path, t: &Path) -> bool {
    let sv = s.vertices();
    let tv = t.vertices();
    if sv.first() != tv.first() || sv.last() != tv.last() || sv == tv {
        return false;
    }
    let n = sv.len();
    for i in 0..n {
        for j in i + 1..n {
            let prefix = i + 1;
            let suffix = n - j;
            if tv.len() < prefix + suffix {
                continue;
            }
            if tv[..prefix] != sv[..prefix] || tv[tv.len() - suffix..] != sv[j..] {
                continue;
            }
            let interior = &tv[prefix..tv.len() - suffix];
            if interior.iter().all(|w| !sv.contains(w)) {
                return true;
            }
        }
    }
    false
}

/// Vertex degrees inside an edge subset.
fn subset_degrees(g: &Graph, mask: u128) -> Vec<usize> {
    let mut deg = vec![0usize; g.vertex_count()];
    for e in 0..g.edge_count() {
        if mask >> e & 1 == 1 {
            let (a, b) = g.endpoints(e);
            deg[a] += 1;
            deg[b] += 1;
        }
    }
    deg
}

/// Whether the edges in `mask` form one connected piece, by absorbing
/// edges that share a vertex with the growing part.
fn subset_connected(g: &Graph, mask: u128) -> bool {
    if mask == 0 {
        return false;
    }
    let first = mask.trailing_zeros() as usize;
    let (a, b) = g.endpoints(first);
    let mut verts = vec![false; g.vertex_count()];
    verts[a] = true;
    verts[b] = true;
    let mut absorbed: u128 = 1 << first;
    let mut grew = true;
    while grew {
        grew = false;
        for e in 0..g.edge_count() {
            if mask >> e & 1 == 0 || absorbed >> e & 1 == 1 {
                continue;
            }
            let (x, y) = g.endpoints(e);
            if verts[x] || verts[y] {
                verts[x] = true;
                verts[y] = true;
                absorbed |= 1 << e;
                grew = true;
            }
        }
    }
    absorbed == mask
}

/// Number of simple cycles, by scanning every edge subset for the
/// degree-2 connected ones.
pub fn count_cycles_brute(g: &Graph) -> usize {
    let m = g.edge_count();
    assert!(m <= 20, "subset scan is sized for up to 20 edges");
    let mut count = 0;
    for mask in 1u128..1 << m {
        let deg = subset_degrees(g, mask);
        if deg.iter().all(|&d| d == 0 || d == 2) && subset_connected(g, mask) {
            count += 1;
        }
    }
    count
}

/// Edge masks of every spanning connected subgraph with exactly `n` edges
/// containing `sigma`: the unicycles over `sigma`, by subset scan.
pub fn unicycle_masks_brute(g: &Graph, sigma: &Cycle) -> Vec<u128> {
    let m = g.edge_count();
    let n = g.vertex_count();
    assert!(m <= 20, "subset scan is sized for up to 20 edges");
    let sigma_mask = sigma.edge_set().mask();
    let mut out = Vec::new();
    for mask in 1u128..1 << m {
        if mask.count_ones() as usize != n || mask & sigma_mask != sigma_mask {
            continue;
        }
        let deg = subset_degrees(g, mask);
        if deg.contains(&0) {
            continue;
        }
        if subset_connected(g, mask) {
            out.push(mask);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{k4_fixture, plane_fixtures};
    use pathspace_core::{
        are_adjacent, as_cycle, cycle_from_vertices, enumerate_all_cycles,
        enumerate_unicycles_containing, enumerate_uv_paths,
    };

    #[test]
    fn replacement_oracle_matches_the_fast_check_on_k4() {
        let (g, u, v, _) = k4_fixture();
        let paths = enumerate_uv_paths(&g, u, v).unwrap();
        assert_eq!(paths.len(), 5);
        for s in &paths {
            for t in &paths {
                assert_eq!(
                    are_adjacent(s, t).is_some(),
                    paths_adjacent_by_replacement(s, t),
                    "{:?} vs {:?}",
                    s.vertices(),
                    t.vertices()
                );
            }
        }
    }

    #[test]
    fn crossing_detours_differ_by_a_cycle_yet_are_not_adjacent() {
        let (g, ..) = k4_fixture();
        let s = Path::new(&g, vec![0, 1, 2, 3]).unwrap();
        let t = Path::new(&g, vec![0, 2, 1, 3]).unwrap();
        let diff = s.edge_set(&g) ^ t.edge_set(&g);
        assert!(as_cycle(&g, &diff).is_ok());
        assert!(!paths_adjacent_by_replacement(&s, &t));
        assert!(are_adjacent(&s, &t).is_none());
    }

    #[test]
    fn cycle_counts_on_known_graphs() {
        let (k4, ..) = k4_fixture();
        assert_eq!(count_cycles_brute(&k4), 7);
        for f in plane_fixtures() {
            if f.name == "triangle" || f.name == "square" {
                assert_eq!(count_cycles_brute(&f.graph), 1, "{}", f.name);
            }
            if f.name == "house" {
                assert_eq!(count_cycles_brute(&f.graph), 3);
            }
        }
    }

    #[test]
    fn unicycle_scan_agrees_with_the_contraction_enumerator_on_k4() {
        let (g, ..) = k4_fixture();
        let sigma = cycle_from_vertices(&g, &[0, 1, 3]);
        let brute = unicycle_masks_brute(&g, &sigma);
        let fast: Vec<u128> = enumerate_unicycles_containing(&g, &sigma)
            .unwrap()
            .iter()
            .map(|u| u.edges().mask())
            .collect();
        assert_eq!(brute, fast);
        assert_eq!(brute.len(), 3);
    }

    #[test]
    fn cycle_count_scan_agrees_on_every_fixture() {
        for f in plane_fixtures() {
            let fast = enumerate_all_cycles(&f.graph).unwrap().len();
            assert_eq!(fast, count_cycles_brute(&f.graph), "{}", f.name);
        }
    }
}
