//! Graph corpora for the verification suite: exhaustive labeled
//! enumeration of small 2-connected graphs, an isomorphism-reduced
//! catalogue for searches, and seeded random instances.

use pathspace_core::{enumerate_all_cycles, Cycle, CycleSet, Graph};
use rand::Rng;
use std::collections::HashSet;

/// All unordered vertex pairs, lexicographic.
pub fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

/// Neighbor bitmasks for the edge subset `mask` over the pair list.
fn adjacency_rows(n: usize, pairs: &[(usize, usize)], mask: u32) -> Vec<u16> {
    let mut adj = vec![0u16; n];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }
    adj
}

/// Connectivity of the vertices outside `skip`, by bitmask BFS.
fn rows_connected(n: usize, adj: &[u16], skip: Option<usize>) -> bool {
    let alive: u16 = (((1u32 << n) - 1) as u16) & !skip.map_or(0, |v| 1 << v);
    if alive == 0 {
        return true;
    }
    let mut seen: u16 = 1 << alive.trailing_zeros();
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u16;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        next &= alive & !seen;
        seen |= next;
        frontier = next;
    }
    seen == alive
}

/// Mirrors [`Graph::is_two_connected`] on adjacency rows: at least three
/// vertices, connected, no cut vertex.
fn rows_two_connected(n: usize, adj: &[u16]) -> bool {
    if n < 3 || adj.iter().take(n).any(|&row| row.count_ones() < 2) {
        return false;
    }
    rows_connected(n, adj, None) && (0..n).all(|v| rows_connected(n, adj, Some(v)))
}

fn rows_to_graph(n: usize, adj: &[u16]) -> Graph {
    let edges: Vec<(usize, usize)> = vertex_pairs(n)
        .into_iter()
        .filter(|&(a, b)| adj[a] >> b & 1 == 1)
        .collect();
    Graph::new(n, &edges).expect("adjacency rows are a simple graph")
}

/// Every labeled 2-connected graph on exactly `n` vertices, in edge-mask
/// order.
pub fn labeled_two_connected(n: usize) -> Vec<Graph> {
    assert!(
        (3..=7).contains(&n),
        "labeled enumeration is sized for 3..=7"
    );
    let pairs = vertex_pairs(n);
    let mut out = Vec::new();
    for mask in 0u32..1u32 << pairs.len() {
        let adj = adjacency_rows(n, &pairs, mask);
        if rows_two_connected(n, &adj) {
            out.push(rows_to_graph(n, &adj));
        }
    }
    out
}

/// Labeled 2-connected graphs of every order in `3..=max_n`.
pub fn labeled_corpus(max_n: usize) -> Vec<Graph> {
    (3..=max_n).flat_map(labeled_two_connected).collect()
}

/// The largest upper-triangle adjacency bitstring over all vertex
/// orderings, by branch and bound. Equal keys mean isomorphic graphs.
fn canonical_key(n: usize, adj: &[u16]) -> u64 {
    struct Search<'a> {
        n: usize,
        adj: &'a [u16],
        width: u32,
        best: u64,
        have_best: bool,
    }
    impl Search<'_> {
        fn place(&mut self, prefix: &mut Vec<usize>, used: u16, value: u64, bits: u32) {
            let k = prefix.len();
            if k == self.n {
                if !self.have_best || value > self.best {
                    self.best = value;
                    self.have_best = true;
                }
                return;
            }
            for w in 0..self.n {
                if used >> w & 1 == 1 {
                    continue;
                }
                let mut next_value = value;
                for &p in prefix.iter().take(k) {
                    next_value = next_value << 1 | u64::from(self.adj[p] >> w & 1);
                }
                let next_bits = bits + k as u32;
                if self.have_best && next_value < self.best >> (self.width - next_bits) {
                    continue;
                }
                prefix.push(w);
                self.place(prefix, used | 1 << w, next_value, next_bits);
                prefix.pop();
            }
        }
    }
    let mut search = Search {
        n,
        adj,
        width: (n * (n - 1) / 2) as u32,
        best: 0,
        have_best: false,
    };
    search.place(&mut Vec::with_capacity(n), 0, 0, 0);
    search.best
}

/// One representative per isomorphism class of 2-connected graphs with
/// `3..=max_n` vertices, ordered by vertex count. Grown level by level:
/// every connected graph arises by attaching a new vertex to a connected
/// graph one vertex smaller.
pub fn unlabeled_two_connected(max_n: usize) -> Vec<Graph> {
    assert!(
        (3..=8).contains(&max_n),
        "catalogue enumeration is sized for 3..=8"
    );
    let mut level: Vec<Vec<u16>> = vec![vec![0]];
    let mut out = Vec::new();
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for parent in &level {
            for subset in 1u16..1 << (n - 1) {
                let mut rows = parent.clone();
                rows.push(subset);
                for (i, row) in rows.iter_mut().take(n - 1).enumerate() {
                    if subset >> i & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                if seen.insert(canonical_key(n, &rows)) {
                    next.push(rows);
                }
            }
        }
        level = next;
        if n >= 3 {
            out.extend(
                level
                    .iter()
                    .filter(|rows| rows_two_connected(n, rows))
                    .map(|rows| rows_to_graph(n, rows)),
            );
        }
    }
    out
}

/// Uniform labeled 2-connected graph on `n` vertices, by rejection.
pub fn random_two_connected(rng: &mut impl Rng, n: usize) -> Graph {
    assert!((3..=7).contains(&n), "random graphs are sized for 3..=7");
    let pairs = vertex_pairs(n);
    loop {
        let mask = rng.gen_range(0..1u32 << pairs.len());
        let adj = adjacency_rows(n, &pairs, mask);
        if rows_two_connected(n, &adj) {
            return rows_to_graph(n, &adj);
        }
    }
}

/// Nonempty random subset of all cycles of `g`, each kept with
/// probability `keep_percent`/100.
pub fn random_cycle_subset(rng: &mut impl Rng, g: &Graph, keep_percent: u32) -> CycleSet {
    let all = enumerate_all_cycles(g).expect("corpus graphs are connected and small");
    loop {
        let picked: Vec<Cycle> = all
            .iter()
            .filter(|_| rng.gen_ratio(keep_percent, 100))
            .cloned()
            .collect();
        if !picked.is_empty() {
            return CycleSet::new(picked).expect("distinct cycles stay distinct");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn labeled_counts_match_the_literature() {
        assert_eq!(labeled_two_connected(3).len(), 1);
        assert_eq!(labeled_two_connected(4).len(), 10);
        assert_eq!(labeled_two_connected(5).len(), 238);
        assert_eq!(labeled_two_connected(6).len(), 11368);
    }

    #[test]
    fn unlabeled_counts_match_the_literature() {
        let catalogue = unlabeled_two_connected(7);
        let mut by_order = [0usize; 8];
        for g in &catalogue {
            by_order[g.vertex_count()] += 1;
        }
        assert_eq!(by_order[3..8], [1, 3, 10, 56, 468]);
    }

    #[test]
    fn mask_filter_agrees_with_the_graph_method() {
        let pairs = vertex_pairs(4);
        for mask in 0u32..1 << pairs.len() {
            let adj = adjacency_rows(4, &pairs, mask);
            let g = rows_to_graph(4, &adj);
            assert_eq!(rows_two_connected(4, &adj), g.is_two_connected());
        }
    }

    fn rows_of(n: usize, edges: &[(usize, usize)]) -> Vec<u16> {
        let mut adj = vec![0u16; n];
        for &(a, b) in edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    #[test]
    fn canonical_key_separates_isomorphism_classes() {
        // two labelings of the 4-cycle collide, the 4-path does not
        let cycle_a = rows_of(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let cycle_b = rows_of(4, &[(0, 2), (2, 1), (1, 3), (0, 3)]);
        let path = rows_of(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(canonical_key(4, &cycle_a), canonical_key(4, &cycle_b));
        assert_ne!(canonical_key(4, &cycle_a), canonical_key(4, &path));
    }

    #[test]
    fn random_instances_are_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let ga = random_two_connected(&mut a, 5);
            let gb = random_two_connected(&mut b, 5);
            assert!(ga.is_two_connected());
            assert_eq!(ga.edges(), gb.edges());
            let ca = random_cycle_subset(&mut a, &ga, 50);
            let cb = random_cycle_subset(&mut b, &gb, 50);
            assert_eq!(ca.len(), cb.len());
            assert!(!ca.is_empty());
        }
    }
}
