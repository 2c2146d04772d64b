//! The witness property behind restricted path-graph connectivity: an
//! exchange cycle has it when every spanning unicycle through the cycle can
//! be completed, by one extra edge, to a subgraph in which two allowed
//! cycles sum to the exchange cycle. Includes the closure of a cycle set
//! under this property, density checks, and the constructive two-step
//! replacement of a forbidden exchange.

use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::cycle::{as_cycle, Cycle};
use crate::cyclespace::{enumerate_all_cycles, CycleSet, CycleSpaceError};
use crate::graph::{EdgeSet, Graph, GraphError};
use crate::path::{classify_union, Monocle, Path};
use crate::pathgraph::are_adjacent;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeltaStarError {
    #[error("edge set has {edges} edges but the graph has {vertices} vertices")]
    WrongEdgeCount { edges: usize, vertices: usize },
    #[error("edge set does not connect all vertices")]
    NotSpanning,
    #[error("cycle is not a cycle of this graph")]
    ForeignCycle,
    #[error("cycle {index} of the set is not a cycle of this graph")]
    ForeignCycleAt { index: usize },
    #[error("edge index {0} out of range for a graph with {1} edges")]
    UnknownEdge(usize, usize),
    #[error("edge {0} already lies in the unicycle")]
    EdgeAlreadyPresent(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("paths are not adjacent")]
    NotAdjacent,
    #[error("exchange cycle lacks a witness on some unicycle, interpolation impossible")]
    PropertyFails,
    #[error("witness cycles produced no middle path adjacent to both ends")]
    WitnessNotRealizable,
    #[error("walk steps {0} and {1} are not adjacent paths")]
    BrokenWalk(usize, usize),
    #[error("exchange cycle of walk step {0} is neither allowed nor the designated cycle")]
    StepOutsideRestriction(usize),
    #[error(transparent)]
    CycleSpace(#[from] CycleSpaceError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A spanning connected subgraph with as many edges as vertices: a spanning
/// tree plus one edge, carrying exactly one cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unicycle {
    edges: EdgeSet,
    cycle: Cycle,
}

impl Unicycle {
    /// Validates edge count, spanning and connectivity, then extracts the
    /// unique cycle by stripping leaves.
    pub fn new(g: &Graph, edges: EdgeSet) -> Result<Unicycle, DeltaStarError> {
        let n = g.vertex_count();
        if edges.count() != n {
            return Err(DeltaStarError::WrongEdgeCount {
                edges: edges.count(),
                vertices: n,
            });
        }
        if edges.vertices(g).len() != n || !edges.induces_connected(g) {
            return Err(DeltaStarError::NotSpanning);
        }
        let mut remaining = edges;
        let mut deg = edges.degrees(g);
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        while let Some(w) = queue.pop_front() {
            let (nb, idx) = g
                .neighbors(w)
                .iter()
                .copied()
                .find(|&(_, idx)| remaining.contains(idx))
                .expect("a leaf has one remaining edge");
            remaining.remove(idx);
            deg[w] = 0;
            deg[nb] -= 1;
            if deg[nb] == 1 {
                queue.push_back(nb);
            }
        }
        let cycle = as_cycle(g, &remaining)
            .expect("a connected spanning subgraph with n edges has exactly one cycle");
        Ok(Unicycle { edges, cycle })
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    /// The unique cycle.
    pub fn cycle(&self) -> &Cycle {
        &self.cycle
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        self.edges.contains(e)
    }
}

fn check_cycle_of(g: &Graph, c: &Cycle) -> bool {
    c.edge_set().ambient_len() == g.edge_count() && as_cycle(g, c.edge_set()).is_ok()
}

fn check_cycle_set_of(g: &Graph, c: &CycleSet) -> Result<(), DeltaStarError> {
    for (index, cycle) in c.iter().enumerate() {
        if !check_cycle_of(g, cycle) {
            return Err(DeltaStarError::ForeignCycleAt { index });
        }
    }
    Ok(())
}

/// All unicycles whose cycle is `sigma`, sorted by edge set. They
/// correspond to the spanning trees of the graph with the cycle contracted
/// to a point (chords drop out as self-loops, parallel edges stay
/// distinct).
pub fn enumerate_unicycles_containing(
    g: &Graph,
    sigma: &Cycle,
) -> Result<Vec<Unicycle>, DeltaStarError> {
    if !check_cycle_of(g, sigma) {
        return Err(DeltaStarError::ForeignCycle);
    }
    let n = g.vertex_count();
    let mut map = vec![0usize; n];
    let mut next = 1;
    for (v, slot) in map.iter_mut().enumerate() {
        if !sigma.contains_vertex(v) {
            *slot = next;
            next += 1;
        }
    }
    let mut multi_edges = Vec::new();
    for e in 0..g.edge_count() {
        if sigma.contains_edge(e) {
            continue;
        }
        let (a, b) = g.endpoints(e);
        if map[a] != map[b] {
            multi_edges.push((map[a], map[b], e));
        }
    }
    let mut trees = Vec::new();
    let mut acc = Vec::new();
    spanning_trees_rec(next, &multi_edges, &mut acc, &mut trees);
    let mut unicycles = Vec::with_capacity(trees.len());
    for tree in trees {
        let mut es = *sigma.edge_set();
        for e in tree {
            es.insert(e);
        }
        unicycles.push(Unicycle::new(g, es)?);
    }
    unicycles.sort_by_key(|u| *u.edges());
    Ok(unicycles)
}

/// Spanning trees of a labeled multigraph by contraction and deletion of
/// the first edge. `remaining` counts the live vertices; contracted ids
/// simply disappear from the edge list.
fn spanning_trees_rec(
    remaining: usize,
    edges: &[(usize, usize, usize)],
    acc: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining <= 1 {
        out.push(acc.clone());
        return;
    }
    if !multigraph_connected(remaining, edges) {
        return;
    }
    let (a, b, label) = edges[0];
    let merged: Vec<(usize, usize, usize)> = edges[1..]
        .iter()
        .map(|&(x, y, l)| (if x == b { a } else { x }, if y == b { a } else { y }, l))
        .filter(|&(x, y, _)| x != y)
        .collect();
    acc.push(label);
    spanning_trees_rec(remaining - 1, &merged, acc, out);
    acc.pop();
    spanning_trees_rec(remaining, &edges[1..], acc, out);
}

fn multigraph_connected(remaining: usize, edges: &[(usize, usize, usize)]) -> bool {
    if remaining <= 1 {
        return true;
    }
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for &(x, y, _) in edges {
        adj.entry(x).or_default().push(y);
        adj.entry(y).or_default().push(x);
    }
    // a live vertex missing from the edge list is isolated
    if adj.len() < remaining {
        return false;
    }
    let start = *adj.keys().next().unwrap();
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for &nb in &adj[&w] {
            if seen.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    seen.len() == adj.len()
}

/// Grows a monocle into a unicycle by attaching the remaining vertices:
/// breadth-first from the monocle vertices in ascending order, taking
/// neighbors in adjacency order.
pub fn extend_monocle_to_unicycle(g: &Graph, m: &Monocle) -> Result<Unicycle, DeltaStarError> {
    let mut edges = m.edge_set(g);
    let mut covered = vec![false; g.vertex_count()];
    let mut queue = VecDeque::new();
    for v in m.vertex_set(g) {
        covered[v] = true;
        queue.push_back(v);
    }
    while let Some(w) = queue.pop_front() {
        for &(nb, idx) in g.neighbors(w) {
            if !covered[nb] {
                covered[nb] = true;
                edges.insert(idx);
                queue.push_back(nb);
            }
        }
    }
    if covered.iter().any(|&c| !c) {
        return Err(DeltaStarError::NotConnected);
    }
    let unicycle = Unicycle::new(g, edges)?;
    debug_assert_eq!(unicycle.cycle(), m.cycle());
    Ok(unicycle)
}

/// The cycles inside a unicycle plus one extra edge. The enlarged subgraph
/// has cycle space dimension 2, so it carries two or three cycles,
/// returned sorted by edge set.
pub fn cycles_in_unicycle_plus_edge(
    g: &Graph,
    u: &Unicycle,
    e: usize,
) -> Result<CycleSet, DeltaStarError> {
    if e >= g.edge_count() {
        return Err(DeltaStarError::UnknownEdge(e, g.edge_count()));
    }
    if u.contains_edge(e) {
        return Err(DeltaStarError::EdgeAlreadyPresent(e));
    }
    let mut h = *u.edges();
    h.insert(e);
    // spanning tree of the subgraph, leaving exactly two chords
    let mut tree = EdgeSet::empty(g.edge_count());
    let mut seen = vec![false; g.vertex_count()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(w) = queue.pop_front() {
        for &(nb, idx) in g.neighbors(w) {
            if h.contains(idx) && !seen[nb] {
                seen[nb] = true;
                tree.insert(idx);
                queue.push_back(nb);
            }
        }
    }
    let chords: Vec<usize> = h.iter().filter(|&e| !tree.contains(e)).collect();
    debug_assert_eq!(chords.len(), 2);
    let f1 = subgraph_tree_cycle(g, &tree, chords[0]);
    let f2 = subgraph_tree_cycle(g, &tree, chords[1]);
    let mut cycles = vec![
        as_cycle(g, &f1).expect("tree path plus chord closes into a cycle"),
        as_cycle(g, &f2).expect("tree path plus chord closes into a cycle"),
    ];
    if let Ok(c) = as_cycle(g, &(f1 ^ f2)) {
        cycles.push(c);
    }
    cycles.sort();
    Ok(CycleSet::new(cycles).expect("distinct cycles"))
}

/// Fundamental cycle of a chord against a tree edge set.
fn subgraph_tree_cycle(g: &Graph, tree: &EdgeSet, chord: usize) -> EdgeSet {
    let (a, b) = g.endpoints(chord);
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[a] = true;
    let mut queue = VecDeque::from([a]);
    while let Some(w) = queue.pop_front() {
        for &(nb, idx) in g.neighbors(w) {
            if tree.contains(idx) && !seen[nb] {
                seen[nb] = true;
                parent[nb] = Some((w, idx));
                queue.push_back(nb);
            }
        }
    }
    let mut es = EdgeSet::empty(g.edge_count());
    es.insert(chord);
    let mut cur = b;
    while cur != a {
        let (p, idx) = parent[cur].expect("tree connects the chord endpoints");
        es.insert(idx);
        cur = p;
    }
    es
}

/// A witness that one unicycle poses no obstruction: adding `extra_edge`
/// creates allowed cycles `alpha` and `beta` summing to the exchange
/// cycle. Their shared edges form the `connector` path between two cycle
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaStarWitness {
    pub unicycle: Unicycle,
    pub extra_edge: usize,
    pub alpha: Cycle,
    pub beta: Cycle,
    pub connector: Path,
}

/// Outcome of the witness property check: witnesses for every unicycle, or
/// the first unicycle without one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaStarOutcome {
    Holds(Vec<DeltaStarWitness>),
    Fails { unicycle: Unicycle },
}

impl DeltaStarOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, DeltaStarOutcome::Holds(_))
    }

    pub fn witnesses(&self) -> Option<&[DeltaStarWitness]> {
        match self {
            DeltaStarOutcome::Holds(w) => Some(w),
            DeltaStarOutcome::Fails { .. } => None,
        }
    }

    pub fn failing_unicycle(&self) -> Option<&Unicycle> {
        match self {
            DeltaStarOutcome::Holds(_) => None,
            DeltaStarOutcome::Fails { unicycle } => Some(unicycle),
        }
    }
}

/// Feeds every witness for one unicycle to `visit` (extra edges in index
/// order, then cycle pairs in enumeration order) until `visit` returns
/// false.
fn scan_witnesses_for_unicycle(
    g: &Graph,
    sigma: &Cycle,
    c: &CycleSet,
    u: &Unicycle,
    mut visit: impl FnMut(DeltaStarWitness) -> bool,
) -> Result<(), DeltaStarError> {
    for e in 0..g.edge_count() {
        if u.contains_edge(e) {
            continue;
        }
        let cycles = cycles_in_unicycle_plus_edge(g, u, e)?;
        for i in 0..cycles.len() {
            for j in i + 1..cycles.len() {
                let alpha = cycles.get(i);
                let beta = cycles.get(j);
                if (*alpha.edge_set() ^ *beta.edge_set()) != *sigma.edge_set()
                    || !c.contains(alpha)
                    || !c.contains(beta)
                {
                    continue;
                }
                let shared = *alpha.edge_set() & *beta.edge_set();
                let connector = path_from_edge_set(g, &shared)
                    .expect("shared edges of the witness cycles form a path");
                let keep_going = visit(DeltaStarWitness {
                    unicycle: u.clone(),
                    extra_edge: e,
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    connector,
                });
                if !keep_going {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

/// First witness for one unicycle, if any.
fn find_witness_for_unicycle(
    g: &Graph,
    sigma: &Cycle,
    c: &CycleSet,
    u: &Unicycle,
) -> Result<Option<DeltaStarWitness>, DeltaStarError> {
    let mut found = None;
    scan_witnesses_for_unicycle(g, sigma, c, u, |w| {
        found = Some(w);
        false
    })?;
    Ok(found)
}

/// Checks the witness property of `sigma` with respect to `c`: every
/// unicycle through `sigma` must admit a witness. Note that membership of
/// `sigma` in `c` is irrelevant.
pub fn has_property_delta_star(
    g: &Graph,
    sigma: &Cycle,
    c: &CycleSet,
) -> Result<DeltaStarOutcome, DeltaStarError> {
    if !check_cycle_of(g, sigma) {
        return Err(DeltaStarError::ForeignCycle);
    }
    check_cycle_set_of(g, c)?;
    let mut witnesses = Vec::new();
    for u in enumerate_unicycles_containing(g, sigma)? {
        match find_witness_for_unicycle(g, sigma, c, &u)? {
            Some(w) => witnesses.push(w),
            None => return Ok(DeltaStarOutcome::Fails { unicycle: u }),
        }
    }
    Ok(DeltaStarOutcome::Holds(witnesses))
}

/// Mask-level witness check used by the closure loops: same search order as
/// [`find_witness_for_unicycle`], against the full cycle list of the graph.
fn unicycle_has_witness(
    g: &Graph,
    all_masks: &[u128],
    sigma: u128,
    u_mask: u128,
    member: &HashSet<u128>,
) -> bool {
    let m = g.edge_count();
    for e in 0..m {
        if u_mask >> e & 1 == 1 {
            continue;
        }
        let h = u_mask | 1u128 << e;
        let mut inside: Vec<u128> = Vec::with_capacity(3);
        for &mask in all_masks {
            if mask & !h == 0 {
                inside.push(mask);
            }
        }
        for i in 0..inside.len() {
            for j in i + 1..inside.len() {
                if inside[i] ^ inside[j] == sigma
                    && member.contains(&inside[i])
                    && member.contains(&inside[j])
                {
                    return true;
                }
            }
        }
    }
    false
}

/// Memoizes the unicycle lists of exchange cycles across closure passes.
#[derive(Default)]
struct UnicycleCache(HashMap<u128, Vec<u128>>);

impl UnicycleCache {
    fn qualifies(
        &mut self,
        g: &Graph,
        sigma: &Cycle,
        all_masks: &[u128],
        member: &HashSet<u128>,
    ) -> Result<bool, DeltaStarError> {
        let key = sigma.edge_set().mask();
        if let Entry::Vacant(slot) = self.0.entry(key) {
            let list = enumerate_unicycles_containing(g, sigma)?
                .iter()
                .map(|u| u.edges().mask())
                .collect();
            slot.insert(list);
        }
        Ok(self.0[&key]
            .iter()
            .all(|&u| unicycle_has_witness(g, all_masks, key, u, member)))
    }
}

/// Closure of a cycle set under the witness property: repeatedly scan all
/// cycles of the graph and add those whose property holds, applying each
/// round of additions only after the scan finishes. Monotonicity of the
/// property makes the result independent of the scan schedule.
pub fn delta_star_closure(c: &CycleSet, g: &Graph) -> Result<CycleSet, DeltaStarError> {
    check_cycle_set_of(g, c)?;
    let all = enumerate_all_cycles(g)?;
    let all_masks: Vec<u128> = all.iter().map(|cy| cy.edge_set().mask()).collect();
    let mut cache = UnicycleCache::default();
    let mut member: HashSet<u128> = c.iter().map(|cy| cy.edge_set().mask()).collect();
    let mut result: Vec<Cycle> = c.as_slice().to_vec();
    loop {
        let mut added = Vec::new();
        for cycle in all.iter() {
            if member.contains(&cycle.edge_set().mask()) {
                continue;
            }
            if cache.qualifies(g, cycle, &all_masks, &member)? {
                added.push(cycle.clone());
            }
        }
        if added.is_empty() {
            break;
        }
        for cycle in added {
            member.insert(cycle.edge_set().mask());
            result.push(cycle);
        }
    }
    Ok(CycleSet::new(result).expect("closure keeps cycles distinct"))
}

/// Sequential variant of the closure: scan the given schedule and add each
/// qualifying cycle immediately, repeating until a full pass adds nothing.
/// With any schedule covering all cycles, the result equals
/// [`delta_star_closure`].
pub fn delta_star_closure_with_order(
    c: &CycleSet,
    g: &Graph,
    schedule: &[Cycle],
) -> Result<CycleSet, DeltaStarError> {
    check_cycle_set_of(g, c)?;
    for cycle in schedule {
        if !check_cycle_of(g, cycle) {
            return Err(DeltaStarError::ForeignCycle);
        }
    }
    let all = enumerate_all_cycles(g)?;
    let all_masks: Vec<u128> = all.iter().map(|cy| cy.edge_set().mask()).collect();
    let mut cache = UnicycleCache::default();
    let mut member: HashSet<u128> = c.iter().map(|cy| cy.edge_set().mask()).collect();
    let mut result: Vec<Cycle> = c.as_slice().to_vec();
    loop {
        let mut changed = false;
        for cycle in schedule {
            let mask = cycle.edge_set().mask();
            if member.contains(&mask) {
                continue;
            }
            if cache.qualifies(g, cycle, &all_masks, &member)? {
                member.insert(mask);
                result.push(cycle.clone());
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(CycleSet::new(result).expect("closure keeps cycles distinct"))
}

/// Whether the closure of `c` reaches every cycle of the graph.
pub fn is_delta_star_dense(c: &CycleSet, g: &Graph) -> Result<bool, DeltaStarError> {
    let all = enumerate_all_cycles(g)?;
    let closure = delta_star_closure(c, g)?;
    Ok(closure.len() == all.len())
}

/// Replaces one forbidden exchange by two allowed ones: for adjacent paths
/// whose exchange cycle is missing from `c`, produces a middle path
/// adjacent to both with both exchange cycles in `c`. When the exchange
/// cycle already lies in `c`, returns the target unchanged.
pub fn interpolate(g: &Graph, s: &Path, t: &Path, c: &CycleSet) -> Result<Path, DeltaStarError> {
    check_cycle_set_of(g, c)?;
    if are_adjacent(s, t).is_none() {
        return Err(DeltaStarError::NotAdjacent);
    }
    let sigma_set = s.edge_set(g) ^ t.edge_set(g);
    let sigma = as_cycle(g, &sigma_set).expect("difference of adjacent paths is a cycle");
    if c.contains(&sigma) {
        return Ok(t.clone());
    }
    let monocle =
        classify_union(g, s, t)?.expect("union of adjacent paths is a cycle with two attachments");
    let monocle_edges = monocle.edge_set(g);
    let unicycle = extend_monocle_to_unicycle(g, &monocle)?;
    let mut saw_witness = false;
    let try_unicycle = |uc: &Unicycle, saw: &mut bool| -> Result<Option<Path>, DeltaStarError> {
        let (u, v) = (s.first(), s.last());
        let s_set = s.edge_set(g);
        let mut found = None;
        scan_witnesses_for_unicycle(g, &sigma, c, uc, |w| {
            *saw = true;
            for cand in [&w.alpha, &w.beta] {
                let q_set = s_set ^ *cand.edge_set();
                let Some(q) = path_from_edge_set_between(g, &q_set, u, v) else {
                    continue;
                };
                // the difference with t is then automatically the other
                // cycle, but both unions must still be monocles for q to
                // be a middle path
                if are_adjacent(s, &q).is_some() && are_adjacent(&q, t).is_some() {
                    found = Some(q);
                    return false;
                }
            }
            true
        })?;
        Ok(found)
    };
    if let Some(q) = try_unicycle(&unicycle, &mut saw_witness)? {
        return Ok(q);
    }
    // other unicycles over the same union may carry realizable witnesses
    for other in enumerate_unicycles_containing(g, &sigma)? {
        if other.edges() == unicycle.edges() || !monocle_edges.is_subset_of(other.edges()) {
            continue;
        }
        if let Some(q) = try_unicycle(&other, &mut saw_witness)? {
            return Ok(q);
        }
    }
    if saw_witness {
        Err(DeltaStarError::WitnessNotRealizable)
    } else {
        Err(DeltaStarError::PropertyFails)
    }
}

/// Rewrites a walk that uses exchange cycles from `c` plus one designated
/// extra cycle into a walk using only `c`, interpolating across every step
/// that exchanges along the designated cycle.
pub fn project_walk(
    g: &Graph,
    walk: &[Path],
    c: &CycleSet,
    designated: &Cycle,
) -> Result<Vec<Path>, DeltaStarError> {
    check_cycle_set_of(g, c)?;
    if !check_cycle_of(g, designated) {
        return Err(DeltaStarError::ForeignCycle);
    }
    let Some(first) = walk.first() else {
        return Ok(Vec::new());
    };
    let mut out = vec![first.clone()];
    for (i, pair) in walk.windows(2).enumerate() {
        let (s, t) = (&pair[0], &pair[1]);
        if are_adjacent(s, t).is_none() {
            return Err(DeltaStarError::BrokenWalk(i, i + 1));
        }
        let omega = as_cycle(g, &(s.edge_set(g) ^ t.edge_set(g)))
            .expect("difference of adjacent paths is a cycle");
        if c.contains(&omega) {
            out.push(t.clone());
        } else if omega == *designated {
            let q = interpolate(g, s, t, c)?;
            out.push(q);
            out.push(t.clone());
        } else {
            return Err(DeltaStarError::StepOutsideRestriction(i));
        }
    }
    Ok(out)
}

/// Reads a path out of an edge set with exactly two degree-1 vertices,
/// oriented from the smaller endpoint.
fn path_from_edge_set(g: &Graph, es: &EdgeSet) -> Option<Path> {
    let deg = es.degrees(g);
    let ends: Vec<usize> = (0..g.vertex_count()).filter(|&v| deg[v] == 1).collect();
    if ends.len() != 2 {
        return None;
    }
    path_from_edge_set_between(g, es, ends[0], ends[1])
}

/// Reads a path with prescribed endpoints out of an edge set; `None` when
/// the edges do not form one simple path from `from` to `to`.
fn path_from_edge_set_between(g: &Graph, es: &EdgeSet, from: usize, to: usize) -> Option<Path> {
    if es.is_empty() || from == to {
        return None;
    }
    let deg = es.degrees(g);
    if deg[from] != 1 || deg[to] != 1 {
        return None;
    }
    let mut verts = vec![from];
    let mut used = EdgeSet::empty(es.ambient_len());
    let mut cur = from;
    while cur != to {
        let step = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&(_, idx)| es.contains(idx) && !used.contains(idx))?;
        used.insert(step.1);
        verts.push(step.0);
        cur = step.0;
    }
    if used != *es {
        return None;
    }
    Path::new(g, verts).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::cycle_from_vertices;
    use crate::testutil::{k4, path};

    fn k4_triangles(g: &Graph) -> (Cycle, Cycle, Cycle, Cycle) {
        (
            cycle_from_vertices(g, &[0, 1, 3]), // u, x, v
            cycle_from_vertices(g, &[0, 2, 3]), // u, y, v
            cycle_from_vertices(g, &[0, 1, 2]), // u, x, y
            cycle_from_vertices(g, &[1, 2, 3]), // x, y, v
        )
    }

    #[test]
    fn unicycle_validation() {
        let g = k4();
        // triangle uxv plus the edge toward y
        let es = EdgeSet::from_edges(6, &[0, 1, 3, 2]).unwrap();
        let u = Unicycle::new(&g, es).unwrap();
        assert_eq!(u.cycle(), &cycle_from_vertices(&g, &[0, 1, 3]));
        // wrong count
        let es = EdgeSet::from_edges(6, &[0, 1, 3]).unwrap();
        assert_eq!(
            Unicycle::new(&g, es).unwrap_err(),
            DeltaStarError::WrongEdgeCount {
                edges: 3,
                vertices: 4
            }
        );
        // right count but missing a vertex: triangle plus chord
        let g5 = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 4)]).unwrap();
        let es = EdgeSet::from_edges(6, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(
            Unicycle::new(&g5, es).unwrap_err(),
            DeltaStarError::NotSpanning
        );
    }

    #[test]
    fn unicycles_through_k4_triangle() {
        let g = k4();
        let sigma = cycle_from_vertices(&g, &[0, 1, 3]);
        let us = enumerate_unicycles_containing(&g, &sigma).unwrap();
        // one per edge attaching y
        assert_eq!(us.len(), 3);
        let masks: Vec<EdgeSet> = us.iter().map(|u| *u.edges()).collect();
        assert_eq!(
            masks,
            vec![
                EdgeSet::from_edges(6, &[0, 1, 2, 3]).unwrap(),
                EdgeSet::from_edges(6, &[0, 1, 3, 4]).unwrap(),
                EdgeSet::from_edges(6, &[0, 1, 3, 5]).unwrap(),
            ]
        );
        assert!(us.iter().all(|u| u.cycle() == &sigma));
    }

    #[test]
    fn spanning_cycle_has_single_unicycle() {
        let g = k4();
        let sigma = cycle_from_vertices(&g, &[0, 1, 2, 3]);
        let us = enumerate_unicycles_containing(&g, &sigma).unwrap();
        assert_eq!(us.len(), 1);
        assert_eq!(us[0].edges(), sigma.edge_set());
    }

    #[test]
    fn unicycle_enumeration_matches_subset_filter() {
        // independent route: try every edge superset of the cycle directly
        let house = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (2, 4)]).unwrap();
        for sigma in enumerate_all_cycles(&house).unwrap().iter() {
            let fast = enumerate_unicycles_containing(&house, sigma).unwrap();
            let mut slow = Vec::new();
            let m = house.edge_count();
            for mask in 0u128..1 << m {
                let es = EdgeSet::from_mask(m, mask);
                if !sigma.edge_set().is_subset_of(&es) {
                    continue;
                }
                if let Ok(u) = Unicycle::new(&house, es) {
                    if u.cycle() == sigma {
                        slow.push(u);
                    }
                }
            }
            slow.sort_by_key(|u| *u.edges());
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn extend_bare_triangle_picks_smallest_attachment() {
        let g = k4();
        let sigma = cycle_from_vertices(&g, &[0, 1, 3]);
        let a = Path::new(&g, vec![0]).unwrap();
        let b = Path::new(&g, vec![3]).unwrap();
        let m = Monocle::new(sigma, a, b).unwrap();
        let u = extend_monocle_to_unicycle(&g, &m).unwrap();
        // vertex y joins through the lowest-index edge at hand, which is uy
        assert_eq!(u.edges(), &EdgeSet::from_edges(6, &[0, 1, 2, 3]).unwrap());
    }

    #[test]
    fn unicycle_plus_edge_carries_three_cycles() {
        let g = k4();
        let sigma = cycle_from_vertices(&g, &[0, 1, 3, 2]);
        let u = Unicycle::new(&g, *sigma.edge_set()).unwrap();
        let cycles = cycles_in_unicycle_plus_edge(&g, &u, 0).unwrap();
        let (uxv, uyv, ..) = k4_triangles(&g);
        assert_eq!(cycles.as_slice(), &[uxv, uyv, sigma]);
        assert_eq!(
            cycles_in_unicycle_plus_edge(&g, &u, 1).unwrap_err(),
            DeltaStarError::EdgeAlreadyPresent(1)
        );
    }

    #[test]
    fn unicycle_plus_edge_carries_two_cycles_when_disjoint() {
        // triangle 0-1-2 with legs to 3 and 4; the extra edge 3-4 closes a
        // cycle sharing nothing with the triangle
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (0, 4), (3, 4)]).unwrap();
        let u = Unicycle::new(&g, EdgeSet::from_edges(6, &[0, 1, 2, 3, 4]).unwrap()).unwrap();
        let cycles = cycles_in_unicycle_plus_edge(&g, &u, 5).unwrap();
        assert_eq!(cycles.len(), 2);
    }

    #[test]
    fn spanning_four_cycle_with_both_triangles_holds() {
        let g = k4();
        let sigma = cycle_from_vertices(&g, &[0, 1, 3, 2]);
        let (uxv, uyv, ..) = k4_triangles(&g);
        let c = CycleSet::new(vec![uxv.clone(), uyv.clone()]).unwrap();
        let outcome = has_property_delta_star(&g, &sigma, &c).unwrap();
        assert!(outcome.holds());
        let ws = outcome.witnesses().unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].extra_edge, 0);
        assert_eq!((&ws[0].alpha, &ws[0].beta), (&uxv, &uyv));
        // the witness cycles share exactly the added edge
        assert_eq!(ws[0].connector.vertices(), &[0, 3]);
    }

    #[test]
    fn triangle_with_only_itself_fails() {
        let g = k4();
        let sigma = cycle_from_vertices(&g, &[0, 1, 3]);
        let c = CycleSet::new(vec![sigma.clone()]).unwrap();
        let outcome = has_property_delta_star(&g, &sigma, &c).unwrap();
        assert!(!outcome.holds());
        // the first unicycle in order already fails
        assert_eq!(
            outcome.failing_unicycle().unwrap().edges(),
            &EdgeSet::from_edges(6, &[0, 1, 2, 3]).unwrap()
        );
    }

    #[test]
    fn closure_of_two_triangles_gains_their_sum() {
        let g = k4();
        let (uxv, uyv, ..) = k4_triangles(&g);
        let c = CycleSet::new(vec![uxv.clone(), uyv.clone()]).unwrap();
        let closed = delta_star_closure(&c, &g).unwrap();
        assert_eq!(closed.len(), 3);
        assert_eq!(closed.get(0), &uxv);
        assert_eq!(closed.get(1), &uyv);
        assert_eq!(closed.get(2), &cycle_from_vertices(&g, &[0, 1, 3, 2]));
        assert!(!is_delta_star_dense(&c, &g).unwrap());
    }

    #[test]
    fn closure_of_all_triangles_is_everything() {
        let g = k4();
        let (uxv, uyv, uxy, xyv) = k4_triangles(&g);
        let c = CycleSet::new(vec![uxv, uyv, uxy, xyv]).unwrap();
        let closed = delta_star_closure(&c, &g).unwrap();
        assert_eq!(closed.len(), 7);
        assert!(is_delta_star_dense(&c, &g).unwrap());
    }

    #[test]
    fn closure_is_monotone_and_idempotent() {
        let g = k4();
        let (uxv, uyv, ..) = k4_triangles(&g);
        let c = CycleSet::new(vec![uxv, uyv]).unwrap();
        let closed = delta_star_closure(&c, &g).unwrap();
        for cycle in c.iter() {
            assert!(closed.contains(cycle));
        }
        let twice = delta_star_closure(&closed, &g).unwrap();
        assert_eq!(
            twice
                .iter()
                .map(|cy| cy.edge_set().mask())
                .collect::<std::collections::BTreeSet<_>>(),
            closed
                .iter()
                .map(|cy| cy.edge_set().mask())
                .collect::<std::collections::BTreeSet<_>>()
        );
    }

    #[test]
    fn sequential_closure_matches_batch_for_any_schedule() {
        let g = k4();
        let (uxv, uyv, ..) = k4_triangles(&g);
        let c = CycleSet::new(vec![uxv, uyv]).unwrap();
        let batch: std::collections::BTreeSet<u128> = delta_star_closure(&c, &g)
            .unwrap()
            .iter()
            .map(|cy| cy.edge_set().mask())
            .collect();
        let all: Vec<Cycle> = enumerate_all_cycles(&g).unwrap().into_iter().collect();
        // forward, reverse, and a rotation
        let mut schedules = vec![all.clone()];
        schedules.push(all.iter().rev().cloned().collect());
        let mut rot = all.clone();
        rot.rotate_left(3);
        schedules.push(rot);
        for schedule in schedules {
            let seq: std::collections::BTreeSet<u128> =
                delta_star_closure_with_order(&c, &g, &schedule)
                    .unwrap()
                    .iter()
                    .map(|cy| cy.edge_set().mask())
                    .collect();
            assert_eq!(seq, batch);
        }
    }

    #[test]
    fn interpolate_replaces_forbidden_exchange() {
        let g = k4();
        let (uxv, uyv, ..) = k4_triangles(&g);
        let c = CycleSet::new(vec![uxv.clone(), uyv.clone()]).unwrap();
        let s = path(&g, &[0, 1, 3]);
        let t = path(&g, &[0, 2, 3]);
        let q = interpolate(&g, &s, &t, &c).unwrap();
        assert_eq!(q.vertices(), &[0, 3]);
        let first = as_cycle(&g, &(s.edge_set(&g) ^ q.edge_set(&g))).unwrap();
        let second = as_cycle(&g, &(q.edge_set(&g) ^ t.edge_set(&g))).unwrap();
        assert_eq!((first, second), (uxv, uyv));
    }

    #[test]
    fn interpolate_returns_target_on_allowed_exchange() {
        let g = k4();
        let s = path(&g, &[0, 1, 3]);
        let t = path(&g, &[0, 2, 3]);
        let sigma = as_cycle(&g, &(s.edge_set(&g) ^ t.edge_set(&g))).unwrap();
        let c = CycleSet::new(vec![sigma]).unwrap();
        assert_eq!(interpolate(&g, &s, &t, &c).unwrap(), t);
    }

    #[test]
    fn interpolate_needs_adjacency_and_witnesses() {
        let g = k4();
        let s = path(&g, &[0, 1, 2, 3]);
        let t = path(&g, &[0, 2, 1, 3]);
        let c = CycleSet::empty();
        assert_eq!(
            interpolate(&g, &s, &t, &c).unwrap_err(),
            DeltaStarError::NotAdjacent
        );
        let s = path(&g, &[0, 1, 3]);
        let t = path(&g, &[0, 2, 3]);
        assert_eq!(
            interpolate(&g, &s, &t, &c).unwrap_err(),
            DeltaStarError::PropertyFails
        );
    }

    #[test]
    fn project_walk_doubles_forbidden_steps() {
        let g = k4();
        let (uxv, uyv, ..) = k4_triangles(&g);
        let c = CycleSet::new(vec![uxv, uyv]).unwrap();
        let s = path(&g, &[0, 1, 3]);
        let t = path(&g, &[0, 2, 3]);
        let sigma = as_cycle(&g, &(s.edge_set(&g) ^ t.edge_set(&g))).unwrap();
        let projected = project_walk(&g, &[s.clone(), t.clone()], &c, &sigma).unwrap();
        assert_eq!(projected.len(), 3);
        assert_eq!(projected[0], s);
        assert_eq!(projected[1].vertices(), &[0, 3]);
        assert_eq!(projected[2], t);
    }

    #[test]
    fn project_walk_rejects_unrelated_exchanges() {
        let g = k4();
        let s = path(&g, &[0, 1, 3]);
        let t = path(&g, &[0, 2, 3]);
        let designated = cycle_from_vertices(&g, &[0, 1, 2]);
        assert_eq!(
            project_walk(&g, &[s, t], &CycleSet::empty(), &designated).unwrap_err(),
            DeltaStarError::StepOutsideRestriction(0)
        );
    }
}
