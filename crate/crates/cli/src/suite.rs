//! The verification suite: exhaustive corpus checks of the structural
//! claims, seeded random-instance checks, the diameter tightness search,
//! and the brute-force oracle comparisons. Every check returns one
//! report; a failing check attaches the first counterexample in scan
//! order.

use crate::corpus;
use crate::fixtures;
use crate::oracle;
use crate::report::{
    instance_evidence, InstanceInfo, SuiteReport, TheoremReport, Verdict, SCHEMA_VERSION,
};
use pathspace_core::{
    are_adjacent, bounded_route, build_path_graph_limited, cycles_through_edge,
    cycles_through_vertex, delta_star_closure, delta_star_closure_with_order, enumerate_all_cycles,
    enumerate_uv_paths, has_property_delta_star, internal_faces, interpolate, is_delta_star_dense,
    merge_walk, spans_cycle_space, Cycle, CycleSet, Graph, Path, PathGraph, PathGraphError,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

/// Cap on paths per instance; instances over the cap are skipped and
/// counted, never silently dropped.
const PATH_CAP: usize = 1 << 17;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Exhaustive corpus bound: labeled graphs through 6 vertices, one
    /// representative per isomorphism class at 7.
    pub max_n: usize,
    pub tightness_max_n: usize,
    /// Check ids to run, `None` for all.
    pub which: Option<BTreeSet<String>>,
    pub walk_samples: usize,
    pub span_instances: usize,
    pub dense_instances: usize,
    pub interpolation_instances: usize,
    pub closure_instances: usize,
    pub closure_orders: usize,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            seed: 1729,
            max_n: 6,
            tightness_max_n: 7,
            which: None,
            walk_samples: 1000,
            span_instances: 500,
            dense_instances: 200,
            interpolation_instances: 200,
            closure_instances: 100,
            closure_orders: 10,
        }
    }
}

pub fn check_ids() -> &'static [&'static str] {
    &[
        "k4-fixture",
        "connectivity",
        "diameter-bound",
        "tightness",
        "span-necessity",
        "density-sufficiency",
        "face-density",
        "edge-cycle-density",
        "vertex-cycle-connectivity",
        "interpolation",
        "closure-laws",
        "oracles",
    ]
}

/// Runs the selected checks in a fixed order and stamps durations.
pub fn run_theorem_suite(cfg: &SuiteConfig) -> SuiteReport {
    let wants = |id: &str| cfg.which.as_ref().is_none_or(|set| set.contains(id));
    let mut reports = Vec::new();
    for &id in check_ids() {
        if !wants(id) {
            continue;
        }
        let start = Instant::now();
        log::info!("running check {id}");
        let mut report = match id {
            "k4-fixture" => check_k4_fixture(),
            "connectivity" => check_connectivity(cfg.max_n, cfg.seed, cfg.walk_samples),
            "diameter-bound" => check_diameter_bound(cfg.max_n, cfg.seed, cfg.walk_samples),
            "tightness" => search_tightness_witness(cfg.tightness_max_n),
            "span-necessity" => check_span_necessity(cfg.seed, cfg.span_instances),
            "density-sufficiency" => check_density_sufficiency(cfg.seed, cfg.dense_instances),
            "face-density" => check_face_density(),
            "edge-cycle-density" => check_edge_cycle_density(),
            "vertex-cycle-connectivity" => check_vertex_cycle_connectivity(),
            "interpolation" => check_interpolation(cfg.seed, cfg.interpolation_instances),
            "closure-laws" => {
                check_closure_laws(cfg.seed, cfg.closure_instances, cfg.closure_orders)
            }
            "oracles" => check_oracles(),
            _ => unreachable!("check_ids is the only source of ids"),
        };
        report.duration_ms = start.elapsed().as_millis() as u64;
        reports.push(report);
    }
    SuiteReport {
        schema_version: SCHEMA_VERSION,
        seed: cfg.seed,
        max_n: cfg.max_n,
        passed: reports.iter().all(|r| r.passed()),
        reports,
    }
}

/// Exhaustive corpus: every labeled 2-connected graph through 6 vertices;
/// beyond that one representative per isomorphism class, which the
/// isomorphism-invariant checks cover just as well.
fn exhaustive_corpus(max_n: usize) -> Vec<Graph> {
    let mut corpus = corpus::labeled_corpus(max_n.min(6));
    if max_n >= 7 {
        corpus.extend(
            corpus::unlabeled_two_connected(max_n.min(8))
                .into_iter()
                .filter(|g| g.vertex_count() >= 7),
        );
    }
    corpus
}

fn build_restricted(
    g: &Graph,
    u: usize,
    v: usize,
    c: &CycleSet,
) -> Result<PathGraph, PathGraphError> {
    build_path_graph_limited(g, u, v, Some(c), PATH_CAP)
}

/// The reference fixture: five paths, a spanning but insufficient cycle
/// set, and the isolated path u-y-x-v.
pub fn check_k4_fixture() -> TheoremReport {
    let (g, u, v, c) = fixtures::k4_fixture();
    let instance = InstanceInfo::pinned("K4 with C = {uxv, uyv, uxyv}", &g, Some((u, v)), Some(&c));
    let paths = enumerate_uv_paths(&g, u, v).expect("K4 enumerates");
    let got: Vec<&[usize]> = paths.iter().map(|p| p.vertices()).collect();
    let expected: Vec<&[usize]> = vec![
        &[0, 3],
        &[0, 1, 3],
        &[0, 2, 3],
        &[0, 1, 2, 3],
        &[0, 2, 1, 3],
    ];
    let span = spans_cycle_space(&c, &g).expect("cycle set is valid");
    let pg = build_restricted(&g, u, v, &c).expect("K4 restricts");
    let comps = pg.components();
    let isolated = Path::new(&g, vec![0, 2, 1, 3]).expect("u-y-x-v is a path");
    let isolated_ok = comps == vec![vec![0, 1, 2, 3], vec![4]] && pg.paths()[4] == isolated;
    let ok = got == expected && span.rank == 3 && span.dimension == 3 && span.spans && isolated_ok;
    let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
    let mut report = TheoremReport::new(
        "k4-fixture",
        "K4 reference: 5 paths, spanning cycle set, isolated u-y-x-v",
        instance,
        verdict,
    )
    .metric("path_count", paths.len())
    .metric("rank", span.rank)
    .metric("dimension", span.dimension)
    .metric(
        "component_sizes",
        comps.iter().map(|c| c.len()).collect::<Vec<_>>(),
    );
    if !ok {
        report = report.evidence(instance_evidence(
            &g,
            Some((u, v)),
            Some(&c),
            &[&[0, 2, 1, 3]],
            "one of the three reference facts failed",
        ));
    }
    report
}

struct CorpusStats {
    pairs: usize,
    skipped: usize,
    max_paths: usize,
    max_diameter: usize,
}

/// Path graphs of every corpus instance are connected, and merge walks
/// stay within the edge-count bound on sampled path pairs.
pub fn check_connectivity(max_n: usize, seed: u64, samples: usize) -> TheoremReport {
    let corpus = exhaustive_corpus(max_n);
    let scope = format!("all 2-connected graphs through {max_n} vertices, every vertex pair");
    let per_graph: Vec<Result<CorpusStats, serde_json::Value>> = corpus
        .par_iter()
        .map(|g| {
            let mut stats = CorpusStats {
                pairs: 0,
                skipped: 0,
                max_paths: 0,
                max_diameter: 0,
            };
            for (u, v) in corpus::vertex_pairs(g.vertex_count()) {
                match build_path_graph_limited(g, u, v, None, PATH_CAP) {
                    Ok(pg) => {
                        stats.pairs += 1;
                        stats.max_paths = stats.max_paths.max(pg.path_count());
                        if pg.components().len() != 1 {
                            return Err(instance_evidence(
                                g,
                                Some((u, v)),
                                None,
                                &[],
                                "path graph is disconnected",
                            ));
                        }
                    }
                    Err(PathGraphError::TooManyPaths(_)) => stats.skipped += 1,
                    Err(e) => {
                        return Err(instance_evidence(
                            g,
                            Some((u, v)),
                            None,
                            &[],
                            &format!("path graph construction failed: {e}"),
                        ))
                    }
                }
            }
            Ok(stats)
        })
        .collect();
    let mut pairs = 0;
    let mut skipped = 0;
    let mut max_paths = 0;
    let mut failure = None;
    for r in per_graph {
        match r {
            Ok(s) => {
                pairs += s.pairs;
                skipped += s.skipped;
                max_paths = max_paths.max(s.max_paths);
            }
            Err(e) => {
                failure = Some(e);
                break;
            }
        }
    }
    // sampled merge walks between random path pairs
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x77A1);
    let mut walks = 0;
    let mut longest_walk = 0;
    while failure.is_none() && walks < samples {
        let g = &corpus[rng.gen_range(0..corpus.len())];
        let pair_list = corpus::vertex_pairs(g.vertex_count());
        let (u, v) = pair_list[rng.gen_range(0..pair_list.len())];
        let paths = enumerate_uv_paths(g, u, v).expect("corpus instances enumerate");
        let si = rng.gen_range(0..paths.len());
        let ti = rng.gen_range(0..paths.len());
        if si == ti {
            continue;
        }
        let (s, t) = (&paths[si], &paths[ti]);
        let walk = merge_walk(g, s, t).expect("corpus instances merge");
        let valid = walk.first() == Some(s)
            && walk.last() == Some(t)
            && walk
                .windows(2)
                .all(|w| are_adjacent(&w[0], &w[1]).is_some())
            && walk.len() - 1 <= t.len();
        if !valid {
            failure = Some(instance_evidence(
                g,
                Some((u, v)),
                None,
                &[s.vertices(), t.vertices()],
                "merge walk is invalid or exceeds the edge-count bound",
            ));
            break;
        }
        longest_walk = longest_walk.max(walk.len() - 1);
        walks += 1;
    }
    let verdict = if failure.is_none() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut report = TheoremReport::new(
        "connectivity",
        "every path graph over the corpus is connected",
        InstanceInfo::corpus(scope),
        verdict,
    )
    .metric("graphs", corpus.len())
    .metric("pairs", pairs)
    .metric("skipped_over_path_cap", skipped)
    .metric("max_paths", max_paths)
    .metric("merge_walks_sampled", walks)
    .metric("longest_sampled_walk", longest_walk);
    if let Some(e) = failure {
        report = report.evidence(e);
    }
    report
}

/// Path graph diameters never exceed twice the endpoint distance, and
/// sampled two-leg routes respect the same bound.
pub fn check_diameter_bound(max_n: usize, seed: u64, samples: usize) -> TheoremReport {
    let corpus = exhaustive_corpus(max_n);
    let scope = format!("all 2-connected graphs through {max_n} vertices, every vertex pair");
    let per_graph: Vec<Result<CorpusStats, serde_json::Value>> = corpus
        .par_iter()
        .map(|g| {
            let mut stats = CorpusStats {
                pairs: 0,
                skipped: 0,
                max_paths: 0,
                max_diameter: 0,
            };
            for (u, v) in corpus::vertex_pairs(g.vertex_count()) {
                let dist = g.distance(u, v).expect("corpus graphs are connected");
                match build_path_graph_limited(g, u, v, None, PATH_CAP) {
                    Ok(pg) => {
                        stats.pairs += 1;
                        let Some(d) = pg.diameter() else {
                            return Err(instance_evidence(
                                g,
                                Some((u, v)),
                                None,
                                &[],
                                "path graph has no finite diameter",
                            ));
                        };
                        stats.max_diameter = stats.max_diameter.max(d);
                        if d > 2 * dist {
                            return Err(instance_evidence(
                                g,
                                Some((u, v)),
                                None,
                                &[],
                                &format!("diameter {d} exceeds the bound {}", 2 * dist),
                            ));
                        }
                    }
                    Err(PathGraphError::TooManyPaths(_)) => stats.skipped += 1,
                    Err(e) => {
                        return Err(instance_evidence(
                            g,
                            Some((u, v)),
                            None,
                            &[],
                            &format!("path graph construction failed: {e}"),
                        ))
                    }
                }
            }
            Ok(stats)
        })
        .collect();
    let mut pairs = 0;
    let mut skipped = 0;
    let mut max_diameter = 0;
    let mut failure = None;
    for r in per_graph {
        match r {
            Ok(s) => {
                pairs += s.pairs;
                skipped += s.skipped;
                max_diameter = max_diameter.max(s.max_diameter);
            }
            Err(e) => {
                failure = Some(e);
                break;
            }
        }
    }
    // sampled routes through the lexicographically smallest shortest path
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xB07E);
    let mut routes = 0;
    while failure.is_none() && routes < samples {
        let g = &corpus[rng.gen_range(0..corpus.len())];
        let pair_list = corpus::vertex_pairs(g.vertex_count());
        let (u, v) = pair_list[rng.gen_range(0..pair_list.len())];
        let paths = enumerate_uv_paths(g, u, v).expect("corpus instances enumerate");
        let s = &paths[rng.gen_range(0..paths.len())];
        let t = &paths[rng.gen_range(0..paths.len())];
        let dist = g.distance(u, v).expect("corpus graphs are connected");
        let route = bounded_route(g, u, v, s, t).expect("corpus instances route");
        let valid = route.first() == Some(s)
            && route.last() == Some(t)
            && route
                .windows(2)
                .all(|w| are_adjacent(&w[0], &w[1]).is_some())
            && route.len() - 1 <= 2 * dist;
        if !valid {
            failure = Some(instance_evidence(
                g,
                Some((u, v)),
                None,
                &[s.vertices(), t.vertices()],
                "route is invalid or exceeds twice the endpoint distance",
            ));
            break;
        }
        routes += 1;
    }
    let verdict = if failure.is_none() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut report = TheoremReport::new(
        "diameter-bound",
        "path graph diameter stays within twice the endpoint distance",
        InstanceInfo::corpus(scope),
        verdict,
    )
    .metric("graphs", corpus.len())
    .metric("pairs", pairs)
    .metric("skipped_over_path_cap", skipped)
    .metric("max_diameter", max_diameter)
    .metric("routes_sampled", routes);
    if let Some(e) = failure {
        report = report.evidence(e);
    }
    report
}

struct TightBest {
    diameter: usize,
    dist: usize,
    graph_idx: usize,
    u: usize,
    v: usize,
}

/// Scans one representative per isomorphism class for the pair whose path
/// graph diameter comes closest to twice the endpoint distance.
pub fn search_tightness_witness(max_n: usize) -> TheoremReport {
    assert!(max_n <= 8, "search is sized for at most 8 vertices");
    let catalogue = corpus::unlabeled_two_connected(max_n);
    let per_graph: Vec<(Option<TightBest>, Option<TightBest>, usize)> = catalogue
        .par_iter()
        .enumerate()
        .map(|(idx, g)| {
            let mut best: Option<TightBest> = None;
            let mut tight: Option<TightBest> = None;
            let mut pairs = 0;
            for (u, v) in corpus::vertex_pairs(g.vertex_count()) {
                let Ok(pg) = build_path_graph_limited(g, u, v, None, PATH_CAP) else {
                    continue;
                };
                let Some(d) = pg.diameter() else { continue };
                let dist = g.distance(u, v).expect("catalogue graphs are connected");
                pairs += 1;
                let cand = TightBest {
                    diameter: d,
                    dist,
                    graph_idx: idx,
                    u,
                    v,
                };
                // compare d / (2 dist) by cross products; on equal ratio
                // the larger distance is the more interesting witness
                let better = match &best {
                    None => true,
                    Some(b) => {
                        let (l, r) = (cand.diameter * b.dist, b.diameter * cand.dist);
                        l > r || (l == r && cand.dist > b.dist)
                    }
                };
                if better {
                    best = Some(cand);
                }
                if d == 2 * dist && dist >= 2 && tight.is_none() {
                    tight = Some(TightBest {
                        diameter: d,
                        dist,
                        graph_idx: idx,
                        u,
                        v,
                    });
                }
            }
            (best, tight, pairs)
        })
        .collect();
    let mut best: Option<TightBest> = None;
    let mut tight: Option<TightBest> = None;
    let mut pairs = 0;
    for (b, t, p) in per_graph {
        pairs += p;
        if let Some(cand) = b {
            let better = match &best {
                None => true,
                Some(cur) => {
                    let (l, r) = (cand.diameter * cur.dist, cur.diameter * cand.dist);
                    l > r || (l == r && cand.dist > cur.dist)
                }
            };
            if better {
                best = Some(cand);
            }
        }
        if tight.is_none() {
            tight = t;
        }
    }
    let best = best.expect("catalogue is nonempty");
    let g = &catalogue[best.graph_idx];
    let report = TheoremReport::new(
        "tightness",
        "best observed diameter relative to twice the endpoint distance",
        InstanceInfo::corpus(format!(
            "one representative per isomorphism class through {max_n} vertices"
        )),
        Verdict::Witness,
    )
    .metric("graphs", catalogue.len())
    .metric("pairs", pairs)
    .metric("best_diameter", best.diameter)
    .metric("best_distance", best.dist)
    .metric("best_bound", 2 * best.dist)
    .metric("tight_with_distance_at_least_two", tight.is_some())
    .evidence(instance_evidence(
        g,
        Some((best.u, best.v)),
        None,
        &[],
        "pair maximizing diameter / (2 * distance)",
    ));
    if let Some(t) = tight {
        report.metric("tight_example_distance", t.dist)
    } else {
        report
    }
}

/// A connected restricted path graph forces the cycle set to span: over
/// seeded random instances, no connected case may have a rank deficit.
pub fn check_span_necessity(seed: u64, instances: usize) -> TheoremReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x53A9);
    let cases: Vec<(Graph, CycleSet)> = (0..instances)
        .map(|_| {
            let n = rng.gen_range(4..=6);
            let g = corpus::random_two_connected(&mut rng, n);
            let c = corpus::random_cycle_subset(&mut rng, &g, 50);
            (g, c)
        })
        .collect();
    let results: Vec<Result<(usize, bool), serde_json::Value>> = cases
        .par_iter()
        .map(|(g, c)| {
            let span = spans_cycle_space(c, g).expect("random cycle sets are valid");
            let mut connected_pairs = 0;
            for (u, v) in corpus::vertex_pairs(g.vertex_count()) {
                let pg = build_restricted(g, u, v, c).expect("random instances restrict");
                if pg.components().len() == 1 {
                    connected_pairs += 1;
                    if !span.spans {
                        return Err(instance_evidence(
                            g,
                            Some((u, v)),
                            Some(c),
                            &[],
                            "restricted path graph is connected but the set does not span",
                        ));
                    }
                }
            }
            Ok((connected_pairs, span.spans))
        })
        .collect();
    let mut connected_pairs = 0;
    let mut spanning_sets = 0;
    let mut failure = None;
    for r in results {
        match r {
            Ok((cp, spans)) => {
                connected_pairs += cp;
                spanning_sets += usize::from(spans);
            }
            Err(e) => {
                failure = Some(e);
                break;
            }
        }
    }
    let verdict = if failure.is_none() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut report = TheoremReport::new(
        "span-necessity",
        "connected restricted path graphs only arise from spanning sets",
        InstanceInfo::corpus(format!(
            "{instances} seeded random (graph, cycle set) instances"
        )),
        verdict,
    )
    .metric("instances", instances)
    .metric("connected_pairs_seen", connected_pairs)
    .metric("spanning_sets", spanning_sets);
    if let Some(e) = failure {
        report = report.evidence(e);
    }
    report
}

/// Witness-closed cycle sets keep every restricted path graph connected.
/// Instances are drawn until the requested number of Δ*-dense sets is
/// realized; falling short is itself a failure.
pub fn check_density_sufficiency(seed: u64, wanted: usize) -> TheoremReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xDE45);
    let keep_schedule = [90u32, 75, 60];
    let mut kept: Vec<(Graph, CycleSet)> = Vec::new();
    let mut attempts = 0usize;
    let cap = wanted * 40;
    while kept.len() < wanted && attempts < cap {
        let batch: Vec<(Graph, CycleSet)> = (0..64.min(cap - attempts))
            .map(|_| {
                let n = rng.gen_range(4..=6);
                let g = corpus::random_two_connected(&mut rng, n);
                let keep = keep_schedule[attempts % keep_schedule.len()];
                attempts += 1;
                let c = corpus::random_cycle_subset(&mut rng, &g, keep);
                (g, c)
            })
            .collect();
        let dense: Vec<bool> = batch
            .par_iter()
            .map(|(g, c)| is_delta_star_dense(c, g).expect("random instances close"))
            .collect();
        for (case, ok) in batch.into_iter().zip(dense) {
            if ok && kept.len() < wanted {
                kept.push(case);
            }
        }
    }
    let realized = kept.len();
    let mut failure = if realized < wanted {
        Some(serde_json::json!({
            "detail": format!(
                "only {realized} of {wanted} dense instances realized in {attempts} attempts"
            ),
        }))
    } else {
        None
    };
    let mut pairs = 0;
    if failure.is_none() {
        let results: Vec<Result<usize, serde_json::Value>> = kept
            .par_iter()
            .map(|(g, c)| {
                let mut local = 0;
                for (u, v) in corpus::vertex_pairs(g.vertex_count()) {
                    let pg = build_restricted(g, u, v, c).expect("dense instances restrict");
                    local += 1;
                    if pg.components().len() != 1 {
                        return Err(instance_evidence(
                            g,
                            Some((u, v)),
                            Some(c),
                            &[],
                            "restricted path graph disconnected despite a dense set",
                        ));
                    }
                }
                Ok(local)
            })
            .collect();
        for r in results {
            match r {
                Ok(p) => pairs += p,
                Err(e) => {
                    failure = Some(e);
                    break;
                }
            }
        }
    }
    let verdict = if failure.is_none() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut report = TheoremReport::new(
        "density-sufficiency",
        "dense cycle sets keep every restricted path graph connected",
        InstanceInfo::corpus(format!("{wanted} seeded random dense instances")),
        verdict,
    )
    .metric("requested", wanted)
    .metric("realized", realized)
    .metric("attempts", attempts)
    .metric("pairs_checked", pairs);
    if let Some(e) = failure {
        report = report.evidence(e);
    }
    report
}

/// Internal faces of every plane fixture form a dense set and keep all
/// restricted path graphs connected.
pub fn check_face_density() -> TheoremReport {
    let fixture_list = fixtures::plane_fixtures();
    let results: Vec<Result<usize, serde_json::Value>> = fixture_list
        .par_iter()
        .map(|f| {
            let faces = internal_faces(&f.graph, &f.embedding).expect("fixtures embed");
            if !is_delta_star_dense(&faces, &f.graph).expect("fixtures close") {
                return Err(instance_evidence(
                    &f.graph,
                    None,
                    Some(&faces),
                    &[],
                    &format!("internal faces of {} are not dense", f.name),
                ));
            }
            let mut pairs = 0;
            for (u, v) in corpus::vertex_pairs(f.graph.vertex_count()) {
                let pg = build_restricted(&f.graph, u, v, &faces).expect("fixtures restrict");
                pairs += 1;
                if pg.components().len() != 1 {
                    return Err(instance_evidence(
                        &f.graph,
                        Some((u, v)),
                        Some(&faces),
                        &[],
                        &format!("face-restricted path graph of {} disconnected", f.name),
                    ));
                }
            }
            Ok(pairs)
        })
        .collect();
    let mut pairs = 0;
    let mut failure = None;
    for r in results {
        match r {
            Ok(p) => pairs += p,
            Err(e) => {
                failure = Some(e);
                break;
            }
        }
    }
    let verdict = if failure.is_none() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut report = TheoremReport::new(
        "face-density",
        "internal faces are dense and connect every restricted path graph",
        InstanceInfo::corpus(format!("{} plane fixtures", fixture_list.len())),
        verdict,
    )
    .metric("fixtures", fixture_list.len())
    .metric("pairs_checked", pairs);
    if let Some(e) = failure {
        report = report.evidence(e);
    }
    report
}

/// Cycles through any fixed edge form a dense set; the restriction keeps
/// every path graph connected.
pub fn check_edge_cycle_density() -> TheoremReport {
    let corpus = corpus::labeled_corpus(5);
    let results: Vec<Result<(usize, usize), serde_json::Value>> = corpus
        .par_iter()
        .map(|g| {
            let mut edge_sets = 0;
            let mut pairs = 0;
            for e in 0..g.edge_count() {
                let c = cycles_through_edge(g, e).expect("corpus graphs enumerate");
                edge_sets += 1;
                if !is_delta_star_dense(&c, g).expect("corpus instances close") {
                    return Err(instance_evidence(
                        g,
                        None,
                        Some(&c),
                        &[],
                        &format!("cycles through edge {e} are not dense"),
                    ));
                }
                for (u, v) in corpus::vertex_pairs(g.vertex_count()) {
                    let pg = build_restricted(g, u, v, &c).expect("corpus instances restrict");
                    pairs += 1;
                    if pg.components().len() != 1 {
                        return Err(instance_evidence(
                            g,
                            Some((u, v)),
                            Some(&c),
                            &[],
                            &format!("path graph restricted to edge {e} cycles disconnected"),
                        ));
                    }
                }
            }
            Ok((edge_sets, pairs))
        })
        .collect();
    let mut edge_sets = 0;
    let mut pairs = 0;
    let mut failure = None;
    for r in results {
        match r {
            Ok((es, p)) => {
                edge_sets += es;
                pairs += p;
            }
            Err(e) => {
                failure = Some(e);
                break;
            }
        }
    }
    let verdict = if failure.is_none() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut report = TheoremReport::new(
        "edge-cycle-density",
        "cycles through a fixed edge are dense and keep path graphs connected",
        InstanceInfo::corpus("all 2-connected graphs through 5 vertices, every edge".to_string()),
        verdict,
    )
    .metric("graphs", corpus.len())
    .metric("edge_sets", edge_sets)
    .metric("pairs_checked", pairs);
    if let Some(e) = failure {
        report = report.evidence(e);
    }
    report
}

/// Cycles through either endpoint keep the restricted path graph
/// connected.
pub fn check_vertex_cycle_connectivity() -> TheoremReport {
    let corpus = corpus::labeled_corpus(5);
    let results: Vec<Result<usize, serde_json::Value>> = corpus
        .par_iter()
        .map(|g| {
            let mut pairs = 0;
            for (u, v) in corpus::vertex_pairs(g.vertex_count()) {
                for w in [u, v] {
                    let c = cycles_through_vertex(g, w).expect("corpus graphs enumerate");
                    let pg = build_restricted(g, u, v, &c).expect("corpus instances restrict");
                    pairs += 1;
                    if pg.components().len() != 1 {
                        return Err(instance_evidence(
                            g,
                            Some((u, v)),
                            Some(&c),
                            &[],
                            &format!("path graph restricted to cycles through {w} disconnected"),
                        ));
                    }
                }
            }
            Ok(pairs)
        })
        .collect();
    let mut pairs = 0;
    let mut failure = None;
    for r in results {
        match r {
            Ok(p) => pairs += p,
            Err(e) => {
                failure = Some(e);
                break;
            }
        }
    }
    let verdict = if failure.is_none() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut report = TheoremReport::new(
        "vertex-cycle-connectivity",
        "cycles through an endpoint keep the restricted path graph connected",
        InstanceInfo::corpus(
            "all 2-connected graphs through 5 vertices, both endpoints of every pair".to_string(),
        ),
        verdict,
    )
    .metric("graphs", corpus.len())
    .metric("restricted_graphs_checked", pairs);
    if let Some(e) = failure {
        report = report.evidence(e);
    }
    report
}

/// Wherever an exchange cycle has the witness property, a middle path one
/// step from both ends exists; cross-checked against a direct two-step
/// search in the restricted path graph.
pub fn check_interpolation(seed: u64, instances: usize) -> TheoremReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1E4A);
    let cases: Vec<(Graph, CycleSet)> = (0..instances)
        .map(|_| {
            let n = rng.gen_range(4..=5);
            let g = corpus::random_two_connected(&mut rng, n);
            let c = corpus::random_cycle_subset(&mut rng, &g, 60);
            (g, c)
        })
        .collect();
    let results: Vec<Result<(usize, usize), serde_json::Value>> = cases
        .par_iter()
        .map(|(g, c)| {
            let member: BTreeSet<u128> = c.iter().map(|cy| cy.edge_set().mask()).collect();
            let mut delta_cache: HashMap<u128, bool> = HashMap::new();
            let mut qualifying = 0;
            let mut trivial = 0;
            for (u, v) in corpus::vertex_pairs(g.vertex_count()) {
                let full = build_path_graph_limited(g, u, v, None, PATH_CAP)
                    .expect("random instances enumerate");
                let restricted = build_restricted(g, u, v, c).expect("random instances restrict");
                for edge in full.edges() {
                    let sigma = &edge.exchange;
                    let mask = sigma.edge_set().mask();
                    let holds = *delta_cache.entry(mask).or_insert_with(|| {
                        has_property_delta_star(g, sigma, c)
                            .expect("random instances check")
                            .holds()
                    });
                    if !holds {
                        continue;
                    }
                    qualifying += 1;
                    let s = &full.paths()[edge.a];
                    let t = &full.paths()[edge.b];
                    let q = match interpolate(g, s, t, c) {
                        Ok(q) => q,
                        Err(e) => {
                            return Err(instance_evidence(
                                g,
                                Some((u, v)),
                                Some(c),
                                &[s.vertices(), t.vertices()],
                                &format!("interpolation failed: {e}"),
                            ))
                        }
                    };
                    let ok = if q == *t {
                        trivial += 1;
                        member.contains(&mask)
                    } else {
                        let sq = s.edge_set(g) ^ q.edge_set(g);
                        let qt = q.edge_set(g) ^ t.edge_set(g);
                        member.contains(&sq.mask()) && member.contains(&qt.mask())
                    };
                    // independent route: a two-step connection must exist
                    // in the restricted path graph itself
                    let si = restricted.index_of(s).expect("path sets agree");
                    let ti = restricted.index_of(t).expect("path sets agree");
                    let two_step = restricted.has_edge(si, ti)
                        || (0..restricted.path_count())
                            .any(|k| restricted.has_edge(si, k) && restricted.has_edge(k, ti));
                    if !ok || !two_step {
                        return Err(instance_evidence(
                            g,
                            Some((u, v)),
                            Some(c),
                            &[s.vertices(), q.vertices(), t.vertices()],
                            "middle path fails the membership or distance cross-check",
                        ));
                    }
                }
            }
            Ok((qualifying, trivial))
        })
        .collect();
    let mut qualifying = 0;
    let mut trivial = 0;
    let mut failure = None;
    for r in results {
        match r {
            Ok((q, t)) => {
                qualifying += q;
                trivial += t;
            }
            Err(e) => {
                failure = Some(e);
                break;
            }
        }
    }
    let verdict = if failure.is_none() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut report = TheoremReport::new(
        "interpolation",
        "qualifying exchanges admit a middle path one step from both ends",
        InstanceInfo::corpus(format!(
            "{instances} seeded random (graph, cycle set) instances"
        )),
        verdict,
    )
    .metric("instances", instances)
    .metric("qualifying_exchanges", qualifying)
    .metric("exchanges_already_allowed", trivial);
    if let Some(e) = failure {
        report = report.evidence(e);
    }
    report
}

/// The closure is monotone and idempotent, and the sequential variant
/// lands on the same set under shuffled scan orders.
pub fn check_closure_laws(seed: u64, instances: usize, orders: usize) -> TheoremReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xC105);
    let cases: Vec<(Graph, CycleSet, u64)> = (0..instances)
        .map(|i| {
            let n = rng.gen_range(4..=6);
            let g = corpus::random_two_connected(&mut rng, n);
            let c = corpus::random_cycle_subset(&mut rng, &g, 50);
            (g, c, seed ^ (i as u64).wrapping_mul(0x9E3779B97F4A7C15))
        })
        .collect();
    let results: Vec<Result<usize, serde_json::Value>> = cases
        .par_iter()
        .map(|(g, c, order_seed)| {
            let masks = |set: &CycleSet| -> BTreeSet<u128> {
                set.iter().map(|cy| cy.edge_set().mask()).collect()
            };
            let closed = delta_star_closure(c, g).expect("random instances close");
            let closed_masks = masks(&closed);
            if !masks(c).is_subset(&closed_masks) {
                return Err(instance_evidence(
                    g,
                    None,
                    Some(c),
                    &[],
                    "closure lost a member",
                ));
            }
            let twice = delta_star_closure(&closed, g).expect("closures close");
            if masks(&twice) != closed_masks {
                return Err(instance_evidence(
                    g,
                    None,
                    Some(c),
                    &[],
                    "closing twice changed the set",
                ));
            }
            let mut order_rng = ChaCha8Rng::seed_from_u64(*order_seed);
            let all: Vec<Cycle> = enumerate_all_cycles(g)
                .expect("random instances enumerate")
                .iter()
                .cloned()
                .collect();
            for _ in 0..orders {
                let mut schedule = all.clone();
                schedule.shuffle(&mut order_rng);
                let sequential =
                    delta_star_closure_with_order(c, g, &schedule).expect("schedules close");
                if masks(&sequential) != closed_masks {
                    return Err(instance_evidence(
                        g,
                        None,
                        Some(c),
                        &[],
                        "a shuffled scan order changed the closure",
                    ));
                }
            }
            Ok(orders)
        })
        .collect();
    let mut orders_checked = 0;
    let mut failure = None;
    for r in results {
        match r {
            Ok(o) => orders_checked += o,
            Err(e) => {
                failure = Some(e);
                break;
            }
        }
    }
    let verdict = if failure.is_none() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut report = TheoremReport::new(
        "closure-laws",
        "closure is monotone, idempotent and order independent",
        InstanceInfo::corpus(format!(
            "{instances} seeded random instances, {orders} shuffled orders each"
        )),
        verdict,
    )
    .metric("instances", instances)
    .metric("shuffled_orders_checked", orders_checked);
    if let Some(e) = failure {
        report = report.evidence(e);
    }
    report
}

/// The fast implementations agree with the brute-force references:
/// adjacency with the all-splits oracle, cycle counts and unicycle
/// enumeration with subset scans.
pub fn check_oracles() -> TheoremReport {
    let corpus5 = corpus::labeled_corpus(5);
    // adjacency on every path pair of every small instance
    let adjacency: Vec<Result<usize, serde_json::Value>> = corpus5
        .par_iter()
        .map(|g| {
            let mut compared = 0;
            for (u, v) in corpus::vertex_pairs(g.vertex_count()) {
                let paths = enumerate_uv_paths(g, u, v).expect("corpus instances enumerate");
                for s in &paths {
                    for t in &paths {
                        compared += 1;
                        if are_adjacent(s, t).is_some()
                            != oracle::paths_adjacent_by_replacement(s, t)
                        {
                            return Err(instance_evidence(
                                g,
                                Some((u, v)),
                                None,
                                &[s.vertices(), t.vertices()],
                                "adjacency disagrees with the replacement oracle",
                            ));
                        }
                    }
                }
            }
            Ok(compared)
        })
        .collect();
    let mut adjacency_compared = 0;
    let mut failure = None;
    for r in adjacency {
        match r {
            Ok(cnt) => adjacency_compared += cnt,
            Err(e) => {
                failure = Some(e);
                break;
            }
        }
    }
    // the mandatory crossing pair: a single-cycle difference that is not
    // an exchange
    let crossing_ok = {
        let (g, ..) = fixtures::k4_fixture();
        let s = Path::new(&g, vec![0, 1, 2, 3]).expect("path");
        let t = Path::new(&g, vec![0, 2, 1, 3]).expect("path");
        are_adjacent(&s, &t).is_none() && !oracle::paths_adjacent_by_replacement(&s, &t)
    };
    if failure.is_none() && !crossing_ok {
        let (g, u, v, _) = fixtures::k4_fixture();
        failure = Some(instance_evidence(
            &g,
            Some((u, v)),
            None,
            &[&[0, 1, 2, 3], &[0, 2, 1, 3]],
            "the crossing-detour pair must be non-adjacent on both routes",
        ));
    }
    // cycle counts and unicycle enumeration against subset scans
    let mut cycle_graphs: Vec<(String, Graph)> = corpus5
        .iter()
        .map(|g| (format!("labeled n={}", g.vertex_count()), g.clone()))
        .collect();
    for f in fixtures::plane_fixtures() {
        if f.graph.edge_count() <= 12 {
            cycle_graphs.push((f.name.to_string(), f.graph));
        }
    }
    let mut cycle_comparisons = 0;
    let mut unicycle_comparisons = 0;
    if failure.is_none() {
        let scan: Vec<Result<(usize, usize), serde_json::Value>> = cycle_graphs
            .par_iter()
            .map(|(name, g)| {
                let all = enumerate_all_cycles(g).expect("graphs enumerate");
                if all.len() != oracle::count_cycles_brute(g) {
                    return Err(instance_evidence(
                        g,
                        None,
                        None,
                        &[],
                        &format!("cycle count disagrees with the subset scan on {name}"),
                    ));
                }
                let mut unicycles = 0;
                if g.vertex_count() <= 7 {
                    for sigma in all.iter() {
                        let fast: Vec<u128> =
                            pathspace_core::enumerate_unicycles_containing(g, sigma)
                                .expect("graphs enumerate")
                                .iter()
                                .map(|u| u.edges().mask())
                                .collect();
                        if fast != oracle::unicycle_masks_brute(g, sigma) {
                            return Err(instance_evidence(
                                g,
                                None,
                                None,
                                &[],
                                &format!("unicycle enumeration disagrees on {name}"),
                            ));
                        }
                        unicycles += 1;
                    }
                }
                Ok((1, unicycles))
            })
            .collect();
        for r in scan {
            match r {
                Ok((c, u)) => {
                    cycle_comparisons += c;
                    unicycle_comparisons += u;
                }
                Err(e) => {
                    failure = Some(e);
                    break;
                }
            }
        }
    }
    let verdict = if failure.is_none() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut report = TheoremReport::new(
        "oracles",
        "fast implementations agree with the brute-force references",
        InstanceInfo::corpus(
            "all 2-connected graphs through 5 vertices plus the plane fixtures".to_string(),
        ),
        verdict,
    )
    .metric("adjacency_pairs_compared", adjacency_compared)
    .metric("crossing_pair_checked", crossing_ok)
    .metric("cycle_count_graphs", cycle_comparisons)
    .metric("unicycle_sets_compared", unicycle_comparisons);
    if let Some(e) = failure {
        report = report.evidence(e);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_config() -> SuiteConfig {
        SuiteConfig {
            seed: 11,
            max_n: 4,
            tightness_max_n: 4,
            which: None,
            walk_samples: 25,
            span_instances: 10,
            dense_instances: 5,
            interpolation_instances: 5,
            closure_instances: 5,
            closure_orders: 3,
        }
    }

    #[test]
    fn quick_suite_passes_end_to_end() {
        let suite = run_theorem_suite(&quick_config());
        assert!(suite.passed, "{}", suite.to_json());
        assert_eq!(suite.reports.len(), check_ids().len());
    }

    #[test]
    fn reports_are_reproducible_modulo_duration() {
        let mut a = run_theorem_suite(&quick_config());
        let mut b = run_theorem_suite(&quick_config());
        for r in a.reports.iter_mut().chain(b.reports.iter_mut()) {
            r.duration_ms = 0;
        }
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn the_which_filter_selects_checks() {
        let cfg = SuiteConfig {
            which: Some(["k4-fixture".to_string()].into()),
            ..quick_config()
        };
        let suite = run_theorem_suite(&cfg);
        assert_eq!(suite.reports.len(), 1);
        assert_eq!(suite.reports[0].check, "k4-fixture");
        assert!(suite.passed);
    }

    #[test]
    fn tightness_on_tiny_graphs_reports_the_adjacent_pair() {
        let report = search_tightness_witness(4);
        assert_eq!(report.verdict, Verdict::Witness);
        // K4 with adjacent endpoints: diameter 2 against bound 2
        assert_eq!(report.metrics["best_diameter"], 2);
        assert_eq!(report.metrics["best_distance"], 1);
        assert_eq!(report.metrics["tight_with_distance_at_least_two"], false);
    }
}
