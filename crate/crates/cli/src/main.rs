//! `pathspace`: inspect u-v path graphs, their restrictions to allowed
//! exchange cycles, the witness property and its closure, and run the
//! verification suite. Graphs, cycle sets and embeddings come in as JSON
//! files; summaries go to stdout and machine-readable artifacts to
//! `--out`.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use pathspace_cli::{dot, fixtures, suite};
use pathspace_core::io::{self, CycleSetJson, GraphJson};
use pathspace_core::{
    are_adjacent, as_cycle, bounded_route, build_path_graph_limited, cycles_through_edge,
    cycles_through_vertex, delta_star_closure, enumerate_all_cycles, enumerate_uv_paths_limited,
    exchange_cycle, has_property_delta_star, internal_faces, interpolate, is_delta_star_dense,
    spans_cycle_space, Cycle, CycleSet, DeltaStarOutcome, EdgeSet, Graph, Path, PlaneEmbedding,
    DEFAULT_PATH_LIMIT,
};

#[derive(Parser)]
#[command(
    name = "pathspace",
    version,
    about = "Path graphs of 2-connected graphs: exchanges, cycle restrictions, witnesses"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Graph as a JSON file ({"n": .., "edges": [[a,b],..], "labels": ..})
    #[arg(long, global = true, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// First endpoint, by label or index
    #[arg(long, global = true, value_name = "ID")]
    u: Option<String>,
    /// Second endpoint, by label or index
    #[arg(long, global = true, value_name = "ID")]
    v: Option<String>,
    /// Allowed exchange cycles as a JSON file
    #[arg(long, global = true, value_name = "FILE")]
    cycles: Option<PathBuf>,
    /// Rotation system as a JSON file (for `cycles faces`)
    #[arg(long, global = true, value_name = "FILE")]
    embedding: Option<PathBuf>,
    /// Cap on enumerated paths per instance
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_PATH_LIMIT)]
    max_paths: usize,
    /// Write the JSON (or DOT) artifact here
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Emit DOT instead of a summary (pathgraph, k4-demo)
    #[arg(long, global = true)]
    dot: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List all simple u-v paths
    Paths,
    /// Build the path graph, restricted to --cycles when given
    Pathgraph,
    /// List the connected components of the (restricted) path graph
    Components,
    /// Compare the path graph diameter against twice the endpoint distance
    Diameter,
    /// Route between two paths within twice the endpoint distance
    Route {
        /// Start path as comma-separated vertices, e.g. u,x,v
        s: String,
        /// Target path with the same endpoints
        t: String,
    },
    /// GF(2) rank of the cycle set against the cycle space dimension
    SpanCheck,
    /// Enumerate cycles of the graph
    Cycles {
        #[command(subcommand)]
        what: CyclesWhat,
    },
    /// Check the witness property of one exchange cycle against --cycles
    DeltaStar {
        /// The cycle as comma-separated vertices, e.g. u,x,v
        #[arg(long, value_name = "CYCLE")]
        sigma: String,
    },
    /// Close the cycle set under witnessed additions
    Closure,
    /// Decide whether the closure of the cycle set reaches every cycle
    Dense,
    /// Find a middle path adjacent to both input paths
    Interpolate {
        /// Start path as comma-separated vertices
        s: String,
        /// Target path with the same endpoints
        t: String,
    },
    /// Run the verification suite and report per-check verdicts
    Verify {
        /// Check ids to run (repeatable); defaults to all
        #[arg(long, value_name = "ID")]
        which: Vec<String>,
        /// Exhaustive corpus bound (3..=8)
        #[arg(long, value_name = "N", default_value_t = 6)]
        max_n: usize,
        /// Tightness search bound (3..=8)
        #[arg(long, value_name = "N", default_value_t = 7)]
        tightness_max_n: usize,
        /// Random seed driving every sampled check
        #[arg(long, value_name = "N", default_value_t = 1729)]
        seed: u64,
        #[arg(long, value_name = "N", default_value_t = 1000)]
        walk_samples: usize,
        #[arg(long, value_name = "N", default_value_t = 500)]
        span_instances: usize,
        #[arg(long, value_name = "N", default_value_t = 200)]
        dense_instances: usize,
        #[arg(long, value_name = "N", default_value_t = 200)]
        interpolation_instances: usize,
        #[arg(long, value_name = "N", default_value_t = 100)]
        closure_instances: usize,
        #[arg(long, value_name = "N", default_value_t = 10)]
        closure_orders: usize,
    },
    /// Search small graphs for the diameter closest to its upper bound
    SearchTightness {
        /// One representative per isomorphism class through this order
        #[arg(long, value_name = "N", default_value_t = 7)]
        max_n: usize,
    },
    /// Walk through the built-in complete-graph example
    K4Demo,
}

#[derive(Subcommand)]
enum CyclesWhat {
    /// Every cycle of the graph
    All,
    /// Cycles through one edge, by index or as a,b
    Edge { edge: String },
    /// Cycles through one vertex, by label or index
    Vertex { vertex: String },
    /// Internal faces of the plane embedding (needs --embedding)
    Faces,
}

fn main() -> ExitCode {
    // die quietly when the consumer of a pipe goes away
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    env_logger::init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Paths => cmd_paths(&cli.common),
        Command::Pathgraph => cmd_pathgraph(&cli.common),
        Command::Components => cmd_components(&cli.common),
        Command::Diameter => cmd_diameter(&cli.common),
        Command::Route { ref s, ref t } => cmd_route(&cli.common, s, t),
        Command::SpanCheck => cmd_span_check(&cli.common),
        Command::Cycles { ref what } => cmd_cycles(&cli.common, what),
        Command::DeltaStar { ref sigma } => cmd_delta_star(&cli.common, sigma),
        Command::Closure => cmd_closure(&cli.common),
        Command::Dense => cmd_dense(&cli.common),
        Command::Interpolate { ref s, ref t } => cmd_interpolate(&cli.common, s, t),
        Command::Verify {
            ref which,
            max_n,
            tightness_max_n,
            seed,
            walk_samples,
            span_instances,
            dense_instances,
            interpolation_instances,
            closure_instances,
            closure_orders,
        } => cmd_verify(
            &cli.common,
            which,
            suite::SuiteConfig {
                seed,
                max_n,
                tightness_max_n,
                which: None,
                walk_samples,
                span_instances,
                dense_instances,
                interpolation_instances,
                closure_instances,
                closure_orders,
            },
        ),
        Command::SearchTightness { max_n } => cmd_search_tightness(&cli.common, max_n),
        Command::K4Demo => cmd_k4_demo(&cli.common),
    }
}

// ---- input loading and name resolution ----

fn load_graph(common: &Common) -> Result<Graph> {
    let path = common
        .graph
        .as_ref()
        .ok_or_else(|| anyhow!("pass --graph FILE (or try `pathspace k4-demo`)"))?;
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load_cycles(common: &Common, g: &Graph) -> Result<CycleSet> {
    let path = common
        .cycles
        .as_ref()
        .ok_or_else(|| anyhow!("pass --cycles FILE"))?;
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::parse_cycle_set(&text, g).with_context(|| format!("parsing {}", path.display()))
}

fn load_embedding(common: &Common, g: &Graph) -> Result<PlaneEmbedding> {
    let path = common
        .embedding
        .as_ref()
        .ok_or_else(|| anyhow!("pass --embedding FILE"))?;
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::parse_embedding(&text, g).with_context(|| format!("parsing {}", path.display()))
}

fn resolve_vertex(g: &Graph, spec: &str) -> Result<usize> {
    for v in 0..g.vertex_count() {
        if g.label(v) == Some(spec) {
            return Ok(v);
        }
    }
    let idx: usize = spec
        .parse()
        .map_err(|_| anyhow!("no vertex named {spec:?}"))?;
    if idx >= g.vertex_count() {
        bail!(
            "vertex index {idx} out of range (graph has {})",
            g.vertex_count()
        );
    }
    Ok(idx)
}

fn endpoints(common: &Common, g: &Graph) -> Result<(usize, usize)> {
    match (&common.u, &common.v) {
        (Some(u), Some(v)) => Ok((resolve_vertex(g, u)?, resolve_vertex(g, v)?)),
        _ => bail!("pass both --u and --v"),
    }
}

fn resolve_path(g: &Graph, spec: &str) -> Result<Path> {
    let verts = spec
        .split(',')
        .map(|s| resolve_vertex(g, s.trim()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Path::new(g, verts)?)
}

fn resolve_cycle(g: &Graph, spec: &str) -> Result<Cycle> {
    let verts = spec
        .split(',')
        .map(|s| resolve_vertex(g, s.trim()))
        .collect::<Result<Vec<_>>>()?;
    if verts.len() < 3 {
        bail!("a cycle needs at least 3 vertices");
    }
    let mut es = EdgeSet::empty(g.edge_count());
    for i in 0..verts.len() {
        let (a, b) = (verts[i], verts[(i + 1) % verts.len()]);
        let e = g
            .find_edge(a, b)
            .ok_or_else(|| anyhow!("no edge {}-{}", g.vertex_name(a), g.vertex_name(b)))?;
        es.insert(e);
    }
    Ok(as_cycle(g, &es)?)
}

fn resolve_edge(g: &Graph, spec: &str) -> Result<usize> {
    if let Some((a, b)) = spec.split_once(',') {
        let a = resolve_vertex(g, a.trim())?;
        let b = resolve_vertex(g, b.trim())?;
        return g
            .find_edge(a, b)
            .ok_or_else(|| anyhow!("no edge {}-{}", g.vertex_name(a), g.vertex_name(b)));
    }
    let e: usize = spec
        .parse()
        .context("edge must be an index or a pair a,b")?;
    if e >= g.edge_count() {
        bail!("edge index {e} out of range (graph has {})", g.edge_count());
    }
    Ok(e)
}

// ---- display helpers ----

fn path_display(g: &Graph, p: &Path) -> String {
    p.vertices()
        .iter()
        .map(|&v| g.vertex_name(v))
        .collect::<Vec<_>>()
        .join("-")
}

fn cycle_display(g: &Graph, c: &Cycle) -> String {
    c.vertices()
        .iter()
        .map(|&v| g.vertex_name(v))
        .collect::<Vec<_>>()
        .join("-")
}

fn edge_display(g: &Graph, e: usize) -> String {
    let (a, b) = g.endpoints(e);
    format!("{}-{}", g.vertex_name(a), g.vertex_name(b))
}

fn vertices_json(items: &[Path]) -> serde_json::Value {
    serde_json::Value::Array(
        items
            .iter()
            .map(|p| serde_json::to_value(p.vertices()).expect("vertex lists serialize"))
            .collect(),
    )
}

fn write_artifact(common: &Common, text: &str) -> Result<()> {
    if let Some(path) = &common.out {
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn write_json(common: &Common, value: &serde_json::Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    write_artifact(common, &text)
}

// ---- commands ----

fn cmd_paths(common: &Common) -> Result<ExitCode> {
    let g = load_graph(common)?;
    let (u, v) = endpoints(common, &g)?;
    let paths = enumerate_uv_paths_limited(&g, u, v, common.max_paths)?;
    println!(
        "{} simple {}-{} paths",
        paths.len(),
        g.vertex_name(u),
        g.vertex_name(v)
    );
    for p in &paths {
        println!("  {}", path_display(&g, p));
    }
    write_json(
        common,
        &serde_json::json!({ "count": paths.len(), "paths": vertices_json(&paths) }),
    )?;
    Ok(ExitCode::SUCCESS)
}

fn build_for(common: &Common, g: &Graph) -> Result<(pathspace_core::PathGraph, Option<CycleSet>)> {
    let (u, v) = endpoints(common, g)?;
    let cycles = match &common.cycles {
        Some(_) => Some(load_cycles(common, g)?),
        None => None,
    };
    let pg = build_path_graph_limited(g, u, v, cycles.as_ref(), common.max_paths)?;
    Ok((pg, cycles))
}

fn cmd_pathgraph(common: &Common) -> Result<ExitCode> {
    let g = load_graph(common)?;
    let (pg, cycles) = build_for(common, &g)?;
    if common.dot {
        let text = dot::export_dot(
            &g,
            &pg,
            dot::DotOptions {
                show_excluded: cycles.is_some(),
            },
        );
        match &common.out {
            Some(_) => write_artifact(common, &text)?,
            None => print!("{text}"),
        }
        return Ok(ExitCode::SUCCESS);
    }
    let comps = pg.components();
    println!(
        "{} paths, {} exchange edges, {} component{}{}",
        pg.path_count(),
        pg.edge_count(),
        comps.len(),
        if comps.len() == 1 { "" } else { "s" },
        if cycles.is_some() {
            " (restricted)"
        } else {
            ""
        }
    );
    for e in pg.edges() {
        println!(
            "  {}  ~  {}   via {}",
            path_display(&g, &pg.paths()[e.a]),
            path_display(&g, &pg.paths()[e.b]),
            cycle_display(&g, &e.exchange)
        );
    }
    write_json(
        common,
        &serde_json::json!({
            "paths": vertices_json(pg.paths()),
            "edges": pg.edges().iter().map(|e| serde_json::json!([e.a, e.b])).collect::<Vec<_>>(),
            "components": comps,
            "restricted": cycles.is_some(),
        }),
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_components(common: &Common) -> Result<ExitCode> {
    let g = load_graph(common)?;
    let (pg, cycles) = build_for(common, &g)?;
    let comps = pg.components();
    println!(
        "{} component{}{}",
        comps.len(),
        if comps.len() == 1 { "" } else { "s" },
        if cycles.is_some() {
            " (restricted)"
        } else {
            ""
        }
    );
    for (i, comp) in comps.iter().enumerate() {
        println!("component {i} ({} paths):", comp.len());
        for &p in comp {
            println!("  {}", path_display(&g, &pg.paths()[p]));
        }
    }
    write_json(
        common,
        &serde_json::json!({
            "components": comps,
            "paths": vertices_json(pg.paths()),
        }),
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_diameter(common: &Common) -> Result<ExitCode> {
    let g = load_graph(common)?;
    let (u, v) = endpoints(common, &g)?;
    let pg = build_path_graph_limited(&g, u, v, None, common.max_paths)?;
    let dist = g
        .distance(u, v)
        .ok_or_else(|| anyhow!("endpoints are not connected"))?;
    match pg.diameter() {
        Some(d) => {
            println!(
                "diameter {d}, endpoint distance {dist}, bound {} ({})",
                2 * dist,
                if d <= 2 * dist { "within" } else { "EXCEEDED" }
            );
            write_json(
                common,
                &serde_json::json!({ "diameter": d, "endpoint_distance": dist, "bound": 2 * dist }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        None => bail!("path graph is disconnected; no finite diameter"),
    }
}

fn cmd_route(common: &Common, s_spec: &str, t_spec: &str) -> Result<ExitCode> {
    let g = load_graph(common)?;
    let s = resolve_path(&g, s_spec)?;
    let t = resolve_path(&g, t_spec)?;
    if s.first() != t.first() || s.last() != t.last() {
        bail!("the two paths must share their endpoints");
    }
    let (u, v) = (s.first(), s.last());
    let dist = g
        .distance(u, v)
        .ok_or_else(|| anyhow!("endpoints are not connected"))?;
    let walk = bounded_route(&g, u, v, &s, &t)?;
    println!("{} steps (bound {}):", walk.len() - 1, 2 * dist);
    for (i, p) in walk.iter().enumerate() {
        if i == 0 {
            println!("  {}", path_display(&g, p));
        } else {
            let via = exchange_cycle(&g, &walk[i - 1], p)
                .map(|cy| cycle_display(&g, &cy))
                .unwrap_or_else(|| "?".to_string());
            println!("  {}   via {}", path_display(&g, p), via);
        }
    }
    write_json(
        common,
        &serde_json::json!({
            "walk": vertices_json(&walk),
            "steps": walk.len() - 1,
            "bound": 2 * dist,
        }),
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_span_check(common: &Common) -> Result<ExitCode> {
    let g = load_graph(common)?;
    let c = load_cycles(common, &g)?;
    let span = spans_cycle_space(&c, &g)?;
    println!(
        "rank {} of dimension {}: {}",
        span.rank,
        span.dimension,
        if span.spans { "spans" } else { "does not span" }
    );
    write_json(
        common,
        &serde_json::json!({ "rank": span.rank, "dimension": span.dimension, "spans": span.spans }),
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_cycles(common: &Common, what: &CyclesWhat) -> Result<ExitCode> {
    let g = load_graph(common)?;
    let set = match what {
        CyclesWhat::All => enumerate_all_cycles(&g)?,
        CyclesWhat::Edge { edge } => cycles_through_edge(&g, resolve_edge(&g, edge)?)?,
        CyclesWhat::Vertex { vertex } => cycles_through_vertex(&g, resolve_vertex(&g, vertex)?)?,
        CyclesWhat::Faces => {
            let emb = load_embedding(common, &g)?;
            internal_faces(&g, &emb)?
        }
    };
    println!("{} cycles", set.len());
    for c in set.iter() {
        println!("  {}", cycle_display(&g, c));
    }
    write_json(
        common,
        &serde_json::to_value(CycleSetJson::from_cycle_set(&set))?,
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_delta_star(common: &Common, sigma_spec: &str) -> Result<ExitCode> {
    let g = load_graph(common)?;
    let c = load_cycles(common, &g)?;
    let sigma = resolve_cycle(&g, sigma_spec)?;
    let outcome = has_property_delta_star(&g, &sigma, &c)?;
    match &outcome {
        DeltaStarOutcome::Holds(witnesses) => {
            println!(
                "{} has the witness property ({} unicycles)",
                cycle_display(&g, &sigma),
                witnesses.len()
            );
            for w in witnesses {
                println!(
                    "  unicycle {{{}}}: add {} giving {} and {}",
                    w.unicycle
                        .edges()
                        .iter()
                        .map(|e| edge_display(&g, e))
                        .collect::<Vec<_>>()
                        .join(", "),
                    edge_display(&g, w.extra_edge),
                    cycle_display(&g, &w.alpha),
                    cycle_display(&g, &w.beta)
                );
            }
            let json_witnesses: Vec<serde_json::Value> = witnesses
                .iter()
                .map(|w| {
                    serde_json::json!({
                        "unicycle_edges": w.unicycle.edges().iter().collect::<Vec<_>>(),
                        "extra_edge": w.extra_edge,
                        "alpha_edges": w.alpha.edge_set().iter().collect::<Vec<_>>(),
                        "beta_edges": w.beta.edge_set().iter().collect::<Vec<_>>(),
                        "connector": w.connector.vertices(),
                    })
                })
                .collect();
            write_json(
                common,
                &serde_json::json!({
                    "sigma": sigma.vertices(),
                    "holds": true,
                    "witnesses": json_witnesses,
                }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        DeltaStarOutcome::Fails { unicycle } => {
            println!(
                "{} lacks the witness property; obstructing unicycle {{{}}}",
                cycle_display(&g, &sigma),
                unicycle
                    .edges()
                    .iter()
                    .map(|e| edge_display(&g, e))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            write_json(
                common,
                &serde_json::json!({
                    "sigma": sigma.vertices(),
                    "holds": false,
                    "obstructing_unicycle_edges": unicycle.edges().iter().collect::<Vec<_>>(),
                }),
            )?;
            Ok(ExitCode::FAILURE)
        }
    }
}

fn cmd_closure(common: &Common) -> Result<ExitCode> {
    let g = load_graph(common)?;
    let c = load_cycles(common, &g)?;
    let closed = delta_star_closure(&c, &g)?;
    let all = enumerate_all_cycles(&g)?;
    println!(
        "closure grew {} -> {} cycles (graph has {}); {}",
        c.len(),
        closed.len(),
        all.len(),
        if closed.len() == all.len() {
            "dense"
        } else {
            "not dense"
        }
    );
    for cy in closed.iter() {
        println!("  {}", cycle_display(&g, cy));
    }
    write_json(
        common,
        &serde_json::json!({
            "before": c.len(),
            "after": closed.len(),
            "total_cycles": all.len(),
            "dense": closed.len() == all.len(),
            "closure": serde_json::to_value(CycleSetJson::from_cycle_set(&closed))?,
        }),
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_dense(common: &Common) -> Result<ExitCode> {
    let g = load_graph(common)?;
    let c = load_cycles(common, &g)?;
    let dense = is_delta_star_dense(&c, &g)?;
    println!("{}", if dense { "dense" } else { "not dense" });
    write_json(common, &serde_json::json!({ "dense": dense }))?;
    Ok(if dense {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_interpolate(common: &Common, s_spec: &str, t_spec: &str) -> Result<ExitCode> {
    let g = load_graph(common)?;
    let c = load_cycles(common, &g)?;
    let s = resolve_path(&g, s_spec)?;
    let t = resolve_path(&g, t_spec)?;
    let q = interpolate(&g, &s, &t, &c)?;
    if q == t {
        println!(
            "exchange already allowed: step directly to {}",
            path_display(&g, &t)
        );
    } else {
        println!("middle path {}", path_display(&g, &q));
    }
    write_json(common, &serde_json::json!({ "middle": q.vertices() }))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(common: &Common, which: &[String], mut cfg: suite::SuiteConfig) -> Result<ExitCode> {
    for bound in [cfg.max_n, cfg.tightness_max_n] {
        if !(3..=8).contains(&bound) {
            bail!("corpus bounds must be between 3 and 8");
        }
    }
    if !which.is_empty() {
        let valid = suite::check_ids();
        for id in which {
            if !valid.contains(&id.as_str()) {
                bail!("unknown check {id:?}; valid ids: {}", valid.join(", "));
            }
        }
        cfg.which = Some(which.iter().cloned().collect::<BTreeSet<_>>());
    }
    let report = suite::run_theorem_suite(&cfg);
    for r in &report.reports {
        let mark = match r.verdict {
            pathspace_cli::report::Verdict::Pass => "pass",
            pathspace_cli::report::Verdict::Fail => "FAIL",
            pathspace_cli::report::Verdict::Witness => "witness",
        };
        println!(
            "{mark:<8} {:<28} {:>7} ms  {}",
            r.check, r.duration_ms, r.title
        );
        if r.verdict == pathspace_cli::report::Verdict::Fail {
            if let Some(detail) = r.evidence.as_ref().and_then(|e| e.get("detail")) {
                println!("         {detail}");
            }
        }
    }
    println!(
        "{} of {} checks passed",
        report.reports.iter().filter(|r| r.passed()).count(),
        report.reports.len()
    );
    write_artifact(common, &(report.to_json() + "\n"))?;
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_search_tightness(common: &Common, max_n: usize) -> Result<ExitCode> {
    if !(3..=8).contains(&max_n) {
        bail!("the search is sized for 3..=8 vertices");
    }
    let report = suite::search_tightness_witness(max_n);
    println!(
        "best diameter {} against bound {} (endpoint distance {})",
        report.metrics["best_diameter"],
        report.metrics["best_bound"],
        report.metrics["best_distance"]
    );
    if let Some(evidence) = &report.evidence {
        println!("{}", serde_json::to_string_pretty(evidence)?);
    }
    write_json(common, &serde_json::to_value(&report)?)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_k4_demo(common: &Common) -> Result<ExitCode> {
    let (g, u, v, c) = fixtures::k4_fixture();
    let pg = build_path_graph_limited(&g, u, v, Some(&c), common.max_paths)?;
    if common.dot {
        let text = dot::export_dot(
            &g,
            &pg,
            dot::DotOptions {
                show_excluded: true,
            },
        );
        match &common.out {
            Some(_) => write_artifact(common, &text)?,
            None => print!("{text}"),
        }
        return Ok(ExitCode::SUCCESS);
    }
    println!("complete graph on u, x, y, v; all six edges present");
    let paths = enumerate_uv_paths_limited(&g, u, v, common.max_paths)?;
    println!("the {} u-v paths:", paths.len());
    for p in &paths {
        println!("  {}", path_display(&g, p));
    }
    let span = spans_cycle_space(&c, &g)?;
    println!(
        "allowed exchanges {}: rank {} of dimension {}, so the set spans",
        c.iter()
            .map(|cy| cycle_display(&g, cy))
            .collect::<Vec<_>>()
            .join(", "),
        span.rank,
        span.dimension
    );
    let comps = pg.components();
    println!("restricted path graph components:");
    for comp in &comps {
        println!(
            "  {{{}}}",
            comp.iter()
                .map(|&p| path_display(&g, &pg.paths()[p]))
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    let s = Path::new(&g, vec![0, 1, 2, 3])?;
    let t = Path::new(&g, vec![0, 2, 1, 3])?;
    println!(
        "so a spanning cycle set does not force connectivity: {} stays isolated",
        path_display(&g, &t)
    );
    println!(
        "note {} and {} differ by the spanning 4-cycle yet are not adjacent: \
         the detours cross instead of replacing one subpath",
        path_display(&g, &s),
        path_display(&g, &t)
    );
    assert!(are_adjacent(&s, &t).is_none());
    write_json(
        common,
        &serde_json::json!({
            "graph": GraphJson::from_graph(&g),
            "u": u,
            "v": v,
            "cycles": CycleSetJson::from_cycle_set(&c),
            "paths": vertices_json(&paths),
            "components": comps,
        }),
    )?;
    Ok(ExitCode::SUCCESS)
}
