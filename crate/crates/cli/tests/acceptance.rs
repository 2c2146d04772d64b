//! The shipping gate: one test per acceptance criterion. Each prints a
//! verdict line (visible with `cargo test --test acceptance -- --nocapture`)
//! and fails with the offending report serialized.

use std::time::Instant;

use pathspace_cli::report::{TheoremReport, Verdict};
use pathspace_cli::suite;

const SEED: u64 = 1729;

fn gate(n: usize, name: &str, reports: &[&TheoremReport]) {
    let ok = reports.iter().all(|r| r.passed());
    println!(
        "acceptance criterion {n} ({name}): {}",
        if ok { "PASS" } else { "FAIL" }
    );
    if let Some(r) = reports.iter().find(|r| !r.passed()) {
        panic!(
            "criterion {n} ({name}) failed in check {}:\n{}",
            r.check,
            serde_json::to_string_pretty(r).expect("reports serialize")
        );
    }
}

#[test]
fn criterion_1_k4_reference_fixture() {
    let start = Instant::now();
    let report = suite::check_k4_fixture();
    let elapsed = start.elapsed();
    gate(1, "K4 reference fixture", &[&report]);
    assert_eq!(report.metrics["path_count"], 5);
    assert_eq!(report.metrics["rank"], 3);
    assert_eq!(report.metrics["component_sizes"], serde_json::json!([4, 1]));
    assert!(elapsed.as_secs_f64() < 1.0, "fixture took {elapsed:?}");
}

#[test]
fn criterion_2_path_graph_connectivity() {
    let start = Instant::now();
    let report = suite::check_connectivity(6, SEED, 1000);
    let elapsed = start.elapsed();
    gate(2, "path graph connectivity", &[&report]);
    assert_eq!(report.metrics["merge_walks_sampled"], 1000);
    assert_eq!(report.metrics["skipped_over_path_cap"], 0);
    assert!(elapsed.as_secs() < 600, "corpus scan took {elapsed:?}");
}

#[test]
fn criterion_3_diameter_bound_and_tightness() {
    let bound = suite::check_diameter_bound(6, SEED, 1000);
    let tight = suite::search_tightness_witness(7);
    gate(3, "diameter bound and tightness", &[&bound, &tight]);
    assert_eq!(bound.metrics["routes_sampled"], 1000);
    assert_eq!(tight.verdict, Verdict::Witness);
    let d = tight.metrics["best_diameter"].as_u64().unwrap();
    let b = tight.metrics["best_bound"].as_u64().unwrap();
    assert!(d <= b, "search found diameter {d} over bound {b}");
}

#[test]
fn criterion_4_span_necessity() {
    let report = suite::check_span_necessity(SEED, 500);
    gate(4, "span necessity", &[&report]);
    assert_eq!(report.metrics["instances"], 500);
    assert!(report.metrics["connected_pairs_seen"].as_u64().unwrap() > 0);
}

#[test]
fn criterion_5_density_sufficiency() {
    let report = suite::check_density_sufficiency(SEED, 200);
    gate(5, "density sufficiency", &[&report]);
    assert_eq!(report.metrics["realized"], 200);
}

#[test]
fn criterion_6_canonical_dense_families() {
    let faces = suite::check_face_density();
    let edges = suite::check_edge_cycle_density();
    let vertices = suite::check_vertex_cycle_connectivity();
    gate(6, "canonical dense families", &[&faces, &edges, &vertices]);
    assert!(faces.metrics["fixtures"].as_u64().unwrap() >= 10);
    assert!(edges.metrics["edge_sets"].as_u64().unwrap() > 0);
    assert!(
        vertices.metrics["restricted_graphs_checked"]
            .as_u64()
            .unwrap()
            > 0
    );
}

#[test]
fn criterion_7_interpolation() {
    let report = suite::check_interpolation(SEED, 200);
    gate(7, "interpolation", &[&report]);
    assert_eq!(report.metrics["instances"], 200);
    assert!(
        report.metrics["qualifying_exchanges"].as_u64().unwrap() > 0,
        "the sample must contain exchanges with the witness property"
    );
}

#[test]
fn criterion_8_closure_laws() {
    let report = suite::check_closure_laws(SEED, 100, 10);
    gate(8, "closure laws", &[&report]);
    assert_eq!(report.metrics["shuffled_orders_checked"], 100 * 10);
}

#[test]
fn criterion_9_brute_force_oracle_agreement() {
    let report = suite::check_oracles();
    gate(9, "brute-force oracle agreement", &[&report]);
    assert_eq!(report.metrics["crossing_pair_checked"], true);
    assert!(report.metrics["adjacency_pairs_compared"].as_u64().unwrap() > 0);
    assert!(report.metrics["unicycle_sets_compared"].as_u64().unwrap() > 0);
}
