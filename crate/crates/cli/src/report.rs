//! Versioned JSON reports for the verification suite. Everything except
//! the duration fields is a pure function of the inputs and the seed, so
//! two runs with the same arguments serialize identically modulo timing.

use pathspace_core::{io, CycleSet, Graph};
use serde::Serialize;
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Clone, Copy, PartialEq, Eq, Debug)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// The claimed property held on every instance checked.
    Pass,
    /// A counterexample was found; it is attached to the report.
    Fail,
    /// Informational: the check searched for something and reports the
    /// best find rather than enforcing a property.
    Witness,
}

/// What a report was computed over: a whole corpus or a single pinned
/// instance.
#[derive(Serialize, Clone, Debug, Default)]
pub struct InstanceInfo {
    pub scope: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph_hash: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycles_hash: Option<String>,
}

impl InstanceInfo {
    pub fn corpus(scope: impl Into<String>) -> InstanceInfo {
        InstanceInfo {
            scope: scope.into(),
            ..InstanceInfo::default()
        }
    }

    pub fn pinned(
        scope: impl Into<String>,
        g: &Graph,
        uv: Option<(usize, usize)>,
        c: Option<&CycleSet>,
    ) -> InstanceInfo {
        InstanceInfo {
            scope: scope.into(),
            graph_hash: Some(graph_hash(g)),
            u: uv.map(|p| p.0),
            v: uv.map(|p| p.1),
            cycles_hash: c.map(cycle_set_hash),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct TheoremReport {
    pub check: String,
    pub title: String,
    pub instance: InstanceInfo,
    pub verdict: Verdict,
    pub metrics: BTreeMap<String, serde_json::Value>,
    /// Fail reports carry the offending instance; witness reports carry
    /// the best find.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<serde_json::Value>,
    pub duration_ms: u64,
}

impl TheoremReport {
    pub fn new(
        check: &str,
        title: &str,
        instance: InstanceInfo,
        verdict: Verdict,
    ) -> TheoremReport {
        TheoremReport {
            check: check.to_string(),
            title: title.to_string(),
            instance,
            verdict,
            metrics: BTreeMap::new(),
            evidence: None,
            duration_ms: 0,
        }
    }

    pub fn metric(mut self, key: &str, value: impl Into<serde_json::Value>) -> TheoremReport {
        self.metrics.insert(key.to_string(), value.into());
        self
    }

    pub fn evidence(mut self, value: serde_json::Value) -> TheoremReport {
        self.evidence = Some(value);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

#[derive(Serialize, Debug)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub seed: u64,
    pub max_n: usize,
    pub passed: bool,
    pub reports: Vec<TheoremReport>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// FNV-1a, the 64-bit variant.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Hash over vertex count and the ordered edge list.
pub fn graph_hash(g: &Graph) -> String {
    let mut bytes = vec![g.vertex_count() as u8];
    for &(a, b) in g.edges() {
        bytes.push(a as u8);
        bytes.push(b as u8);
    }
    format!("{:016x}", fnv1a(&bytes))
}

/// Hash over the edge masks of the cycles, in set order.
pub fn cycle_set_hash(c: &CycleSet) -> String {
    let mut bytes = Vec::new();
    for cy in c.iter() {
        bytes.extend_from_slice(&cy.edge_set().mask().to_le_bytes());
    }
    format!("{:016x}", fnv1a(&bytes))
}

/// Serialized instance for fail evidence: the graph, endpoints when
/// relevant, plus any offending paths or cycles.
pub fn instance_evidence(
    g: &Graph,
    uv: Option<(usize, usize)>,
    cycles: Option<&CycleSet>,
    paths: &[&[usize]],
    detail: &str,
) -> serde_json::Value {
    let mut obj = serde_json::json!({
        "graph": io::GraphJson::from_graph(g),
        "detail": detail,
    });
    let map = obj.as_object_mut().expect("literal is an object");
    if let Some((u, v)) = uv {
        map.insert("u".into(), u.into());
        map.insert("v".into(), v.into());
    }
    if let Some(c) = cycles {
        map.insert(
            "cycles".into(),
            serde_json::to_value(io::CycleSetJson::from_cycle_set(c)).expect("cycles serialize"),
        );
    }
    if !paths.is_empty() {
        map.insert(
            "paths".into(),
            serde_json::to_value(paths).expect("paths serialize"),
        );
    }
    obj
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::k4_fixture;

    #[test]
    fn hashes_are_stable() {
        let (g, _, _, c) = k4_fixture();
        assert_eq!(graph_hash(&g), graph_hash(&g));
        assert_eq!(cycle_set_hash(&c), cycle_set_hash(&c));
        assert_eq!(fnv1a(b""), 0xcbf29ce484222325);
    }

    #[test]
    fn fail_reports_serialize_their_evidence() {
        let (g, u, v, c) = k4_fixture();
        let report = TheoremReport::new(
            "demo",
            "demo check",
            InstanceInfo::pinned("one graph", &g, Some((u, v)), Some(&c)),
            Verdict::Fail,
        )
        .metric("instances", 1)
        .evidence(instance_evidence(
            &g,
            Some((u, v)),
            Some(&c),
            &[&[0, 2, 1, 3]],
            "demonstration only",
        ));
        let text = serde_json::to_string(&report).unwrap();
        assert!(text.contains("\"verdict\":\"fail\""));
        assert!(text.contains("\"paths\":[[0,2,1,3]]"));
        assert!(text.contains("\"graph_hash\""));
    }
}
