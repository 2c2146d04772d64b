//! JSON wire formats: graphs as vertex counts with edge lists, cycle sets
//! as lists of edge-index lists, embeddings as rotation systems with an
//! optional outer dart.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycle::{as_cycle, NotCycle};
use crate::cyclespace::{CycleSet, CycleSpaceError};
use crate::embedding::{Dart, EmbeddingError, PlaneEmbedding};
use crate::graph::{EdgeSet, Graph, GraphError};

#[derive(Debug, Error)]
pub enum WireError {
    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("labels key {0:?} is not a vertex index")]
    BadLabelKey(String),
    #[error("cycle {index} lists an edge twice")]
    RepeatedEdge { index: usize },
    #[error("cycle {index} is not a cycle: {reason}")]
    BadCycle { index: usize, reason: NotCycle },
    #[error(transparent)]
    CycleSet(#[from] CycleSpaceError),
    #[error("outer face direction {0:?}, expected \"fwd\" or \"rev\"")]
    BadDirection(String),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<String, String>,
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph, WireError> {
        let mut labels = Vec::new();
        for (key, name) in &self.labels {
            let v: usize = key
                .parse()
                .map_err(|_| WireError::BadLabelKey(key.clone()))?;
            labels.push((v, name.clone()));
        }
        Ok(Graph::new(self.n, &self.edges)?.with_labels(labels)?)
    }

    pub fn from_graph(g: &Graph) -> GraphJson {
        let labels = (0..g.vertex_count())
            .filter_map(|v| g.label(v).map(|s| (v.to_string(), s.to_string())))
            .collect();
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().to_vec(),
            labels,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CycleSetJson {
    pub cycles: Vec<Vec<usize>>,
}

impl CycleSetJson {
    pub fn to_cycle_set(&self, g: &Graph) -> Result<CycleSet, WireError> {
        let mut cycles = Vec::new();
        for (index, list) in self.cycles.iter().enumerate() {
            let es = EdgeSet::from_edges(g.edge_count(), list)?;
            if es.count() != list.len() {
                return Err(WireError::RepeatedEdge { index });
            }
            let cycle = as_cycle(g, &es).map_err(|reason| WireError::BadCycle { index, reason })?;
            cycles.push(cycle);
        }
        Ok(CycleSet::new(cycles)?)
    }

    pub fn from_cycle_set(c: &CycleSet) -> CycleSetJson {
        CycleSetJson {
            cycles: c.iter().map(|cy| cy.edge_set().iter().collect()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub rotation: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer: Option<(usize, String)>,
}

impl EmbeddingJson {
    pub fn to_embedding(&self, g: &Graph) -> Result<PlaneEmbedding, WireError> {
        let outer = match &self.outer {
            None => None,
            Some((edge, dir)) => {
                let forward = match dir.as_str() {
                    "fwd" => true,
                    "rev" => false,
                    other => return Err(WireError::BadDirection(other.to_string())),
                };
                Some(Dart::new(*edge, forward))
            }
        };
        Ok(PlaneEmbedding::new(g, self.rotation.clone(), outer)?)
    }

    pub fn from_embedding(emb: &PlaneEmbedding) -> EmbeddingJson {
        let outer = emb.outer_dart();
        EmbeddingJson {
            rotation: emb.rotation().to_vec(),
            outer: Some((
                outer.edge,
                if outer.forward { "fwd" } else { "rev" }.to_string(),
            )),
        }
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, WireError> {
    serde_json::from_str::<GraphJson>(text)?.to_graph()
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string_pretty(&GraphJson::from_graph(g)).expect("graph serializes")
}

pub fn parse_cycle_set(text: &str, g: &Graph) -> Result<CycleSet, WireError> {
    serde_json::from_str::<CycleSetJson>(text)?.to_cycle_set(g)
}

pub fn cycle_set_to_json(c: &CycleSet) -> String {
    serde_json::to_string_pretty(&CycleSetJson::from_cycle_set(c)).expect("cycle set serializes")
}

pub fn parse_embedding(text: &str, g: &Graph) -> Result<PlaneEmbedding, WireError> {
    serde_json::from_str::<EmbeddingJson>(text)?.to_embedding(g)
}

pub fn embedding_to_json(emb: &PlaneEmbedding) -> String {
    serde_json::to_string_pretty(&EmbeddingJson::from_embedding(emb)).expect("embedding serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::k4;

    #[test]
    fn graph_round_trip_with_labels() {
        let text = r#"{"n": 4,
            "edges": [[0,3],[0,1],[0,2],[1,3],[2,3],[1,2]],
            "labels": {"0": "u", "3": "v"}}"#;
        let g = parse_graph(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.vertex_name(0), "u");
        assert_eq!(g.vertex_name(1), "1");
        let again = parse_graph(&graph_to_json(&g)).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn graph_rejects_bad_label_key() {
        let text = r#"{"n": 3, "edges": [[0,1],[1,2],[2,0]], "labels": {"u": "0"}}"#;
        assert!(matches!(
            parse_graph(text).unwrap_err(),
            WireError::BadLabelKey(_)
        ));
    }

    #[test]
    fn cycle_set_round_trip() {
        let g = k4();
        let text = r#"{"cycles": [[0,1,3],[0,2,4]]}"#;
        let c = parse_cycle_set(text, &g).unwrap();
        assert_eq!(c.len(), 2);
        let again = parse_cycle_set(&cycle_set_to_json(&c), &g).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn cycle_set_rejects_non_cycles() {
        let g = k4();
        assert!(matches!(
            parse_cycle_set(r#"{"cycles": [[0,1]]}"#, &g).unwrap_err(),
            WireError::BadCycle { index: 0, .. }
        ));
        assert!(matches!(
            parse_cycle_set(r#"{"cycles": [[0,0,1,3]]}"#, &g).unwrap_err(),
            WireError::RepeatedEdge { index: 0 }
        ));
        assert!(matches!(
            parse_cycle_set(r#"{"cycles": [[0,1,9]]}"#, &g).unwrap_err(),
            WireError::Graph(GraphError::UnknownEdge(9, 6))
        ));
    }

    #[test]
    fn embedding_round_trip_and_direction_check() {
        let g = k4();
        let text = r#"{"rotation": [[1,2,0],[3,5,1],[2,5,4],[0,4,3]],
                       "outer": [5, "fwd"]}"#;
        let emb = parse_embedding(text, &g).unwrap();
        assert_eq!(emb.outer_dart(), Dart::new(5, true));
        let again = parse_embedding(&embedding_to_json(&emb), &g).unwrap();
        assert_eq!(emb, again);
        let bad = r#"{"rotation": [[1,2,0],[3,5,1],[2,5,4],[0,4,3]],
                      "outer": [5, "up"]}"#;
        assert!(matches!(
            parse_embedding(bad, &g).unwrap_err(),
            WireError::BadDirection(_)
        ));
    }
}
