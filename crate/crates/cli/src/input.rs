//! Graph input files:
//! `{"vertices": [..], "edges": [{"id": .., "ends": [a, b]}, ..]}`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use ssc_core::Multigraph;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub id: String,
    pub ends: [String; 2],
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{origin}: schema error: {message}")]
    Schema { origin: String, message: String },
    #[error("{origin}: {source}")]
    Invalid {
        origin: String,
        source: ssc_core::Error,
    },
}

impl GraphFile {
    pub fn from_graph(g: &Multigraph) -> Self {
        Self {
            vertices: g.vertices().to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    id: e.id.clone(),
                    ends: [g.vertices()[e.ends[0]].clone(), g.vertices()[e.ends[1]].clone()],
                })
                .collect(),
        }
    }

    pub fn to_graph(&self) -> ssc_core::Result<Multigraph> {
        Multigraph::new(
            self.vertices.clone(),
            self.edges
                .iter()
                .map(|e| (e.id.clone(), (e.ends[0].clone(), e.ends[1].clone())))
                .collect(),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph files always serialize")
    }
}

/// Parses and validates graph JSON; `origin` names the source in errors.
pub fn parse_graph_str(text: &str, origin: &str) -> Result<Multigraph, InputError> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| InputError::Schema {
        origin: origin.to_owned(),
        message: e.to_string(),
    })?;
    file.to_graph().map_err(|source| InputError::Invalid {
        origin: origin.to_owned(),
        source,
    })
}

pub fn parse_graph_file(path: &Path) -> Result<Multigraph, InputError> {
    let text = fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_graph_str(&text, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schema_errors() {
        for bad in ["", "{}", r#"{"vertices": ["a"], "edges": [{"id": "x"}]}"#] {
            assert!(matches!(parse_graph_str(bad, "t"), Err(InputError::Schema { .. })), "{bad}");
        }
        let unknown = r#"{"vertices": ["a","b"], "edges": [], "extra": 1}"#;
        assert!(matches!(parse_graph_str(unknown, "t"), Err(InputError::Schema { .. })));
        let dup_key = r#"{"vertices": ["a","b"], "vertices": ["a"], "edges": []}"#;
        assert!(matches!(parse_graph_str(dup_key, "t"), Err(InputError::Schema { .. })));
    }

    #[test]
    fn duplicate_edge_id_is_named() {
        let text = r#"{"vertices": ["a","b"], "edges": [
            {"id": "x", "ends": ["a","b"]}, {"id": "x", "ends": ["a","b"]}]}"#;
        let err = parse_graph_str(text, "t").unwrap_err();
        assert!(err.to_string().contains("`x`"), "{err}");
    }

    #[test]
    fn line_numbers_in_diagnostics() {
        let text = "{\"vertices\": [\"a\"],\n \"edges\": [ {\"id\": 3, \"ends\": [\"a\",\"a\"]} ]}";
        let err = parse_graph_str(text, "t").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }
}
