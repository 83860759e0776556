//! Hypergraph interchange document.
//!
//! ```json
//! { "n": 3, "edges": [[0, 1, 2]], "labels": ["a", "b", "c"] }
//! ```
//!
//! Edges are written sorted ascending, in construction order. `labels`,
//! `multi_edges` and `manifest` are optional; readers ignore the manifest.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hypergraph::{Hypergraph, Options};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct HypergraphDocument {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub multi_edges: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub manifest: Option<serde_json::Value>,
}

impl HypergraphDocument {
    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        Self {
            n: h.n(),
            edges: h.edges().to_vec(),
            labels: h.labels().map(<[String]>::to_vec),
            multi_edges: h.allows_multi_edges(),
            manifest: None,
        }
    }

    pub fn with_manifest(mut self, manifest: serde_json::Value) -> Self {
        self.manifest = Some(manifest);
        self
    }

    pub fn into_hypergraph(self) -> Result<Hypergraph> {
        let h = Hypergraph::with_options(
            self.n,
            self.edges,
            Options {
                allow_multi_edges: self.multi_edges,
            },
        )?;
        match self.labels {
            Some(l) => h.with_labels(l),
            None => Ok(h),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

pub fn read_hypergraph(text: &str) -> Result<Hypergraph> {
    let doc: HypergraphDocument = serde_json::from_str(text)?;
    doc.into_hypergraph()
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    HypergraphDocument::from_hypergraph(h).to_json()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn round_trip_with_labels() {
        let h = Hypergraph::new(4, vec![vec![3, 1, 0], vec![0, 2, 1]])
            .unwrap()
            .with_labels(vec!["a".into(), "b".into(), "c".into(), "d".into()])
            .unwrap();
        let text = write_hypergraph(&h);
        assert!(text.contains("[\n      0,\n      1,\n      3\n    ]"));
        assert_eq!(read_hypergraph(&text).unwrap(), h);
    }

    #[test]
    fn manifest_is_ignored_on_read() {
        let text = r#"{"n":3,"edges":[[0,1,2]],"manifest":{"command":"gen"}}"#;
        let h = read_hypergraph(text).unwrap();
        assert_eq!(h.m(), 1);
        assert!(h.labels().is_none());
    }

    #[test]
    fn validation_runs_on_read() {
        let text = r#"{"n":3,"edges":[[0,1]]}"#;
        assert_eq!(read_hypergraph(text), Err(Error::DanglingVertex(2)));
        assert!(matches!(read_hypergraph("{"), Err(Error::Format(_))));
    }
}
