use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// Embedded in every output document. Holds nothing that varies between
/// identical runs.
#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub inputs: Vec<String>,
    pub output: Option<String>,
    pub tolerance: Option<f64>,
    pub seed: Option<u64>,
    pub tool_version: String,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            inputs: Vec::new(),
            output: None,
            tolerance: None,
            seed: None,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn input(mut self, path: impl Into<String>) -> Self {
        self.inputs.push(path.into());
        self
    }

    pub fn output(mut self, path: Option<&std::path::Path>) -> Self {
        self.output = path.map(|p| p.display().to_string());
        self
    }

    pub fn tolerance(mut self, tol: f64) -> Self {
        self.tolerance = Some(tol);
        self
    }

    pub fn seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("manifest serializes")
    }

    /// One-line form for the comment header of text and csv output.
    pub fn comment(&self) -> String {
        format!("# manifest: {}\n", serde_json::to_string(self).expect("manifest serializes"))
    }
}

/// `{"manifest": .., ...body}`; keys come out sorted.
pub fn embed(manifest: &RunManifest, body: impl Serialize) -> Value {
    let mut out = serde_json::Map::new();
    out.insert("manifest".into(), manifest.to_value());
    match serde_json::to_value(body).expect("document serializes") {
        Value::Object(fields) => out.extend(fields),
        other => {
            out.insert("result".into(), other);
        }
    }
    Value::Object(out)
}
