//! Clutter files and generator export.
//!
//! The file format is `{"vertices": [...], "edges": [[...], ...]}` with string
//! labels. Reading accepts any order; writing is canonical.

use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClutterFile {
    vertices: Vec<String>,
    edges: Vec<Vec<String>>,
}

/// Parses a clutter file. Edges must already form an antichain.
pub fn read_clutter(text: &str) -> Result<Clutter> {
    let file: ClutterFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Clutter::new(file.vertices, file.edges, false)
}

fn file_of(c: &Clutter) -> ClutterFile {
    ClutterFile {
        vertices: c.labels().to_vec(),
        edges: c.edges().iter().map(|e| c.labels_of(e)).collect(),
    }
}

/// The JSON value of the canonical file.
pub fn clutter_json(c: &Clutter) -> serde_json::Value {
    serde_json::to_value(file_of(c)).expect("string lists serialize")
}

/// Canonical compact JSON, `vertices` before `edges`, followed by a newline.
pub fn write_clutter(c: &Clutter) -> String {
    format!("{}\n", serde_json::to_string(&file_of(c)).expect("string lists serialize"))
}

/// One `x{i}*y{j} - x{j}*y{i}` line per generator, in label order.
pub fn export_generators(c: &Clutter) -> String {
    c.binomial_generators()
        .iter()
        .map(|b| format!("{}\n", b.render(c.labels())))
        .collect()
}
