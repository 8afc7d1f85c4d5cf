//! Loading graphs and rotations from files or `corpus:<name>` references.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use cyclespace::formats::{parse_edge_list, parse_graph6, parse_rotation};
use cyclespace::{Graph, RotationSystem};

use crate::corpus;

/// A loaded graph plus the corpus rotation that came with it, if any.
pub struct LoadedGraph {
    pub graph: Graph,
    pub corpus_rotation: Option<RotationSystem>,
    pub source: String,
}

/// Accepts a file path (edge list, or graph6 when the extension is `.g6`
/// or `.graph6`) or a `corpus:<name>` reference.
pub fn load_graph(spec: &str) -> Result<LoadedGraph> {
    if let Some(name) = spec.strip_prefix("corpus:") {
        let entry = corpus::get(name)
            .ok_or_else(|| anyhow!("unknown corpus graph {name:?}; try `corpus list`"))?;
        let graph = entry.graph()?;
        let corpus_rotation = entry.rotation(&graph)?;
        return Ok(LoadedGraph {
            graph,
            corpus_rotation,
            source: spec.to_string(),
        });
    }
    let path = Path::new(spec);
    let text = fs::read_to_string(path).with_context(|| format!("reading {spec}"))?;
    let is_graph6 = matches!(
        path.extension().and_then(|e| e.to_str()),
        Some("g6") | Some("graph6")
    );
    let graph = if is_graph6 {
        parse_graph6(&text).map_err(|e| anyhow!("{spec}: {e}"))?
    } else {
        parse_edge_list(&text).map_err(|e| anyhow!("{spec}: {e}"))?
    };
    Ok(LoadedGraph {
        graph,
        corpus_rotation: None,
        source: spec.to_string(),
    })
}

pub fn load_rotation(spec: &str, g: &Graph) -> Result<RotationSystem> {
    let text = fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
    parse_rotation(&text, g).map_err(|e| anyhow!("{spec}: {e}"))
}
