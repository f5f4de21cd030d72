//! Link diagrams as JSON files, plus the `corpus:<name>` pseudo-paths.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use satskein_core::corpus;
use satskein_core::diagram::{DiagramError, LinkDiagram, PdCode};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LinkFileError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("bad link JSON in {path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("no corpus entry named {0:?}")]
    UnknownCorpus(String),
    #[error("invalid diagram in {path}: {source}")]
    Diagram { path: String, source: DiagramError },
}

/// On-disk form. Map keys are written as strings, as JSON requires.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkFile {
    pub name: String,
    pub components: usize,
    #[serde(default)]
    pub free_loops: BTreeMap<usize, u32>,
    pub crossings: Vec<[u32; 4]>,
    pub component_of_edge: BTreeMap<u32, usize>,
}

impl LinkFile {
    pub fn from_diagram(name: &str, d: &LinkDiagram) -> Self {
        let pd = d.to_pd();
        LinkFile {
            name: name.to_string(),
            components: pd.components,
            free_loops: pd.free_loops,
            crossings: pd.crossings,
            component_of_edge: pd.component_of_edge,
        }
    }

    pub fn to_pd(&self) -> PdCode {
        PdCode {
            components: self.components,
            crossings: self.crossings.clone(),
            component_of_edge: self.component_of_edge.clone(),
            free_loops: self.free_loops.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("link files always serialize")
    }

    pub fn parse(text: &str, path: &str) -> Result<Self, LinkFileError> {
        serde_json::from_str(text).map_err(|source| LinkFileError::Json { path: path.into(), source })
    }
}

/// Loads a link from a JSON file or a `corpus:<name>` pseudo-path.
pub fn load(path: &str) -> Result<(String, LinkDiagram), LinkFileError> {
    if let Some(name) = path.strip_prefix("corpus:") {
        let d = corpus::get(name).ok_or_else(|| LinkFileError::UnknownCorpus(name.into()))?;
        return Ok((name.to_string(), d));
    }
    let text = fs::read_to_string(Path::new(path)).map_err(|source| LinkFileError::Io { path: path.into(), source })?;
    let file = LinkFile::parse(&text, path)?;
    let d = LinkDiagram::from_pd(&file.to_pd()).map_err(|source| LinkFileError::Diagram { path: path.into(), source })?;
    Ok((file.name, d))
}
