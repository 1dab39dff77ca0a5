//! Reading graph and representation files from disk.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use kgraph::repr::AtomicRepSpec;
use kgraph::{Degree, KGraph, Skeleton, Violation};

use crate::diag::Diagnostics;
use crate::graph_file::parse_graph;
use crate::rep_file::parse_rep;

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}", located(path, diagnostics))]
    Syntax { path: PathBuf, diagnostics: Diagnostics },
    #[error("{}: not a valid k-graph:\n{}", path.display(), messages.join("\n"))]
    Invalid { path: PathBuf, messages: Vec<String> },
}

impl LoadError {
    pub fn diagnostics(&self) -> Option<&Diagnostics> {
        match self {
            LoadError::Syntax { diagnostics, .. } => Some(diagnostics),
            _ => None,
        }
    }
}

fn located(path: &Path, d: &Diagnostics) -> String {
    d.iter().map(|d| format!("{}:{d}", path.display())).collect::<Vec<_>>().join("\n")
}

fn read(path: &Path) -> Result<String, LoadError> {
    fs::read_to_string(path).map_err(|source| LoadError::Io { path: path.to_path_buf(), source })
}

/// Parse a graph file without validating it.
pub fn load_skeleton(path: &Path) -> Result<Skeleton, LoadError> {
    parse_graph(&read(path)?).map_err(|diagnostics| LoadError::Syntax { path: path.to_path_buf(), diagnostics })
}

/// Parse and validate a graph file. Validation failures are returned as
/// the violations, described with the file's names.
pub fn load_graph(path: &Path) -> Result<Result<KGraph, (Skeleton, Vec<Violation>)>, LoadError> {
    let skel = load_skeleton(path)?;
    Ok(KGraph::validate(skel.clone()).map_err(|v| (skel, v)))
}

fn validated(path: &Path) -> Result<KGraph, LoadError> {
    load_graph(path)?.map_err(|(skel, vs)| LoadError::Invalid {
        path: path.to_path_buf(),
        messages: vs.iter().map(|v| v.describe(&skel)).collect(),
    })
}

/// A representation file resolved against its graph.
#[derive(Debug, Clone)]
pub struct LoadedRep {
    pub graph_path: PathBuf,
    pub spec: AtomicRepSpec,
}

/// Read a representation file and the graph it names (relative to the
/// representation file), then build the spec.
pub fn load_rep(path: &Path, window: Option<&Degree>) -> Result<LoadedRep, LoadError> {
    let syntax = |diagnostics| LoadError::Syntax { path: path.to_path_buf(), diagnostics };
    let file = parse_rep(&read(path)?).map_err(syntax)?;
    let name = &file.graph.as_ref().expect("parser requires a graph").value;
    let graph_path = path.parent().unwrap_or(Path::new(".")).join(name);
    let g = Arc::new(validated(&graph_path)?);
    if let Some(w) = window.filter(|w| w.rank() != g.rank()) {
        return Err(syntax(Diagnostics(vec![crate::diag::Diagnostic::new(
            crate::diag::Pos { line: 1, col: 1 },
            format!("window {w} has rank {}, the graph has rank {}", w.rank(), g.rank()),
        )])));
    }
    let spec = file.build(&g, window).map_err(syntax)?;
    Ok(LoadedRep { graph_path, spec })
}
