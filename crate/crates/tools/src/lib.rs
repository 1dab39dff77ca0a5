//! File formats, reports and the command-line tool for the `kgraph` crate.

pub mod cli;
pub mod diag;
pub mod graph_file;
pub mod load;
pub mod rep_file;
pub mod report;
pub mod sample;

pub use diag::{Diagnostic, Diagnostics, Pos};
pub use graph_file::{emit_graph, parse_graph};
pub use load::{load_graph, load_rep, load_skeleton, LoadError, LoadedRep};
pub use rep_file::{parse_rep, RepFile};
pub use report::{Record, Report, Status};
