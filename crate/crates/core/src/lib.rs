//! Finite higher-rank graphs (k-graphs) and their purely atomic representations.
//!
//! A k-graph is given here by its colored-graph skeleton: vertices, edges
//! carrying one of `k` colors, and a pairing of bicolored two-edge paths
//! (the commuting squares, or factorization rules). [`KGraph::validate`]
//! checks the skeleton and produces the validated graph on which the
//! morphism algebra lives: color-sorted normal forms, composition, unique
//! factorization, `Λ^n` enumeration and minimal common extensions.
//!
//! [`path`] implements the infinite path space: eventually periodic paths
//! with exact equality and orbit decisions, and lazily generated paths that
//! carry an explicit depth bound. [`repr`] builds permutative
//! representations supported on finitely many orbits and verifies the
//! Cuntz–Krieger relations, the projection valued measure identities and
//! the equivalence, irreducibility and monicity criteria on finite windows,
//! all in exact arithmetic.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]
// degrees are ordered coordinatewise, so `!(a <= b)` is not `a > b`
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod degree;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod linalg;
pub mod morphism;
pub mod path;
pub mod repr;
pub mod rewrite;
pub mod skeleton;

pub use degree::Degree;
pub use error::{GraphError, PathError, ReprError};
pub use graph::{GraphProperties, KGraph, Violation};
pub use morphism::Morphism;
pub use path::{EpPath, InfinitePath, LazyPath, PathEquality, Periodicity};
pub use skeleton::{Color, Edge, EdgeId, Skeleton, SkeletonBuilder, Square, VertexId};
