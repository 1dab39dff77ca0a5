use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::degree::Degree;
use crate::skeleton::{EdgeId, VertexId};

/// A finite path `λ` in color-sorted normal form.
///
/// `edges` lists all color-1 edges first, then color-2 edges and so on,
/// read from the range (left) to the source (right). The empty list at a
/// vertex is the identity morphism there. Two morphisms of the same graph
/// are equal exactly when their normal forms are.
///
/// Values are only meaningful with respect to the [`crate::KGraph`] that
/// produced them.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Morphism {
    pub(crate) range: VertexId,
    pub(crate) source: VertexId,
    pub(crate) edges: Vec<EdgeId>,
    pub(crate) degree: Degree,
}

impl Morphism {
    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn degree(&self) -> &Degree {
        &self.degree
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

impl PartialOrd for Morphism {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Morphism {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.range, self.source, &self.edges).cmp(&(other.range, other.source, &other.edges))
    }
}
