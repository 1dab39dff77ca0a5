//! Colored-graph skeletons: vertices, colored edges, and square pairings.
//!
//! Edges are read range-to-source: a path `a b` is composable when
//! `source(a) == range(b)`. Colors are zero-based here; the text formats
//! number them from 1.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::GraphError;

pub type VertexId = usize;
pub type EdgeId = usize;
pub type Color = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub color: Color,
    pub source: VertexId,
    pub range: VertexId,
}

/// One factorization rule: the two-edge path `left[0] left[1]` is identified
/// with `right[0] right[1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Square {
    pub left: [EdgeId; 2],
    pub right: [EdgeId; 2],
}

/// A structurally well-formed colored graph with square pairings.
///
/// Construction guarantees that every edge endpoint exists, colors are in
/// range and every square entry is a pair of composable bicolored paths with
/// matching colors and endpoints. Bijectivity of the pairing and cube
/// consistency are checked by [`crate::KGraph::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skeleton {
    rank: usize,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    squares: Vec<Square>,
}

impl Skeleton {
    pub fn new(
        rank: usize,
        vertices: Vec<String>,
        edges: Vec<Edge>,
        squares: Vec<Square>,
    ) -> Result<Self, GraphError> {
        if rank == 0 {
            return Err(GraphError::ZeroRank);
        }
        let mut seen = BTreeMap::new();
        for v in &vertices {
            if seen.insert(v.as_str(), ()).is_some() {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        let mut seen = BTreeMap::new();
        for e in &edges {
            if seen.insert(e.name.as_str(), ()).is_some() {
                return Err(GraphError::DuplicateEdge(e.name.clone()));
            }
            if e.color >= rank {
                return Err(GraphError::ColorOutOfRange { edge: e.name.clone(), color: e.color + 1, rank });
            }
            if e.source >= vertices.len() {
                return Err(GraphError::BadVertexId(e.source));
            }
            if e.range >= vertices.len() {
                return Err(GraphError::BadVertexId(e.range));
            }
        }
        let skel = Skeleton { rank, vertices, edges, squares };
        for (index, sq) in skel.squares.iter().enumerate() {
            skel.check_square(sq).map_err(|reason| GraphError::MalformedSquare { index, reason })?;
        }
        Ok(skel)
    }

    fn check_square(&self, sq: &Square) -> Result<(), String> {
        for &e in sq.left.iter().chain(&sq.right) {
            if e >= self.edges.len() {
                return Err(format!("edge id {e} out of range"));
            }
        }
        let [a, b] = sq.left.map(|e| &self.edges[e]);
        let [c, d] = sq.right.map(|e| &self.edges[e]);
        if a.color == b.color {
            return Err(format!("`{} {}` is not bicolored", a.name, b.name));
        }
        if a.color != d.color || b.color != c.color {
            return Err(format!(
                "`{} {}` and `{} {}` do not swap the colors",
                a.name, b.name, c.name, d.name
            ));
        }
        if a.source != b.range {
            return Err(format!("`{} {}` is not composable", a.name, b.name));
        }
        if c.source != d.range {
            return Err(format!("`{} {}` is not composable", c.name, d.name));
        }
        if a.range != c.range || b.source != d.source {
            return Err(format!(
                "`{} {}` and `{} {}` have different endpoints",
                a.name, b.name, c.name, d.name
            ));
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edge_id(&self, name: &str) -> Option<EdgeId> {
        self.edges.iter().position(|e| e.name == name)
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    /// Resolve a whitespace-free list of edge names.
    pub fn word(&self, names: &[&str]) -> Result<Vec<EdgeId>, GraphError> {
        names
            .iter()
            .map(|n| self.edge_id(n).ok_or_else(|| GraphError::UnknownEdge(n.to_string())))
            .collect()
    }

    /// Disjoint union: vertices and edges of `other` are appended, with their
    /// names prefixed by `prefix` when that is needed to keep names unique.
    pub fn disjoint_union(&self, other: &Skeleton, prefix: &str) -> Result<Skeleton, GraphError> {
        if self.rank != other.rank {
            return Err(GraphError::RankMismatch { expected: self.rank, found: other.rank });
        }
        let rename = |n: &String, taken: &dyn Fn(&str) -> bool| {
            if taken(n) {
                format!("{prefix}{n}")
            } else {
                n.clone()
            }
        };
        let mut vertices = self.vertices.clone();
        for v in &other.vertices {
            vertices.push(rename(v, &|n| self.vertex_id(n).is_some()));
        }
        let nv = self.vertices.len();
        let ne = self.edges.len();
        let mut edges = self.edges.clone();
        for e in &other.edges {
            edges.push(Edge {
                name: rename(&e.name, &|n| self.edge_id(n).is_some()),
                color: e.color,
                source: e.source + nv,
                range: e.range + nv,
            });
        }
        let mut squares = self.squares.clone();
        for s in &other.squares {
            squares.push(Square { left: s.left.map(|e| e + ne), right: s.right.map(|e| e + ne) });
        }
        Skeleton::new(self.rank, vertices, edges, squares)
    }

    /// Copy without the named edge and without every square mentioning it.
    pub fn without_edge(&self, name: &str) -> Result<Skeleton, GraphError> {
        let gone = self.edge_id(name).ok_or_else(|| GraphError::UnknownEdge(name.to_string()))?;
        let remap = |e: EdgeId| if e > gone { e - 1 } else { e };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != gone)
            .map(|(_, e)| e.clone())
            .collect();
        let squares = self
            .squares
            .iter()
            .filter(|s| !s.left.contains(&gone) && !s.right.contains(&gone))
            .map(|s| Square { left: s.left.map(remap), right: s.right.map(remap) })
            .collect();
        Skeleton::new(self.rank, self.vertices.clone(), edges, squares)
    }
}

/// Name-based builder for skeletons. Colors are given one-based.
#[derive(Debug, Clone, Default)]
pub struct SkeletonBuilder {
    rank: usize,
    vertices: Vec<String>,
    edges: Vec<(String, usize, String, String)>,
    squares: Vec<[String; 4]>,
}

impl SkeletonBuilder {
    pub fn new(rank: usize) -> Self {
        SkeletonBuilder { rank, ..Default::default() }
    }

    pub fn vertex(mut self, name: &str) -> Self {
        self.vertices.push(name.to_string());
        self
    }

    pub fn vertices(mut self, names: &[&str]) -> Self {
        self.vertices.extend(names.iter().map(|n| n.to_string()));
        self
    }

    /// `edge NAME color C from SOURCE to RANGE`.
    pub fn edge(mut self, name: &str, color: usize, from: &str, to: &str) -> Self {
        self.edges.push((name.to_string(), color, from.to_string(), to.to_string()));
        self
    }

    /// `square a b = c d`.
    pub fn square(mut self, a: &str, b: &str, c: &str, d: &str) -> Self {
        self.squares.push([a, b, c, d].map(|s| s.to_string()));
        self
    }

    pub fn build(self) -> Result<Skeleton, GraphError> {
        if self.rank == 0 {
            return Err(GraphError::ZeroRank);
        }
        let vid = |n: &str| {
            self.vertices
                .iter()
                .position(|v| v == n)
                .ok_or_else(|| GraphError::UnknownVertex(n.to_string()))
        };
        let mut edges = Vec::with_capacity(self.edges.len());
        for (name, color, from, to) in &self.edges {
            if *color == 0 || *color > self.rank {
                return Err(GraphError::ColorOutOfRange { edge: name.clone(), color: *color, rank: self.rank });
            }
            edges.push(Edge { name: name.clone(), color: color - 1, source: vid(from)?, range: vid(to)? });
        }
        let eid = |n: &str| {
            edges
                .iter()
                .position(|e| e.name == n)
                .ok_or_else(|| GraphError::UnknownEdge(n.to_string()))
        };
        let mut squares = Vec::with_capacity(self.squares.len());
        for [a, b, c, d] in &self.squares {
            squares.push(Square { left: [eid(a)?, eid(b)?], right: [eid(c)?, eid(d)?] });
        }
        Skeleton::new(self.rank, self.vertices, edges, squares)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_composable_square() {
        let err = SkeletonBuilder::new(2)
            .vertices(&["u", "v"])
            .edge("e", 1, "u", "u")
            .edge("h", 2, "v", "u")
            .edge("f", 1, "v", "v")
            .square("h", "e", "e", "h")
            .build()
            .unwrap_err();
        assert!(matches!(err, GraphError::MalformedSquare { index: 0, .. }));
    }

    #[test]
    fn rejects_unknown_names() {
        let err = SkeletonBuilder::new(1).vertex("u").edge("e", 1, "u", "w").build().unwrap_err();
        assert_eq!(err, GraphError::UnknownVertex("w".into()));
        let err = SkeletonBuilder::new(2)
            .vertex("u")
            .edge("e", 1, "u", "u")
            .square("e", "x", "x", "e")
            .build()
            .unwrap_err();
        assert_eq!(err, GraphError::UnknownEdge("x".into()));
    }

    #[test]
    fn rejects_color_out_of_range() {
        let err = SkeletonBuilder::new(2).vertex("u").edge("e", 3, "u", "u").build().unwrap_err();
        assert!(matches!(err, GraphError::ColorOutOfRange { color: 3, .. }));
    }

    #[test]
    fn union_renames_clashes() {
        let a = crate::fixtures::delta();
        let b = crate::fixtures::delta();
        let u = a.disjoint_union(&b, "d2.").unwrap();
        assert_eq!(u.vertices().len(), 2);
        assert_eq!(u.edges().len(), 4);
        assert!(u.edge_id("d2.b").is_some());
    }
}
