use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::degree::Degree;
use crate::error::{GraphError, PathError};
use crate::graph::KGraph;
use crate::morphism::Morphism;
use crate::path::Periodicity;
use crate::skeleton::{Color, EdgeId, VertexId};

/// Source of segments `z(0, n)` of one fixed infinite path `z`.
///
/// Implementations must be pure and consistent: factorizing `segment(n)` at
/// `m <= n` gives `segment(m)`.
pub trait PathGenerator: fmt::Debug + Send + Sync {
    fn range(&self) -> VertexId;

    /// Segments are available for every `n <= depth()`.
    fn depth(&self) -> &Degree;

    /// `z(0, n)`. Callers guarantee `n <= depth()`.
    fn segment(&self, g: &KGraph, n: &Degree) -> Result<Morphism, PathError>;

    fn label(&self) -> String;
}

/// The path `prefix · σ^offset(z)` for a generated path `z`.
///
/// Derived equality is structural (same generator, prefix and offset); it
/// implies path equality but not conversely. Use
/// [`KGraph::paths_equal`] for the path-level question.
#[derive(Debug, Clone)]
pub struct LazyPath {
    prefix: Morphism,
    offset: Degree,
    base: Arc<dyn PathGenerator>,
}

impl PartialEq for LazyPath {
    fn eq(&self, other: &Self) -> bool {
        self.same_structure(other)
    }
}

impl Eq for LazyPath {}

impl LazyPath {
    /// The generated path itself.
    pub fn new(g: &KGraph, base: Arc<dyn PathGenerator>) -> Self {
        LazyPath { prefix: g.vertex(base.range()), offset: Degree::zero(g.rank()), base }
    }

    pub fn range(&self) -> VertexId {
        self.prefix.range()
    }

    pub fn prefix(&self) -> &Morphism {
        &self.prefix
    }

    pub fn offset(&self) -> &Degree {
        &self.offset
    }

    pub fn base(&self) -> &Arc<dyn PathGenerator> {
        &self.base
    }

    /// `d(prefix) + (depth(z) - offset)`.
    pub fn depth(&self) -> Degree {
        let rest = self.base.depth().checked_sub(&self.offset).expect("offset within depth");
        self.prefix.degree() + &rest
    }

    pub(crate) fn same_structure(&self, other: &LazyPath) -> bool {
        Arc::ptr_eq(&self.base, &other.base) && self.offset == other.offset && self.prefix == other.prefix
    }

    pub fn same_base(&self, other: &LazyPath) -> bool {
        Arc::ptr_eq(&self.base, &other.base)
    }
}

impl KGraph {
    fn check_depth(&self, x: &LazyPath, n: &Degree) -> Result<(), PathError> {
        if n.rank() != self.rank() {
            return Err(GraphError::RankMismatch { expected: self.rank(), found: n.rank() }.into());
        }
        let available = x.depth();
        if !(n <= &available) {
            return Err(PathError::DepthExceeded { requested: n.clone(), available });
        }
        Ok(())
    }

    /// `z(offset, offset + m)` followed by the prefix, as an edge list.
    fn lazy_word(&self, x: &LazyPath, m: &Degree) -> Result<Vec<EdgeId>, PathError> {
        let hi = &x.offset + m;
        let whole = x.base.segment(self, &hi)?;
        if whole.degree() != &hi || whole.range() != x.base.range() {
            return Err(PathError::InconsistentGenerator(hi));
        }
        let (_, tail) = self.factorize(&whole, &x.offset)?;
        let mut edges = Vec::with_capacity(x.prefix.len() + tail.len());
        edges.extend_from_slice(x.prefix.edges());
        edges.extend_from_slice(tail.edges());
        Ok(edges)
    }

    pub(crate) fn lazy_segment(&self, x: &LazyPath, n: &Degree) -> Result<Morphism, PathError> {
        self.check_depth(x, n)?;
        let m = n.saturating_sub(x.prefix.degree());
        let edges = self.lazy_word(x, &m)?;
        Ok(self.split_word(x.range(), edges, n)?.0)
    }

    pub(crate) fn lazy_shift(&self, x: &LazyPath, m: &Degree) -> Result<LazyPath, PathError> {
        self.check_depth(x, m)?;
        let t = x.prefix.degree().join(m);
        let m2 = t.checked_sub(x.prefix.degree()).expect("join dominates");
        let edges = self.lazy_word(x, &m2)?;
        let (_, prefix) = self.split_word(x.range(), edges, m)?;
        Ok(LazyPath { prefix, offset: &x.offset + &m2, base: x.base.clone() })
    }

    pub(crate) fn lazy_prefix(&self, lambda: &Morphism, x: &LazyPath) -> Result<LazyPath, PathError> {
        Ok(LazyPath { prefix: self.compose(lambda, &x.prefix)?, offset: x.offset.clone(), base: x.base.clone() })
    }

    /// Compare `σ^m(x)(0, c)` over all `m <= depth`, where `c` is what the
    /// path's depth leaves after the largest shift.
    pub(crate) fn lazy_periodicity(&self, x: &LazyPath, depth: &Degree) -> Result<Periodicity, PathError> {
        let available = x.depth();
        self.check_depth(x, depth)?;
        let compared = available.checked_sub(depth).expect("depth checked");
        let whole = self.lazy_segment(x, &available)?;
        let mut seen: BTreeMap<Morphism, Degree> = BTreeMap::new();
        let mut shifts = depth.graded_box();
        // graded order, with (1,0,..) ahead of (0,1,..) inside a total
        shifts.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| b.coords().cmp(a.coords())));
        for m in shifts {
            let (_, rest) = self.factorize(&whole, &m)?;
            let (head, _) = self.factorize(&rest, &compared)?;
            if let Some(first) = seen.get(&head) {
                return Ok(Periodicity::PeriodicUpTo { m: first.clone(), n: m, compared });
            }
            seen.insert(head, m);
        }
        Ok(Periodicity::AperiodicUpTo(depth.clone()))
    }
}

/// `t_i` of the Thue–Morse word `0110 1001 …`: parity of the binary digit sum.
pub fn thue_morse_bit(i: u64) -> usize {
    (i.count_ones() % 2) as usize
}

/// Thue–Morse path over two loops of one color at a vertex.
///
/// The path is the edge sequence `B_0 B_1 B_2 …` with block
/// `B_i = letters[t_i] f_1 … f_(k-1)`: one letter followed by one fill loop
/// of every other color. The fill loop of `cycle_color` comes first, the
/// others follow in ascending color order; each is the first loop of its
/// color declared at the vertex.
#[derive(Debug, Clone)]
pub struct ThueMorse {
    vertex: VertexId,
    letters: [EdgeId; 2],
    fill: Vec<EdgeId>,
    depth: Degree,
    label: String,
}

impl ThueMorse {
    pub fn new(
        g: &KGraph,
        letters: [EdgeId; 2],
        cycle_color: Color,
        depth: Degree,
    ) -> Result<Self, PathError> {
        let skel = g.skeleton();
        let [a, b] = letters.map(|e| skel.edge(e));
        if a.color != b.color {
            return Err(PathError::BadGenerator(format!("`{}` and `{}` have different colors", a.name, b.name)));
        }
        if a.range != a.source || b.range != b.source || a.range != b.range {
            return Err(PathError::BadGenerator(format!("`{}` and `{}` must be loops at one vertex", a.name, b.name)));
        }
        if cycle_color >= g.rank() || cycle_color == a.color {
            return Err(PathError::BadGenerator(format!(
                "cycle color {} must be a color other than {}",
                cycle_color + 1,
                a.color + 1
            )));
        }
        if depth.rank() != g.rank() {
            return Err(GraphError::RankMismatch { expected: g.rank(), found: depth.rank() }.into());
        }
        let v = a.range;
        let loop_of = |c: Color| {
            skel.edges()
                .iter()
                .position(|e| e.color == c && e.range == v && e.source == v)
                .ok_or_else(|| PathError::BadGenerator(format!("no loop of color {} at `{}`", c + 1, skel.vertices()[v])))
        };
        let mut fill = Vec::new();
        if g.rank() > 1 {
            fill.push(loop_of(cycle_color)?);
        }
        for c in (0..g.rank()).filter(|&c| c != a.color && c != cycle_color) {
            fill.push(loop_of(c)?);
        }
        let label = format!("thue-morse({},{})", a.name, b.name);
        Ok(ThueMorse { vertex: v, letters, fill, depth, label })
    }
}

impl PathGenerator for ThueMorse {
    fn range(&self) -> VertexId {
        self.vertex
    }

    fn depth(&self) -> &Degree {
        &self.depth
    }

    fn segment(&self, g: &KGraph, n: &Degree) -> Result<Morphism, PathError> {
        let blocks = n.coords().iter().copied().max().unwrap_or(0) as u64;
        let mut edges = Vec::with_capacity(blocks as usize * (1 + self.fill.len()));
        for i in 0..blocks {
            edges.push(self.letters[thue_morse_bit(i)]);
            edges.extend_from_slice(&self.fill);
        }
        Ok(g.split_word(self.vertex, edges, n)?.0)
    }

    fn label(&self) -> String {
        self.label.clone()
    }
}
