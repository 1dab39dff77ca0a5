//! Validated k-graphs and the morphism algebra.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::degree::Degree;
use crate::error::GraphError;
use crate::morphism::Morphism;
use crate::rewrite::SquareTable;
use crate::skeleton::{Color, EdgeId, Skeleton, VertexId};

/// A reason why a skeleton does not describe a source-free k-graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Between range `v` and source `w`, the color `i`-then-`j` paths are not
    /// in bijection with the `j`-then-`i` paths (colors zero-based, `i < j`).
    SquareNotBijective { v: VertexId, w: VertexId, i: Color, j: Color },
    /// A three-edge path with three distinct colors reaches different
    /// color-sorted paths depending on the order of square swaps.
    CubeInconsistent { path: Vec<EdgeId>, outcomes: Vec<Vec<EdgeId>> },
    /// Vertex `v` receives no edge of color `color` (zero-based).
    NotSourceFree { v: VertexId, color: Color },
}

impl Violation {
    /// Human-readable description using the skeleton's names; colors are
    /// printed one-based.
    pub fn describe(&self, skel: &Skeleton) -> String {
        let vn = |v: VertexId| skel.vertices()[v].as_str();
        let word = |w: &[EdgeId]| {
            w.iter().map(|&e| skel.edge(e).name.as_str()).collect::<Vec<_>>().join(" ")
        };
        match self {
            Violation::SquareNotBijective { v, w, i, j } => format!(
                "square pairing between colors {} and {} from {} to {} is not a bijection",
                i + 1,
                j + 1,
                vn(*w),
                vn(*v)
            ),
            Violation::CubeInconsistent { path, outcomes } => format!(
                "path `{}` has no well-defined commuting cube (resolves to {})",
                word(path),
                outcomes.iter().map(|o| format!("`{}`", word(o))).collect::<Vec<_>>().join(", ")
            ),
            Violation::NotSourceFree { v, color } => {
                format!("vertex {} receives no edge of color {}", vn(*v), color + 1)
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Violation::SquareNotBijective { .. } => "SquareNotBijective",
            Violation::CubeInconsistent { .. } => "CubeInconsistent",
            Violation::NotSourceFree { .. } => "NotSourceFree",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphProperties {
    pub source_free: bool,
    pub strongly_connected: bool,
    pub finite: bool,
}

impl GraphProperties {
    /// Reachability and color-coverage flags of a skeleton.
    pub fn of(skel: &Skeleton) -> Self {
        let n = skel.vertices().len();
        let mut covered = vec![vec![false; skel.rank()]; n];
        let mut succ = vec![Vec::new(); n];
        for e in skel.edges() {
            covered[e.range][e.color] = true;
            succ[e.range].push(e.source);
        }
        let source_free = covered.iter().all(|row| row.iter().all(|&c| c));
        // v Λ w ≠ ∅ for all v, w: every vertex reaches every other along
        // range-to-source steps
        let strongly_connected = (0..n).all(|start| {
            let mut seen = vec![false; n];
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(x) = stack.pop() {
                for &y in &succ[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            seen.iter().all(|&s| s)
        });
        GraphProperties { source_free, strongly_connected, finite: true }
    }
}

/// A validated finite, row-finite, source-free k-graph.
#[derive(Debug, Clone)]
pub struct KGraph {
    skeleton: Skeleton,
    table: SquareTable,
    /// `incoming[v][c]`: edges of color `c` with range `v`.
    incoming: Vec<Vec<Vec<EdgeId>>>,
}

impl KGraph {
    /// Check square bijectivity, cube consistency and source-freeness.
    /// Returns every violation found.
    pub fn validate(skeleton: Skeleton) -> Result<KGraph, Vec<Violation>> {
        let table = SquareTable::new(&skeleton);
        let mut violations = square_violations(&skeleton, &table);
        let squares_ok = violations.is_empty();
        if squares_ok && skeleton.rank() >= 3 {
            violations.extend(cube_violations(&skeleton, &table));
        }
        let props = GraphProperties::of(&skeleton);
        if !props.source_free {
            let mut covered = vec![vec![false; skeleton.rank()]; skeleton.vertices().len()];
            for e in skeleton.edges() {
                covered[e.range][e.color] = true;
            }
            for (v, row) in covered.iter().enumerate() {
                for (color, &ok) in row.iter().enumerate() {
                    if !ok {
                        violations.push(Violation::NotSourceFree { v, color });
                    }
                }
            }
        }
        if !violations.is_empty() {
            return Err(violations);
        }
        let mut incoming = vec![vec![Vec::new(); skeleton.rank()]; skeleton.vertices().len()];
        for (id, e) in skeleton.edges().iter().enumerate() {
            incoming[e.range][e.color].push(id);
        }
        Ok(KGraph { skeleton, table, incoming })
    }

    pub fn skeleton(&self) -> &Skeleton {
        &self.skeleton
    }

    pub fn rank(&self) -> usize {
        self.skeleton.rank()
    }

    pub fn vertex_count(&self) -> usize {
        self.skeleton.vertices().len()
    }

    pub fn square_table(&self) -> &SquareTable {
        &self.table
    }

    pub fn properties(&self) -> GraphProperties {
        GraphProperties::of(&self.skeleton)
    }

    /// Edges of color `color` whose range is `v`.
    pub fn incoming(&self, v: VertexId, color: Color) -> &[EdgeId] {
        &self.incoming[v][color]
    }

    fn check_rank(&self, d: &Degree) -> Result<(), GraphError> {
        if d.rank() != self.rank() {
            return Err(GraphError::RankMismatch { expected: self.rank(), found: d.rank() });
        }
        Ok(())
    }

    /// Build a morphism from an already color-sorted composable edge list.
    fn sorted(&self, range: VertexId, edges: Vec<EdgeId>) -> Morphism {
        let mut degree = vec![0u32; self.rank()];
        for &e in &edges {
            degree[self.skeleton.edge(e).color] += 1;
        }
        let source = edges.last().map_or(range, |&e| self.skeleton.edge(e).source);
        Morphism { range, source, edges, degree: Degree::from(degree) }
    }

    /// The identity morphism at `v`.
    pub fn vertex(&self, v: VertexId) -> Morphism {
        Morphism { range: v, source: v, edges: Vec::new(), degree: Degree::zero(self.rank()) }
    }

    pub fn edge(&self, e: EdgeId) -> Result<Morphism, GraphError> {
        if e >= self.skeleton.edges().len() {
            return Err(GraphError::BadEdgeId(e));
        }
        Ok(self.sorted(self.skeleton.edge(e).range, vec![e]))
    }

    /// Normal form of a non-empty composable edge list.
    pub fn normal_form(&self, edges: &[EdgeId]) -> Result<Morphism, GraphError> {
        let first = *edges.first().ok_or(GraphError::NotComposable { position: 0 })?;
        if first >= self.skeleton.edges().len() {
            return Err(GraphError::BadEdgeId(first));
        }
        self.normal_form_at(self.skeleton.edge(first).range, edges)
    }

    /// Normal form of a composable edge list starting at vertex `v`; the empty
    /// list gives the identity at `v`.
    pub fn normal_form_at(&self, v: VertexId, edges: &[EdgeId]) -> Result<Morphism, GraphError> {
        if v >= self.vertex_count() {
            return Err(GraphError::BadVertexId(v));
        }
        let mut cur = v;
        for (position, &e) in edges.iter().enumerate() {
            if e >= self.skeleton.edges().len() {
                return Err(GraphError::BadEdgeId(e));
            }
            let edge = self.skeleton.edge(e);
            if edge.range != cur {
                return Err(if position == 0 {
                    GraphError::WrongRange { expected: v }
                } else {
                    GraphError::NotComposable { position }
                });
            }
            cur = edge.source;
        }
        let mut w = edges.to_vec();
        self.table.color_sort(&mut w)?;
        Ok(self.sorted(v, w))
    }

    /// `μν`, defined when `s(μ) = r(ν)`.
    pub fn compose(&self, mu: &Morphism, nu: &Morphism) -> Result<Morphism, GraphError> {
        if mu.source != nu.range {
            return Err(GraphError::SourceRangeMismatch { source_vertex: mu.source, range_vertex: nu.range });
        }
        let mut w = Vec::with_capacity(mu.len() + nu.len());
        w.extend_from_slice(&mu.edges);
        w.extend_from_slice(&nu.edges);
        self.table.color_sort(&mut w)?;
        Ok(self.sorted(mu.range, w))
    }

    /// The unique `(μ, ν)` with `λ = μν` and `d(μ) = m`.
    pub fn factorize(&self, lambda: &Morphism, m: &Degree) -> Result<(Morphism, Morphism), GraphError> {
        self.check_rank(m)?;
        if !(m <= &lambda.degree) {
            return Err(GraphError::DegreeTooLarge { requested: m.clone(), available: lambda.degree.clone() });
        }
        self.split_word(lambda.range, lambda.edges.clone(), m)
    }

    /// Factorize the morphism spelled by a composable edge list starting at
    /// `range`, without normalizing it first. `m` must be dominated by the
    /// color counts of `edges`.
    pub(crate) fn split_word(
        &self,
        range: VertexId,
        mut edges: Vec<EdgeId>,
        m: &Degree,
    ) -> Result<(Morphism, Morphism), GraphError> {
        self.table.split_sort(&mut edges, m.coords())?;
        let tail = edges.split_off(m.total() as usize);
        let mu = self.sorted(range, edges);
        let nu = self.sorted(mu.source, tail);
        Ok((mu, nu))
    }

    /// `λ(p, q)`: the middle factor when `λ` is cut at degrees `p <= q`.
    pub fn segment(&self, lambda: &Morphism, p: &Degree, q: &Degree) -> Result<Morphism, GraphError> {
        self.check_rank(p)?;
        self.check_rank(q)?;
        if !(p <= q && q <= &lambda.degree) {
            return Err(GraphError::BadInterval { p: p.clone(), q: q.clone(), degree: lambda.degree.clone() });
        }
        let (head, _) = self.factorize(lambda, q)?;
        let (_, mid) = self.factorize(&head, p)?;
        Ok(mid)
    }

    /// `vΛ^n` as normal forms, in lexicographic order of edge ids.
    pub fn enumerate(&self, v: VertexId, n: &Degree) -> Result<Vec<Morphism>, GraphError> {
        self.check_rank(n)?;
        if v >= self.vertex_count() {
            return Err(GraphError::BadVertexId(v));
        }
        // color-sorted composable edge lists are exactly the normal forms
        let colors: Vec<Color> =
            n.coords().iter().enumerate().flat_map(|(c, &k)| core::iter::repeat(c).take(k as usize)).collect();
        let mut out = Vec::new();
        let mut stack = Vec::with_capacity(colors.len());
        self.enum_rec(v, &colors, &mut stack, &mut out);
        Ok(out.into_iter().map(|w| self.sorted(v, w)).collect())
    }

    fn enum_rec(&self, cur: VertexId, colors: &[Color], stack: &mut Vec<EdgeId>, out: &mut Vec<Vec<EdgeId>>) {
        let Some((&c, rest)) = colors.split_first() else {
            out.push(stack.clone());
            return;
        };
        for &e in &self.incoming[cur][c] {
            stack.push(e);
            self.enum_rec(self.skeleton.edge(e).source, rest, stack, out);
            stack.pop();
        }
    }

    /// `Λ^n`: morphisms of degree `n` with any range.
    pub fn enumerate_all(&self, n: &Degree) -> Result<Vec<Morphism>, GraphError> {
        let mut out = Vec::new();
        for v in 0..self.vertex_count() {
            out.extend(self.enumerate(v, n)?);
        }
        Ok(out)
    }

    /// Every morphism with range `v` and degree at most `bound`, grouped by
    /// degree in graded order.
    pub fn enumerate_up_to(&self, v: VertexId, bound: &Degree) -> Result<Vec<Morphism>, GraphError> {
        let mut out = Vec::new();
        for n in bound.graded_box() {
            out.extend(self.enumerate(v, &n)?);
        }
        Ok(out)
    }

    /// `Λ^min(λ, η)`: the pairs `(α, β)` with `λα = ηβ` and
    /// `d(λα) = d(λ) ∨ d(η)`.
    pub fn lambda_min(&self, lambda: &Morphism, eta: &Morphism) -> Result<Vec<(Morphism, Morphism)>, GraphError> {
        if lambda.range != eta.range {
            return Err(GraphError::RangeMismatch { left: lambda.range, right: eta.range });
        }
        let top = lambda.degree.join(&eta.degree);
        let rest = top.checked_sub(&lambda.degree).expect("join dominates");
        let mut out = Vec::new();
        for alpha in self.enumerate(lambda.source, &rest)? {
            let joined = self.compose(lambda, &alpha)?;
            let (head, beta) = self.factorize(&joined, &eta.degree)?;
            if &head == eta {
                out.push((alpha, beta));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Display form: vertex name for identities, otherwise color blocks
    /// separated by `|`, e.g. `[e,e|h,g]`.
    pub fn display(&self, m: &Morphism) -> String {
        if m.is_vertex() {
            return self.skeleton.vertices()[m.range].clone();
        }
        let mut s = String::from("[");
        let mut color = 0;
        let mut first_in_block = true;
        for &e in &m.edges {
            let c = self.skeleton.edge(e).color;
            while color < c {
                s.push('|');
                color += 1;
                first_in_block = true;
            }
            if !first_in_block {
                s.push(',');
            }
            s.push_str(&self.skeleton.edge(e).name);
            first_in_block = false;
        }
        while color + 1 < self.rank() {
            s.push('|');
            color += 1;
        }
        s.push(']');
        s
    }

    /// Resolve edge names and normalize; the empty word is rejected.
    pub fn word(&self, names: &[&str]) -> Result<Morphism, GraphError> {
        let ids = self.skeleton.word(names)?;
        self.normal_form(&ids)
    }
}

type BicoloredPaths = (BTreeSet<(EdgeId, EdgeId)>, BTreeSet<(EdgeId, EdgeId)>);

fn square_violations(skel: &Skeleton, table: &SquareTable) -> Vec<Violation> {
    // (v, w, lo, hi) -> (lo-then-hi paths, hi-then-lo paths)
    let mut groups: BTreeMap<(VertexId, VertexId, Color, Color), BicoloredPaths> = BTreeMap::new();
    let edges = skel.edges();
    for (a, ea) in edges.iter().enumerate() {
        for (b, eb) in edges.iter().enumerate() {
            if ea.color == eb.color || ea.source != eb.range {
                continue;
            }
            let (lo, hi) = (ea.color.min(eb.color), ea.color.max(eb.color));
            let entry = groups.entry((ea.range, eb.source, lo, hi)).or_default();
            if ea.color < eb.color {
                entry.0.insert((a, b));
            } else {
                entry.1.insert((a, b));
            }
        }
    }
    let conflicts: BTreeSet<(EdgeId, EdgeId)> = table.conflicts().iter().copied().collect();
    let mut out = Vec::new();
    for ((v, w, i, j), (ij, ji)) in groups {
        let forward_ok = ij.iter().all(|&(a, b)| {
            !conflicts.contains(&(a, b))
                && table.partner(a, b).is_some_and(|p| ji.contains(&p) && table.partner(p.0, p.1) == Some((a, b)))
        });
        let backward_ok = ji.iter().all(|&(a, b)| {
            !conflicts.contains(&(a, b))
                && table.partner(a, b).is_some_and(|p| ij.contains(&p) && table.partner(p.0, p.1) == Some((a, b)))
        });
        if ij.len() != ji.len() || !forward_ok || !backward_ok {
            out.push(Violation::SquareNotBijective { v, w, i, j });
        }
    }
    out
}

/// All color-sorted results reachable from `path` by swapping out-of-order
/// adjacent pairs in every possible order.
pub(crate) fn all_outcomes(table: &SquareTable, path: &[EdgeId]) -> Result<BTreeSet<Vec<EdgeId>>, GraphError> {
    let mut outcomes = BTreeSet::new();
    let mut seen = BTreeSet::new();
    let mut stack = vec![path.to_vec()];
    while let Some(cur) = stack.pop() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        let positions = table.out_of_order(&cur);
        if positions.is_empty() {
            outcomes.insert(cur);
            continue;
        }
        for p in positions {
            let mut next = cur.clone();
            table.swap_at(&mut next, p)?;
            stack.push(next);
        }
    }
    Ok(outcomes)
}

fn cube_violations(skel: &Skeleton, table: &SquareTable) -> Vec<Violation> {
    let edges = skel.edges();
    let mut out = Vec::new();
    for (a, ea) in edges.iter().enumerate() {
        for (b, eb) in edges.iter().enumerate() {
            if eb.range != ea.source || eb.color == ea.color {
                continue;
            }
            for (c, ec) in edges.iter().enumerate() {
                if ec.range != eb.source || ec.color == ea.color || ec.color == eb.color {
                    continue;
                }
                let path = [a, b, c];
                match all_outcomes(table, &path) {
                    Ok(set) if set.len() > 1 => {
                        out.push(Violation::CubeInconsistent { path: path.to_vec(), outcomes: set.into_iter().collect() })
                    }
                    _ => {}
                }
            }
        }
    }
    out
}

impl fmt::Display for GraphProperties {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "source_free={} strongly_connected={} finite={}",
            self.source_free, self.strongly_connected, self.finite
        )
    }
}
