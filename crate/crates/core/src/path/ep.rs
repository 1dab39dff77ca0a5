use alloc::vec::Vec;

use crate::degree::Degree;
use crate::error::{GraphError, PathError};
use crate::graph::KGraph;
use crate::morphism::Morphism;
use crate::skeleton::VertexId;

/// An eventually periodic path `λ μ μ μ …` in canonical form.
///
/// The cycle degree `q` is the smallest (graded, then lexicographic) degree
/// with every coordinate positive such that the periodic tail satisfies
/// `σ^q(z) = z`; the prefix degree `p` is the smallest degree with
/// `σ^(p+q)(x) = σ^p(x)`. Both are properties of the path, not of the way it
/// was written down, so derived equality coincides with path equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EpPath {
    prefix: Morphism,
    cycle: Morphism,
}

impl EpPath {
    pub fn prefix(&self) -> &Morphism {
        &self.prefix
    }

    pub fn cycle(&self) -> &Morphism {
        &self.cycle
    }

    pub fn range(&self) -> VertexId {
        self.prefix.range()
    }

    /// The periodic tail `σ^d(prefix)(x)`.
    pub fn tail(&self) -> EpPath {
        EpPath { prefix: vertex_of(&self.cycle), cycle: self.cycle.clone() }
    }
}

fn vertex_of(cycle: &Morphism) -> Morphism {
    Morphism {
        range: cycle.range,
        source: cycle.range,
        edges: Vec::new(),
        degree: Degree::zero(cycle.degree.rank()),
    }
}

impl KGraph {
    /// `prefix · cycle^∞`, canonicalized.
    pub fn ep_path(&self, prefix: &Morphism, cycle: &Morphism) -> Result<EpPath, PathError> {
        if cycle.range() != cycle.source() {
            return Err(PathError::CycleNotClosed { range: cycle.range(), source_vertex: cycle.source() });
        }
        if let Some(coordinate) = cycle.degree().coords().iter().position(|&c| c == 0) {
            return Err(PathError::CycleDegreeZero { coordinate });
        }
        if prefix.source() != cycle.range() {
            return Err(GraphError::SourceRangeMismatch { source_vertex: prefix.source(), range_vertex: cycle.range() }
                .into());
        }
        let cycle = self.minimal_cycle(cycle)?;
        Ok(self.canonical(prefix, &cycle)?)
    }

    /// The purely periodic path `μ^∞`.
    pub fn ep_periodic(&self, cycle: &Morphism) -> Result<EpPath, PathError> {
        self.ep_path(&self.vertex(cycle.range()), cycle)
    }

    /// `x(0, n)` for `x = prefix · cycle^∞`, any representation.
    pub(crate) fn raw_segment(&self, prefix: &Morphism, cycle: &Morphism, n: &Degree) -> Result<Morphism, GraphError> {
        let p = prefix.degree().coords();
        let c = cycle.degree().coords();
        let reps = n
            .coords()
            .iter()
            .enumerate()
            .map(|(i, &ni)| ni.saturating_sub(p[i]).div_ceil(c[i]))
            .max()
            .unwrap_or(0);
        let mut edges = Vec::with_capacity(prefix.len() + reps as usize * cycle.len());
        edges.extend_from_slice(prefix.edges());
        for _ in 0..reps {
            edges.extend_from_slice(cycle.edges());
        }
        Ok(self.split_word(prefix.range(), edges, n)?.0)
    }

    /// `x(lo, hi)` for `x = prefix · cycle^∞`.
    fn raw_window(&self, prefix: &Morphism, cycle: &Morphism, lo: &Degree, hi: &Degree) -> Result<Morphism, GraphError> {
        let head = self.raw_segment(prefix, cycle, hi)?;
        Ok(self.factorize(&head, lo)?.1)
    }

    /// Smallest period of the tail `μ^∞` with every coordinate positive,
    /// returned as the matching cycle `z(0, q)`.
    fn minimal_cycle(&self, cycle: &Morphism) -> Result<Morphism, GraphError> {
        let v = vertex_of(cycle);
        let big = cycle.degree();
        let rank = self.rank();
        for total in rank as u32..=big.total() {
            for q in Degree::with_total(rank, total) {
                if q.coords().contains(&0) {
                    continue;
                }
                let hi = &q + big;
                if self.raw_window(&v, cycle, &q, &hi)? == *cycle {
                    return self.raw_segment(&v, cycle, &q);
                }
            }
        }
        unreachable!("the cycle degree itself is a period")
    }

    /// Canonical form given a minimal cycle: search the smallest prefix
    /// degree after which the path repeats with the cycle's period.
    fn canonical(&self, prefix: &Morphism, cycle: &Morphism) -> Result<EpPath, GraphError> {
        let q = cycle.degree();
        let pd = prefix.degree();
        let rank = self.rank();
        for total in 0..=pd.total() {
            for p in Degree::with_total(rank, total) {
                // σ^p(x) has preperiod (pd ∨ p) - p and period q, and so has
                // σ^(p+q)(x); two such paths agree iff they agree up to
                // preperiod + 2q
                let pre = pd.join(&p).checked_sub(&p).expect("join dominates");
                let n = &(&pre + q) + q;
                let a = self.raw_window(prefix, cycle, &p, &(&p + &n))?;
                let pq = &p + q;
                let b = self.raw_window(prefix, cycle, &pq, &(&pq + &n))?;
                if a == b {
                    let head = self.raw_segment(prefix, cycle, &pq)?;
                    let (pre, cyc) = self.factorize(&head, &p)?;
                    return Ok(EpPath { prefix: pre, cycle: cyc });
                }
            }
        }
        unreachable!("the prefix degree itself always qualifies")
    }

    pub(crate) fn ep_segment(&self, x: &EpPath, n: &Degree) -> Result<Morphism, PathError> {
        if n.rank() != self.rank() {
            return Err(GraphError::RankMismatch { expected: self.rank(), found: n.rank() }.into());
        }
        Ok(self.raw_segment(&x.prefix, &x.cycle, n)?)
    }

    pub(crate) fn ep_shift(&self, x: &EpPath, m: &Degree) -> Result<EpPath, PathError> {
        if m.rank() != self.rank() {
            return Err(GraphError::RankMismatch { expected: self.rank(), found: m.rank() }.into());
        }
        if m.is_zero() {
            return Ok(x.clone());
        }
        let s = x.prefix.degree().join(m);
        let head = self.raw_segment(&x.prefix, &x.cycle, &(&s + x.cycle.degree()))?;
        let (front, cycle) = self.factorize(&head, &s)?;
        let (_, prefix) = self.factorize(&front, m)?;
        // same tail, so the cycle degree stays minimal
        Ok(self.canonical(&prefix, &cycle)?)
    }

    pub(crate) fn ep_prefix(&self, lambda: &Morphism, x: &EpPath) -> Result<EpPath, PathError> {
        let prefix = self.compose(lambda, &x.prefix)?;
        Ok(self.canonical(&prefix, &x.cycle)?)
    }

    /// Segment comparison at `d(λ) ∨ d(λ') + d(μ) + d(ν)`, which decides
    /// equality: past the preperiods both tails are periodic, and periodic
    /// paths with periods `p`, `q` that agree up to `p + q` are equal.
    pub(crate) fn ep_equal(&self, x: &EpPath, y: &EpPath) -> Result<bool, PathError> {
        if x.range() != y.range() {
            return Ok(false);
        }
        let n = &(&x.prefix.degree().join(y.prefix.degree()) + x.cycle.degree()) + y.cycle.degree();
        Ok(self.ep_segment(x, &n)? == self.ep_segment(y, &n)?)
    }

    /// Smallest nonzero `p` with `σ^(c+p)(x) = σ^c(x)`, `c = d(prefix)`.
    pub(crate) fn ep_min_period(&self, x: &EpPath) -> Result<Degree, PathError> {
        let v = vertex_of(&x.cycle);
        let q = x.cycle.degree();
        for total in 1..=q.total() {
            for p in Degree::with_total(self.rank(), total).into_iter().rev() {
                if self.raw_window(&v, &x.cycle, &p, &(&p + q))? == x.cycle {
                    return Ok(p);
                }
            }
        }
        unreachable!("the cycle degree is a period")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn d(v: &[u32]) -> Degree {
        Degree::from_slice(v)
    }

    #[test]
    fn bflip_canonical_form() {
        let g = KGraph::validate(fixtures::bflip()).unwrap();
        let u = g.skeleton().vertex_id("u").unwrap();
        let x = g.ep_path(&g.vertex(u), &g.word(&["e", "h", "f", "g"]).unwrap()).unwrap();
        assert!(x.prefix().is_vertex());
        assert_eq!(x.cycle().degree(), &d(&[1, 2]));
        let x2 = g.ep_path(&g.word(&["e"]).unwrap(), &g.word(&["e", "h", "g"]).unwrap()).unwrap();
        assert_eq!(x, x2);
        assert_eq!(g.display(&g.ep_segment(&x, &d(&[1, 1])).unwrap()), "[e|h]");
    }

    #[test]
    fn rejects_degenerate_cycles() {
        let g = KGraph::validate(fixtures::mono2()).unwrap();
        let blue = g.word(&["b1", "b2"]).unwrap();
        assert_eq!(g.ep_periodic(&blue), Err(PathError::CycleDegreeZero { coordinate: 1 }));
        let b = KGraph::validate(fixtures::bflip()).unwrap();
        let eh = b.word(&["e", "h"]).unwrap();
        assert!(matches!(b.ep_periodic(&eh), Err(PathError::CycleNotClosed { .. })));
    }

    #[test]
    fn mono2_shift_rolls_prefix() {
        let g = KGraph::validate(fixtures::mono2()).unwrap();
        let cyc = g.word(&["b1", "r"]).unwrap();
        let z = g.ep_periodic(&cyc).unwrap();
        let b2z = g.ep_prefix(&g.word(&["b2"]).unwrap(), &z).unwrap();
        assert_eq!(b2z.prefix().len(), 1);
        assert_eq!(g.ep_shift(&b2z, &d(&[1, 0])).unwrap(), z);
        assert_eq!(g.ep_shift(&b2z, &d(&[0, 3])).unwrap(), b2z);
        assert_eq!(g.ep_prefix(&g.word(&["b1"]).unwrap(), &z).unwrap(), z);
        assert_eq!(g.ep_min_period(&z).unwrap(), d(&[1, 0]));
    }
}
