//! The infinite path space `Λ^∞`.
//!
//! Eventually periodic paths ([`EpPath`]) are exact: they are stored in a
//! canonical form, so two of them are equal as paths exactly when they are
//! equal as values. Lazy paths ([`LazyPath`]) wrap a segment generator with a
//! declared depth; questions about them are answered up to that depth and
//! say so in their verdicts.

mod ep;
mod lazy;
mod orbit;

pub use ep::EpPath;
pub use lazy::{thue_morse_bit, LazyPath, PathGenerator, ThueMorse};
pub use orbit::{GroupoidWitness, OrbitMember, PathKey};

use alloc::vec::Vec;

use crate::degree::Degree;
use crate::error::PathError;
use crate::graph::KGraph;
use crate::morphism::Morphism;
use crate::skeleton::VertexId;

/// An element of `Λ^∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InfinitePath {
    Ep(EpPath),
    Lazy(LazyPath),
}

impl InfinitePath {
    pub fn range(&self) -> VertexId {
        match self {
            InfinitePath::Ep(x) => x.range(),
            InfinitePath::Lazy(x) => x.range(),
        }
    }

    /// Largest degree up to which segments are available; `None` means
    /// unbounded.
    pub fn depth(&self) -> Option<Degree> {
        match self {
            InfinitePath::Ep(_) => None,
            InfinitePath::Lazy(x) => Some(x.depth()),
        }
    }

    pub fn as_ep(&self) -> Option<&EpPath> {
        match self {
            InfinitePath::Ep(x) => Some(x),
            InfinitePath::Lazy(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, InfinitePath::Ep(_))
    }
}

impl From<EpPath> for InfinitePath {
    fn from(x: EpPath) -> Self {
        InfinitePath::Ep(x)
    }
}

impl From<LazyPath> for InfinitePath {
    fn from(x: LazyPath) -> Self {
        InfinitePath::Lazy(x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathEquality {
    Equal,
    NotEqual,
    /// Segments agree up to this degree; nothing is known beyond it.
    EqualUpToDepth(Degree),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Periodicity {
    /// `σ^(c+p)(x) = σ^c(x)` for some `c`, exactly.
    Periodic(Degree),
    /// No two shifts `σ^m(x)`, `σ^n(x)` with `m != n <= depth` coincide.
    AperiodicUpTo(Degree),
    /// `σ^m(x)` and `σ^n(x)` agree on every segment up to `compared`; the
    /// available depth cannot settle whether they are equal.
    PeriodicUpTo { m: Degree, n: Degree, compared: Degree },
}

impl KGraph {
    /// `x(0, n)`.
    pub fn path_segment(&self, x: &InfinitePath, n: &Degree) -> Result<Morphism, PathError> {
        match x {
            InfinitePath::Ep(x) => self.ep_segment(x, n),
            InfinitePath::Lazy(x) => self.lazy_segment(x, n),
        }
    }

    /// `x(p, q)`.
    pub fn path_window(&self, x: &InfinitePath, p: &Degree, q: &Degree) -> Result<Morphism, PathError> {
        let head = self.path_segment(x, q)?;
        Ok(self.factorize(&head, p)?.1)
    }

    /// `σ^m(x)`.
    pub fn shift(&self, x: &InfinitePath, m: &Degree) -> Result<InfinitePath, PathError> {
        Ok(match x {
            InfinitePath::Ep(x) => self.ep_shift(x, m)?.into(),
            InfinitePath::Lazy(x) => self.lazy_shift(x, m)?.into(),
        })
    }

    /// `σ_λ(x) = λx`.
    pub fn prefix(&self, lambda: &Morphism, x: &InfinitePath) -> Result<InfinitePath, PathError> {
        Ok(match x {
            InfinitePath::Ep(x) => self.ep_prefix(lambda, x)?.into(),
            InfinitePath::Lazy(x) => self.lazy_prefix(lambda, x)?.into(),
        })
    }

    pub fn paths_equal(&self, x: &InfinitePath, y: &InfinitePath) -> Result<PathEquality, PathError> {
        if x.range() != y.range() {
            return Ok(PathEquality::NotEqual);
        }
        match (x, y) {
            (InfinitePath::Ep(a), InfinitePath::Ep(b)) => Ok(if self.ep_equal(a, b)? {
                PathEquality::Equal
            } else {
                PathEquality::NotEqual
            }),
            (InfinitePath::Lazy(a), InfinitePath::Lazy(b)) if a.same_structure(b) => Ok(PathEquality::Equal),
            _ => {
                let depth = match (x.depth(), y.depth()) {
                    (Some(a), Some(b)) => a.meet(&b),
                    (Some(a), None) | (None, Some(a)) => a,
                    (None, None) => unreachable!("both exact handled above"),
                };
                if self.path_segment(x, &depth)? == self.path_segment(y, &depth)? {
                    Ok(PathEquality::EqualUpToDepth(depth))
                } else {
                    Ok(PathEquality::NotEqual)
                }
            }
        }
    }

    /// Periodicity verdict. Exact paths always get a nonzero period, the
    /// smallest in graded order with `(1,0,..)` before `(0,1,..)`. Lazy paths
    /// are compared on the segments their depth allows.
    pub fn is_aperiodic(&self, x: &InfinitePath, depth: &Degree) -> Result<Periodicity, PathError> {
        match x {
            InfinitePath::Ep(x) => Ok(Periodicity::Periodic(self.ep_min_period(x)?)),
            InfinitePath::Lazy(x) => self.lazy_periodicity(x, depth),
        }
    }

    /// Every eventually periodic path with prefix degree at most
    /// `prefix_bound` and cycle degree at most `cycle_bound`, without
    /// duplicates, sorted.
    pub fn ep_paths(&self, prefix_bound: &Degree, cycle_bound: &Degree) -> Result<Vec<EpPath>, PathError> {
        let mut out = alloc::collections::BTreeSet::new();
        let ones = Degree::splat(self.rank(), 1);
        for c in cycle_bound.box_iter() {
            if !(ones <= c) {
                continue;
            }
            for mu in self.enumerate_all(&c)? {
                if mu.range() != mu.source() {
                    continue;
                }
                for n in prefix_bound.box_iter() {
                    for lambda in self.enumerate_all(&n)? {
                        if lambda.source() == mu.range() {
                            out.insert(self.ep_path(&lambda, &mu)?);
                        }
                    }
                }
            }
        }
        Ok(out.into_iter().collect())
    }
}
