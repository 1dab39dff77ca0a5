use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::degree::{graded_cmp, Degree};
use crate::error::PathError;
use crate::graph::KGraph;
use crate::morphism::Morphism;
use crate::path::{EpPath, InfinitePath, PathEquality};

/// Identity of a path for deduplication and ordering: the canonical form for
/// exact paths, the segment at a fixed depth for lazy ones.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathKey {
    Exact(EpPath),
    Window(Morphism),
}

/// A verified pair of shifts with `σ^shift_x(x) = σ^shift_y(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidWitness {
    x: InfinitePath,
    shift_x: Degree,
    y: InfinitePath,
    shift_y: Degree,
}

impl GroupoidWitness {
    /// Checks the shifts exactly; lazy paths are accepted only when the
    /// shifted paths coincide structurally.
    pub fn new(
        g: &KGraph,
        x: InfinitePath,
        shift_x: Degree,
        y: InfinitePath,
        shift_y: Degree,
    ) -> Result<Self, PathError> {
        let a = g.shift(&x, &shift_x)?;
        let b = g.shift(&y, &shift_y)?;
        if g.paths_equal(&a, &b)? != PathEquality::Equal {
            return Err(PathError::NotAWitness);
        }
        Ok(GroupoidWitness { x, shift_x, y, shift_y })
    }

    pub fn x(&self) -> &InfinitePath {
        &self.x
    }

    pub fn y(&self) -> &InfinitePath {
        &self.y
    }

    pub fn shift_x(&self) -> &Degree {
        &self.shift_x
    }

    pub fn shift_y(&self) -> &Degree {
        &self.shift_y
    }

    /// The groupoid element's degree `m - ℓ ∈ Z^k`.
    pub fn lag(&self) -> Vec<i64> {
        self.shift_x.lag(&self.shift_y)
    }
}

/// One element `a σ^j(ω)` found while enumerating an orbit, with the first
/// decomposition that produced it.
#[derive(Debug, Clone)]
pub struct OrbitMember {
    pub path: InfinitePath,
    pub key: PathKey,
    pub a: Morphism,
    pub j: Degree,
}

/// Largest witness total for which the minimal-witness search runs.
const WITNESS_SEARCH_LIMIT: u32 = 8;

impl KGraph {
    pub fn path_key(&self, x: &InfinitePath, key_depth: &Degree) -> Result<PathKey, PathError> {
        Ok(match x {
            InfinitePath::Ep(x) => PathKey::Exact(x.clone()),
            InfinitePath::Lazy(_) => PathKey::Window(self.path_segment(x, key_depth)?),
        })
    }

    /// Every shift of the periodic tail reachable by unit shifts, with the
    /// shift that first reached it.
    fn tail_closure(&self, tail: &EpPath) -> Result<BTreeMap<EpPath, Degree>, PathError> {
        let mut seen = BTreeMap::new();
        let mut queue = VecDeque::new();
        seen.insert(tail.clone(), Degree::zero(self.rank()));
        queue.push_back(tail.clone());
        while let Some(z) = queue.pop_front() {
            let at = seen[&z].clone();
            for c in 0..self.rank() {
                let e = Degree::unit(self.rank(), c);
                let next = self.ep_shift(&z, &e)?;
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), &at + &e);
                    queue.push_back(next);
                }
            }
        }
        Ok(seen)
    }

    /// Decide whether `x` and `y` are shift-tail equivalent.
    ///
    /// Exact paths are decided completely: the shifts of a periodic tail form
    /// a finite set, closed under the unit shifts, so two paths share an
    /// orbit iff the closures of their tails meet. Lazy paths over the same
    /// generator get the structural witness; anything else is `Undecided`.
    pub fn in_same_orbit(&self, x: &InfinitePath, y: &InfinitePath) -> Result<Option<GroupoidWitness>, PathError> {
        match (x, y) {
            (InfinitePath::Ep(a), InfinitePath::Ep(b)) => {
                let ca = self.tail_closure(&a.tail())?;
                let cb = self.tail_closure(&b.tail())?;
                let mut best: Option<(Degree, Degree)> = None;
                for (z, sa) in &ca {
                    if let Some(sb) = cb.get(z) {
                        let m = a.prefix().degree() + sa;
                        let l = b.prefix().degree() + sb;
                        let better = match &best {
                            None => true,
                            Some((bm, bl)) => (m.total() + l.total(), m.coords(), l.coords())
                                < (bm.total() + bl.total(), bm.coords(), bl.coords()),
                        };
                        if better {
                            best = Some((m, l));
                        }
                    }
                }
                let Some((m, l)) = best else { return Ok(None) };
                let (m, l) = self.smallest_witness(x, y, m, l)?;
                Ok(Some(GroupoidWitness::new(self, x.clone(), m, y.clone(), l)?))
            }
            (InfinitePath::Lazy(a), InfinitePath::Lazy(b)) if a.same_base(b) => {
                // x = α σ^s(z), y = β σ^t(z): σ^(d(α)+t)(x) = σ^(s+t)(z) = σ^(d(β)+s)(y)
                let m = a.prefix().degree() + b.offset();
                let l = b.prefix().degree() + a.offset();
                Ok(Some(GroupoidWitness::new(self, x.clone(), m, y.clone(), l)?))
            }
            _ => Err(PathError::Undecided),
        }
    }

    /// Search pairs of smaller total than a known witness, in graded order.
    fn smallest_witness(
        &self,
        x: &InfinitePath,
        y: &InfinitePath,
        m: Degree,
        l: Degree,
    ) -> Result<(Degree, Degree), PathError> {
        let limit = m.total() + l.total();
        if limit == 0 || limit > WITNESS_SEARCH_LIMIT {
            return Ok((m, l));
        }
        let rank = self.rank();
        for total in 0..limit {
            for mt in 0..=total {
                for mm in Degree::with_total(rank, mt) {
                    let sx = self.shift(x, &mm)?;
                    for ll in Degree::with_total(rank, total - mt) {
                        let sy = self.shift(y, &ll)?;
                        if self.paths_equal(&sx, &sy)? == PathEquality::Equal {
                            return Ok((mm, ll));
                        }
                    }
                }
            }
        }
        Ok((m, l))
    }

    /// All distinct `a σ^j(ω)` with `d(a) <= bound` and `j <= bound`, each
    /// with its first decomposition in the order (degree of `a` graded, then
    /// `j` graded). Lazy paths are identified by their segment at
    /// `key_depth`.
    pub fn orbit_window(
        &self,
        omega: &InfinitePath,
        bound: &Degree,
        key_depth: &Degree,
    ) -> Result<Vec<OrbitMember>, PathError> {
        let mut shifts: Vec<(Degree, InfinitePath)> = Vec::new();
        let mut shift_keys = BTreeSet::new();
        for j in bound.graded_box() {
            let z = self.shift(omega, &j)?;
            if shift_keys.insert(self.path_key(&z, key_depth)?) {
                shifts.push((j, z));
            }
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for n in bound.graded_box() {
            let prefixes = self.enumerate_all(&n)?;
            for (j, z) in &shifts {
                for a in prefixes.iter().filter(|a| a.source() == z.range()) {
                    let path = self.prefix(a, z)?;
                    let key = self.path_key(&path, key_depth)?;
                    if seen.insert(key.clone()) {
                        out.push(OrbitMember { path, key, a: a.clone(), j: j.clone() });
                    }
                }
            }
        }
        Ok(out)
    }

    /// The distinct members of [`KGraph::orbit_window`]. Lazy paths are
    /// compared at the depth every member is guaranteed to have.
    pub fn orbit_enumerate(&self, omega: &InfinitePath, bound: &Degree) -> Result<Vec<InfinitePath>, PathError> {
        let key_depth = match omega.depth() {
            None => Degree::zero(self.rank()),
            Some(depth) => depth.checked_sub(bound).ok_or(PathError::DepthExceeded {
                requested: bound.clone(),
                available: depth.clone(),
            })?,
        };
        Ok(self.orbit_window(omega, bound, &key_depth)?.into_iter().map(|m| m.path).collect())
    }

    /// Every decomposition `γ = a σ^j(ω)` with `d(a) <= bound`, `j <= bound`.
    pub fn decompositions(
        &self,
        omega: &InfinitePath,
        gamma: &InfinitePath,
        bound: &Degree,
        key_depth: &Degree,
    ) -> Result<Vec<(Morphism, Degree)>, PathError> {
        let target = self.path_key(gamma, key_depth)?;
        let mut out = Vec::new();
        let mut degrees = bound.graded_box();
        degrees.sort_by(graded_cmp);
        for j in &degrees {
            let z = self.shift(omega, j)?;
            for n in &degrees {
                for a in self.enumerate(gamma.range(), n)? {
                    if a.source() != z.range() {
                        continue;
                    }
                    if self.path_key(&self.prefix(&a, &z)?, key_depth)? == target {
                        out.push((a, j.clone()));
                    }
                }
            }
        }
        Ok(out)
    }
}
