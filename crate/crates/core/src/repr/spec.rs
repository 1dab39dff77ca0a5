use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::degree::Degree;
use crate::error::{PathError, ReprError};
use crate::graph::KGraph;
use crate::morphism::Morphism;
use crate::path::{InfinitePath, OrbitMember, PathKey};
use crate::repr::setexpr::SetExpr;
use crate::repr::vector::Vector;

/// A basis index `(γ, ℓ)`: a path in the orbit of base `orbit`, and a fiber
/// `ℓ ∈ 1..=multiplicity`.
///
/// Ordering and equality use `(orbit, key, fiber)`; `path` is carried along
/// to compute with.
#[derive(Debug, Clone)]
pub struct IndexPoint {
    pub orbit: usize,
    pub key: PathKey,
    pub path: InfinitePath,
    pub fiber: u32,
}

impl PartialEq for IndexPoint {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for IndexPoint {}

impl PartialOrd for IndexPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IndexPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.orbit, &self.key, self.fiber).cmp(&(other.orbit, &other.key, other.fiber))
    }
}

#[derive(Debug, Clone)]
pub struct OrbitSpec {
    pub base: InfinitePath,
    pub multiplicity: u32,
}

/// A purely atomic permutative representation: the direct sum over the
/// declared orbits of `multiplicity` copies of the infinite-path
/// representation on that orbit, with `t_λ e_(γ,ℓ) = e_(λγ,ℓ)`.
///
/// The window fixes which basis vectors finite checks range over: the
/// points `a σ^j(ω)` with `d(a) <= window` and `j <= window`.
#[derive(Debug, Clone)]
pub struct AtomicRepSpec {
    graph: Arc<KGraph>,
    orbits: Vec<OrbitSpec>,
    window: Degree,
    key_depth: Degree,
    members: Vec<Vec<OrbitMember>>,
    basis: Vec<IndexPoint>,
}

pub(crate) fn depth_error(e: PathError) -> ReprError {
    match e {
        PathError::DepthExceeded { requested, available } => {
            ReprError::WindowExceeded(format!("segment {requested} requested, depth {available} available"))
        }
        other => other.into(),
    }
}

impl AtomicRepSpec {
    /// Lazy bases must carry depth at least `3 × window`: lazy index points
    /// are identified by their segment at `depth - 2 × window`, which leaves
    /// room for a window's worth of shifts on either side.
    pub fn new(graph: Arc<KGraph>, orbits: Vec<OrbitSpec>, window: Degree) -> Result<Self, ReprError> {
        if window.rank() != graph.rank() {
            return Err(crate::GraphError::RankMismatch { expected: graph.rank(), found: window.rank() }.into());
        }
        let mut key_depth: Option<Degree> = None;
        for (index, o) in orbits.iter().enumerate() {
            if o.multiplicity == 0 {
                return Err(ReprError::ZeroMultiplicity { index });
            }
            if let Some(depth) = o.base.depth() {
                if !(window.scale(3) <= depth) {
                    return Err(ReprError::ShallowBase { index, depth, window: window.clone() });
                }
                let k = depth.checked_sub(&window.scale(2)).expect("checked above");
                key_depth = Some(match key_depth {
                    None => k,
                    Some(prev) => prev.meet(&k),
                });
            }
        }
        for first in 0..orbits.len() {
            for second in first + 1..orbits.len() {
                match graph.in_same_orbit(&orbits[first].base, &orbits[second].base) {
                    Ok(None) => {}
                    Ok(Some(_)) => return Err(ReprError::OrbitCollision { first, second }),
                    Err(PathError::Undecided) => return Err(ReprError::UndecidedOrbits { first, second }),
                    Err(e) => return Err(e.into()),
                }
            }
        }
        let key_depth = key_depth.unwrap_or_else(|| Degree::zero(graph.rank()));
        let mut members = Vec::with_capacity(orbits.len());
        let mut basis = Vec::new();
        for (orbit, o) in orbits.iter().enumerate() {
            let found = graph.orbit_window(&o.base, &window, &key_depth).map_err(depth_error)?;
            for m in &found {
                for fiber in 1..=o.multiplicity {
                    basis.push(IndexPoint { orbit, key: m.key.clone(), path: m.path.clone(), fiber });
                }
            }
            members.push(found);
        }
        Ok(AtomicRepSpec { graph, orbits, window, key_depth, members, basis })
    }

    /// One orbit with multiplicity `multiplicity`.
    pub fn orbit_representation(
        graph: Arc<KGraph>,
        omega: InfinitePath,
        multiplicity: u32,
        window: Degree,
    ) -> Result<Self, ReprError> {
        Self::new(graph, alloc::vec![OrbitSpec { base: omega, multiplicity }], window)
    }

    pub fn graph_arc(&self) -> &Arc<KGraph> {
        &self.graph
    }

    pub fn orbits(&self) -> &[OrbitSpec] {
        &self.orbits
    }

    pub fn window(&self) -> &Degree {
        &self.window
    }

    /// Depth at which lazy index points are compared.
    pub fn key_depth(&self) -> &Degree {
        &self.key_depth
    }

    /// Window members of each orbit, with their first decomposition.
    pub fn members(&self, orbit: usize) -> &[OrbitMember] {
        &self.members[orbit]
    }

    /// The window basis, ordered by orbit, then by the first decomposition
    /// `(d(a), j)` in graded order, then by fiber.
    pub fn basis(&self) -> &[IndexPoint] {
        &self.basis
    }

    /// The index point for `path` in orbit `orbit`. The caller vouches that
    /// the path lies in that orbit.
    pub fn point(&self, orbit: usize, path: InfinitePath, fiber: u32) -> Result<IndexPoint, ReprError> {
        let multiplicity = self.orbits[orbit].multiplicity;
        if fiber == 0 || fiber > multiplicity {
            return Err(ReprError::BadFiber { fiber, multiplicity });
        }
        let key = self.graph.path_key(&path, &self.key_depth).map_err(depth_error)?;
        Ok(IndexPoint { orbit, key, path, fiber })
    }

    /// Whether `x ∈ S`.
    pub fn contains(&self, set: &SetExpr, x: &InfinitePath) -> Result<bool, ReprError> {
        set.contains(&self.graph, x, &self.key_depth).map_err(depth_error)
    }
}

/// `prefix·(cycle)^∞` or `prefix·σ^offset(generator)`.
pub fn describe_path(g: &KGraph, x: &InfinitePath) -> String {
    match x {
        InfinitePath::Ep(x) => {
            if x.prefix().is_vertex() {
                format!("{}^∞", g.display(x.cycle()))
            } else {
                format!("{}·{}^∞", g.display(x.prefix()), g.display(x.cycle()))
            }
        }
        InfinitePath::Lazy(x) => {
            format!("{}·σ^{}({})", g.display(x.prefix()), x.offset(), x.base().label())
        }
    }
}

/// Basis-level action of a permutative family `{t_λ}`; vectors are handled
/// by linear extension.
pub trait Representation {
    fn graph(&self) -> &KGraph;

    /// `t_λ e_i`, or `None` for zero.
    fn t_basis(&self, lambda: &Morphism, i: &IndexPoint) -> Result<Option<IndexPoint>, ReprError>;

    /// `t*_λ e_i`, or `None` for zero.
    fn t_star_basis(&self, lambda: &Morphism, i: &IndexPoint) -> Result<Option<IndexPoint>, ReprError>;

    /// `P(S) e_i = e_i` if the path of `i` lies in `S`, else zero.
    fn in_set(&self, set: &SetExpr, i: &IndexPoint) -> Result<bool, ReprError>;

    /// Human-readable point description for reports.
    fn describe(&self, i: &IndexPoint) -> String {
        format!("({}, fiber {})", describe_path(self.graph(), &i.path), i.fiber)
    }

    fn t_apply(&self, lambda: &Morphism, v: &Vector) -> Result<Vector, ReprError> {
        let mut out = Vector::new();
        for (i, c) in v.iter() {
            if let Some(j) = self.t_basis(lambda, i)? {
                out.add_term(j, c.clone());
            }
        }
        Ok(out)
    }

    fn t_star_apply(&self, lambda: &Morphism, v: &Vector) -> Result<Vector, ReprError> {
        let mut out = Vector::new();
        for (i, c) in v.iter() {
            if let Some(j) = self.t_star_basis(lambda, i)? {
                out.add_term(j, c.clone());
            }
        }
        Ok(out)
    }

    fn pvm_apply(&self, set: &SetExpr, v: &Vector) -> Result<Vector, ReprError> {
        let mut out = Vector::new();
        for (i, c) in v.iter() {
            if self.in_set(set, i)? {
                out.add_term(i.clone(), c.clone());
            }
        }
        Ok(out)
    }
}

impl Representation for AtomicRepSpec {
    fn graph(&self) -> &KGraph {
        &self.graph
    }

    fn t_basis(&self, lambda: &Morphism, i: &IndexPoint) -> Result<Option<IndexPoint>, ReprError> {
        if lambda.source() != i.path.range() {
            return Ok(None);
        }
        let path = self.graph.prefix(lambda, &i.path).map_err(depth_error)?;
        Ok(Some(self.point(i.orbit, path, i.fiber)?))
    }

    fn t_star_basis(&self, lambda: &Morphism, i: &IndexPoint) -> Result<Option<IndexPoint>, ReprError> {
        if lambda.range() != i.path.range() {
            return Ok(None);
        }
        let head = self.graph.path_segment(&i.path, lambda.degree()).map_err(depth_error)?;
        if &head != lambda {
            return Ok(None);
        }
        let path = self.graph.shift(&i.path, lambda.degree()).map_err(depth_error)?;
        Ok(Some(self.point(i.orbit, path, i.fiber)?))
    }

    fn in_set(&self, set: &SetExpr, i: &IndexPoint) -> Result<bool, ReprError> {
        self.contains(set, &i.path)
    }
}

/// A representation with one image of `σ̃_λ` replaced: `t_λ e_at = e_image`.
/// Used to check that verification catches broken families.
#[derive(Debug, Clone)]
pub struct Mutated<'a> {
    pub inner: &'a AtomicRepSpec,
    pub lambda: Morphism,
    pub at: IndexPoint,
    pub image: IndexPoint,
}

impl Representation for Mutated<'_> {
    fn graph(&self) -> &KGraph {
        self.inner.graph()
    }

    fn t_basis(&self, lambda: &Morphism, i: &IndexPoint) -> Result<Option<IndexPoint>, ReprError> {
        if lambda == &self.lambda && i == &self.at {
            return Ok(Some(self.image.clone()));
        }
        self.inner.t_basis(lambda, i)
    }

    fn t_star_basis(&self, lambda: &Morphism, i: &IndexPoint) -> Result<Option<IndexPoint>, ReprError> {
        self.inner.t_star_basis(lambda, i)
    }

    fn in_set(&self, set: &SetExpr, i: &IndexPoint) -> Result<bool, ReprError> {
        self.inner.in_set(set, i)
    }
}
