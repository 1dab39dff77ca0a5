use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::degree::Degree;
use crate::error::PathError;
use crate::graph::KGraph;
use crate::morphism::Morphism;
use crate::path::{InfinitePath, PathEquality};

/// A Borel set from the algebra generated by cylinders and tracked atoms,
/// closed under the prefixing and shift maps.
#[derive(Debug, Clone)]
pub enum SetExpr {
    Full,
    /// `Z(λ)`.
    Cylinder(Morphism),
    /// `{x}`.
    Atom(InfinitePath),
    Complement(Box<SetExpr>),
    Union(Vec<SetExpr>),
    Intersection(Vec<SetExpr>),
    /// `σ_λ(S) = {λz : z ∈ S, r(z) = s(λ)}`.
    Prefixed(Morphism, Box<SetExpr>),
    /// `σ_λ^{-1}(S) = {z : r(z) = s(λ), λz ∈ S}`.
    PrefixPreimage(Morphism, Box<SetExpr>),
    /// `(σ^n)^{-1}(S) = {z : σ^n(z) ∈ S}`.
    ShiftPreimage(Degree, Box<SetExpr>),
}

impl SetExpr {
    pub fn empty() -> Self {
        SetExpr::Complement(Box::new(SetExpr::Full))
    }

    pub fn complement(self) -> Self {
        SetExpr::Complement(Box::new(self))
    }

    pub fn prefixed(lambda: Morphism, s: SetExpr) -> Self {
        SetExpr::Prefixed(lambda, Box::new(s))
    }

    pub fn prefix_preimage(lambda: Morphism, s: SetExpr) -> Self {
        SetExpr::PrefixPreimage(lambda, Box::new(s))
    }

    pub fn shift_preimage(n: Degree, s: SetExpr) -> Self {
        SetExpr::ShiftPreimage(n, Box::new(s))
    }

    /// Pointwise membership. Atoms are matched exactly for eventually
    /// periodic paths. Lazy paths are compared on their whole common depth,
    /// never less than `key_depth`: points pushed outside the window can
    /// agree up to `key_depth` and still differ.
    pub fn contains(&self, g: &KGraph, x: &InfinitePath, key_depth: &Degree) -> Result<bool, PathError> {
        Ok(match self {
            SetExpr::Full => true,
            SetExpr::Cylinder(lambda) => in_cylinder(g, lambda, x)?,
            SetExpr::Atom(y) => match g.paths_equal(x, y)? {
                PathEquality::Equal => true,
                PathEquality::NotEqual => false,
                PathEquality::EqualUpToDepth(d) if key_depth <= &d => true,
                PathEquality::EqualUpToDepth(d) => {
                    return Err(PathError::DepthExceeded { requested: key_depth.clone(), available: d })
                }
            },
            SetExpr::Complement(s) => !s.contains(g, x, key_depth)?,
            SetExpr::Union(parts) => {
                for p in parts {
                    if p.contains(g, x, key_depth)? {
                        return Ok(true);
                    }
                }
                false
            }
            SetExpr::Intersection(parts) => {
                for p in parts {
                    if !p.contains(g, x, key_depth)? {
                        return Ok(false);
                    }
                }
                true
            }
            SetExpr::Prefixed(lambda, s) => {
                in_cylinder(g, lambda, x)? && s.contains(g, &g.shift(x, lambda.degree())?, key_depth)?
            }
            SetExpr::PrefixPreimage(lambda, s) => {
                x.range() == lambda.source() && s.contains(g, &g.prefix(lambda, x)?, key_depth)?
            }
            SetExpr::ShiftPreimage(n, s) => s.contains(g, &g.shift(x, n)?, key_depth)?,
        })
    }
}

fn in_cylinder(g: &KGraph, lambda: &Morphism, x: &InfinitePath) -> Result<bool, PathError> {
    Ok(x.range() == lambda.range() && &g.path_segment(x, lambda.degree())? == lambda)
}
