//! Decisions about purely atomic permutative representations: atom
//! dimensions, irreducibility, monicity, disjointness and equivalence.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{PathError, ReprError};
use crate::linalg::{self, Scalar};
use crate::path::{InfinitePath, PathKey};
use crate::repr::report::CheckReport;
use crate::repr::setexpr::SetExpr;
use crate::repr::spec::{depth_error, describe_path, AtomicRepSpec, Representation};
use crate::repr::vector::Vector;

fn same_orbit(a: &AtomicRepSpec, x: &InfinitePath, y: &InfinitePath) -> Result<bool, ReprError> {
    match a.graph().in_same_orbit(x, y) {
        Ok(w) => Ok(w.is_some()),
        Err(PathError::Undecided) => Err(ReprError::Undecided),
        Err(e) => Err(depth_error(e)),
    }
}

/// `dim Range P({x})`: the multiplicity of the orbit containing `x`, or 0.
pub fn atom_dimension(spec: &AtomicRepSpec, x: &InfinitePath) -> Result<u32, ReprError> {
    for o in spec.orbits() {
        if same_orbit(spec, &o.base, x)? {
            return Ok(o.multiplicity);
        }
    }
    Ok(0)
}

/// Window checks that the representation is purely atomic:
///
/// - `in-declared-orbit`: each basis point's path lies in its orbit;
/// - `atom-fiber`: each base atom carries exactly `multiplicity` basis vectors;
/// - `atom-sum`: `Σ_x P({x}) e = e` over the distinct window atoms.
pub fn verify_purely_atomic(spec: &AtomicRepSpec) -> Result<CheckReport, ReprError> {
    let mut report = CheckReport::new();
    for i in spec.basis() {
        let ok = same_orbit(spec, &spec.orbits()[i.orbit].base, &i.path);
        report.record("in-declared-orbit", ok, || format!("orbit {}", i.orbit), || spec.describe(i));
    }
    for (index, o) in spec.orbits().iter().enumerate() {
        let ok = (|| {
            let mut found = 0;
            for fiber in 1..=o.multiplicity {
                let p = spec.point(index, o.base.clone(), fiber)?;
                if spec.basis().contains(&p) {
                    found += 1;
                }
            }
            Ok(found == o.multiplicity)
        })();
        report.record(
            "atom-fiber",
            ok,
            || format!("orbit {index}, multiplicity {}", o.multiplicity),
            || describe_path(spec.graph(), &o.base),
        );
    }
    // Atom membership is key equality, so only atoms sharing the key of `e`
    // can contribute to the sum.
    let mut atoms: BTreeMap<(usize, &PathKey), Vec<&InfinitePath>> = BTreeMap::new();
    for i in spec.basis() {
        let slot = atoms.entry((i.orbit, &i.key)).or_default();
        if slot.is_empty() {
            slot.push(&i.path);
        }
    }
    for i in spec.basis() {
        let e = Vector::basis(i.clone());
        let ok = (|| {
            let mut sum = Vector::new();
            for (_, xs) in atoms.range((i.orbit, &i.key)..=(i.orbit, &i.key)) {
                for x in xs {
                    sum.add_assign(&spec.pvm_apply(&SetExpr::Atom((*x).clone()), &e)?);
                }
            }
            Ok(sum == e)
        })();
        report.record("atom-sum", ok, || "Σ P({x})".into(), || spec.describe(i));
    }
    Ok(report)
}

/// Irreducible iff there is one orbit and its atom is one-dimensional.
pub fn is_irreducible(spec: &AtomicRepSpec) -> bool {
    spec.orbits().len() == 1 && spec.orbits()[0].multiplicity == 1
}

/// Monic iff every atom is one-dimensional.
pub fn is_monic(spec: &AtomicRepSpec) -> bool {
    spec.orbits().iter().all(|o| o.multiplicity == 1)
}

/// No orbit of `a` meets an orbit of `b`.
pub fn are_disjoint(a: &AtomicRepSpec, b: &AtomicRepSpec) -> Result<bool, ReprError> {
    if a.graph().skeleton() != b.graph().skeleton() {
        return Err(ReprError::GraphMismatch);
    }
    for x in a.orbits() {
        for y in b.orbits() {
            if same_orbit(a, &x.base, &y.base)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    /// The supports differ: some orbit of one side is not an orbit of the other.
    Orbits,
    /// The supports agree but some atom has different dimensions.
    Multiplicity,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reason::Orbits => "orbits",
            Reason::Multiplicity => "multiplicity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    pub equivalent: bool,
    pub reason: Option<Reason>,
    pub matched_orbits: usize,
    /// `matching[i]` is the orbit of `b` containing orbit `i` of `a`.
    pub matching: Vec<Option<usize>>,
}

/// Equivalent iff the orbits match bijectively and the multiplicities
/// agree on matched orbits.
pub fn unitarily_equivalent(a: &AtomicRepSpec, b: &AtomicRepSpec) -> Result<EquivalenceVerdict, ReprError> {
    if a.graph().skeleton() != b.graph().skeleton() {
        return Err(ReprError::GraphMismatch);
    }
    let mut matching = Vec::with_capacity(a.orbits().len());
    for x in a.orbits() {
        let mut hit = None;
        for (j, y) in b.orbits().iter().enumerate() {
            if same_orbit(a, &x.base, &y.base)? {
                hit = Some(j);
                break;
            }
        }
        matching.push(hit);
    }
    let matched_orbits = matching.iter().flatten().count();
    let bijective = matched_orbits == a.orbits().len() && matched_orbits == b.orbits().len();
    let reason = if !bijective {
        Some(Reason::Orbits)
    } else if matching
        .iter()
        .enumerate()
        .any(|(i, j)| a.orbits()[i].multiplicity != b.orbits()[j.expect("bijective")].multiplicity)
    {
        Some(Reason::Multiplicity)
    } else {
        None
    };
    Ok(EquivalenceVerdict { equivalent: reason.is_none(), reason, matched_orbits, matching })
}

/// `ξ = Σ_n 2^{-n} e_{i_n}` over the window basis, with the rank of
/// `{P(Z(λ)) ξ : d(λ) <= window}` inside the window.
#[derive(Debug, Clone)]
pub struct CyclicVector {
    pub xi: Vector,
    pub rank: usize,
    pub dimension: usize,
}

impl CyclicVector {
    /// The cylinder span fills the window.
    pub fn is_cyclic(&self) -> bool {
        self.rank == self.dimension
    }
}

pub fn cyclic_vector(spec: &AtomicRepSpec) -> Result<CyclicVector, ReprError> {
    let g = spec.graph();
    let basis = spec.basis();
    let mut xi = Vector::new();
    for (n, i) in basis.iter().enumerate() {
        xi.add_term(i.clone(), linalg::inverse_power_of_two(n as u32 + 1));
    }
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for n in spec.window().box_iter() {
        for lambda in g.enumerate_all(&n)? {
            let v = spec.pvm_apply(&SetExpr::Cylinder(lambda), &xi)?;
            if !v.is_zero() {
                rows.push(basis.iter().map(|i| v.coefficient(i)).collect());
            }
        }
    }
    Ok(CyclicVector { xi, rank: linalg::rank(&rows), dimension: basis.len() })
}

/// `‖P({x}) ξ‖²`, the mass the measure of a monic representation puts on
/// the atom `x`.
pub fn atom_mass(spec: &AtomicRepSpec, xi: &Vector, x: &InfinitePath) -> Result<Scalar, ReprError> {
    let v = spec.pvm_apply(&SetExpr::Atom(x.clone()), xi)?;
    let mut total = linalg::scalar(0);
    for (_, c) in v.iter() {
        total += c * c.conj();
    }
    Ok(total)
}
