//! Intertwiners between equivalent purely atomic representations, induced
//! from a unitary on the fibers of each base atom.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::degree::Degree;
use crate::error::ReprError;
use crate::linalg::Matrix;
use crate::morphism::Morphism;
use crate::path::InfinitePath;
use crate::repr::ck::morphisms_of;
use crate::repr::decide::unitarily_equivalent;
use crate::repr::identities::distinct_paths;
use crate::repr::report::CheckReport;
use crate::repr::setexpr::SetExpr;
use crate::repr::spec::{AtomicRepSpec, IndexPoint, Representation};
use crate::repr::vector::Vector;

/// `U: H_a → H_b`. On orbit `i` of `a`, matched to orbit `matching[i]` of
/// `b`, `U_γ = t̃_a t̃*_{ω(0,j)} U_ω t_{ω(0,j)} t*_a` for any decomposition
/// `γ = a σ^j(ω)` of a point over the base `ω` of orbit `i`.
#[derive(Debug, Clone)]
pub struct Intertwiner<'a> {
    a: &'a AtomicRepSpec,
    b: &'a AtomicRepSpec,
    matching: Vec<usize>,
    unitaries: Vec<Matrix>,
}

impl<'a> Intertwiner<'a> {
    /// `unitaries[i]` acts on the fibers of the base atom of orbit `i` of
    /// `a`: `U_ω e_(ω,ℓ) = Σ_ℓ' u[ℓ'][ℓ] ẽ_(ω,ℓ')`.
    pub fn build(a: &'a AtomicRepSpec, b: &'a AtomicRepSpec, unitaries: Vec<Matrix>) -> Result<Self, ReprError> {
        let verdict = unitarily_equivalent(a, b)?;
        if !verdict.equivalent {
            if let Some(crate::repr::decide::Reason::Multiplicity) = verdict.reason {
                let (i, j) = verdict
                    .matching
                    .iter()
                    .enumerate()
                    .find_map(|(i, j)| {
                        let j = (*j)?;
                        (a.orbits()[i].multiplicity != b.orbits()[j].multiplicity).then_some((i, j))
                    })
                    .expect("multiplicity reason has a witness");
                return Err(ReprError::MultiplicityMismatch {
                    left: a.orbits()[i].multiplicity,
                    right: b.orbits()[j].multiplicity,
                });
            }
            return Err(ReprError::OrbitMismatch);
        }
        let matching: Vec<usize> = verdict.matching.into_iter().map(|j| j.expect("equivalent")).collect();
        if unitaries.len() != a.orbits().len() {
            let m = a.orbits().first().map_or(0, |o| o.multiplicity as usize);
            return Err(ReprError::BadUnitaryShape {
                rows: unitaries.len(),
                cols: 0,
                expected_rows: a.orbits().len(),
                expected_cols: m,
            });
        }
        for (o, u) in a.orbits().iter().zip(&unitaries) {
            let m = o.multiplicity as usize;
            if u.rows() != m || u.cols() != m {
                return Err(ReprError::BadUnitaryShape {
                    rows: u.rows(),
                    cols: u.cols(),
                    expected_rows: m,
                    expected_cols: m,
                });
            }
            if !u.is_unitary() {
                return Err(ReprError::NotUnitary);
            }
        }
        Ok(Intertwiner { a, b, matching, unitaries })
    }

    /// `U_ω = 1` on every orbit.
    pub fn identity(a: &'a AtomicRepSpec, b: &'a AtomicRepSpec) -> Result<Self, ReprError> {
        let us = a.orbits().iter().map(|o| Matrix::identity(o.multiplicity as usize)).collect();
        Self::build(a, b, us)
    }

    pub fn matching(&self) -> &[usize] {
        &self.matching
    }

    /// `U e_(γ,ℓ) = Σ_ℓ' u[ℓ'][ℓ] ẽ_(γ,ℓ')`, the value every decomposition
    /// of `γ` gives for a permutative pair.
    pub fn apply(&self, v: &Vector) -> Result<Vector, ReprError> {
        let mut out = Vector::new();
        for (i, c) in v.iter() {
            let u = &self.unitaries[i.orbit];
            let target = self.matching[i.orbit];
            for row in 0..u.rows() {
                let p = self.b.point(target, i.path.clone(), row as u32 + 1)?;
                out.add_term(p, u.get(row, i.fiber as usize - 1) * c);
            }
        }
        Ok(out)
    }

    /// `U* ẽ_(γ,ℓ') = Σ_ℓ conj(u[ℓ'][ℓ]) e_(γ,ℓ)`.
    pub fn apply_adjoint(&self, v: &Vector) -> Result<Vector, ReprError> {
        let mut out = Vector::new();
        for (i, c) in v.iter() {
            let source = self
                .matching
                .iter()
                .position(|&j| j == i.orbit)
                .ok_or(ReprError::OrbitMismatch)?;
            let u = &self.unitaries[source];
            for col in 0..u.cols() {
                let p = self.a.point(source, i.path.clone(), col as u32 + 1)?;
                out.add_term(p, u.get(i.fiber as usize - 1, col).conj() * c);
            }
        }
        Ok(out)
    }

    /// `U_ω` applied to a vector supported on the base atom of `orbit`.
    fn apply_base(&self, orbit: usize, v: &Vector) -> Result<Vector, ReprError> {
        let omega = &self.a.orbits()[orbit].base;
        let u = &self.unitaries[orbit];
        let mut out = Vector::new();
        for (i, c) in v.iter() {
            if !self.a.in_set(&SetExpr::Atom(omega.clone()), i)? {
                return Err(ReprError::WindowExceeded(format!(
                    "{} is not on the base atom",
                    self.a.describe(i)
                )));
            }
            for row in 0..u.rows() {
                let p = self.b.point(self.matching[orbit], omega.clone(), row as u32 + 1)?;
                out.add_term(p, u.get(row, i.fiber as usize - 1) * c);
            }
        }
        Ok(out)
    }

    /// `t̃_a t̃*_{ω(0,j)} U_ω t_{ω(0,j)} t*_a e_i`, computed operator by operator.
    pub fn apply_via(&self, i: &IndexPoint, a: &Morphism, j: &Degree) -> Result<Vector, ReprError> {
        let omega = &self.a.orbits()[i.orbit].base;
        let head = self.a.graph().path_segment(omega, j).map_err(crate::repr::spec::depth_error)?;
        let e = Vector::basis(i.clone());
        let v = self.a.t_star_apply(a, &e)?;
        let v = self.a.t_apply(&head, &v)?;
        let v = self.apply_base(i.orbit, &v)?;
        let v = self.b.t_star_apply(&head, &v)?;
        self.b.t_apply(a, &v)
    }

    /// Pointwise checks on samples from `a` and from `b`:
    ///
    /// - `t-intertwine`: `U t_λ e = t̃_λ U e`, and `t*-intertwine` likewise;
    /// - `adjoint-intertwine`: `U* t̃_λ f = t_λ U* f` and `U* t̃*_λ f = t*_λ U* f`;
    /// - `atom-intertwine`: `P̃({γ}) U e = U P({γ}) e` for sampled atoms `γ`;
    /// - `well-defined`: every window decomposition of a sampled point gives
    ///   the same image, equal to [`Intertwiner::apply`];
    /// - `isometry`: `U* U e = e` and `U U* f = f`.
    pub fn verify(
        &self,
        sample_a: &[IndexPoint],
        sample_b: &[IndexPoint],
        degrees: &[Degree],
    ) -> Result<CheckReport, ReprError> {
        let g = self.a.graph();
        let ms = morphisms_of(g, degrees)?;
        let atoms = distinct_paths(sample_a);
        let mut report = CheckReport::new();
        for i in sample_a {
            let e = Vector::basis(i.clone());
            let pt = || self.a.describe(i);
            let ue = self.apply(&e)?;
            for l in &ms {
                let ok = (|| Ok(self.apply(&self.a.t_apply(l, &e)?)? == self.b.t_apply(l, &ue)?))();
                report.record("t-intertwine", ok, || format!("λ = {}", g.display(l)), pt);
                let ok = (|| Ok(self.apply(&self.a.t_star_apply(l, &e)?)? == self.b.t_star_apply(l, &ue)?))();
                report.record("t*-intertwine", ok, || format!("λ = {}", g.display(l)), pt);
            }
            for x in &atoms {
                let atom = SetExpr::Atom(x.clone());
                let ok = (|| Ok(self.b.pvm_apply(&atom, &ue)? == self.apply(&self.a.pvm_apply(&atom, &e)?)?))();
                report.record("atom-intertwine", ok, || format!("γ = {}", crate::repr::spec::describe_path(g, x)), pt);
            }
            let ok = self.well_defined_at(i, &ue);
            report.record("well-defined", ok, || "all decompositions".into(), pt);
            let ok = (|| Ok(self.apply_adjoint(&ue)? == e))();
            report.record("isometry", ok, || "U* U".into(), pt);
        }
        for i in sample_b {
            let f = Vector::basis(i.clone());
            let pt = || self.b.describe(i);
            let uf = self.apply_adjoint(&f)?;
            for l in &ms {
                let ok = (|| {
                    Ok(self.apply_adjoint(&self.b.t_apply(l, &f)?)? == self.a.t_apply(l, &uf)?
                        && self.apply_adjoint(&self.b.t_star_apply(l, &f)?)? == self.a.t_star_apply(l, &uf)?)
                })();
                report.record("adjoint-intertwine", ok, || format!("λ = {}", g.display(l)), pt);
            }
            let ok = (|| Ok(self.apply(&uf)? == f))();
            report.record("isometry", ok, || "U U*".into(), pt);
        }
        Ok(report)
    }

    fn well_defined_at(&self, i: &IndexPoint, expected: &Vector) -> Result<bool, ReprError> {
        let omega: &InfinitePath = &self.a.orbits()[i.orbit].base;
        let g = self.a.graph();
        let ds = g
            .decompositions(omega, &i.path, self.a.window(), self.a.key_depth())
            .map_err(crate::repr::spec::depth_error)?;
        let mut images = Vec::with_capacity(ds.len());
        for (a, j) in &ds {
            images.push(self.apply_via(i, a, j)?);
        }
        if images.iter().all(|v| v == expected) {
            return Ok(true);
        }
        let decompositions: Vec<String> = ds.iter().map(|(a, j)| format!("{}·σ^{j}", g.display(a))).collect();
        Err(ReprError::NotWellDefined { point: self.a.describe(i), decompositions })
    }
}
