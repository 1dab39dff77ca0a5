//! Pointwise operator identities between the generators and the
//! projection valued measure `P(Z(λ)) = t_λ t*_λ`.

use alloc::format;
use alloc::vec::Vec;

use crate::degree::Degree;
use crate::error::ReprError;
use crate::path::InfinitePath;
use crate::repr::ck::morphisms_of;
use crate::repr::memo::Memo;
use crate::repr::report::CheckReport;
use crate::repr::setexpr::SetExpr;
use crate::repr::spec::{describe_path, IndexPoint, Representation};
use crate::repr::vector::Vector;

/// For `λ, η` with listed degrees and each sampled `e`:
///
/// - `pvm-prefix`: `t_λ P(Z(η)) t*_λ = P(σ_λ(Z(η)))` when `s(λ) = r(η)`;
/// - `pvm-partition`: `Σ_{λ ∈ r(η)Λ^n} t_λ P(σ_λ^{-1}(Z(η))) t*_λ = P(Z(η))`;
/// - `pvm-prefix-preimage`: `t_λ P(σ_λ^{-1}(Z(η))) = P(Z(η)) t_λ` when `r(λ) = r(η)`;
/// - `pvm-shift-preimage`: `t_λ P(Z(η)) = P((σ^n)^{-1}(Z(η))) t_λ`, `n = d(λ)`;
///
/// and for each atom `ω`:
///
/// - `atom-prefix`: `t_λ P({ω}) t*_λ = P({λω})` when `s(λ) = r(ω)`;
/// - `atom-shift`: `t*_{ω(0,n)} P({ω}) t_{ω(0,n)} = P({σ^n(ω)})`;
/// - `atom-orthogonal`: `t*_η P({ω}) t_η = 0` when `η != ω(0, d(η))`.
pub fn verify_pvm_identities<R: Representation + ?Sized>(
    rep: &R,
    sample: &[IndexPoint],
    degrees: &[Degree],
    atoms: &[InfinitePath],
) -> Result<CheckReport, ReprError> {
    let rep = &Memo::new(rep);
    let g = rep.graph();
    let ms = morphisms_of(g, degrees)?;
    let mut report = CheckReport::new();
    for i in sample {
        let e = Vector::basis(i.clone());
        let pt = || rep.describe(i);
        for l in &ms {
            let tl_star = rep.t_star_apply(l, &e)?;
            let tl = rep.t_apply(l, &e)?;
            for eta in &ms {
                let cyl = SetExpr::Cylinder(eta.clone());
                let inst = || format!("λ = {}, η = {}", g.display(l), g.display(eta));
                if l.source() == eta.range() {
                    let ok = (|| {
                        let lhs = rep.t_apply(l, &rep.pvm_apply(&cyl, &tl_star)?)?;
                        let rhs = rep.pvm_apply(&SetExpr::prefixed(l.clone(), cyl.clone()), &e)?;
                        Ok(lhs == rhs)
                    })();
                    report.record("pvm-prefix", ok, inst, pt);
                }
                if l.range() == eta.range() {
                    let ok = (|| {
                        let pre = SetExpr::prefix_preimage(l.clone(), cyl.clone());
                        let lhs = rep.t_apply(l, &rep.pvm_apply(&pre, &e)?)?;
                        let rhs = rep.pvm_apply(&cyl, &tl)?;
                        Ok(lhs == rhs)
                    })();
                    report.record("pvm-prefix-preimage", ok, inst, pt);
                }
                let ok = (|| {
                    let lhs = rep.t_apply(l, &rep.pvm_apply(&cyl, &e)?)?;
                    let pre = SetExpr::shift_preimage(l.degree().clone(), cyl.clone());
                    let rhs = rep.pvm_apply(&pre, &tl)?;
                    Ok(lhs == rhs)
                })();
                report.record("pvm-shift-preimage", ok, inst, pt);
            }
        }
        for eta in &ms {
            let cyl = SetExpr::Cylinder(eta.clone());
            for n in degrees {
                let ok = (|| {
                    let mut sum = Vector::new();
                    for l in g.enumerate(eta.range(), n)? {
                        let pre = SetExpr::prefix_preimage(l.clone(), cyl.clone());
                        let inner = rep.pvm_apply(&pre, &rep.t_star_apply(&l, &e)?)?;
                        sum.add_assign(&rep.t_apply(&l, &inner)?);
                    }
                    Ok(sum == rep.pvm_apply(&cyl, &e)?)
                })();
                report.record("pvm-partition", ok, || format!("η = {}, n = {n}", g.display(eta)), pt);
            }
        }
        for omega in atoms {
            let atom = SetExpr::Atom(omega.clone());
            let on = || describe_path(g, omega);
            for l in &ms {
                if l.source() == omega.range() {
                    let ok = (|| {
                        let lhs = rep.t_apply(l, &rep.pvm_apply(&atom, &rep.t_star_apply(l, &e)?)?)?;
                        let lw = g.prefix(l, omega)?;
                        Ok(lhs == rep.pvm_apply(&SetExpr::Atom(lw), &e)?)
                    })();
                    report.record("atom-prefix", ok, || format!("λ = {}, ω = {}", g.display(l), on()), pt);
                }
                if l.range() == omega.range() && &g.path_segment(omega, l.degree())? != l {
                    let ok = (|| {
                        let lhs = rep.t_star_apply(l, &rep.pvm_apply(&atom, &rep.t_apply(l, &e)?)?)?;
                        Ok(lhs.is_zero())
                    })();
                    report.record("atom-orthogonal", ok, || format!("η = {}, ω = {}", g.display(l), on()), pt);
                }
            }
            for n in degrees {
                let ok = (|| {
                    let head = g.path_segment(omega, n)?;
                    let lhs = rep.t_star_apply(&head, &rep.pvm_apply(&atom, &rep.t_apply(&head, &e)?)?)?;
                    let tail = g.shift(omega, n)?;
                    Ok(lhs == rep.pvm_apply(&SetExpr::Atom(tail), &e)?)
                })();
                report.record("atom-shift", ok, || format!("n = {n}, ω = {}", on()), pt);
            }
        }
    }
    Ok(report)
}

/// For exact atoms: `P(Z(ω(0, n)))` agrees with `P({ω})` on every sampled
/// vector once `n` passes the depth at which distinct eventually periodic
/// paths must differ.
pub fn verify_atom_limits<R: Representation + ?Sized>(
    rep: &R,
    sample: &[IndexPoint],
    atoms: &[InfinitePath],
) -> Result<CheckReport, ReprError> {
    let rep = &Memo::new(rep);
    let g = rep.graph();
    let mut report = CheckReport::new();
    for omega in atoms {
        let InfinitePath::Ep(w) = omega else { continue };
        for i in sample {
            let InfinitePath::Ep(x) = &i.path else { continue };
            let n = &(&w.prefix().degree().join(x.prefix().degree()) + w.cycle().degree()) + x.cycle().degree();
            let e = Vector::basis(i.clone());
            let ok = (|| {
                let cyl = SetExpr::Cylinder(g.path_segment(omega, &n)?);
                Ok(rep.pvm_apply(&cyl, &e)? == rep.pvm_apply(&SetExpr::Atom(omega.clone()), &e)?)
            })();
            report.record("atom-limit", ok, || format!("ω = {}, n = {n}", describe_path(g, omega)), || rep.describe(i));
        }
    }
    Ok(report)
}

/// The distinct paths among `points`.
pub fn distinct_paths(points: &[IndexPoint]) -> Vec<InfinitePath> {
    let mut out: Vec<&IndexPoint> = Vec::new();
    for p in points {
        if !out.iter().any(|q| q.orbit == p.orbit && q.key == p.key) {
            out.push(p);
        }
    }
    out.into_iter().map(|p| p.path.clone()).collect()
}

/// `K_λ ∩ K_λ' = ∅` for distinct `λ, λ'` of each listed degree: every
/// sampled point begins with at most one of them (`K-disjoint`).
pub fn verify_k_partition<R: Representation + ?Sized>(
    rep: &R,
    sample: &[IndexPoint],
    degrees: &[Degree],
) -> Result<CheckReport, ReprError> {
    let rep = &Memo::new(rep);
    let g = rep.graph();
    let mut report = CheckReport::new();
    for n in degrees {
        let ls = g.enumerate_all(n)?;
        for i in sample {
            let ok = (|| {
                let mut hits = 0usize;
                for l in &ls {
                    if rep.t_star_basis(l, i)?.is_some() {
                        hits += 1;
                    }
                }
                Ok(hits <= 1)
            })();
            report.record("K-disjoint", ok, || format!("n = {n}"), || rep.describe(i));
        }
    }
    Ok(report)
}
