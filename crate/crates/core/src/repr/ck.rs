//! Pointwise verification of the Cuntz–Krieger relations.

use alloc::format;
use alloc::vec::Vec;

use crate::degree::Degree;
use crate::error::ReprError;
use crate::graph::KGraph;
use crate::morphism::Morphism;
use crate::repr::memo::Memo;
use crate::repr::report::CheckReport;
use crate::repr::spec::{IndexPoint, Representation};
use crate::repr::vector::Vector;

/// Every morphism whose degree is listed, in list order.
pub fn morphisms_of(g: &KGraph, degrees: &[Degree]) -> Result<Vec<Morphism>, ReprError> {
    let mut out = Vec::new();
    for n in degrees {
        out.extend(g.enumerate_all(n)?);
    }
    Ok(out)
}

fn apply_chain<R: Representation + ?Sized>(rep: &R, ops: &[(bool, &Morphism)], v: &Vector) -> Result<Vector, ReprError> {
    // rightmost operator first
    let mut cur = v.clone();
    for (star, m) in ops.iter().rev() {
        cur = if *star { rep.t_star_apply(m, &cur)? } else { rep.t_apply(m, &cur)? };
    }
    Ok(cur)
}

/// Check CK1–CK4 and the `t*_λ t_η = Σ_{Λ^min(λ,η)} t_α t*_β` expansion on
/// each sampled basis vector, for all morphisms with a listed degree.
pub fn verify_ck<R: Representation + ?Sized>(
    rep: &R,
    sample: &[IndexPoint],
    degrees: &[Degree],
) -> Result<CheckReport, ReprError> {
    let rep = &Memo::new(rep);
    let g = rep.graph();
    let ms = morphisms_of(g, degrees)?;
    let vertices: Vec<Morphism> = (0..g.vertex_count()).map(|v| g.vertex(v)).collect();
    let mut composites = Vec::new();
    let mut expansions = Vec::new();
    for l in &ms {
        for e in &ms {
            if l.source() == e.range() {
                composites.push((l, e, g.compose(l, e)?));
            }
            if l.range() == e.range() {
                expansions.push((l, e, g.lambda_min(l, e)?));
            }
        }
    }
    let mut report = CheckReport::new();
    for i in sample {
        let e = Vector::basis(i.clone());
        let pt = || rep.describe(i);
        let tv: Vec<Vector> = vertices.iter().map(|v| rep.t_apply(v, &e)).collect::<Result<_, _>>()?;

        for (a, va) in vertices.iter().enumerate() {
            for (b, vb) in vertices.iter().enumerate() {
                let ok = apply_chain(rep, &[(false, va), (false, vb)], &e)
                    .map(|lhs| if a == b { lhs == tv[a] } else { lhs.is_zero() });
                report.record("CK1", ok, || format!("t_{a} t_{b}"), pt);
            }
            let ok = rep.t_star_apply(va, &e).map(|s| s == tv[a]);
            report.record("CK1", ok, || format!("t*_{a} = t_{a}"), pt);
        }

        for (l, m, lm) in &composites {
            let ok = (|| Ok(apply_chain(rep, &[(false, l), (false, m)], &e)? == rep.t_apply(lm, &e)?))();
            report.record("CK2", ok, || format!("t_{} t_{} = t_{}", g.display(l), g.display(m), g.display(lm)), pt);
        }

        for l in &ms {
            let ok = apply_chain(rep, &[(true, l), (false, l)], &e).map(|lhs| lhs == tv[l.source()]);
            report.record("CK3", ok, || format!("t*_{0} t_{0} = t_s", g.display(l)), pt);
        }

        for (v, tv_e) in tv.iter().enumerate() {
            for n in degrees {
                let ok = (|| {
                    let mut sum = Vector::new();
                    for l in g.enumerate(v, n)? {
                        sum.add_assign(&apply_chain(rep, &[(false, &l), (true, &l)], &e)?);
                    }
                    Ok(&sum == tv_e)
                })();
                report.record("CK4", ok, || format!("vertex {v}, n = {n}"), pt);
            }
        }

        for (l, m, pairs) in &expansions {
            let ok = (|| {
                let lhs = apply_chain(rep, &[(true, l), (false, m)], &e)?;
                let mut rhs = Vector::new();
                for (alpha, beta) in pairs {
                    rhs.add_assign(&apply_chain(rep, &[(false, alpha), (true, beta)], &e)?);
                }
                Ok(lhs == rhs)
            })();
            report.record("CK-expansion", ok, || format!("t*_{} t_{}", g.display(l), g.display(m)), pt);
        }
    }
    Ok(report)
}
