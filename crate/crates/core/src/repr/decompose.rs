//! The encoding map, the slice decomposition `H = ⊕_ℓ H_ℓ` and the
//! semibranching function system view of a permutative representation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::degree::Degree;
use crate::error::ReprError;
use crate::morphism::Morphism;
use crate::path::{InfinitePath, PathKey, Periodicity};
use crate::repr::ck::morphisms_of;
use crate::repr::report::CheckReport;
use crate::repr::spec::{depth_error, AtomicRepSpec, IndexPoint, Representation};

/// `E(i)(0, n)`: the segment of degree `n` of the path of `i`.
pub fn encoding(spec: &AtomicRepSpec, i: &IndexPoint, n: &Degree) -> Result<Morphism, ReprError> {
    spec.graph().path_segment(&i.path, n).map_err(depth_error)
}

/// `σ̃^n(i)`.
pub fn shift_index(spec: &AtomicRepSpec, i: &IndexPoint, n: &Degree) -> Result<IndexPoint, ReprError> {
    let path = spec.graph().shift(&i.path, n).map_err(depth_error)?;
    spec.point(i.orbit, path, i.fiber)
}

/// Segment-wise checks of `E(σ̃_λ(i)) = λ E(i)` and `E(σ̃^m(i)) = σ^m(E(i))`
/// against finite composition, for `λ` and `m, n` of listed degrees.
pub fn verify_encoding(spec: &AtomicRepSpec, sample: &[IndexPoint], degrees: &[Degree]) -> Result<CheckReport, ReprError> {
    let g = spec.graph();
    let ms = morphisms_of(g, degrees)?;
    let zero = Degree::zero(g.rank());
    let mut report = CheckReport::new();
    for i in sample {
        let pt = || spec.describe(i);
        for n in degrees {
            for l in ms.iter().filter(|l| l.source() == i.path.range()) {
                let ok = (|| {
                    let Some(j) = spec.t_basis(l, i)? else { return Ok(false) };
                    let joined = g.compose(l, &encoding(spec, i, n)?)?;
                    Ok(encoding(spec, &j, n)? == g.segment(&joined, &zero, n)?)
                })();
                report.record("encoding-prefix", ok, || format!("λ = {}, n = {n}", g.display(l)), pt);
            }
            for m in degrees {
                let ok = (|| {
                    let j = shift_index(spec, i, m)?;
                    let long = encoding(spec, i, &(m + n))?;
                    Ok(encoding(spec, &j, n)? == g.segment(&long, m, &(m + n))?)
                })();
                report.record("encoding-shift", ok, || format!("m = {m}, n = {n}"), pt);
            }
        }
    }
    Ok(report)
}

/// `H_ℓ`: the window points of one orbit with fiber `ℓ`.
#[derive(Debug, Clone)]
pub struct Slice {
    pub orbit: usize,
    pub fiber: u32,
    pub points: Vec<IndexPoint>,
}

#[derive(Debug, Clone)]
pub struct SliceDecomposition {
    pub slices: Vec<Slice>,
    /// Periodicity of each orbit base, at the key depth for lazy bases and
    /// exactly for eventually periodic ones.
    pub periodicity: Vec<Periodicity>,
    pub report: CheckReport,
}

/// Split the window into slices and check:
///
/// - `slice-invariant`: `t_λ e` and `t*_λ e` stay in the slice of `e`, for
///   sampled points and `λ` of listed degrees;
/// - `encoding-injective`: distinct points of a slice have distinct
///   encodings at the depth where points are distinguished.
pub fn decompose_slices(
    spec: &AtomicRepSpec,
    sample: &[IndexPoint],
    degrees: &[Degree],
) -> Result<SliceDecomposition, ReprError> {
    let g = spec.graph();
    let mut by_slice: BTreeMap<(usize, u32), Vec<IndexPoint>> = BTreeMap::new();
    for i in spec.basis() {
        by_slice.entry((i.orbit, i.fiber)).or_default().push(i.clone());
    }
    let slices: Vec<Slice> =
        by_slice.into_iter().map(|((orbit, fiber), points)| Slice { orbit, fiber, points }).collect();

    let mut periodicity = Vec::new();
    for o in spec.orbits() {
        let depth = o.base.depth().map_or_else(|| Degree::zero(g.rank()), |_| spec.key_depth().clone());
        periodicity.push(g.is_aperiodic(&o.base, &depth).map_err(depth_error)?);
    }

    let ms = morphisms_of(g, degrees)?;
    let mut report = CheckReport::new();
    for i in sample {
        let e = crate::repr::vector::Vector::basis(i.clone());
        for l in &ms {
            let ok = (|| {
                let v = spec.t_apply(l, &e)?;
                let w = spec.t_star_apply(l, &e)?;
                let inside = v.iter().chain(w.iter()).all(|(j, _)| j.orbit == i.orbit && j.fiber == i.fiber);
                Ok(inside)
            })();
            report.record("slice-invariant", ok, || format!("λ = {}", g.display(l)), || spec.describe(i));
        }
    }
    for s in &slices {
        let ok = (|| {
            let mut seen = BTreeSet::new();
            for p in &s.points {
                let depth = encoding_depth(spec, &s.points, &p.path);
                if !seen.insert((p.path.range(), encoding(spec, p, &depth)?)) {
                    return Ok(false);
                }
            }
            Ok(true)
        })();
        report.record(
            "encoding-injective",
            ok,
            || format!("orbit {}, fiber {}, {} points", s.orbit, s.fiber, s.points.len()),
            || "slice".into(),
        );
    }
    Ok(SliceDecomposition { slices, periodicity, report })
}

/// Lazy points are compared at the key depth. Distinct eventually periodic
/// paths already differ below `max d(prefix) + 2 max d(cycle)` over the slice.
fn encoding_depth(spec: &AtomicRepSpec, points: &[IndexPoint], x: &InfinitePath) -> Degree {
    match x {
        InfinitePath::Lazy(_) => spec.key_depth().clone(),
        InfinitePath::Ep(_) => {
            let zero = Degree::zero(spec.graph().rank());
            let (mut p, mut c) = (zero.clone(), zero);
            for q in points {
                if let InfinitePath::Ep(y) = &q.path {
                    p = p.join(y.prefix().degree());
                    c = c.join(y.cycle().degree());
                }
            }
            &p + &c.scale(2)
        }
    }
}

/// The semibranching function system of a permutative representation with
/// counting measure: `D_λ = J_λ`, `R_λ = K_λ`, prefixing maps `σ̃_λ`, coding
/// maps `σ̃^n` and Radon–Nikodym derivative `Φ_λ = 1`. Checks on the window:
///
/// - `sbfs-cover`: every point lies in some `R_λ`, `λ ∈ Λ^n`;
/// - `sbfs-disjoint`: in at most one of them;
/// - `sbfs-domain`: `D_λ = R_{s(λ)}`;
/// - `sbfs-coding`: `σ̃^{d(λ)} ∘ σ̃_λ = id` on `D_λ`;
/// - `sbfs-derivative`: `σ̃_λ` is injective on the window part of `D_λ`, so
///   `Φ_λ = |R_λ| / |D_λ| = 1` for counting measure. Lazy images are
///   compared at `key_depth + d(λ)`.
pub fn as_semibranching(spec: &AtomicRepSpec, degrees: &[Degree]) -> Result<CheckReport, ReprError> {
    let g = spec.graph();
    let ms = morphisms_of(g, degrees)?;
    let mut report = CheckReport::new();
    for i in spec.basis() {
        let pt = || spec.describe(i);
        for n in degrees {
            let ok = (|| -> Result<usize, ReprError> {
                let mut hits = 0usize;
                for l in g.enumerate_all(n)? {
                    if spec.t_star_basis(&l, i)?.is_some() {
                        hits += 1;
                    }
                }
                Ok(hits)
            })();
            let (cover, disjoint) = match ok {
                Ok(h) => (Ok(h >= 1), Ok(h <= 1)),
                Err(e) => (Err(e.clone()), Err(e)),
            };
            report.record("sbfs-cover", cover, || format!("n = {n}"), pt);
            report.record("sbfs-disjoint", disjoint, || format!("n = {n}"), pt);
        }
        for l in &ms {
            let ok = (|| {
                let vertex = g.vertex(l.source());
                Ok(spec.t_basis(l, i)?.is_some() == spec.t_star_basis(&vertex, i)?.is_some())
            })();
            report.record("sbfs-domain", ok, || format!("λ = {}", g.display(l)), pt);
            if l.source() == i.path.range() {
                let ok = (|| {
                    let Some(j) = spec.t_basis(l, i)? else { return Ok(false) };
                    Ok(&shift_index(spec, &j, l.degree())? == i)
                })();
                report.record("sbfs-coding", ok, || format!("λ = {}", g.display(l)), pt);
            }
        }
    }
    for l in &ms {
        let ok = (|| {
            let mut images = BTreeSet::new();
            let mut domain = 0usize;
            for i in spec.basis().iter().filter(|i| i.path.range() == l.source()) {
                domain += 1;
                if let Some(j) = spec.t_basis(l, i)? {
                    // a lazy image is told apart d(λ) deeper than its preimage
                    let key = match &j.key {
                        PathKey::Exact(_) => j.key.clone(),
                        PathKey::Window(_) => {
                            let deeper = spec.key_depth() + l.degree();
                            PathKey::Window(g.path_segment(&j.path, &deeper).map_err(depth_error)?)
                        }
                    };
                    images.insert((j.orbit, key, j.fiber));
                }
            }
            Ok(images.len() == domain)
        })();
        report.record("sbfs-derivative", ok, || format!("λ = {}", g.display(l)), || "window".into());
    }
    Ok(report)
}
