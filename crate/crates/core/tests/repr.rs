use std::sync::Arc;

use kgraph::fixtures;
use kgraph::linalg::{scalar, Matrix};
use kgraph::path::ThueMorse;
use kgraph::repr::{
    are_disjoint, as_semibranching, atom_dimension, cyclic_vector, decompose_slices, distinct_paths, encoding,
    is_irreducible, is_monic, shift_index, unitarily_equivalent, verify_atom_limits, verify_ck, verify_encoding,
    verify_k_partition, verify_purely_atomic, verify_pvm_identities, AtomicRepSpec, CheckReport, IndexPoint,
    Intertwiner, Mutated, OrbitSpec, Reason, Representation, SetExpr, Vector,
};
use kgraph::{Degree, InfinitePath, KGraph, LazyPath, Periodicity, ReprError, Skeleton};

fn d(v: &[u32]) -> Degree {
    Degree::from_slice(v)
}

fn upto(n: u32) -> Vec<Degree> {
    Degree::splat(2, n).box_iter().collect()
}

fn graph(s: Skeleton) -> Arc<KGraph> {
    Arc::new(KGraph::validate(s).unwrap())
}

fn ep(g: &KGraph, cycle: &[&str]) -> InfinitePath {
    g.ep_periodic(&g.word(cycle).unwrap()).unwrap().into()
}

fn rep(g: &Arc<KGraph>, omega: InfinitePath, mult: u32, window: u32) -> AtomicRepSpec {
    AtomicRepSpec::orbit_representation(g.clone(), omega, mult, Degree::splat(2, window)).unwrap()
}

fn bflip_xy(g: &KGraph) -> (InfinitePath, InfinitePath) {
    (ep(g, &["e", "h", "f", "g"]), ep(g, &["f", "g", "e", "h"]))
}

fn assert_clean(report: &CheckReport) {
    assert!(report.is_clean(), "failures: {:#?}", &report.failures()[..report.failures().len().min(5)]);
    assert!(report.passed() > 0);
}

fn point(spec: &AtomicRepSpec, path: &InfinitePath, fiber: u32) -> IndexPoint {
    spec.point(0, path.clone(), fiber).unwrap()
}

/// Every orbit representation the fixture checks run over.
fn fixture_reps() -> Vec<(&'static str, AtomicRepSpec)> {
    let mut out = Vec::new();
    let delta = graph(fixtures::delta());
    let bflip = graph(fixtures::bflip());
    let mono2 = graph(fixtures::mono2());
    let flip2 = graph(fixtures::flip2());
    for m in [1, 2] {
        out.push(("delta", rep(&delta, ep(&delta, &["b", "r"]), m, 2)));
        out.push(("bflip", rep(&bflip, bflip_xy(&bflip).0, m, 2)));
        out.push(("mono2", rep(&mono2, ep(&mono2, &["b1", "r"]), m, 2)));
        out.push(("flip2", rep(&flip2, ep(&flip2, &["b1", "r"]), m, 2)));
    }
    out
}

#[test]
fn delta_window_is_one_point_per_fiber() {
    let g = graph(fixtures::delta());
    let z = ep(&g, &["b", "r"]);
    let spec = rep(&g, z.clone(), 1, 3);
    assert_eq!(spec.basis().len(), 1);
    let e = Vector::basis(point(&spec, &z, 1));
    for n in upto(2) {
        for l in g.enumerate_all(&n).unwrap() {
            assert_eq!(spec.t_apply(&l, &e).unwrap(), e);
            assert_eq!(spec.t_star_apply(&l, &e).unwrap(), e);
        }
    }
    assert_eq!(rep(&g, z, 2, 3).basis().len(), 2);
}

#[test]
fn bflip_generators_act_by_prefixing() {
    let g = graph(fixtures::bflip());
    let (x, y) = bflip_xy(&g);
    let spec = rep(&g, x.clone(), 1, 2);
    assert_eq!(spec.basis().len(), 2);
    let ex = Vector::basis(point(&spec, &x, 1));
    let ey = Vector::basis(point(&spec, &y, 1));
    let e = g.word(&["e"]).unwrap();
    let h = g.word(&["h"]).unwrap();
    assert_eq!(spec.t_apply(&e, &ex).unwrap(), ex);
    assert_eq!(spec.t_star_apply(&e, &ex).unwrap(), ex);
    assert_eq!(spec.t_apply(&h, &ey).unwrap(), ex);
    assert!(spec.t_apply(&h, &ex).unwrap().is_zero());
    assert!(spec.t_star_apply(&h, &ey).unwrap().is_zero());
}

#[test]
fn mono2_equal_degree_generators_are_orthogonal() {
    let g = graph(fixtures::mono2());
    let spec = rep(&g, ep(&g, &["b1", "r"]), 1, 2);
    let b1 = g.word(&["b1"]).unwrap();
    let b2 = g.word(&["b2"]).unwrap();
    for i in spec.basis() {
        let e = Vector::basis(i.clone());
        assert!(spec.t_star_apply(&b2, &spec.t_apply(&b1, &e).unwrap()).unwrap().is_zero());
    }
}

#[test]
fn ck_relations_hold_on_fixtures() {
    for (name, spec) in fixture_reps() {
        let report = verify_ck(&spec, spec.basis(), &upto(2)).unwrap();
        assert!(report.is_clean(), "{name}: {:?}", report.failures().first());
        for rel in ["CK1", "CK2", "CK3", "CK4", "CK-expansion"] {
            assert!(report.tally(rel).passed > 0, "{name}: {rel} never exercised");
        }
    }
}

#[test]
fn bflip_ck4_at_u_collapses_to_one_projection() {
    let g = graph(fixtures::bflip());
    assert_eq!(g.enumerate(0, &d(&[1, 1])).unwrap().len(), 1);
}

#[test]
fn mutated_family_is_caught() {
    let g = graph(fixtures::bflip());
    let (x, y) = bflip_xy(&g);
    let spec = rep(&g, x.clone(), 1, 2);
    let mutated = Mutated {
        inner: &spec,
        lambda: g.word(&["e"]).unwrap(),
        at: point(&spec, &x, 1),
        image: point(&spec, &y, 1),
    };
    let report = verify_ck(&mutated, spec.basis(), &upto(2)).unwrap();
    assert!(report.failed() >= 1);
    assert!(report.tally("CK3").failed >= 1);
}

#[test]
fn pvm_examples() {
    let g = graph(fixtures::bflip());
    let (x, y) = bflip_xy(&g);
    let spec = rep(&g, x.clone(), 1, 2);
    let ex = Vector::basis(point(&spec, &x, 1));
    let ey = Vector::basis(point(&spec, &y, 1));
    let e = g.word(&["e"]).unwrap();
    assert_eq!(spec.pvm_apply(&SetExpr::Cylinder(e.clone()), &ex).unwrap(), ex);
    assert!(spec.pvm_apply(&SetExpr::Cylinder(e), &ey).unwrap().is_zero());
    assert!(spec.pvm_apply(&SetExpr::empty(), &ex).unwrap().is_zero());
    assert!(spec.pvm_apply(&SetExpr::Atom(x.clone()), &ey).unwrap().is_zero());
    assert_eq!(spec.pvm_apply(&SetExpr::Atom(y), &ey).unwrap(), ey);
    let both = SetExpr::Union(vec![SetExpr::Atom(x.clone()), SetExpr::Full.complement()]);
    assert_eq!(spec.pvm_apply(&both, &ex).unwrap(), ex);
}

#[test]
fn pvm_identities_hold_on_fixtures() {
    for (name, spec) in fixture_reps() {
        let atoms = distinct_paths(spec.basis());
        let mut report = verify_pvm_identities(&spec, spec.basis(), &upto(2), &atoms).unwrap();
        report.merge(verify_atom_limits(&spec, spec.basis(), &atoms).unwrap());
        report.merge(verify_k_partition(&spec, spec.basis(), &upto(2)).unwrap());
        report.merge(verify_encoding(&spec, spec.basis(), &upto(2)).unwrap());
        assert!(report.is_clean(), "{name}: {:?}", report.failures().first());
        for rel in [
            "pvm-prefix",
            "pvm-partition",
            "pvm-prefix-preimage",
            "pvm-shift-preimage",
            "atom-prefix",
            "atom-shift",
            "atom-limit",
            "K-disjoint",
            "encoding-prefix",
            "encoding-shift",
        ] {
            assert!(report.tally(rel).passed > 0, "{name}: {rel} never exercised");
        }
    }
}

#[test]
fn atom_orthogonality_is_exercised_where_paths_branch() {
    let g = graph(fixtures::mono2());
    let spec = rep(&g, ep(&g, &["b1", "r"]), 1, 2);
    let atoms = distinct_paths(spec.basis());
    let report = verify_pvm_identities(&spec, spec.basis(), &upto(1), &atoms).unwrap();
    assert_clean(&report);
    assert!(report.tally("atom-orthogonal").passed > 0);
}

#[test]
fn atom_dimensions() {
    let g = graph(fixtures::bflip());
    let (x, y) = bflip_xy(&g);
    let spec = rep(&g, x.clone(), 3, 1);
    assert_eq!(atom_dimension(&spec, &x).unwrap(), 3);
    assert_eq!(atom_dimension(&spec, &y).unwrap(), 3);

    let m = graph(fixtures::mono2());
    let spec = rep(&m, ep(&m, &["b1", "r"]), 1, 1);
    assert_eq!(atom_dimension(&spec, &ep(&m, &["b2", "r"])).unwrap(), 0);
}

#[test]
fn purely_atomic_on_a_union_of_orbits() {
    let g = graph(fixtures::bflip_mono2());
    let x = ep(&g, &["e", "h", "f", "g"]);
    let z = ep(&g, &["b1", "r"]);
    let spec = AtomicRepSpec::new(
        g.clone(),
        vec![OrbitSpec { base: x, multiplicity: 1 }, OrbitSpec { base: z, multiplicity: 2 }],
        d(&[1, 1]),
    )
    .unwrap();
    let report = verify_purely_atomic(&spec).unwrap();
    assert_clean(&report);
    assert_eq!(report.tally("atom-fiber").passed, 2);
    assert!(!is_irreducible(&spec));
    assert!(!is_monic(&spec));

    let single = rep(&graph(fixtures::bflip()), bflip_xy(&graph(fixtures::bflip())).0, 1, 2);
    assert_clean(&verify_purely_atomic(&single).unwrap());
}

#[test]
fn construction_rejects_bad_specs() {
    let g = graph(fixtures::bflip());
    let (x, y) = bflip_xy(&g);
    let err = AtomicRepSpec::orbit_representation(g.clone(), x.clone(), 0, d(&[1, 1])).unwrap_err();
    assert_eq!(err, ReprError::ZeroMultiplicity { index: 0 });
    let err = AtomicRepSpec::new(
        g.clone(),
        vec![OrbitSpec { base: x, multiplicity: 1 }, OrbitSpec { base: y, multiplicity: 1 }],
        d(&[1, 1]),
    )
    .unwrap_err();
    assert_eq!(err, ReprError::OrbitCollision { first: 0, second: 1 });
}

#[test]
fn encoding_examples() {
    let g = graph(fixtures::bflip());
    let (x, _) = bflip_xy(&g);
    let spec = rep(&g, x.clone(), 1, 2);
    let i = point(&spec, &x, 1);
    assert_eq!(encoding(&spec, &i, &d(&[0, 0])).unwrap(), g.vertex(0));
    assert_eq!(g.display(&encoding(&spec, &i, &d(&[1, 1])).unwrap()), "[e|h]");
    for i in spec.basis() {
        for n in upto(2) {
            let head = encoding(&spec, i, &n).unwrap();
            let tail = shift_index(&spec, i, &n).unwrap();
            assert_eq!(&spec.t_basis(&head, &tail).unwrap().unwrap(), i);
        }
    }
}

#[test]
fn irreducibility_and_monicity() {
    let g = graph(fixtures::bflip());
    let x = bflip_xy(&g).0;
    assert!(is_irreducible(&rep(&g, x.clone(), 1, 1)));
    assert!(!is_irreducible(&rep(&g, x.clone(), 2, 1)));
    assert!(is_monic(&rep(&g, x.clone(), 1, 1)));
    assert!(!is_monic(&rep(&g, x, 2, 1)));

    let m = graph(fixtures::mono2());
    let two = AtomicRepSpec::new(
        m.clone(),
        vec![
            OrbitSpec { base: ep(&m, &["b1", "r"]), multiplicity: 1 },
            OrbitSpec { base: ep(&m, &["b2", "r"]), multiplicity: 1 },
        ],
        d(&[1, 1]),
    )
    .unwrap();
    assert!(!is_irreducible(&two));
    assert!(is_monic(&two));
}

#[test]
fn equivalence_decisions() {
    let g = graph(fixtures::bflip());
    let (x, y) = bflip_xy(&g);
    let ax = rep(&g, x.clone(), 1, 1);
    let ay = rep(&g, y, 1, 1);
    let ax2 = rep(&g, x, 2, 1);
    let v = unitarily_equivalent(&ax, &ay).unwrap();
    assert!(v.equivalent);
    assert_eq!(v.matched_orbits, 1);
    let v = unitarily_equivalent(&ax, &ax2).unwrap();
    assert!(!v.equivalent);
    assert_eq!(v.reason, Some(Reason::Multiplicity));
    assert!(!are_disjoint(&ax, &ay).unwrap());

    let m = graph(fixtures::mono2());
    let a = rep(&m, ep(&m, &["b1", "r"]), 1, 1);
    let b = rep(&m, ep(&m, &["b2", "r"]), 1, 1);
    assert!(are_disjoint(&a, &b).unwrap());
    assert_eq!(unitarily_equivalent(&a, &b).unwrap().reason, Some(Reason::Orbits));
    assert_eq!(unitarily_equivalent(&a, &ax).unwrap_err(), ReprError::GraphMismatch);
}

#[test]
fn cyclic_vectors() {
    let delta = graph(fixtures::delta());
    let c = cyclic_vector(&rep(&delta, ep(&delta, &["b", "r"]), 1, 3)).unwrap();
    assert_eq!((c.rank, c.dimension), (1, 1));

    let g = graph(fixtures::bflip());
    let x = bflip_xy(&g).0;
    let c = cyclic_vector(&rep(&g, x.clone(), 1, 3)).unwrap();
    assert!(c.is_cyclic());
    assert_eq!(c.dimension, 2);
    let c = cyclic_vector(&rep(&g, x, 2, 3)).unwrap();
    assert_eq!(c.dimension, 4);
    assert_eq!(c.rank * 2, c.dimension);
}

#[test]
fn intertwiner_identity_on_bflip() {
    let g = graph(fixtures::bflip());
    let (x, y) = bflip_xy(&g);
    let a = rep(&g, x.clone(), 1, 1);
    let b = rep(&g, y.clone(), 1, 1);
    let u = Intertwiner::identity(&a, &b).unwrap();
    let report = u.verify(a.basis(), b.basis(), &upto(2)).unwrap();
    assert_clean(&report);
    for rel in ["t-intertwine", "t*-intertwine", "adjoint-intertwine", "atom-intertwine", "well-defined", "isometry"] {
        assert!(report.tally(rel).passed > 0, "{rel}");
    }
    // x = u·x = e·σ^(1,0)(x)
    let i = point(&a, &x, 1);
    let expected = u.apply(&Vector::basis(i.clone())).unwrap();
    assert_eq!(u.apply_via(&i, &g.vertex(0), &d(&[0, 0])).unwrap(), expected);
    assert_eq!(u.apply_via(&i, &g.word(&["e"]).unwrap(), &d(&[1, 0])).unwrap(), expected);
}

#[test]
fn intertwiner_scalar_and_swap() {
    let g = graph(fixtures::bflip());
    let x = bflip_xy(&g).0;
    let a = rep(&g, x, 1, 1);
    let u = Intertwiner::build(&a, &a, vec![Matrix::scalar(1, scalar(-1))]).unwrap();
    assert_clean(&u.verify(a.basis(), a.basis(), &upto(2)).unwrap());

    let delta = graph(fixtures::delta());
    let z = ep(&delta, &["b", "r"]);
    let a = rep(&delta, z, 2, 1);
    let swap = Matrix::from_rows(vec![vec![scalar(0), scalar(1)], vec![scalar(1), scalar(0)]]);
    let u = Intertwiner::build(&a, &a, vec![swap]).unwrap();
    assert_clean(&u.verify(a.basis(), a.basis(), &upto(2)).unwrap());

    let bad = Matrix::from_rows(vec![vec![scalar(1), scalar(1)], vec![scalar(0), scalar(1)]]);
    assert_eq!(Intertwiner::build(&a, &a, vec![bad]).unwrap_err(), ReprError::NotUnitary);
    let b = rep(&delta, ep(&delta, &["b", "r"]), 1, 1);
    assert_eq!(
        Intertwiner::identity(&a, &b).unwrap_err(),
        ReprError::MultiplicityMismatch { left: 2, right: 1 }
    );
}

#[test]
fn slices_of_small_specs() {
    let delta = graph(fixtures::delta());
    let a = rep(&delta, ep(&delta, &["b", "r"]), 2, 1);
    let s = decompose_slices(&a, a.basis(), &upto(1)).unwrap();
    assert_eq!(s.slices.len(), 2);
    assert!(s.slices.iter().all(|s| s.points.len() == 1));
    assert_clean(&s.report);

    let g = graph(fixtures::bflip());
    let a = rep(&g, bflip_xy(&g).0, 1, 2);
    let s = decompose_slices(&a, a.basis(), &upto(2)).unwrap();
    assert_eq!(s.slices.len(), 1);
    assert_eq!(s.slices[0].points.len(), 2);
    assert_eq!(s.periodicity, vec![Periodicity::Periodic(d(&[1, 0]))]);
    assert_clean(&s.report);
}

#[test]
fn thue_morse_slices_small_window() {
    let g = graph(fixtures::mono2());
    let sk = g.skeleton();
    let tm = ThueMorse::new(&g, [sk.edge_id("b1").unwrap(), sk.edge_id("b2").unwrap()], 1, d(&[12, 12])).unwrap();
    let x: InfinitePath = LazyPath::new(&g, Arc::new(tm)).into();
    let a = AtomicRepSpec::orbit_representation(g.clone(), x, 2, d(&[3, 3])).unwrap();
    assert_eq!(a.key_depth(), &d(&[6, 6]));
    let s = decompose_slices(&a, a.basis(), &upto(1)).unwrap();
    assert_eq!(s.slices.len(), 2);
    assert_clean(&s.report);
    assert_clean(&verify_ck(&a, &a.basis()[..40], &upto(1)).unwrap());
    // prefixing moves the distinguishing segment past the key depth
    assert_clean(&as_semibranching(&a, &upto(1)).unwrap());
}

#[test]
fn thue_morse_images_outside_the_window() {
    // b2 b2 · z and σ^(1,0)(z) share their segment at the key depth
    let g = graph(fixtures::mono2());
    let sk = g.skeleton();
    let tm = ThueMorse::new(&g, [sk.edge_id("b1").unwrap(), sk.edge_id("b2").unwrap()], 1, d(&[8, 8])).unwrap();
    let x: InfinitePath = LazyPath::new(&g, Arc::new(tm)).into();
    let a = AtomicRepSpec::orbit_representation(g.clone(), x, 1, d(&[2, 2])).unwrap();
    assert_clean(&verify_ck(&a, a.basis(), &upto(2)).unwrap());
    let atoms = distinct_paths(a.basis());
    assert_clean(&verify_pvm_identities(&a, a.basis(), &upto(2), &atoms).unwrap());
}

#[test]
fn shallow_lazy_base_is_rejected() {
    let g = graph(fixtures::mono2());
    let sk = g.skeleton();
    let tm = ThueMorse::new(&g, [sk.edge_id("b1").unwrap(), sk.edge_id("b2").unwrap()], 1, d(&[8, 8])).unwrap();
    let x: InfinitePath = LazyPath::new(&g, Arc::new(tm)).into();
    let err = AtomicRepSpec::orbit_representation(g.clone(), x, 1, d(&[3, 3])).unwrap_err();
    assert!(matches!(err, ReprError::ShallowBase { index: 0, .. }));
}

#[test]
fn semibranching_view() {
    for (name, spec) in fixture_reps() {
        let report = as_semibranching(&spec, &upto(2)).unwrap();
        assert!(report.is_clean(), "{name}: {:?}", report.failures().first());
        for rel in ["sbfs-cover", "sbfs-disjoint", "sbfs-domain", "sbfs-coding", "sbfs-derivative"] {
            assert!(report.tally(rel).passed > 0, "{name}: {rel}");
        }
    }
}
