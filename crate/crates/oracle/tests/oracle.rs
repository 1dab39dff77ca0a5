use std::collections::BTreeSet;
use std::sync::Arc;

use kgraph::fixtures;
use kgraph::repr::{AtomicRepSpec, Representation, Vector};
use kgraph::{Degree, InfinitePath, KGraph, Morphism, Skeleton};
use kgraph_oracle::{brute_intertwiner_search, brute_lambda_min, confluence_fuzz, DenseWindow, SearchVerdict};

fn graph(s: Skeleton) -> Arc<KGraph> {
    Arc::new(KGraph::validate(s).unwrap())
}

fn all_up_to(g: &KGraph, n: u32) -> Vec<Morphism> {
    Degree::splat(g.rank(), n).box_iter().flat_map(|d| g.enumerate_all(&d).unwrap()).collect()
}

fn ep(g: &KGraph, cycle: &[&str]) -> InfinitePath {
    g.ep_periodic(&g.word(cycle).unwrap()).unwrap().into()
}

fn dense(spec: &AtomicRepSpec, gens: &[Morphism]) -> DenseWindow {
    DenseWindow::new(spec, spec.basis(), gens).unwrap()
}

#[test]
fn lambda_min_matches_library_on_bflip() {
    let g = graph(fixtures::bflip());
    let ms = all_up_to(&g, 2);
    for l in &ms {
        for e in &ms {
            if l.range() != e.range() {
                continue;
            }
            let lib: BTreeSet<_> = g.lambda_min(l, e).unwrap().into_iter().collect();
            assert_eq!(lib, brute_lambda_min(&g, l, e).unwrap());
        }
    }
}

#[test]
fn lambda_min_of_a_morphism_with_itself_is_trivial() {
    let g = graph(fixtures::flip2());
    for l in all_up_to(&g, 2) {
        let out = brute_lambda_min(&g, &l, &l).unwrap();
        let v = g.vertex(l.source());
        assert_eq!(out, BTreeSet::from([(v.clone(), v)]));
    }
}

#[test]
fn mono2_cross_color_extensions_are_unique() {
    let g = graph(fixtures::mono2());
    let r = g.word(&["r"]).unwrap();
    for b in ["b1", "b2"] {
        let b = g.word(&[b]).unwrap();
        assert_eq!(brute_lambda_min(&g, &b, &r).unwrap().len(), 1);
    }
}

#[test]
fn dense_window_matches_t_apply() {
    let g = graph(fixtures::mono2());
    let spec = AtomicRepSpec::orbit_representation(g.clone(), ep(&g, &["b1", "r"]), 2, Degree::splat(2, 1)).unwrap();
    let gens = all_up_to(&g, 1);
    let w = dense(&spec, &gens);
    for (k, l) in gens.iter().enumerate() {
        for (c, i) in spec.basis().iter().enumerate() {
            let img = spec.t_apply(l, &Vector::basis(i.clone())).unwrap();
            let img_star = spec.t_star_apply(l, &Vector::basis(i.clone())).unwrap();
            for (r, j) in spec.basis().iter().enumerate() {
                if let Some(x) = w.entry(k, false, r, c) {
                    assert_eq!(img.coefficient(j), kgraph::linalg::scalar(x.into()));
                }
                if let Some(x) = w.entry(k, true, r, c) {
                    assert_eq!(img_star.coefficient(j), kgraph::linalg::scalar(x.into()));
                }
            }
        }
    }
    // the b-prefixes of the outermost window points leave the window
    assert!((0..gens.len()).any(|k| w.leaks(k)));
}

#[test]
fn intertwiner_search_examples() {
    let d = graph(fixtures::delta());
    let z = ep(&d, &["b", "r"]);
    let gens = all_up_to(&d, 1);
    let d1 = AtomicRepSpec::orbit_representation(d.clone(), z.clone(), 1, Degree::splat(2, 1)).unwrap();
    let d2 = AtomicRepSpec::orbit_representation(d.clone(), z, 2, Degree::splat(2, 1)).unwrap();
    assert_eq!(brute_intertwiner_search(&dense(&d1, &gens), &dense(&d1, &gens), 1), SearchVerdict::Exists);
    assert_eq!(brute_intertwiner_search(&dense(&d1, &gens), &dense(&d2, &gens), 1), SearchVerdict::NotExists);
    assert_eq!(brute_intertwiner_search(&dense(&d2, &gens), &dense(&d2, &gens), 1), SearchVerdict::Exists);

    let b = graph(fixtures::bflip());
    let gens = all_up_to(&b, 1);
    let w = Degree::splat(2, 1);
    let x = AtomicRepSpec::orbit_representation(b.clone(), ep(&b, &["e", "h", "f", "g"]), 1, w.clone()).unwrap();
    let y = AtomicRepSpec::orbit_representation(b.clone(), ep(&b, &["f", "g", "e", "h"]), 1, w).unwrap();
    assert_eq!(brute_intertwiner_search(&dense(&x, &gens), &dense(&y, &gens), 1), SearchVerdict::Exists);
}

#[test]
fn confluence_on_valid_fixtures() {
    for s in [fixtures::bflip(), fixtures::flip2(), fixtures::mono2(), fixtures::cube_ok()] {
        let report = confluence_fuzz(&s, 200, 7);
        assert_eq!(report.trials, 200);
        assert!(report.all_agree(), "{:?}", report.disagreements.first());
    }
}

#[test]
fn confluence_agrees_with_library_normal_form() {
    use rand::SeedableRng;
    let s = fixtures::cube_ok();
    let g = KGraph::validate(s.clone()).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let w = kgraph_oracle::random_word(&s, &mut rng, 8);
        let nf = g.normal_form(&w).unwrap();
        assert_eq!(nf.edges(), kgraph_oracle::sorted_word(&s, &w).unwrap().as_slice());
    }
}

#[test]
fn broken_cube_disagrees() {
    let s = fixtures::broken_cube();
    assert!(KGraph::validate(s.clone()).is_err());
    let report = confluence_fuzz(&s, 200, 7);
    assert!(!report.all_agree());
    assert!(report.disagreements.iter().any(|d| d.outcomes.len() > 1));
}
