use std::sync::Arc;

use kgraph::fixtures;
use kgraph::path::{PathGenerator, ThueMorse};
use kgraph::{Degree, InfinitePath, KGraph, LazyPath, Morphism, PathEquality, PathError, Periodicity};

fn d(v: &[u32]) -> Degree {
    Degree::from_slice(v)
}

fn bflip_xy(g: &KGraph) -> (InfinitePath, InfinitePath) {
    let x = g.ep_periodic(&g.word(&["e", "h", "f", "g"]).unwrap()).unwrap();
    let y = g.ep_periodic(&g.word(&["f", "g", "e", "h"]).unwrap()).unwrap();
    (x.into(), y.into())
}

#[test]
fn bflip_has_one_path_per_vertex() {
    let g = KGraph::validate(fixtures::bflip()).unwrap();
    let (x, y) = bflip_xy(&g);
    let all = g.ep_paths(&d(&[0, 0]), &d(&[2, 2])).unwrap();
    assert_eq!(all.len(), 2);
    let all: Vec<InfinitePath> = all.into_iter().map(Into::into).collect();
    assert!(all.contains(&x) && all.contains(&y));
    assert_eq!(g.display(&g.path_segment(&x, &d(&[1, 1])).unwrap()), "[e|h]");
    assert!(g.path_segment(&x, &d(&[0, 0])).unwrap().is_vertex());
}

#[test]
fn bflip_shifts_and_prefixes() {
    let g = KGraph::validate(fixtures::bflip()).unwrap();
    let (x, y) = bflip_xy(&g);
    assert_eq!(g.shift(&x, &d(&[1, 1])).unwrap(), y);
    assert_eq!(g.shift(&y, &d(&[1, 1])).unwrap(), x);
    assert_eq!(g.shift(&x, &d(&[1, 0])).unwrap(), x);
    assert_eq!(g.shift(&x, &d(&[0, 0])).unwrap(), x);
    let e = g.word(&["e"]).unwrap();
    let h = g.word(&["h"]).unwrap();
    assert_eq!(g.prefix(&e, &x).unwrap(), x);
    assert_eq!(g.prefix(&h, &y).unwrap(), x);
    assert!(g.prefix(&h, &x).is_err());
    assert_eq!(g.paths_equal(&x, &x).unwrap(), PathEquality::Equal);
    assert_eq!(g.paths_equal(&x, &y).unwrap(), PathEquality::NotEqual);
    assert_eq!(g.paths_equal(&g.shift(&x, &d(&[2, 2])).unwrap(), &x).unwrap(), PathEquality::Equal);
}

#[test]
fn bflip_periodicity_and_orbit() {
    let g = KGraph::validate(fixtures::bflip()).unwrap();
    let (x, y) = bflip_xy(&g);
    assert_eq!(g.is_aperiodic(&x, &d(&[4, 4])).unwrap(), Periodicity::Periodic(d(&[1, 0])));
    let w = g.in_same_orbit(&x, &x).unwrap().unwrap();
    assert_eq!((w.shift_x(), w.shift_y()), (&d(&[0, 0]), &d(&[0, 0])));
    let w = g.in_same_orbit(&x, &y).unwrap().unwrap();
    assert_eq!(g.shift(&x, w.shift_x()).unwrap(), g.shift(&y, w.shift_y()).unwrap());
    // the documented witness is valid as well
    kgraph::path::GroupoidWitness::new(&g, x.clone(), d(&[1, 1]), y.clone(), d(&[0, 0])).unwrap();
    assert_eq!(
        kgraph::path::GroupoidWitness::new(&g, x.clone(), d(&[0, 0]), y.clone(), d(&[0, 0])),
        Err(PathError::NotAWitness)
    );
    let orbit = g.orbit_enumerate(&x, &d(&[2, 2])).unwrap();
    assert_eq!(orbit, vec![x, y]);
}

#[test]
fn delta_is_a_point() {
    let g = KGraph::validate(fixtures::delta()).unwrap();
    let all = g.ep_paths(&d(&[0, 0]), &d(&[1, 1])).unwrap();
    assert_eq!(all.len(), 1);
    let z: InfinitePath = all[0].clone().into();
    assert_eq!(g.orbit_enumerate(&z, &d(&[3, 3])).unwrap(), vec![z]);
}

#[test]
fn mono2_paths_and_orbits() {
    let g = KGraph::validate(fixtures::mono2()).unwrap();
    let all = g.ep_paths(&d(&[0, 0]), &d(&[1, 1])).unwrap();
    assert_eq!(all.len(), 2);
    let z1: InfinitePath = g.ep_periodic(&g.word(&["b1", "r"]).unwrap()).unwrap().into();
    let z2: InfinitePath = g.ep_periodic(&g.word(&["b2", "r"]).unwrap()).unwrap().into();
    assert_eq!(g.in_same_orbit(&z1, &z2).unwrap(), None);
    let p = g.is_aperiodic(&z1, &d(&[1, 1])).unwrap();
    assert_eq!(p, Periodicity::Periodic(d(&[1, 0])));
    assert_eq!(g.shift(&z1, &d(&[1, 1])).unwrap(), z1);
    // count equals the deduplicated prefixes a·ω with d(a) <= (1,1)
    let orbit = g.orbit_enumerate(&z1, &d(&[1, 1])).unwrap();
    let mut brute: Vec<InfinitePath> = Vec::new();
    for n in d(&[1, 1]).box_iter() {
        for a in g.enumerate(0, &n).unwrap() {
            let p = g.prefix(&a, &z1).unwrap();
            if !brute.contains(&p) {
                brute.push(p);
            }
        }
    }
    assert_eq!(orbit.len(), brute.len());
    assert_eq!(orbit.len(), 2);
}

fn thue_morse(g: &KGraph, depth: Degree) -> InfinitePath {
    let s = g.skeleton();
    let tm = ThueMorse::new(g, [s.edge_id("b1").unwrap(), s.edge_id("b2").unwrap()], 1, depth).unwrap();
    LazyPath::new(g, Arc::new(tm)).into()
}

#[test]
fn thue_morse_on_mono2_is_red_periodic() {
    let g = KGraph::validate(fixtures::mono2()).unwrap();
    let x = thue_morse(&g, d(&[32, 32]));
    assert_eq!(g.display(&g.path_segment(&x, &d(&[2, 0])).unwrap()), "[b1,b2|]");
    // one red loop: shifting in the red direction never changes a path
    match g.is_aperiodic(&x, &d(&[16, 16])).unwrap() {
        Periodicity::PeriodicUpTo { m, n, .. } => {
            assert_eq!(m, d(&[0, 0]));
            assert_eq!(n, d(&[0, 1]));
        }
        other => panic!("unexpected verdict {other:?}"),
    }
}

/// Thue–Morse in both colors on a graph with two loops per color.
#[derive(Debug)]
struct DoubleThueMorse {
    blue: [usize; 2],
    red: [usize; 2],
    depth: Degree,
}

impl PathGenerator for DoubleThueMorse {
    fn range(&self) -> usize {
        0
    }

    fn depth(&self) -> &Degree {
        &self.depth
    }

    fn segment(&self, g: &KGraph, n: &Degree) -> Result<Morphism, PathError> {
        let mut w = Vec::new();
        for i in 0..n.get(0) as u64 {
            w.push(self.blue[kgraph::path::thue_morse_bit(i)]);
        }
        for i in 0..n.get(1) as u64 {
            w.push(self.red[kgraph::path::thue_morse_bit(i + 1)]);
        }
        Ok(g.normal_form_at(0, &w)?)
    }

    fn label(&self) -> String {
        "double-thue-morse".into()
    }
}

#[test]
fn double_thue_morse_is_aperiodic_up_to_depth() {
    let g = KGraph::validate(fixtures::mono22()).unwrap();
    let s = g.skeleton();
    let id = |n| s.edge_id(n).unwrap();
    let gen = DoubleThueMorse { blue: [id("b1"), id("b2")], red: [id("r1"), id("r2")], depth: d(&[48, 48]) };
    let x: InfinitePath = LazyPath::new(&g, Arc::new(gen)).into();
    assert_eq!(g.is_aperiodic(&x, &d(&[16, 16])).unwrap(), Periodicity::AperiodicUpTo(d(&[16, 16])));
}

#[test]
fn lazy_same_base_orbit_witness() {
    let g = KGraph::validate(fixtures::mono2()).unwrap();
    let x = thue_morse(&g, d(&[16, 16]));
    let y = g.prefix(&g.word(&["b2", "b2"]).unwrap(), &g.shift(&x, &d(&[3, 1])).unwrap()).unwrap();
    let w = g.in_same_orbit(&x, &y).unwrap().unwrap();
    let a = g.shift(&x, w.shift_x()).unwrap();
    let b = g.shift(&y, w.shift_y()).unwrap();
    assert_eq!(g.paths_equal(&a, &b).unwrap(), PathEquality::Equal);
    let z: InfinitePath = g.ep_periodic(&g.word(&["b1", "r"]).unwrap()).unwrap().into();
    assert_eq!(g.in_same_orbit(&x, &z), Err(PathError::Undecided));
    assert!(matches!(g.paths_equal(&x, &z).unwrap(), PathEquality::NotEqual));
}
