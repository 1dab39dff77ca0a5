use std::collections::BTreeSet;

use proptest::prelude::*;

use kgraph::fixtures;
use kgraph::{Degree, EpPath, InfinitePath, KGraph, Morphism, Periodicity, Skeleton};
use kgraph_oracle::{brute_lambda_min, confluence_fuzz, seeded_word, sorted_word};

fn fixture(which: usize) -> Skeleton {
    match which % 5 {
        0 => fixtures::bflip(),
        1 => fixtures::flip2(),
        2 => fixtures::mono2(),
        3 => fixtures::delta(),
        _ => fixtures::cube_ok(),
    }
}

fn random_morphism(g: &KGraph, seed: u64, max_len: usize) -> Morphism {
    g.normal_form(&seeded_word(g.skeleton(), seed, max_len)).unwrap()
}

/// Eventually periodic paths of small prefix and cycle degree.
fn ep_sample(g: &KGraph) -> Vec<EpPath> {
    let rank = g.rank();
    g.ep_paths(&Degree::splat(rank, 1), &Degree::splat(rank, 2)).unwrap()
}

fn pick<T: Clone>(xs: &[T], i: usize) -> T {
    xs[i % xs.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn rewriting_is_confluent(which in 0usize..5, seed in any::<u64>()) {
        let s = fixture(which);
        let g = KGraph::validate(s.clone()).unwrap();
        let report = confluence_fuzz(&s, 1, seed);
        prop_assert!(report.all_agree());
        let w = seeded_word(&s, seed, 8);
        let nf = g.normal_form(&w).unwrap();
        prop_assert_eq!(nf.edges().to_vec(), sorted_word(&s, &w).unwrap());
    }

    #[test]
    fn factorization_round_trips(which in 0usize..5, seed in any::<u64>(), cut in any::<u64>()) {
        let g = KGraph::validate(fixture(which)).unwrap();
        let l = random_morphism(&g, seed, 6);
        let boxes = l.degree().graded_box();
        let m = pick(&boxes, cut as usize);
        let (a, b) = g.factorize(&l, &m).unwrap();
        prop_assert_eq!(a.degree(), &m);
        prop_assert_eq!(Some(b.degree().clone()), l.degree().checked_sub(&m));
        prop_assert_eq!(g.compose(&a, &b).unwrap(), l);
    }

    #[test]
    fn factorization_is_unique(which in 0usize..4, seed in any::<u64>(), cut in any::<u64>()) {
        let g = KGraph::validate(fixture(which)).unwrap();
        let l = random_morphism(&g, seed, 4);
        let m = pick(&l.degree().graded_box(), cut as usize);
        let rest = l.degree().checked_sub(&m).unwrap();
        let mut hits = 0;
        for a in g.enumerate(l.range(), &m).unwrap() {
            for b in g.enumerate_all(&rest).unwrap() {
                if b.range() == a.source() && g.compose(&a, &b).unwrap() == l {
                    hits += 1;
                }
            }
        }
        prop_assert_eq!(hits, 1);
    }

    #[test]
    fn lambda_min_matches_oracle(which in 0usize..4, s1 in any::<u64>(), s2 in any::<u64>()) {
        let g = KGraph::validate(fixture(which)).unwrap();
        let l = random_morphism(&g, s1, 3);
        let vs = g.enumerate_up_to(l.range(), &Degree::splat(g.rank(), 2)).unwrap();
        let e = pick(&vs, s2 as usize);
        let lib: BTreeSet<_> = g.lambda_min(&l, &e).unwrap().into_iter().collect();
        prop_assert_eq!(lib, brute_lambda_min(&g, &l, &e).unwrap());
    }

    #[test]
    fn prefix_and_shift_are_inverse(which in 0usize..4, i in any::<usize>(), seed in any::<u64>()) {
        let g = KGraph::validate(fixture(which)).unwrap();
        let x: InfinitePath = pick(&ep_sample(&g), i).into();
        let ls = g.enumerate_up_to(x.range(), &Degree::splat(g.rank(), 2)).unwrap();
        let all: Vec<Morphism> = (0..g.vertex_count())
            .flat_map(|v| g.enumerate_up_to(v, &Degree::splat(g.rank(), 2)).unwrap())
            .filter(|l| l.source() == x.range())
            .collect();
        let l = pick(&all, seed as usize);
        prop_assert_eq!(g.shift(&g.prefix(&l, &x).unwrap(), l.degree()).unwrap(), x.clone());
        let n = pick(&Degree::splat(g.rank(), 2).graded_box(), seed as usize);
        let head = g.path_segment(&x, &n).unwrap();
        prop_assert!(ls.contains(&head));
        prop_assert_eq!(g.prefix(&head, &g.shift(&x, &n).unwrap()).unwrap(), x);
    }

    #[test]
    fn shifts_compose(which in 0usize..4, i in any::<usize>(), a in any::<usize>(), b in any::<usize>()) {
        let g = KGraph::validate(fixture(which)).unwrap();
        let x: InfinitePath = pick(&ep_sample(&g), i).into();
        let degrees = Degree::splat(g.rank(), 3).graded_box();
        let (m, n) = (pick(&degrees, a), pick(&degrees, b));
        let two = g.shift(&g.shift(&x, &m).unwrap(), &n).unwrap();
        prop_assert_eq!(two, g.shift(&x, &(&m + &n)).unwrap());
    }

    #[test]
    fn periodic_tails_repeat(which in 0usize..4, i in any::<usize>(), k in 0u32..3) {
        let g = KGraph::validate(fixture(which)).unwrap();
        let ep = pick(&ep_sample(&g), i);
        let t = ep.prefix().degree().clone();
        let x: InfinitePath = ep.into();
        let Periodicity::Periodic(p) = g.is_aperiodic(&x, &Degree::zero(g.rank())).unwrap() else {
            return Err(TestCaseError::fail("eventually periodic path reported aperiodic"));
        };
        prop_assert!(!p.is_zero());
        let t = &t + &Degree::splat(g.rank(), k);
        prop_assert_eq!(g.shift(&x, &(&t + &p)).unwrap(), g.shift(&x, &t).unwrap());
    }

    #[test]
    fn orbits_form_an_equivalence_relation(which in 0usize..4, i in any::<usize>(), j in any::<usize>(), k in any::<usize>()) {
        let g = KGraph::validate(fixture(which)).unwrap();
        let ps = ep_sample(&g);
        let (x, y, z): (InfinitePath, InfinitePath, InfinitePath) =
            (pick(&ps, i).into(), pick(&ps, j).into(), pick(&ps, k).into());
        let same = |a: &InfinitePath, b: &InfinitePath| g.in_same_orbit(a, b).unwrap().is_some();
        prop_assert!(same(&x, &x));
        prop_assert_eq!(same(&x, &y), same(&y, &x));
        if same(&x, &y) && same(&y, &z) {
            prop_assert!(same(&x, &z));
        }
    }
}

#[test]
fn enumeration_counts() {
    let count = |s: Skeleton, n: &[u32]| KGraph::validate(s).unwrap().enumerate_all(&Degree::from_slice(n)).unwrap().len();
    for a in 0..4u32 {
        for b in 0..4u32 {
            assert_eq!(count(fixtures::mono2(), &[a, b]), 1 << a);
            assert_eq!(count(fixtures::flip2(), &[a, b]), 1 << a);
            assert_eq!(count(fixtures::bflip(), &[a, b]), 2);
            assert_eq!(count(fixtures::delta(), &[a, b]), 1);
        }
    }
    // two loops per color at a single vertex
    let g = KGraph::validate(fixtures::cube_ok()).unwrap();
    for n in Degree::splat(3, 2).box_iter() {
        let expected = 1usize << n.total();
        assert_eq!(g.enumerate_all(&n).unwrap().len(), expected);
    }
}
