use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kgraph::{EdgeId, Skeleton};

/// A word whose square swaps reach more than one color-sorted word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub word: Vec<EdgeId>,
    pub outcomes: BTreeSet<Vec<EdgeId>>,
}

#[derive(Debug, Clone, Default)]
pub struct ConfluenceReport {
    pub trials: usize,
    /// Words for which leftmost-first, rightmost-first and exhaustive
    /// rewriting all produced the same single sorted word.
    pub agreed: usize,
    pub disagreements: Vec<Disagreement>,
}

impl ConfluenceReport {
    pub fn all_agree(&self) -> bool {
        self.disagreements.is_empty()
    }
}

struct Swaps<'a> {
    skel: &'a Skeleton,
    partner: BTreeMap<(EdgeId, EdgeId), (EdgeId, EdgeId)>,
}

impl<'a> Swaps<'a> {
    fn new(skel: &'a Skeleton) -> Self {
        let mut partner = BTreeMap::new();
        for sq in skel.squares() {
            partner.entry((sq.left[0], sq.left[1])).or_insert((sq.right[0], sq.right[1]));
            partner.entry((sq.right[0], sq.right[1])).or_insert((sq.left[0], sq.left[1]));
        }
        Swaps { skel, partner }
    }

    fn descents(&self, w: &[EdgeId]) -> Vec<usize> {
        (0..w.len().saturating_sub(1))
            .filter(|&i| self.skel.edge(w[i]).color > self.skel.edge(w[i + 1]).color)
            .collect()
    }

    fn swap(&self, w: &[EdgeId], i: usize) -> Option<Vec<EdgeId>> {
        let &(a, b) = self.partner.get(&(w[i], w[i + 1]))?;
        let mut out = w.to_vec();
        out[i] = a;
        out[i + 1] = b;
        Some(out)
    }

    /// Always rewrite at the first (or last) descent. `None` if a swap is
    /// missing.
    fn greedy(&self, w: &[EdgeId], leftmost: bool) -> Option<Vec<EdgeId>> {
        let mut w = w.to_vec();
        loop {
            let ds = self.descents(&w);
            let Some(&i) = (if leftmost { ds.first() } else { ds.last() }) else { return Some(w) };
            w = self.swap(&w, i)?;
        }
    }

    /// Every sorted word reachable by swapping descents in any order.
    fn exhaustive(&self, w: &[EdgeId]) -> BTreeSet<Vec<EdgeId>> {
        let mut seen = BTreeSet::new();
        let mut out = BTreeSet::new();
        let mut queue = VecDeque::from([w.to_vec()]);
        while let Some(cur) = queue.pop_front() {
            if !seen.insert(cur.clone()) {
                continue;
            }
            let ds = self.descents(&cur);
            if ds.is_empty() {
                out.insert(cur);
                continue;
            }
            for i in ds {
                if let Some(next) = self.swap(&cur, i) {
                    queue.push_back(next);
                }
            }
        }
        out
    }
}

/// A random composable word of length `1..=max_len`: `w[i]` has source
/// `r(w[i + 1])`.
pub fn random_word(skel: &Skeleton, rng: &mut impl Rng, max_len: usize) -> Vec<EdgeId> {
    let len = rng.random_range(1..=max_len);
    let all: Vec<EdgeId> = (0..skel.edges().len()).collect();
    let mut w = vec![*all.choose(rng).expect("edges")];
    while w.len() < len {
        let s = skel.edge(*w.last().expect("nonempty")).source;
        let next: Vec<EdgeId> = all.iter().copied().filter(|&e| skel.edge(e).range == s).collect();
        match next.choose(rng) {
            Some(&e) => w.push(e),
            None => break,
        }
    }
    w
}

/// Rewrite `trials` random words of length at most 8 to color-sorted form
/// with three strategies and compare. Works on unvalidated skeletons.
pub fn confluence_fuzz(skel: &Skeleton, trials: usize, seed: u64) -> ConfluenceReport {
    let swaps = Swaps::new(skel);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ConfluenceReport { trials, ..Default::default() };
    for _ in 0..trials {
        let word = random_word(skel, &mut rng, 8);
        let outcomes = swaps.exhaustive(&word);
        let left = swaps.greedy(&word, true);
        let right = swaps.greedy(&word, false);
        let agree = outcomes.len() == 1
            && left.as_ref().is_some_and(|l| outcomes.contains(l))
            && right.as_ref().is_some_and(|r| outcomes.contains(r));
        if agree {
            report.agreed += 1;
        } else {
            report.disagreements.push(Disagreement { word, outcomes });
        }
    }
    report
}

/// The color-sorted word reached by swapping the first descent until none
/// is left; `None` if some descent has no square.
pub fn sorted_word(skel: &Skeleton, word: &[EdgeId]) -> Option<Vec<EdgeId>> {
    Swaps::new(skel).greedy(word, true)
}

/// [`random_word`] from a fresh generator seeded with `seed`.
pub fn seeded_word(skel: &Skeleton, seed: u64, max_len: usize) -> Vec<EdgeId> {
    random_word(skel, &mut ChaCha8Rng::seed_from_u64(seed), max_len)
}
