//! Square swaps on edge lists.
//!
//! A square pairing turns a bicolored two-edge path into its partner with
//! the colors in the opposite order. Sorting an edge list by color through
//! such swaps yields the normal form of the morphism it spells; sorting by
//! other color-compatible keys yields factorizations.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::GraphError;
use crate::skeleton::{Color, EdgeId, Skeleton};

/// Dense lookup table from a bicolored two-edge path to its square partner.
#[derive(Debug, Clone)]
pub struct SquareTable {
    edge_count: usize,
    colors: Vec<Color>,
    partner: Vec<Option<(EdgeId, EdgeId)>>,
    conflicts: Vec<(EdgeId, EdgeId)>,
}

impl SquareTable {
    /// Build the table. A two-edge path listed in more than one square keeps
    /// its first partner and is recorded in [`SquareTable::conflicts`].
    pub fn new(skel: &Skeleton) -> Self {
        let n = skel.edges().len();
        let mut partner = vec![None; n * n];
        let mut conflicts = Vec::new();
        for sq in skel.squares() {
            for (from, to) in [(sq.left, sq.right), (sq.right, sq.left)] {
                let slot = &mut partner[from[0] * n + from[1]];
                match slot {
                    None => *slot = Some((to[0], to[1])),
                    Some(p) if *p == (to[0], to[1]) => {}
                    Some(_) => conflicts.push((from[0], from[1])),
                }
            }
        }
        SquareTable { edge_count: n, colors: skel.edges().iter().map(|e| e.color).collect(), partner, conflicts }
    }

    pub fn partner(&self, a: EdgeId, b: EdgeId) -> Option<(EdgeId, EdgeId)> {
        self.partner[a * self.edge_count + b]
    }

    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e]
    }

    pub fn conflicts(&self) -> &[(EdgeId, EdgeId)] {
        &self.conflicts
    }

    /// Replace `edges[pos] edges[pos + 1]` by its square partner.
    pub fn swap_at(&self, edges: &mut [EdgeId], pos: usize) -> Result<(), GraphError> {
        let (a, b) = (edges[pos], edges[pos + 1]);
        let (c, d) = self.partner(a, b).ok_or(GraphError::MissingSquare(a, b))?;
        edges[pos] = c;
        edges[pos + 1] = d;
        Ok(())
    }

    /// Positions `i` where `edges[i]` has a larger color than `edges[i + 1]`.
    pub fn out_of_order(&self, edges: &[EdgeId]) -> Vec<usize> {
        (0..edges.len().saturating_sub(1))
            .filter(|&i| self.colors[edges[i]] > self.colors[edges[i + 1]])
            .collect()
    }

    /// Sort `edges` by `keys` (one key per position) using square swaps,
    /// always resolving the leftmost out-of-order adjacent pair first.
    ///
    /// Keys travel with colors: positions holding the same color must already
    /// be in key order, since same-colored edges are never exchanged.
    pub fn sort_by_keys<K: Ord + Copy>(&self, edges: &mut [EdgeId], keys: &mut [K]) -> Result<(), GraphError> {
        debug_assert_eq!(edges.len(), keys.len());
        // insertion sort: bubbling the newest element left always fixes the
        // leftmost inversion, since the prefix is already sorted
        for i in 1..edges.len() {
            let mut j = i;
            while j > 0 && keys[j - 1] > keys[j] {
                self.swap_at(edges, j - 1)?;
                keys.swap(j - 1, j);
                j -= 1;
            }
        }
        Ok(())
    }

    /// Sort by ascending color.
    pub fn color_sort(&self, edges: &mut [EdgeId]) -> Result<(), GraphError> {
        let mut keys: Vec<Color> = edges.iter().map(|&e| self.colors[e]).collect();
        self.sort_by_keys(edges, &mut keys)
    }

    /// Move, for each color `c`, the first `front[c]` edges of color `c` to
    /// the front (color-sorted), the remaining edges after them (also
    /// color-sorted). `front[c]` must not exceed the count of color `c`.
    pub fn split_sort(&self, edges: &mut [EdgeId], front: &[u32]) -> Result<(), GraphError> {
        let mut seen = vec![0u32; front.len()];
        let mut keys: Vec<(u8, Color)> = Vec::with_capacity(edges.len());
        for &e in edges.iter() {
            let c = self.colors[e];
            let block = u8::from(seen[c] >= front[c]);
            seen[c] += 1;
            keys.push((block, c));
        }
        self.sort_by_keys(edges, &mut keys)
    }
}
