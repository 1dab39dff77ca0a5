//! Small named skeletons used throughout the documentation and tests.
//!
//! Color 1 is "blue" and color 2 is "red" in the 2-graphs below.

use crate::skeleton::{Skeleton, SkeletonBuilder};

/// One vertex, one blue loop `b`, one red loop `r`, `b r = r b`.
/// Its infinite path space is a single point.
pub fn delta() -> Skeleton {
    SkeletonBuilder::new(2)
        .vertex("o")
        .edge("b", 1, "o", "o")
        .edge("r", 2, "o", "o")
        .square("b", "r", "r", "b")
        .build()
        .expect("delta fixture")
}

/// Two vertices `u`, `v`; blue loops `e` at `u` and `f` at `v`; red edges
/// `h: v -> u` and `g: u -> v`; factorization rules `eh = hf`, `fg = ge`.
/// Each vertex receives exactly one infinite path.
pub fn bflip() -> Skeleton {
    SkeletonBuilder::new(2)
        .vertices(&["u", "v"])
        .edge("e", 1, "u", "u")
        .edge("f", 1, "v", "v")
        .edge("h", 2, "v", "u")
        .edge("g", 2, "u", "v")
        .square("e", "h", "h", "f")
        .square("f", "g", "g", "e")
        .build()
        .expect("bflip fixture")
}

/// [`bflip`] with the red edge `g` (and its square) removed; `v` then
/// receives no red edge.
pub fn bflip_without_g() -> Skeleton {
    bflip().without_edge("g").expect("bflip minus g")
}

/// One vertex, blue loops `b1`, `b2`, red loop `r`, `b_i r = r b_i`.
pub fn mono2() -> Skeleton {
    SkeletonBuilder::new(2)
        .vertex("o")
        .edge("b1", 1, "o", "o")
        .edge("b2", 1, "o", "o")
        .edge("r", 2, "o", "o")
        .square("b1", "r", "r", "b1")
        .square("b2", "r", "r", "b2")
        .build()
        .expect("mono2 fixture")
}

/// Like [`mono2`] but the red loop flips the blue letters:
/// `b1 r = r b2`, `b2 r = r b1`.
pub fn flip2() -> Skeleton {
    SkeletonBuilder::new(2)
        .vertex("o")
        .edge("b1", 1, "o", "o")
        .edge("b2", 1, "o", "o")
        .edge("r", 2, "o", "o")
        .square("b1", "r", "r", "b2")
        .square("b2", "r", "r", "b1")
        .build()
        .expect("flip2 fixture")
}

/// One vertex with two blue loops `b1`, `b2` and two red loops `r1`, `r2`,
/// all commuting (`b_i r_j = r_j b_i`).
pub fn mono22() -> Skeleton {
    let mut b = SkeletonBuilder::new(2)
        .vertex("o")
        .edge("b1", 1, "o", "o")
        .edge("b2", 1, "o", "o")
        .edge("r1", 2, "o", "o")
        .edge("r2", 2, "o", "o");
    for bi in ["b1", "b2"] {
        for rj in ["r1", "r2"] {
            b = b.square(bi, rj, rj, bi);
        }
    }
    b.build().expect("mono22 fixture")
}

fn three_colors(mismatch: bool) -> Skeleton {
    let mut b = SkeletonBuilder::new(3)
        .vertex("o")
        .edge("a1", 1, "o", "o")
        .edge("a2", 1, "o", "o")
        .edge("b1", 2, "o", "o")
        .edge("b2", 2, "o", "o")
        .edge("c1", 3, "o", "o")
        .edge("c2", 3, "o", "o");
    let a = ["a1", "a2"];
    let bb = ["b1", "b2"];
    let c = ["c1", "c2"];
    // colors 1/2: b2 swaps the a-letters, b1 keeps them
    for (j, bj) in bb.iter().enumerate() {
        for (i, ai) in a.iter().enumerate() {
            b = b.square(bj, ai, a[i ^ j], bj);
        }
    }
    // colors 1/3: identity, or (mismatched) a2 swaps the c-letters
    for (j, cj) in c.iter().enumerate() {
        for (i, ai) in a.iter().enumerate() {
            let flip = usize::from(mismatch && i == 1);
            b = b.square(cj, ai, ai, c[j ^ flip]);
        }
    }
    // colors 2/3: identity
    for cj in c {
        for bi in bb {
            b = b.square(cj, bi, bi, cj);
        }
    }
    b.build().expect("three-color fixture")
}

/// A consistent single-vertex 3-graph with two loops per color.
pub fn cube_ok() -> Skeleton {
    three_colors(false)
}

/// [`cube_ok`] with the colors-1/3 face re-paired so that the squares are
/// still bijective but some tri-colored paths have no well-defined cube.
pub fn broken_cube() -> Skeleton {
    three_colors(true)
}

/// Disjoint union of [`bflip`] and [`mono2`].
pub fn bflip_mono2() -> Skeleton {
    bflip().disjoint_union(&mono2(), "m.").expect("union fixture")
}

/// Disjoint union of [`delta`] and [`bflip`].
pub fn delta_bflip() -> Skeleton {
    delta().disjoint_union(&bflip(), "x.").expect("union fixture")
}
