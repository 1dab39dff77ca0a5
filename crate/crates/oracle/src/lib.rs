//! Brute-force reference implementations. They share no algorithmic code
//! with the library beyond enumeration and composition of morphisms, and
//! exist only to cross-check it in tests.

mod confluence;
mod dense;
mod lambda_min;
mod rational;

pub use confluence::{confluence_fuzz, random_word, seeded_word, sorted_word, ConfluenceReport, Disagreement};
pub use dense::{brute_intertwiner_search, DenseWindow, SearchVerdict};
pub use lambda_min::brute_lambda_min;
pub use rational::{nullspace, rank};
