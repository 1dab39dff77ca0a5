use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use kgraph::repr::IndexPoint;

pub const DEFAULT_SAMPLE: usize = 200;

/// Seed for subsampling, fixed so that reports are reproducible.
pub const SAMPLE_SEED: u64 = 0x6b67_7261_7068;

/// All of `basis` if it has at most `size` points, otherwise `size` points
/// chosen uniformly with [`SAMPLE_SEED`], kept in basis order.
pub fn sample(basis: &[IndexPoint], size: usize) -> Vec<IndexPoint> {
    if basis.len() <= size {
        return basis.to_vec();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut picked = rand::seq::index::sample(&mut rng, basis.len(), size).into_vec();
    picked.sort_unstable();
    picked.into_iter().map(|i| basis[i].clone()).collect()
}
