use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kgraph::repr::{IndexPoint, Representation};
use kgraph::{Morphism, ReprError};

use crate::rational::{nullspace, rank};

/// Images of window basis vectors under one operator: `Some(Some(r))` for
/// `e_r`, `Some(None)` for zero, `None` when the image leaves the window.
type Column = Option<Option<usize>>;

/// `t_λ` and `t*_λ` as 0/1 matrices on a finite window basis.
#[derive(Debug, Clone)]
pub struct DenseWindow {
    pub basis: Vec<IndexPoint>,
    pub generators: Vec<Morphism>,
    t: Vec<Vec<Column>>,
    t_star: Vec<Vec<Column>>,
}

impl DenseWindow {
    pub fn new<R: Representation + ?Sized>(
        rep: &R,
        basis: &[IndexPoint],
        generators: &[Morphism],
    ) -> Result<Self, ReprError> {
        let locate = |img: Option<IndexPoint>| -> Column {
            match img {
                None => Some(None),
                Some(p) => basis.iter().position(|b| b == &p).map(Some),
            }
        };
        let mut t = Vec::new();
        let mut t_star = Vec::new();
        for l in generators {
            let mut a = Vec::new();
            let mut b = Vec::new();
            for i in basis {
                a.push(locate(rep.t_basis(l, i)?));
                b.push(locate(rep.t_star_basis(l, i)?));
            }
            t.push(a);
            t_star.push(b);
        }
        Ok(DenseWindow { basis: basis.to_vec(), generators: generators.to_vec(), t, t_star })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Entry `(row, col)` of `t_λ` (`star = false`) or `t*_λ`, or `None` if
    /// column `col` leaks.
    pub fn entry(&self, generator: usize, star: bool, row: usize, col: usize) -> Option<u8> {
        let m = if star { &self.t_star } else { &self.t };
        m[generator][col].map(|img| u8::from(img == Some(row)))
    }

    /// Whether `t_λ` or `t*_λ` sends some window vector outside the window.
    pub fn leaks(&self, generator: usize) -> bool {
        self.t[generator].iter().chain(&self.t_star[generator]).any(Option::is_none)
    }

    /// The operators that stay inside the window, as `(generator, star)`.
    fn closed_ops(&self) -> Vec<(usize, bool)> {
        (0..self.generators.len())
            .filter(|&g| !self.leaks(g))
            .flat_map(|g| [(g, false), (g, true)])
            .collect()
    }

    fn image(&self, op: (usize, bool), col: usize) -> Option<usize> {
        let m = if op.1 { &self.t_star } else { &self.t };
        m[op.0][col].expect("closed operator")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchVerdict {
    Exists,
    NotExists,
    /// Every generator leaks out of one of the windows.
    Inconclusive,
}

/// Is there a unitary `X: A → B` with `X T_A = T_B X` for every listed
/// operator and its adjoint?
///
/// The solution space is computed exactly. A permutation matrix in it is a
/// unitary witness. Otherwise the space is a `*`-closed commutant, so an
/// invertible element gives a unitary by polar decomposition; random
/// integer combinations of the basis are tried for invertibility.
pub fn brute_intertwiner_search(a: &DenseWindow, b: &DenseWindow, seed: u64) -> SearchVerdict {
    assert_eq!(a.generators, b.generators, "windows must list the same generators");
    let ops: Vec<(usize, bool)> = a.closed_ops().into_iter().filter(|op| !b.leaks(op.0)).collect();
    if ops.is_empty() {
        return SearchVerdict::Inconclusive;
    }
    let (n, m) = (a.dim(), b.dim());
    if n != m {
        return SearchVerdict::NotExists;
    }
    if n == 0 {
        return SearchVerdict::Exists;
    }
    // unknown X[r][c] at index r * n + c; one equation per (op, r, c):
    // (X T_A)[r][c] - (T_B X)[r][c] = 0
    let var = |r: usize, c: usize| r * n + c;
    let mut rows = Vec::new();
    for &op in &ops {
        for r in 0..n {
            for c in 0..n {
                let mut eq = vec![BigRational::zero(); n * n];
                if let Some(k) = a.image(op, c) {
                    eq[var(r, k)] += BigRational::one();
                }
                for k in 0..n {
                    if b.image(op, k) == Some(r) {
                        eq[var(k, c)] -= BigRational::one();
                    }
                }
                if eq.iter().any(|x| !x.is_zero()) {
                    rows.push(eq);
                }
            }
        }
    }
    let space = nullspace(&rows, n * n);
    if space.is_empty() {
        return SearchVerdict::NotExists;
    }

    let intertwines_perm = |p: &[usize]| {
        // X e_c = e_{p[c]}
        ops.iter().all(|&op| (0..n).all(|c| a.image(op, c).map(|k| p[k]) == b.image(op, p[c])))
    };
    if (0..n).permutations(n).any(|p| intertwines_perm(&p)) {
        return SearchVerdict::Exists;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..16 {
        let mut x = vec![BigRational::zero(); n * n];
        for v in &space {
            let c = BigRational::from_integer(BigInt::from(rng.random_range(-7i64..=7)));
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi += &c * vi;
            }
        }
        let mat: Vec<Vec<BigRational>> = x.chunks(n).map(<[BigRational]>::to_vec).collect();
        if rank(&mat) == n {
            return SearchVerdict::Exists;
        }
    }
    SearchVerdict::NotExists
}
