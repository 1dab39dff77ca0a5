//! Exact arithmetic over the Gaussian rationals.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficient field for vectors and matrices: `Q(i)`.
pub type Scalar = Complex<BigRational>;

pub fn scalar(n: i64) -> Scalar {
    Complex::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Complex::new(BigRational::new(BigInt::from(n), BigInt::from(d)), BigRational::zero())
}

/// `2^-n`, used for the cyclic vector weights.
pub fn inverse_power_of_two(n: u32) -> Scalar {
    let den = BigInt::from(1u8) << n as usize;
    Complex::new(BigRational::new(BigInt::from(1u8), den), BigRational::zero())
}

/// Rank of the matrix whose rows are `rows`, by fraction-exact Gaussian
/// elimination. Rows may have different lengths; missing entries are zero.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut m: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(width, Scalar::zero());
            r
        })
        .collect();
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = Scalar::one() / m[rank][col].clone();
        for x in &mut m[rank][col..] {
            *x = &*x * &inv;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[rank].clone();
                for (x, p) in m[r][col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Dense row-major matrix over [`Scalar`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    /// `value` times the identity.
    pub fn scalar(n: usize, value: Scalar) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = value.clone();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix {
        let mut m = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(c, r, self.get(r, c).conj());
            }
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Option<Matrix> {
        if self.cols != other.rows {
            return None;
        }
        let mut m = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = m.get(r, c) + a * other.get(k, c);
                    m.set(r, c, v);
                }
            }
        }
        Some(m)
    }

    pub fn is_unitary(&self) -> bool {
        self.rows == self.cols && self.adjoint().mul(self).is_some_and(|p| p == Matrix::identity(self.rows))
    }
}
