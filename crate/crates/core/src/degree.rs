//! Degrees: elements of `N^k` with the componentwise partial order.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Add;

/// A vector of `k` non-negative integers counting edges per color.
///
/// `PartialOrd` is the componentwise order, so `m <= n` holds exactly when
/// every coordinate of `m` is at most the matching coordinate of `n`, and
/// incomparable degrees return `None`. Comparing degrees of different
/// lengths is a logic error; it yields `None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Degree(Vec<u32>);

impl Degree {
    pub fn zero(rank: usize) -> Self {
        Degree(alloc::vec![0; rank])
    }

    /// The unit degree `e_color`.
    pub fn unit(rank: usize, color: usize) -> Self {
        let mut d = Self::zero(rank);
        d.0[color] = 1;
        d
    }

    pub fn splat(rank: usize, value: u32) -> Self {
        Degree(alloc::vec![value; rank])
    }

    pub fn from_slice(coords: &[u32]) -> Self {
        Degree(coords.to_vec())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, color: usize) -> u32 {
        self.0[color]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Sum of the coordinates, i.e. the number of edges of a path of this degree.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Coordinatewise maximum `m ∨ n`.
    pub fn join(&self, other: &Degree) -> Degree {
        debug_assert_eq!(self.rank(), other.rank());
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Coordinatewise minimum `m ∧ n`.
    pub fn meet(&self, other: &Degree) -> Degree {
        debug_assert_eq!(self.rank(), other.rank());
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// `self - other`, defined only when `other <= self`.
    pub fn checked_sub(&self, other: &Degree) -> Option<Degree> {
        if self.rank() != other.rank() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Degree)
    }

    /// Truncated subtraction: each coordinate is `max(a - b, 0)`.
    pub fn saturating_sub(&self, other: &Degree) -> Degree {
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    pub fn scale(&self, factor: u32) -> Degree {
        Degree(self.0.iter().map(|a| a * factor).collect())
    }

    /// The signed difference `self - other ∈ Z^k`.
    pub fn lag(&self, other: &Degree) -> Vec<i64> {
        self.0.iter().zip(&other.0).map(|(a, b)| i64::from(*a) - i64::from(*b)).collect()
    }

    /// Every degree `n` with `0 <= n <= self`, in lexicographic order.
    pub fn box_iter(&self) -> BoxIter {
        BoxIter { bound: self.clone(), next: Some(Degree::zero(self.rank())) }
    }

    /// Every degree `n <= self`, sorted by total then lexicographically.
    pub fn graded_box(&self) -> Vec<Degree> {
        let mut all: Vec<Degree> = self.box_iter().collect();
        all.sort_by(graded_cmp);
        all
    }

    /// Every degree in `N^rank` whose coordinates sum to exactly `total`,
    /// in lexicographic order.
    pub fn with_total(rank: usize, total: u32) -> Vec<Degree> {
        let mut out = Vec::new();
        let mut cur = alloc::vec![0u32; rank];
        fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Degree>) {
            if pos + 1 == cur.len() {
                cur[pos] = left;
                out.push(Degree(cur.clone()));
                return;
            }
            for v in 0..=left {
                cur[pos] = v;
                rec(pos + 1, left - v, cur, out);
            }
        }
        if rank > 0 {
            rec(0, total, &mut cur, &mut out);
        }
        out
    }
}

/// Total order used wherever a deterministic choice among degrees is needed:
/// smaller total first, then lexicographic.
pub fn graded_cmp(a: &Degree, b: &Degree) -> Ordering {
    a.total().cmp(&b.total()).then_with(|| a.0.cmp(&b.0))
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.rank() != other.rank() {
            return None;
        }
        let mut le = true;
        let mut ge = true;
        for (a, b) in self.0.iter().zip(&other.0) {
            le &= a <= b;
            ge &= a >= b;
        }
        match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl Add for &Degree {
    type Output = Degree;
    fn add(self, rhs: &Degree) -> Degree {
        debug_assert_eq!(self.rank(), rhs.rank());
        Degree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        &self + &rhs
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl From<Vec<u32>> for Degree {
    fn from(v: Vec<u32>) -> Self {
        Degree(v)
    }
}

/// Iterator over the lattice box `[0, bound]`.
pub struct BoxIter {
    bound: Degree,
    next: Option<Degree>,
}

impl Iterator for BoxIter {
    type Item = Degree;

    fn next(&mut self) -> Option<Degree> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut pos = succ.rank();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            if succ.0[pos] < self.bound.0[pos] {
                succ.0[pos] += 1;
                for later in succ.0.iter_mut().skip(pos + 1) {
                    *later = 0;
                }
                self.next = Some(succ);
                break;
            }
        }
        Some(cur)
    }
}
