use alloc::collections::btree_map::{self, BTreeMap};

use num_traits::Zero;

use crate::linalg::Scalar;
use crate::repr::IndexPoint;

/// Finitely supported vector `Σ c_i e_i`; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Vector(BTreeMap<IndexPoint, Scalar>);

impl Vector {
    pub fn new() -> Self {
        Vector(BTreeMap::new())
    }

    /// The basis vector `e_i`.
    pub fn basis(i: IndexPoint) -> Self {
        let mut v = Vector::new();
        v.add_term(i, num_traits::One::one());
        v
    }

    pub fn add_term(&mut self, i: IndexPoint, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(i) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Vector) {
        for (i, c) in &other.0 {
            self.add_term(i.clone(), c.clone());
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Vector {
        let mut out = Vector::new();
        for (i, a) in &self.0 {
            out.add_term(i.clone(), a * c);
        }
        out
    }

    pub fn coefficient(&self, i: &IndexPoint) -> Scalar {
        self.0.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IndexPoint, &Scalar)> {
        self.0.iter()
    }
}

impl FromIterator<(IndexPoint, Scalar)> for Vector {
    fn from_iter<T: IntoIterator<Item = (IndexPoint, Scalar)>>(iter: T) -> Self {
        let mut v = Vector::new();
        for (i, c) in iter {
            v.add_term(i, c);
        }
        v
    }
}
