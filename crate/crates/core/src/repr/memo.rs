use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::error::ReprError;
use crate::graph::KGraph;
use crate::morphism::Morphism;
use crate::path::{EpPath, InfinitePath};
use crate::repr::setexpr::SetExpr;
use crate::repr::spec::{IndexPoint, Representation};

/// Identifies a point by its whole path. `IndexPoint` equality only looks at
/// the window key, and points pushed outside the window may share one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum PointKey {
    Exact(usize, EpPath, u32),
    // generator address, offset, prefix
    Lazy(usize, usize, Vec<u32>, Morphism, u32),
}

impl PointKey {
    fn of(i: &IndexPoint) -> Self {
        match &i.path {
            InfinitePath::Ep(x) => PointKey::Exact(i.orbit, x.clone(), i.fiber),
            InfinitePath::Lazy(x) => PointKey::Lazy(
                i.orbit,
                Arc::as_ptr(x.base()) as *const () as usize,
                x.offset().coords().to_vec(),
                x.prefix().clone(),
                i.fiber,
            ),
        }
    }
}

type Action = BTreeMap<(bool, Morphism, PointKey), Option<IndexPoint>>;

/// A representation that remembers every basis-level `t_λ e_i` and
/// `t*_λ e_i` it has computed. Verifiers apply the same generators to the
/// same points many times; computing an image costs a path normalization.
#[derive(Debug)]
pub struct Memo<'r, R: ?Sized> {
    inner: &'r R,
    action: RefCell<Action>,
}

impl<'r, R: Representation + ?Sized> Memo<'r, R> {
    pub fn new(inner: &'r R) -> Self {
        Memo { inner, action: RefCell::new(BTreeMap::new()) }
    }

    fn lookup(
        &self,
        star: bool,
        lambda: &Morphism,
        i: &IndexPoint,
        compute: impl FnOnce() -> Result<Option<IndexPoint>, ReprError>,
    ) -> Result<Option<IndexPoint>, ReprError> {
        let key = (star, lambda.clone(), PointKey::of(i));
        if let Some(hit) = self.action.borrow().get(&key) {
            return Ok(hit.clone());
        }
        let image = compute()?;
        self.action.borrow_mut().insert(key, image.clone());
        Ok(image)
    }
}

impl<R: Representation + ?Sized> Representation for Memo<'_, R> {
    fn graph(&self) -> &KGraph {
        self.inner.graph()
    }

    fn t_basis(&self, lambda: &Morphism, i: &IndexPoint) -> Result<Option<IndexPoint>, ReprError> {
        self.lookup(false, lambda, i, || self.inner.t_basis(lambda, i))
    }

    fn t_star_basis(&self, lambda: &Morphism, i: &IndexPoint) -> Result<Option<IndexPoint>, ReprError> {
        self.lookup(true, lambda, i, || self.inner.t_star_basis(lambda, i))
    }

    fn in_set(&self, set: &SetExpr, i: &IndexPoint) -> Result<bool, ReprError> {
        self.inner.in_set(set, i)
    }

    fn describe(&self, i: &IndexPoint) -> String {
        self.inner.describe(i)
    }
}
