//! Point labeling on a finished tree.

use thiserror::Error;

use crate::bernstein::BernsteinPoly;
use crate::range::Tolerance;
use crate::scalar::Scalar;
use crate::tree::{
    build_connectivity, build_tree, BuildError, BuildOptions, ConnectivityOptions, Label, LabelStore, LeafId,
    Polarity, SubdivTree,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("point has {got} coordinates, domain has {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point lies outside the domain")]
    OutsideDomain,
    #[error("point lies on the zero set")]
    OnZeroSet,
}

/// A polynomial together with its subdivision tree and label store; answers
/// component-label queries.
#[derive(Debug, Clone)]
pub struct Labeling<T> {
    poly: BernsteinPoly<T>,
    tree: SubdivTree<T>,
    store: LabelStore,
    tol: Tolerance<T>,
}

impl<T: Scalar> Labeling<T> {
    /// Builds the tree and the connectivity in one go.
    pub fn build(poly: BernsteinPoly<T>, max_depth: u8, tol: Tolerance<T>) -> Result<Self, BuildError> {
        Self::build_with(poly, BuildOptions::with_max_depth(max_depth), ConnectivityOptions::default(), tol)
    }

    pub fn build_with(
        poly: BernsteinPoly<T>,
        build: BuildOptions,
        connect: ConnectivityOptions,
        tol: Tolerance<T>,
    ) -> Result<Self, BuildError> {
        let tree = build_tree(&poly, build, tol)?;
        let store = build_connectivity(&tree, &poly, tol, connect);
        Ok(Labeling { poly, tree, store, tol })
    }

    /// Assembles a labeling from saved parts; the store must cover the tree's leaves.
    pub fn from_parts(poly: BernsteinPoly<T>, tree: SubdivTree<T>, store: LabelStore, tol: Tolerance<T>) -> Self {
        assert_eq!(store.leaf_count(), tree.leaf_count(), "label store does not match tree");
        Labeling { poly, tree, store, tol }
    }

    pub fn poly(&self) -> &BernsteinPoly<T> {
        &self.poly
    }

    pub fn tree(&self) -> &SubdivTree<T> {
        &self.tree
    }

    pub fn store(&self) -> &LabelStore {
        &self.store
    }

    pub fn tolerance(&self) -> Tolerance<T> {
        self.tol
    }

    pub fn certified(&self) -> bool {
        self.tree.certified()
    }

    fn check_point(&self, x: &[T]) -> Result<(), EvalError> {
        let d = self.tree.dim();
        if x.len() != d {
            return Err(EvalError::DimensionMismatch { expected: d, got: x.len() });
        }
        if !self.tree.root_box().contains(x) {
            return Err(EvalError::OutsideDomain);
        }
        Ok(())
    }

    /// Sign of `phi(x)` with an exact comparison against zero.
    pub fn sign_at(&self, x: &[T]) -> Result<i8, EvalError> {
        self.check_point(x)?;
        let v = self.poly.eval_unchecked(x);
        Ok(if v > T::zero() {
            1
        } else if v < T::zero() {
            -1
        } else {
            0
        })
    }

    /// Leaf containing `x`.
    pub fn locate(&self, x: &[T]) -> Result<LeafId, EvalError> {
        self.check_point(x)?;
        Ok(self.tree.locate(x))
    }

    /// Component label of `x`; creates a label for the containing leaf on
    /// first use if face connectivity did not assign one.
    pub fn label_of(&self, x: &[T]) -> Result<Label, EvalError> {
        let polarity = match self.sign_at(x)? {
            0 => return Err(EvalError::OnZeroSet),
            s if s < 0 => Polarity::Neg,
            _ => Polarity::Pos,
        };
        let leaf = self.tree.locate(x);
        Ok(self.store.label_or_create(leaf, polarity))
    }
}
