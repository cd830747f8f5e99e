//! Connected component labeling for implicitly-defined domains
//! `U \ {phi = 0}`, where `phi` is a tensor-product Bernstein polynomial on a
//! box `U`.
//!
//! The domain is recursively split until the polynomial passes a
//! simply-connected test on every cell, or a maximum depth is reached. Leaf
//! faces are then tested for attainable signs and joined in a disjoint-set
//! forest; the resulting sets are the component labels. Components are never
//! split apart. When the depth limit is hit, nearly touching components may
//! share a label.
//!
//! ```
//! use ccl_core::{BernsteinPolyF64, HyperRectF64, LabelingF64, Tolerance};
//!
//! // x^2 + y^2 - 1/4 on [-1, 1]^2: a disk and its complement.
//! let mut c = vec![0.0; 9];
//! c[0] = -0.25;
//! c[2] = 1.0; // x^2
//! c[6] = 1.0; // y^2
//! let phi = BernsteinPolyF64::from_power(vec![2, 2], HyperRectF64::symmetric(2), &c).unwrap();
//! let tol = Tolerance::default_for(&phi);
//! let labels = LabelingF64::build(phi, 8, tol).unwrap();
//! let inside = labels.label_of(&[0.0, 0.1]).unwrap();
//! let outside = labels.label_of(&[0.9, 0.9]).unwrap();
//! assert_ne!(inside, outside);
//! assert_eq!(outside, labels.label_of(&[-0.9, 0.95]).unwrap());
//! ```

pub mod bernstein;
pub mod compact;
pub mod disjoint_set;
pub mod eval;
pub mod experiments;
pub mod geometry;
pub mod io;
pub mod oracle;
pub mod power;
pub mod range;
pub mod scalar;
pub mod tree;

pub use bernstein::{BernsteinPoly, PolyError};
pub use eval::{EvalError, Labeling};
pub use geometry::{FaceRef, HyperRect, MultiIndex, Side};
pub use range::{Interval, Monotonicity, SignSet, Tolerance};
pub use scalar::Scalar;
pub use tree::{BuildError, BuildOptions, ConnectivityOptions, Label, LabelStore, LeafKind, Polarity, SubdivTree};

pub type HyperRectF64 = HyperRect<f64>;
pub type HyperRectF32 = HyperRect<f32>;
pub type BernsteinPolyF64 = BernsteinPoly<f64>;
pub type BernsteinPolyF32 = BernsteinPoly<f32>;
pub type ToleranceF64 = Tolerance<f64>;
pub type SubdivTreeF64 = SubdivTree<f64>;
pub type SubdivTreeF32 = SubdivTree<f32>;
pub type LabelingF64 = Labeling<f64>;
pub type LabelingF32 = Labeling<f32>;
