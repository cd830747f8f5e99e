//! JSON formats for polynomials and labeled trees.
//!
//! A polynomial file looks like
//!
//! ```json
//! { "dim": 2, "degree": [2, 2], "box": [[-1, 1], [-1, 1]],
//!   "basis": "power", "coeffs": [-0.25, 0, 1, 0, 0, 0, 1, 0, 0] }
//! ```
//!
//! with coefficients flattened so that the first axis varies fastest. Power
//! coefficients refer to absolute coordinates. Legendre coefficients refer to
//! the box mapped affinely onto `[-1, 1]^d`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bernstein::{BernsteinPoly, PolyError};
use crate::eval::Labeling;
use crate::geometry::{GeometryError, HyperRect};
use crate::range::Tolerance;
use crate::tree::{Label, LabelStore, LeafCell, LeafKind, Node, Polarity, SubdivTree};

/// Largest dimension accepted from files.
pub const MAX_FILE_DIM: usize = 4;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("dimension {0} is not supported (1 to {MAX_FILE_DIM})")]
    Dimension(usize),
    #[error("field `{field}` has {got} entries, expected {expected}")]
    Length { field: &'static str, expected: usize, got: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("inconsistent tree dump: {0}")]
    Tree(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Bernstein,
    Power,
    Legendre,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyFile {
    pub dim: usize,
    pub degree: Vec<usize>,
    #[serde(rename = "box")]
    pub bounds: Vec<[f64; 2]>,
    pub basis: Basis,
    pub coeffs: Vec<f64>,
}

impl PolyFile {
    pub fn from_json(text: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_bernstein(p: &BernsteinPoly<f64>) -> Self {
        PolyFile {
            dim: p.dim(),
            degree: p.degree().to_vec(),
            bounds: p.domain().to_f64_bounds(),
            basis: Basis::Bernstein,
            coeffs: p.coeffs().to_vec(),
        }
    }

    pub fn to_bernstein(&self) -> Result<BernsteinPoly<f64>, IoError> {
        if self.dim == 0 || self.dim > MAX_FILE_DIM {
            return Err(IoError::Dimension(self.dim));
        }
        for (field, got) in [("degree", self.degree.len()), ("box", self.bounds.len())] {
            if got != self.dim {
                return Err(IoError::Length { field, expected: self.dim, got });
            }
        }
        let bounds: Vec<(f64, f64)> = self.bounds.iter().map(|b| (b[0], b[1])).collect();
        let domain = HyperRect::from_bounds(&bounds)?;
        let degree = self.degree.clone();
        Ok(match self.basis {
            Basis::Bernstein => BernsteinPoly::new(degree, domain, self.coeffs.clone())?,
            Basis::Power => BernsteinPoly::from_power(degree, domain, &self.coeffs)?,
            Basis::Legendre => BernsteinPoly::from_legendre(degree, domain, &self.coeffs)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeRecord {
    /// Arena index of the first of the `2^d` children.
    Internal(u32),
    /// Leaf id.
    Leaf(u32),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LeafRecord {
    pub node: u32,
    pub depth: u8,
    #[serde(rename = "box")]
    pub bounds: Vec<[f64; 2]>,
    pub kind: LeafKind,
    pub label_neg: Option<Label>,
    pub label_pos: Option<Label>,
}

/// Everything needed to answer label queries without rebuilding.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TreeDump {
    pub poly: PolyFile,
    pub tol_eps: f64,
    pub max_depth: u8,
    pub certified: bool,
    pub nodes: Vec<NodeRecord>,
    pub leaves: Vec<LeafRecord>,
    pub next_label: Label,
}

impl TreeDump {
    pub fn from_labeling(st: &Labeling<f64>) -> Self {
        let tree = st.tree();
        let nodes = tree
            .nodes()
            .iter()
            .map(|n| match *n {
                Node::Internal { first_child } => NodeRecord::Internal(first_child),
                Node::Leaf { leaf } => NodeRecord::Leaf(leaf),
            })
            .collect();
        let leaves = tree
            .leaves()
            .iter()
            .enumerate()
            .map(|(id, l)| LeafRecord {
                node: l.node,
                depth: l.depth,
                bounds: l.cell.to_f64_bounds(),
                kind: l.kind,
                label_neg: st.store().label(id as u32, Polarity::Neg),
                label_pos: st.store().label(id as u32, Polarity::Pos),
            })
            .collect();
        TreeDump {
            poly: PolyFile::from_bernstein(st.poly()),
            tol_eps: st.tolerance().eps,
            max_depth: tree.max_depth(),
            certified: tree.certified(),
            nodes,
            leaves,
            next_label: st.store().next_label(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn to_labeling(&self) -> Result<Labeling<f64>, IoError> {
        let poly = self.poly.to_bernstein()?;
        let nodes: Vec<Node> = self
            .nodes
            .iter()
            .map(|n| match *n {
                NodeRecord::Internal(first_child) => Node::Internal { first_child },
                NodeRecord::Leaf(leaf) => Node::Leaf { leaf },
            })
            .collect();
        let mut leaves = Vec::with_capacity(self.leaves.len());
        for l in &self.leaves {
            let bounds: Vec<(f64, f64)> = l.bounds.iter().map(|b| (b[0], b[1])).collect();
            leaves.push(LeafCell { node: l.node, depth: l.depth, cell: HyperRect::from_bounds(&bounds)?, kind: l.kind });
        }
        let tree = SubdivTree::from_parts(poly.domain().clone(), self.max_depth, nodes, leaves).map_err(IoError::Tree)?;
        let labels: Vec<(Option<Label>, Option<Label>)> =
            self.leaves.iter().map(|l| (l.label_neg, l.label_pos)).collect();
        let store = LabelStore::from_labels(&labels, self.next_label);
        Ok(Labeling::from_parts(poly, tree, store, Tolerance::absolute(self.tol_eps)))
    }
}
