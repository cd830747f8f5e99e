//! Sixteen-bit node encoding of a labeled tree.
//!
//! Each node is one `u16`. The top bit marks a leaf. An internal node keeps
//! the arena index of its first child in the low 15 bits. A leaf keeps its
//! kind in bits 0-1, its negative label in bits 2-7 and its positive label in
//! bits 8-13, with 0 meaning "no label yet". Trees with more than `2^15`
//! nodes or labels above 63 do not fit.

use thiserror::Error;

use crate::geometry::{midpoint, HyperRect};
use crate::scalar::Scalar;
use crate::tree::{Label, LabelStore, LeafKind, Node, Polarity, SubdivTree};

const LEAF_FLAG: u16 = 1 << 15;
const INDEX_MASK: u16 = LEAF_FLAG - 1;
pub const MAX_COMPACT_LABEL: Label = 63;
pub const MAX_COMPACT_NODES: usize = 1 << 15;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompactError {
    #[error("tree has {0} nodes; the compact layout holds at most {MAX_COMPACT_NODES}")]
    TooManyNodes(usize),
    #[error("label {0} exceeds the compact limit {MAX_COMPACT_LABEL}")]
    LabelTooLarge(Label),
}

fn kind_bits(kind: LeafKind) -> u16 {
    match kind {
        LeafKind::UniformNeg => 0,
        LeafKind::UniformPos => 1,
        LeafKind::MixedSimplyConnected => 2,
        LeafKind::NotSimplyConnected => 3,
    }
}

fn kind_from_bits(bits: u16) -> LeafKind {
    match bits & 3 {
        0 => LeafKind::UniformNeg,
        1 => LeafKind::UniformPos,
        2 => LeafKind::MixedSimplyConnected,
        _ => LeafKind::NotSimplyConnected,
    }
}

/// A tree plus its labels packed into two bytes per node.
#[derive(Debug, Clone, PartialEq)]
pub struct CompactTree<T> {
    root: HyperRect<T>,
    nodes: Vec<u16>,
}

impl<T: Scalar> CompactTree<T> {
    pub fn encode(tree: &SubdivTree<T>, store: &LabelStore) -> Result<Self, CompactError> {
        if tree.nodes().len() > MAX_COMPACT_NODES {
            return Err(CompactError::TooManyNodes(tree.nodes().len()));
        }
        let label_bits = |l: Option<Label>| -> Result<u16, CompactError> {
            match l {
                None => Ok(0),
                Some(l) if l <= MAX_COMPACT_LABEL => Ok(l as u16),
                Some(l) => Err(CompactError::LabelTooLarge(l)),
            }
        };
        let nodes = tree
            .nodes()
            .iter()
            .map(|n| match *n {
                Node::Internal { first_child } => Ok(first_child as u16 & INDEX_MASK),
                Node::Leaf { leaf } => {
                    let neg = label_bits(store.label(leaf, Polarity::Neg))?;
                    let pos = label_bits(store.label(leaf, Polarity::Pos))?;
                    Ok(LEAF_FLAG | kind_bits(tree.leaf(leaf).kind) | neg << 2 | pos << 8)
                }
            })
            .collect::<Result<Vec<u16>, CompactError>>()?;
        Ok(CompactTree { root: tree.root_box().clone(), nodes })
    }

    pub fn nodes(&self) -> &[u16] {
        &self.nodes
    }

    pub fn size_in_bytes(&self) -> usize {
        self.nodes.len() * std::mem::size_of::<u16>()
    }

    /// Node index of the leaf containing `x` (ties at midpoints go low).
    pub fn locate(&self, x: &[T]) -> usize {
        let d = self.root.dim();
        let mut lo = self.root.lo().to_vec();
        let mut hi = self.root.hi().to_vec();
        let mut node = 0usize;
        while self.nodes[node] & LEAF_FLAG == 0 {
            let mut code = 0;
            for k in 0..d {
                let mid = midpoint(lo[k], hi[k]);
                if x[k] > mid {
                    code |= 1 << k;
                    lo[k] = mid;
                } else {
                    hi[k] = mid;
                }
            }
            node = (self.nodes[node] & INDEX_MASK) as usize + code;
        }
        node
    }

    pub fn kind(&self, node: usize) -> Option<LeafKind> {
        let bits = self.nodes[node];
        (bits & LEAF_FLAG != 0).then(|| kind_from_bits(bits))
    }

    pub fn label(&self, node: usize, polarity: Polarity) -> Option<Label> {
        let bits = self.nodes[node];
        if bits & LEAF_FLAG == 0 {
            return None;
        }
        let shift = match polarity {
            Polarity::Neg => 2,
            Polarity::Pos => 8,
        };
        match (bits >> shift) & 0x3f {
            0 => None,
            l => Some(l as Label),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernstein::BernsteinPoly;
    use crate::eval::Labeling;
    use crate::range::Tolerance;

    #[test]
    fn roundtrip_disk() {
        let mut c = vec![0.0; 9];
        c[0] = -0.25;
        c[2] = 1.0;
        c[6] = 1.0;
        let p = BernsteinPoly::from_power(vec![2, 2], HyperRect::symmetric(2), &c).unwrap();
        let st = Labeling::build(p, 6, Tolerance::absolute(1e-12)).unwrap();
        let packed = CompactTree::encode(st.tree(), st.store()).unwrap();
        assert_eq!(packed.size_in_bytes(), 2 * st.tree().nodes().len());
        for x in [[0.0, 0.1], [0.9, -0.9], [-0.3, 0.35], [0.45, 0.2]] {
            let leaf = st.tree().locate(&x);
            let node = packed.locate(&x);
            assert_eq!(node, st.tree().leaf(leaf).node as usize);
            assert_eq!(packed.kind(node), Some(st.tree().leaf(leaf).kind));
            for pol in Polarity::BOTH {
                assert_eq!(packed.label(node, pol), st.store().label(leaf, pol));
            }
        }
        assert_eq!(packed.kind(0), None);
    }

    #[test]
    fn capacity_errors() {
        let p = BernsteinPoly::constant(HyperRect::<f64>::unit(1), 1.0);
        let st = Labeling::build(p, 2, Tolerance::absolute(0.0)).unwrap();
        let big = LabelStore::from_labels(&[(None, Some(64))], 65);
        assert_eq!(CompactTree::encode(st.tree(), &big), Err(CompactError::LabelTooLarge(64)));
    }
}
