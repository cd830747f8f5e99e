//! Subdivision tree construction, leaf adjacency and label generation.
//!
//! The tree is an arena of nodes. Internal nodes own `2^d` consecutive child
//! slots, numbered by the binary child code of [`HyperRect::split`]. Leaves
//! carry a [`LeafKind`] and index into the per-leaf tables.
//!
//! Connectivity is never stored as explicit graphs: each leaf has one slot per
//! polarity in a disjoint-set forest, and a face whose sign set contains `-1`
//! (resp. `+1`) merges the two negative (resp. positive) slots.

use std::sync::atomic::{AtomicU32, Ordering};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bernstein::BernsteinPoly;
use crate::disjoint_set::DisjointSet;
use crate::geometry::{FaceRef, HyperRect};
use crate::range::{classify, sign_eval, CellClass, SignSet, Tolerance};
use crate::scalar::Scalar;

/// Largest accepted maximum depth.
pub const MAX_SUPPORTED_DEPTH: u8 = 40;

pub type LeafId = u32;
pub type Label = u32;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BuildError {
    #[error("degenerate input: polynomial is identically zero")]
    Degenerate,
    #[error("zero-dimensional polynomials have no domain to subdivide")]
    ZeroDimensional,
    #[error("maximum depth {0} exceeds the supported limit {MAX_SUPPORTED_DEPTH}")]
    DepthTooLarge(u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LeafKind {
    UniformNeg,
    UniformPos,
    MixedSimplyConnected,
    NotSimplyConnected,
}

impl LeafKind {
    pub fn from_class(class: CellClass) -> LeafKind {
        if !class.simply_connected {
            LeafKind::NotSimplyConnected
        } else if class.signs == SignSet::POS {
            LeafKind::UniformPos
        } else if class.signs == SignSet::NEG {
            LeafKind::UniformNeg
        } else {
            LeafKind::MixedSimplyConnected
        }
    }

    pub fn admits(self, polarity: Polarity) -> bool {
        match polarity {
            Polarity::Neg => self != LeafKind::UniformPos,
            Polarity::Pos => self != LeafKind::UniformNeg,
        }
    }

    pub fn is_simply_connected(self) -> bool {
        self != LeafKind::NotSimplyConnected
    }
}

/// Which side of the zero set a label refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Polarity {
    Neg,
    Pos,
}

impl Polarity {
    pub const BOTH: [Polarity; 2] = [Polarity::Neg, Polarity::Pos];

    #[inline]
    pub fn slot(self, leaf: LeafId) -> usize {
        2 * leaf as usize + self as usize
    }

    fn in_set(self, s: SignSet) -> bool {
        match self {
            Polarity::Neg => s.has_neg(),
            Polarity::Pos => s.has_pos(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Node {
    Internal { first_child: u32 },
    Leaf { leaf: LeafId },
}

#[derive(Debug, Clone, PartialEq)]
pub struct LeafCell<T> {
    pub node: u32,
    pub depth: u8,
    pub cell: HyperRect<T>,
    pub kind: LeafKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    /// Cells at this depth that fail the simply-connected test become
    /// not-simply-connected leaves.
    pub max_depth: u8,
    /// Cells shallower than this are split even when simply connected.
    pub min_depth: u8,
    /// Keep each leaf's re-based polynomial for the connectivity pass.
    pub cache_leaf_polys: bool,
}

impl BuildOptions {
    pub fn with_max_depth(max_depth: u8) -> Self {
        BuildOptions { max_depth, min_depth: 0, cache_leaf_polys: true }
    }
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self::with_max_depth(8)
    }
}

#[derive(Debug, Clone)]
pub struct SubdivTree<T> {
    root: HyperRect<T>,
    max_depth: u8,
    nodes: Vec<Node>,
    leaves: Vec<LeafCell<T>>,
    leaf_polys: Option<Vec<BernsteinPoly<T>>>,
}

impl<T: Scalar> SubdivTree<T> {
    /// Reassembles a tree from its parts, checking the arena shape.
    pub fn from_parts(
        root: HyperRect<T>,
        max_depth: u8,
        nodes: Vec<Node>,
        leaves: Vec<LeafCell<T>>,
    ) -> Result<Self, String> {
        let fanout = 1usize << root.dim();
        if nodes.is_empty() {
            return Err("tree has no nodes".into());
        }
        for (i, n) in nodes.iter().enumerate() {
            match *n {
                Node::Internal { first_child } => {
                    let first = first_child as usize;
                    if first <= i || first + fanout > nodes.len() {
                        return Err(format!("node {i} has out-of-range children"));
                    }
                }
                Node::Leaf { leaf } => match leaves.get(leaf as usize) {
                    Some(l) if l.node as usize == i => {}
                    _ => return Err(format!("node {i} references a bad leaf record")),
                },
            }
        }
        Ok(SubdivTree { root, max_depth, nodes, leaves, leaf_polys: None })
    }

    pub fn dim(&self) -> usize {
        self.root.dim()
    }

    pub fn root_box(&self) -> &HyperRect<T> {
        &self.root
    }

    pub fn max_depth(&self) -> u8 {
        self.max_depth
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn leaves(&self) -> &[LeafCell<T>] {
        &self.leaves
    }

    pub fn leaf(&self, id: LeafId) -> &LeafCell<T> {
        &self.leaves[id as usize]
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    /// True when no leaf had to be declared not simply connected.
    pub fn certified(&self) -> bool {
        self.leaves.iter().all(|l| l.kind.is_simply_connected())
    }

    /// Depth of the deepest leaf.
    pub fn depth_reached(&self) -> u8 {
        self.leaves.iter().map(|l| l.depth).max().unwrap_or(0)
    }

    pub fn count_kind(&self, kind: LeafKind) -> usize {
        self.leaves.iter().filter(|l| l.kind == kind).count()
    }

    /// Leaf count per depth, index = depth.
    pub fn depth_histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.depth_reached() as usize + 1];
        for l in &self.leaves {
            h[l.depth as usize] += 1;
        }
        h
    }

    pub fn has_cached_polys(&self) -> bool {
        self.leaf_polys.is_some()
    }

    /// Leaf reached by descending towards `x` (ties at midpoints go low).
    /// The caller guarantees `x` lies in the root box.
    pub fn locate(&self, x: &[T]) -> LeafId {
        let d = self.dim();
        let mut lo = self.root.lo().to_vec();
        let mut hi = self.root.hi().to_vec();
        let mut node = 0usize;
        loop {
            match self.nodes[node] {
                Node::Leaf { leaf } => return leaf,
                Node::Internal { first_child } => {
                    let mut code = 0;
                    for k in 0..d {
                        let mid = crate::geometry::midpoint(lo[k], hi[k]);
                        if x[k] > mid {
                            code |= 1 << k;
                            lo[k] = mid;
                        } else {
                            hi[k] = mid;
                        }
                    }
                    node = first_child as usize + code;
                }
            }
        }
    }

    /// The polynomial re-based onto a leaf, replaying the midpoint splits of
    /// the build from the root so the coefficients match the build bit for bit.
    pub fn leaf_poly(&self, root_poly: &BernsteinPoly<T>, id: LeafId) -> BernsteinPoly<T> {
        if let Some(polys) = &self.leaf_polys {
            return polys[id as usize].clone();
        }
        self.replay_leaf_poly(root_poly, id)
    }

    fn replay_leaf_poly(&self, root_poly: &BernsteinPoly<T>, id: LeafId) -> BernsteinPoly<T> {
        let target = self.leaves[id as usize].cell.center();
        let mut p = root_poly.clone();
        let mut node = 0usize;
        while let Node::Internal { first_child } = self.nodes[node] {
            let code = p.domain().child_index_of(&target);
            p = p.child(code);
            node = first_child as usize + code;
        }
        debug_assert_eq!(self.nodes[node], Node::Leaf { leaf: id });
        p
    }
}

/// Builds the subdivision tree by depth-first recursion.
pub fn build_tree<T: Scalar>(
    p: &BernsteinPoly<T>,
    opts: BuildOptions,
    tol: Tolerance<T>,
) -> Result<SubdivTree<T>, BuildError> {
    if p.dim() == 0 {
        return Err(BuildError::ZeroDimensional);
    }
    if p.coeffs().iter().all(|c| *c == T::zero()) {
        return Err(BuildError::Degenerate);
    }
    if opts.max_depth > MAX_SUPPORTED_DEPTH {
        return Err(BuildError::DepthTooLarge(opts.max_depth));
    }
    let mut b = Builder {
        opts,
        tol,
        fanout: 1 << p.dim(),
        nodes: vec![Node::Leaf { leaf: 0 }],
        leaves: Vec::new(),
        polys: Vec::new(),
    };
    b.visit(0, p.clone(), 0);
    Ok(SubdivTree {
        root: p.domain().clone(),
        max_depth: opts.max_depth,
        nodes: b.nodes,
        leaves: b.leaves,
        leaf_polys: opts.cache_leaf_polys.then_some(b.polys),
    })
}

struct Builder<T> {
    opts: BuildOptions,
    tol: Tolerance<T>,
    fanout: usize,
    nodes: Vec<Node>,
    leaves: Vec<LeafCell<T>>,
    polys: Vec<BernsteinPoly<T>>,
}

impl<T: Scalar> Builder<T> {
    fn visit(&mut self, node: usize, poly: BernsteinPoly<T>, depth: u8) {
        let class = classify(&poly, self.tol);
        let forced = depth < self.opts.min_depth;
        if !forced && (class.simply_connected || depth >= self.opts.max_depth) {
            self.make_leaf(node, poly, depth, LeafKind::from_class(class));
            return;
        }
        let first = self.nodes.len();
        self.nodes.extend(std::iter::repeat(Node::Leaf { leaf: u32::MAX }).take(self.fanout));
        self.nodes[node] = Node::Internal { first_child: first as u32 };
        for (i, child) in poly.split_children().into_iter().enumerate() {
            self.visit(first + i, child, depth + 1);
        }
    }

    fn make_leaf(&mut self, node: usize, poly: BernsteinPoly<T>, depth: u8, kind: LeafKind) {
        let id = self.leaves.len() as LeafId;
        self.nodes[node] = Node::Leaf { leaf: id };
        self.leaves.push(LeafCell { node: node as u32, depth, cell: poly.domain().clone(), kind });
        if self.opts.cache_leaf_polys {
            self.polys.push(poly);
        }
    }
}

/// Two leaves sharing a `(d-1)`-dimensional face normal to `axis`; `lower`
/// sits below the face and `upper` above it. `face` is the finer leaf's face.
#[derive(Debug, Clone, PartialEq)]
pub struct Adjacency<T> {
    pub lower: LeafId,
    pub upper: LeafId,
    pub axis: usize,
    pub face: HyperRect<T>,
}

/// Visits each face-adjacent leaf pair exactly once as `(lower, upper, axis)`.
pub fn for_each_adjacent_pair<T: Scalar>(tree: &SubdivTree<T>, mut f: impl FnMut(LeafId, LeafId, usize)) {
    let d = tree.dim();
    let mut walker = FaceWalker { nodes: &tree.nodes, d, f: &mut f };
    walker.cell(0);
}

struct FaceWalker<'a, F> {
    nodes: &'a [Node],
    d: usize,
    f: &'a mut F,
}

impl<F: FnMut(LeafId, LeafId, usize)> FaceWalker<'_, F> {
    fn cell(&mut self, node: usize) {
        if let Node::Internal { first_child } = self.nodes[node] {
            let first = first_child as usize;
            for c in 0..1usize << self.d {
                self.cell(first + c);
            }
            for axis in 0..self.d {
                for code in 0..1usize << self.d {
                    if code >> axis & 1 == 0 {
                        self.face(first + code, first + (code | 1 << axis), axis);
                    }
                }
            }
        }
    }

    fn face(&mut self, a: usize, b: usize, axis: usize) {
        match (self.nodes[a], self.nodes[b]) {
            (Node::Leaf { leaf: la }, Node::Leaf { leaf: lb }) => (self.f)(la, lb, axis),
            (na, nb) => {
                for code in 0..1usize << self.d {
                    if code >> axis & 1 != 0 {
                        continue;
                    }
                    let a2 = match na {
                        Node::Internal { first_child } => first_child as usize + (code | 1 << axis),
                        Node::Leaf { .. } => a,
                    };
                    let b2 = match nb {
                        Node::Internal { first_child } => first_child as usize + code,
                        Node::Leaf { .. } => b,
                    };
                    self.face(a2, b2, axis);
                }
            }
        }
    }
}

/// Which leaf owns the shared face of an adjacent pair and on which side.
fn finer_face<T: Scalar>(tree: &SubdivTree<T>, lower: LeafId, upper: LeafId, axis: usize) -> (LeafId, FaceRef) {
    if tree.leaf(upper).depth >= tree.leaf(lower).depth {
        (upper, FaceRef::lower(axis))
    } else {
        (lower, FaceRef::upper(axis))
    }
}

/// All face-adjacent leaf pairs with their shared faces.
pub fn leaf_adjacency<T: Scalar>(tree: &SubdivTree<T>) -> Vec<Adjacency<T>> {
    let mut out = Vec::new();
    for_each_adjacent_pair(tree, |lower, upper, axis| {
        let (owner, face) = finer_face(tree, lower, upper, axis);
        out.push(Adjacency { lower, upper, axis, face: tree.leaf(owner).cell.face_box(face) });
    });
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectivityOptions {
    /// Reuse leaf kinds and leaf polynomials computed during the build.
    pub use_cache: bool,
    /// Skip faces whose leaves are already joined on every admissible side.
    pub skip_connected: bool,
}

impl Default for ConnectivityOptions {
    fn default() -> Self {
        ConnectivityOptions { use_cache: true, skip_connected: true }
    }
}

/// Per-leaf labels for both polarities, backed by the disjoint-set forest
/// that produced them. Label ids come from one counter shared by both
/// polarities and start at 1.
#[derive(Debug)]
pub struct LabelStore {
    forest: DisjointSet,
    slots: Vec<AtomicU32>,
    next: AtomicU32,
}

const UNDEFINED: u32 = 0;

impl LabelStore {
    /// Store with no edges and no labels for `leaf_count` leaves.
    pub fn empty(leaf_count: usize) -> Self {
        LabelStore {
            forest: DisjointSet::new(2 * leaf_count),
            slots: (0..2 * leaf_count).map(|_| AtomicU32::new(UNDEFINED)).collect(),
            next: AtomicU32::new(1),
        }
    }

    /// Restores a store from saved slot labels (`None` = undefined) and the
    /// next unused label id.
    pub fn from_labels(labels: &[(Option<Label>, Option<Label>)], next: Label) -> Self {
        let store = Self::empty(labels.len());
        for (leaf, &(neg, pos)) in labels.iter().enumerate() {
            store.slots[2 * leaf].store(neg.unwrap_or(UNDEFINED), Ordering::Relaxed);
            store.slots[2 * leaf + 1].store(pos.unwrap_or(UNDEFINED), Ordering::Relaxed);
        }
        store.next.store(next.max(1), Ordering::Relaxed);
        store
    }

    pub fn leaf_count(&self) -> usize {
        self.slots.len() / 2
    }

    pub fn label(&self, leaf: LeafId, polarity: Polarity) -> Option<Label> {
        match self.slots[polarity.slot(leaf)].load(Ordering::Acquire) {
            UNDEFINED => None,
            l => Some(l),
        }
    }

    /// Returns the slot's label, creating a fresh one if it is undefined.
    /// Concurrent first calls on the same slot agree on one id.
    pub fn label_or_create(&self, leaf: LeafId, polarity: Polarity) -> Label {
        let slot = &self.slots[polarity.slot(leaf)];
        let current = slot.load(Ordering::Acquire);
        if current != UNDEFINED {
            return current;
        }
        let fresh = self.next.fetch_add(1, Ordering::AcqRel);
        match slot.compare_exchange(UNDEFINED, fresh, Ordering::AcqRel, Ordering::Acquire) {
            Ok(_) => fresh,
            Err(winner) => winner,
        }
    }

    /// Next label id that would be handed out.
    pub fn next_label(&self) -> Label {
        self.next.load(Ordering::Acquire)
    }

    /// Whether two slots were joined by face edges.
    pub fn connected(&self, a: (LeafId, Polarity), b: (LeafId, Polarity)) -> bool {
        self.forest.find_const(a.1.slot(a.0)) == self.forest.find_const(b.1.slot(b.0))
    }

    /// Distinct labels currently assigned to slots of the given polarity.
    pub fn distinct_labels(&self, polarity: Polarity) -> Vec<Label> {
        let mut v: Vec<Label> = (0..self.leaf_count() as LeafId).filter_map(|l| self.label(l, polarity)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Snapshot of every leaf's `(neg, pos)` labels.
    pub fn snapshot(&self) -> Vec<(Option<Label>, Option<Label>)> {
        (0..self.leaf_count() as LeafId)
            .map(|l| (self.label(l, Polarity::Neg), self.label(l, Polarity::Pos)))
            .collect()
    }
}

impl Clone for LabelStore {
    fn clone(&self) -> Self {
        LabelStore {
            forest: self.forest.clone(),
            slots: self.slots.iter().map(|s| AtomicU32::new(s.load(Ordering::Acquire))).collect(),
            next: AtomicU32::new(self.next.load(Ordering::Acquire)),
        }
    }
}

/// Face connectivity pass followed by label generation.
pub fn build_connectivity<T: Scalar>(
    tree: &SubdivTree<T>,
    p: &BernsteinPoly<T>,
    tol: Tolerance<T>,
    opts: ConnectivityOptions,
) -> LabelStore {
    let n = tree.leaf_count();
    let use_cache = opts.use_cache && tree.has_cached_polys();
    let replayed: Option<Vec<BernsteinPoly<T>>> =
        (!use_cache).then(|| (0..n as LeafId).map(|id| tree.replay_leaf_poly(p, id)).collect());
    let leaf_poly = |id: LeafId| -> &BernsteinPoly<T> {
        match &replayed {
            Some(v) => &v[id as usize],
            None => &tree.leaf_polys.as_ref().expect("cached leaf polynomials")[id as usize],
        }
    };
    let kinds: Vec<LeafKind> = if use_cache {
        tree.leaves.iter().map(|l| l.kind).collect()
    } else {
        (0..n as LeafId)
            .map(|id| {
                let class = classify(leaf_poly(id), tol);
                if class.simply_connected || tree.leaf(id).depth < tree.max_depth {
                    LeafKind::from_class(class)
                } else {
                    LeafKind::NotSimplyConnected
                }
            })
            .collect()
    };

    let mut forest = DisjointSet::new(2 * n);
    let mut touched = vec![false; 2 * n];
    for_each_adjacent_pair(tree, |lower, upper, axis| {
        let (kl, ku) = (kinds[lower as usize], kinds[upper as usize]);
        let allowed = Polarity::BOTH.map(|pol| kl.admits(pol) && ku.admits(pol));
        if !allowed[0] && !allowed[1] {
            return;
        }
        if opts.skip_connected
            && Polarity::BOTH
                .iter()
                .zip(allowed)
                .all(|(pol, ok)| !ok || forest.same(pol.slot(lower), pol.slot(upper)))
        {
            return;
        }
        let uniform = |k: LeafKind| match k {
            LeafKind::UniformNeg => Some(SignSet::NEG),
            LeafKind::UniformPos => Some(SignSet::POS),
            _ => None,
        };
        let signs = match (use_cache, uniform(kl).or(uniform(ku))) {
            (true, Some(s)) => s,
            _ => {
                let (owner, face) = finer_face(tree, lower, upper, axis);
                sign_eval(&leaf_poly(owner).restrict_to_face(face), tol)
            }
        };
        for (pol, ok) in Polarity::BOTH.iter().zip(allowed) {
            if ok && pol.in_set(signs) {
                forest.union(pol.slot(lower), pol.slot(upper));
                touched[pol.slot(lower)] = true;
                touched[pol.slot(upper)] = true;
            }
        }
    });

    let mut store = LabelStore::empty(n);
    let mut root_label = vec![UNDEFINED; 2 * n];
    let mut next = 1u32;
    for slot in 0..2 * n {
        if !touched[slot] {
            continue;
        }
        let root = forest.find(slot);
        if root_label[root] == UNDEFINED {
            root_label[root] = next;
            next += 1;
        }
        store.slots[slot].store(root_label[root], Ordering::Relaxed);
    }
    store.next.store(next, Ordering::Relaxed);
    store.forest = forest;
    store
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_on_square() -> BernsteinPoly<f64> {
        BernsteinPoly::from_power(vec![1, 0], HyperRect::symmetric(2), &[0.0, 1.0]).unwrap()
    }

    fn tol() -> Tolerance<f64> {
        Tolerance::absolute(1e-12)
    }

    #[test]
    fn constant_is_single_positive_leaf() {
        let p = BernsteinPoly::constant(HyperRect::<f64>::unit(2), 1.0);
        let t = build_tree(&p, BuildOptions::default(), tol()).unwrap();
        assert_eq!(t.leaf_count(), 1);
        assert_eq!(t.leaf(0).kind, LeafKind::UniformPos);
        assert!(t.certified());
        assert!(leaf_adjacency(&t).is_empty());
    }

    #[test]
    fn half_plane_root_is_simply_connected() {
        for depth in [0, 3, 8] {
            let t = build_tree(&x_on_square(), BuildOptions::with_max_depth(depth), tol()).unwrap();
            assert_eq!(t.leaf_count(), 1);
            assert_eq!(t.leaf(0).kind, LeafKind::MixedSimplyConnected);
        }
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        let p = BernsteinPoly::constant(HyperRect::<f64>::unit(2), 0.0);
        assert_eq!(build_tree(&p, BuildOptions::default(), tol()).unwrap_err(), BuildError::Degenerate);
        let p = BernsteinPoly::scalar(1.0);
        assert_eq!(build_tree(&p, BuildOptions::default(), tol()).unwrap_err(), BuildError::ZeroDimensional);
        let p = x_on_square();
        assert!(matches!(build_tree(&p, BuildOptions::with_max_depth(200), tol()), Err(BuildError::DepthTooLarge(_))));
    }

    #[test]
    fn quadrant_adjacency() {
        let opts = BuildOptions { max_depth: 8, min_depth: 1, cache_leaf_polys: true };
        let t = build_tree(&x_on_square(), opts, tol()).unwrap();
        assert_eq!(t.leaf_count(), 4);
        let adj = leaf_adjacency(&t);
        assert_eq!(adj.len(), 4);
        let mut pairs: Vec<(u32, u32, usize)> = adj.iter().map(|a| (a.lower, a.upper, a.axis)).collect();
        pairs.sort();
        assert_eq!(pairs, vec![(0, 1, 0), (0, 2, 1), (1, 3, 1), (2, 3, 0)]);
    }

    #[test]
    fn forced_split_of_half_plane_gives_one_label_per_side() {
        let opts = BuildOptions { max_depth: 8, min_depth: 1, cache_leaf_polys: true };
        let p = x_on_square();
        let t = build_tree(&p, opts, tol()).unwrap();
        let store = build_connectivity(&t, &p, tol(), ConnectivityOptions::default());
        assert_eq!(store.distinct_labels(Polarity::Neg).len(), 1);
        assert_eq!(store.distinct_labels(Polarity::Pos).len(), 1);
        assert_ne!(store.distinct_labels(Polarity::Neg), store.distinct_labels(Polarity::Pos));
        // the middle face x = 0 joins left and right leaves on both sides
        assert!(store.connected((0, Polarity::Neg), (1, Polarity::Neg)));
        assert!(store.connected((0, Polarity::Pos), (1, Polarity::Pos)));
    }

    #[test]
    fn forced_split_of_constant_joins_positive_slots_only() {
        let opts = BuildOptions { max_depth: 8, min_depth: 1, cache_leaf_polys: true };
        let p = BernsteinPoly::constant(HyperRect::<f64>::unit(2), 2.0);
        let t = build_tree(&p, opts, tol()).unwrap();
        let store = build_connectivity(&t, &p, tol(), ConnectivityOptions::default());
        assert_eq!(store.distinct_labels(Polarity::Pos), vec![1]);
        assert!(store.distinct_labels(Polarity::Neg).is_empty());
    }

    #[test]
    fn label_or_create_is_idempotent() {
        let store = LabelStore::empty(3);
        let a = store.label_or_create(1, Polarity::Pos);
        assert_eq!(store.label_or_create(1, Polarity::Pos), a);
        let b = store.label_or_create(1, Polarity::Neg);
        assert_ne!(a, b);
        assert_eq!(store.label(2, Polarity::Pos), None);
    }
}
