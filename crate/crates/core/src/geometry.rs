//! Axis-aligned boxes, faces, multi-indices and midpoint splitting.
//!
//! Children of a split are numbered by a binary code: bit `k` of the child
//! index is set when the child occupies the upper half along axis `k`. Axes are
//! zero-based throughout the crate.

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("lower and upper corners have different dimensions ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("degenerate or inverted interval on axis {axis}")]
    Degenerate { axis: usize },
    #[error("non-finite bound on axis {axis}")]
    NonFinite { axis: usize },
}

/// Closed axis-aligned box `[lo_1, hi_1] x ... x [lo_d, hi_d]`.
///
/// A zero-dimensional box is allowed and serves as the marker returned by
/// [`HyperRect::face_box`] on one-dimensional boxes.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperRect<T> {
    lo: Vec<T>,
    hi: Vec<T>,
}

/// Which end of an axis a face sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Lower,
    Upper,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Lower => Side::Upper,
            Side::Upper => Side::Lower,
        }
    }
}

/// A face of a box: the axis it is normal to and the side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FaceRef {
    pub axis: usize,
    pub side: Side,
}

impl FaceRef {
    pub fn lower(axis: usize) -> Self {
        FaceRef { axis, side: Side::Lower }
    }

    pub fn upper(axis: usize) -> Self {
        FaceRef { axis, side: Side::Upper }
    }
}

/// Midpoint used by every split and every tree descent, so that both agree bit
/// for bit on which child a point falls into.
#[inline]
pub fn midpoint<T: Scalar>(lo: T, hi: T) -> T {
    (lo + hi) * T::half()
}

impl<T: Scalar> HyperRect<T> {
    pub fn new(lo: Vec<T>, hi: Vec<T>) -> Result<Self, GeometryError> {
        if lo.len() != hi.len() {
            return Err(GeometryError::DimensionMismatch(lo.len(), hi.len()));
        }
        for axis in 0..lo.len() {
            if !lo[axis].is_finite() || !hi[axis].is_finite() {
                return Err(GeometryError::NonFinite { axis });
            }
            if !(lo[axis] < hi[axis]) {
                return Err(GeometryError::Degenerate { axis });
            }
        }
        Ok(HyperRect { lo, hi })
    }

    pub fn from_bounds(bounds: &[(T, T)]) -> Result<Self, GeometryError> {
        let (lo, hi) = bounds.iter().copied().unzip();
        Self::new(lo, hi)
    }

    /// `[0,1]^d`.
    pub fn unit(dim: usize) -> Self {
        HyperRect { lo: vec![T::zero(); dim], hi: vec![T::one(); dim] }
    }

    /// `[-1,1]^d`.
    pub fn symmetric(dim: usize) -> Self {
        HyperRect { lo: vec![-T::one(); dim], hi: vec![T::one(); dim] }
    }

    /// The zero-dimensional box.
    pub fn point_marker() -> Self {
        HyperRect { lo: Vec::new(), hi: Vec::new() }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    #[inline]
    pub fn lo(&self) -> &[T] {
        &self.lo
    }

    #[inline]
    pub fn hi(&self) -> &[T] {
        &self.hi
    }

    #[inline]
    pub fn width(&self, axis: usize) -> T {
        self.hi[axis] - self.lo[axis]
    }

    pub fn center(&self) -> Vec<T> {
        (0..self.dim()).map(|k| midpoint(self.lo[k], self.hi[k])).collect()
    }

    /// Euclidean length of the main diagonal.
    pub fn diagonal(&self) -> T {
        (0..self.dim())
            .map(|k| self.width(k) * self.width(k))
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    pub fn volume(&self) -> T {
        (0..self.dim()).map(|k| self.width(k)).fold(T::one(), |a, b| a * b)
    }

    /// Number of children of a split, `2^d`.
    #[inline]
    pub fn child_count(&self) -> usize {
        1 << self.dim()
    }

    /// The `index`-th child of a midpoint split.
    pub fn child(&self, index: usize) -> Self {
        let d = self.dim();
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        for k in 0..d {
            let mid = midpoint(self.lo[k], self.hi[k]);
            if index >> k & 1 == 1 {
                lo[k] = mid;
            } else {
                hi[k] = mid;
            }
        }
        HyperRect { lo, hi }
    }

    /// Splits at the per-axis midpoints into `2^d` children, ordered by the
    /// binary child code.
    pub fn split(&self) -> Vec<Self> {
        (0..self.child_count()).map(|i| self.child(i)).collect()
    }

    /// Child code of the child containing `x`; points on a midpoint go low.
    pub fn child_index_of(&self, x: &[T]) -> usize {
        let mut index = 0;
        for k in 0..self.dim() {
            if x[k] > midpoint(self.lo[k], self.hi[k]) {
                index |= 1 << k;
            }
        }
        index
    }

    /// The `(d-1)`-dimensional box obtained by deleting `face.axis`.
    pub fn face_box(&self, face: FaceRef) -> Self {
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        lo.remove(face.axis);
        hi.remove(face.axis);
        HyperRect { lo, hi }
    }

    /// Coordinate of the face's hyperplane along its axis.
    pub fn face_coordinate(&self, face: FaceRef) -> T {
        match face.side {
            Side::Lower => self.lo[face.axis],
            Side::Upper => self.hi[face.axis],
        }
    }

    /// Lifts a point of `face_box(face)` back into `d` dimensions.
    pub fn embed_face_point(&self, face: FaceRef, y: &[T]) -> Vec<T> {
        let mut x = y.to_vec();
        x.insert(face.axis, self.face_coordinate(face));
        x
    }

    /// Closed-box membership.
    pub fn contains(&self, x: &[T]) -> bool {
        x.len() == self.dim() && (0..self.dim()).all(|k| self.lo[k] <= x[k] && x[k] <= self.hi[k])
    }

    pub fn contains_box(&self, other: &Self) -> bool {
        other.dim() == self.dim()
            && (0..self.dim()).all(|k| self.lo[k] <= other.lo[k] && other.hi[k] <= self.hi[k])
    }

    /// Maps `x` to the local coordinates `(x - lo) / (hi - lo)`.
    pub fn to_local(&self, x: &[T]) -> Vec<T> {
        (0..self.dim()).map(|k| (x[k] - self.lo[k]) / self.width(k)).collect()
    }

    /// All `2^d` corners, in child-code order.
    pub fn corners(&self) -> Vec<Vec<T>> {
        (0..self.child_count())
            .map(|code| {
                (0..self.dim())
                    .map(|k| if code >> k & 1 == 1 { self.hi[k] } else { self.lo[k] })
                    .collect()
            })
            .collect()
    }

    pub fn to_f64_bounds(&self) -> Vec<[f64; 2]> {
        (0..self.dim()).map(|k| [self.lo[k].as_f64(), self.hi[k].as_f64()]).collect()
    }
}

/// A multi-index `i` in `[0, n_1] x ... x [0, n_d]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    /// Offset into a tensor of the given degree, with axis 0 varying fastest.
    pub fn flat(&self, degree: &[usize]) -> usize {
        let mut offset = 0;
        let mut stride = 1;
        for (k, &i) in self.0.iter().enumerate() {
            debug_assert!(i <= degree[k]);
            offset += i * stride;
            stride *= degree[k] + 1;
        }
        offset
    }

    pub fn from_flat(mut offset: usize, degree: &[usize]) -> Self {
        let mut idx = Vec::with_capacity(degree.len());
        for &n in degree {
            idx.push(offset % (n + 1));
            offset /= n + 1;
        }
        MultiIndex(idx)
    }

    pub fn within(&self, degree: &[usize]) -> bool {
        self.0.len() == degree.len() && self.0.iter().zip(degree).all(|(i, n)| i <= n)
    }

    /// Every multi-index of the given degree, in storage order.
    pub fn all(degree: &[usize]) -> impl Iterator<Item = MultiIndex> + '_ {
        let total: usize = degree.iter().map(|n| n + 1).product();
        (0..total).map(move |off| MultiIndex::from_flat(off, degree))
    }
}

/// Strides of a dense tensor with `extents[k]` entries along axis `k`, axis 0 fastest.
pub(crate) fn strides_of(extents: &[usize]) -> Vec<usize> {
    let mut strides = Vec::with_capacity(extents.len());
    let mut s = 1;
    for &e in extents {
        strides.push(s);
        s *= e;
    }
    strides
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect(b: &[(f64, f64)]) -> HyperRect<f64> {
        HyperRect::from_bounds(b).unwrap()
    }

    #[test]
    fn split_unit_square() {
        let kids = rect(&[(0.0, 1.0), (0.0, 1.0)]).split();
        assert_eq!(
            kids,
            vec![
                rect(&[(0.0, 0.5), (0.0, 0.5)]),
                rect(&[(0.5, 1.0), (0.0, 0.5)]),
                rect(&[(0.0, 0.5), (0.5, 1.0)]),
                rect(&[(0.5, 1.0), (0.5, 1.0)]),
            ]
        );
    }

    #[test]
    fn split_interval() {
        let kids = rect(&[(-1.0, 1.0)]).split();
        assert_eq!(kids, vec![rect(&[(-1.0, 0.0)]), rect(&[(0.0, 1.0)])]);
    }

    #[test]
    fn split_keeps_aspect_ratio() {
        for kid in rect(&[(0.0, 2.0), (0.0, 1.0)]).split() {
            assert_eq!(kid.width(0) / kid.width(1), 2.0);
        }
    }

    #[test]
    fn face_boxes() {
        let b = rect(&[(0.0, 1.0), (2.0, 3.0)]);
        assert_eq!(b.face_box(FaceRef::lower(0)), rect(&[(2.0, 3.0)]));
        assert_eq!(b.face_box(FaceRef::upper(1)), rect(&[(0.0, 1.0)]));
        let line = rect(&[(0.0, 1.0)]);
        let marker = line.face_box(FaceRef::lower(0));
        assert_eq!(marker.dim(), 0);
        assert_eq!(line.face_coordinate(FaceRef::lower(0)), 0.0);
        assert_eq!(line.embed_face_point(FaceRef::lower(0), &[]), vec![0.0]);
    }

    #[test]
    fn closed_containment() {
        let b = HyperRect::<f64>::unit(2);
        assert!(b.contains(&[0.5, 0.5]));
        assert!(b.contains(&[1.0, 1.0]));
        assert!(!b.contains(&[1.0001, 0.5]));
        assert!(!b.contains(&[0.5]));
    }

    #[test]
    fn rejects_bad_boxes() {
        assert!(matches!(
            HyperRect::new(vec![0.0, 1.0], vec![1.0, 1.0]),
            Err(GeometryError::Degenerate { axis: 1 })
        ));
        assert!(HyperRect::new(vec![0.0], vec![1.0, 2.0]).is_err());
        assert!(HyperRect::new(vec![f64::NAN], vec![1.0]).is_err());
    }

    #[test]
    fn child_lookup_ties_go_low() {
        let b = HyperRect::<f64>::unit(2);
        assert_eq!(b.child_index_of(&[0.5, 0.5]), 0);
        assert_eq!(b.child_index_of(&[0.75, 0.25]), 1);
        assert_eq!(b.child_index_of(&[0.25, 0.75]), 2);
    }

    #[test]
    fn multi_index_roundtrip() {
        let degree = [2, 3, 1];
        for (off, mi) in MultiIndex::all(&degree).enumerate() {
            assert_eq!(mi.flat(&degree), off);
            assert!(mi.within(&degree));
        }
        assert_eq!(MultiIndex(vec![1, 0, 0]).flat(&degree), 1);
        assert_eq!(MultiIndex(vec![0, 1, 0]).flat(&degree), 3);
    }
}
