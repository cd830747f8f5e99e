//! Tensor-product Bernstein polynomials on boxes.
//!
//! Coefficients are stored densely with axis 0 varying fastest: the
//! coefficient of multi-index `i` lives at `i_1 + (n_1+1) * (i_2 + (n_2+1) * (...))`.
//! Every kernel that walks the tensor along one axis does so through
//! [`fibers`], which yields the start offset of each one-dimensional fiber.

use thiserror::Error;

use crate::geometry::{midpoint, strides_of, FaceRef, GeometryError, HyperRect, MultiIndex, Side};
use crate::scalar::{binomial, Scalar};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolyError {
    #[error("expected {expected} coefficients for the given degree, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("non-finite coefficient at offset {0}")]
    NonFinite(usize),
    #[error("dimension mismatch: polynomial has {expected} variables, input has {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("axis {axis} has degree 0 and cannot be differentiated")]
    ZeroDegreeAxis { axis: usize },
    #[error("axis {axis} out of range for a {dim}-dimensional polynomial")]
    AxisOutOfRange { axis: usize, dim: usize },
    #[error("sub-box is not contained in the polynomial's domain")]
    NotContained,
    #[error("subdivision parameter must lie strictly inside (0, 1)")]
    BadParameter,
    #[error("damping factor must be positive")]
    BadOmega,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// `phi(x) = sum_i c_i b_i^{n,U}(x)` on the box `U`.
#[derive(Debug, Clone, PartialEq)]
pub struct BernsteinPoly<T> {
    degree: Vec<usize>,
    domain: HyperRect<T>,
    coeffs: Vec<T>,
}

/// Start offsets of the fibers of a tensor along `axis`, given the per-axis
/// extents. Each fiber has `extents[axis]` entries spaced by the axis stride.
pub(crate) fn fibers(extents: &[usize], axis: usize) -> impl Iterator<Item = usize> {
    let stride: usize = extents[..axis].iter().product();
    let block = stride * extents[axis];
    let total: usize = extents.iter().product();
    let outer = if block == 0 { 0 } else { total / block };
    (0..outer).flat_map(move |o| (0..stride).map(move |i| o * block + i))
}

/// Multiplies the tensor by `matrix` (row-major, `rows x extents[axis]`) along `axis`.
pub(crate) fn apply_axis_matrix<T: Scalar>(
    data: &[T],
    extents: &[usize],
    axis: usize,
    matrix: &[T],
    rows: usize,
) -> (Vec<T>, Vec<usize>) {
    let cols = extents[axis];
    let mut out_ext = extents.to_vec();
    out_ext[axis] = rows;
    let in_stride = strides_of(extents)[axis];
    let out_stride = strides_of(&out_ext)[axis];
    let mut out = vec![T::zero(); out_ext.iter().product()];
    for (in_start, out_start) in fibers(extents, axis).zip(fibers(&out_ext, axis)) {
        for r in 0..rows {
            let mut acc = T::zero();
            for c in 0..cols {
                acc = acc + matrix[r * cols + c] * data[in_start + c * in_stride];
            }
            out[out_start + r * out_stride] = acc;
        }
    }
    (out, out_ext)
}

/// Bernstein coefficients (degree `n`, interval `[alpha, beta]`) of each
/// monomial `x^j`, as a row-major `(n+1) x (n+1)` matrix with entry `[l][j]`.
pub(crate) fn monomial_to_bernstein<T: Scalar>(n: usize, alpha: T, beta: T) -> Vec<T> {
    let w = beta - alpha;
    let mut m = vec![T::zero(); (n + 1) * (n + 1)];
    for l in 0..=n {
        for j in 0..=n {
            let mut acc = T::zero();
            for k in 0..=j.min(l) {
                acc = acc
                    + binomial::<T>(j, k) * alpha.powi((j - k) as i32) * w.powi(k as i32) * binomial::<T>(l, k)
                        / binomial::<T>(n, k);
            }
            m[l * (n + 1) + j] = acc;
        }
    }
    m
}

/// Monomial coefficients of the Legendre polynomials `p_0..p_n` on `[-1,1]`,
/// as a row-major matrix with entry `[j][i]` = coefficient of `xi^j` in `p_i`.
pub(crate) fn legendre_to_monomial<T: Scalar>(n: usize) -> Vec<T> {
    // (i+1) p_{i+1} = (2i+1) xi p_i - i p_{i-1}
    let mut cols: Vec<Vec<T>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut col = vec![T::zero(); n + 1];
        match i {
            0 => col[0] = T::one(),
            1 => col[1] = T::one(),
            _ => {
                let a = T::from_usize_exact(2 * i - 1);
                let b = T::from_usize_exact(i - 1);
                let den = T::from_usize_exact(i);
                for j in 0..=n {
                    let shifted = if j > 0 { cols[i - 1][j - 1] } else { T::zero() };
                    col[j] = (a * shifted - b * cols[i - 2][j]) / den;
                }
            }
        }
        cols.push(col);
    }
    let mut m = vec![T::zero(); (n + 1) * (n + 1)];
    for (i, col) in cols.iter().enumerate() {
        for j in 0..=n {
            m[j * (n + 1) + i] = col[j];
        }
    }
    m
}

fn matmul<T: Scalar>(a: &[T], b: &[T], n: usize) -> Vec<T> {
    let mut out = vec![T::zero(); n * n];
    for r in 0..n {
        for c in 0..n {
            let mut acc = T::zero();
            for k in 0..n {
                acc = acc + a[r * n + k] * b[k * n + c];
            }
            out[r * n + c] = acc;
        }
    }
    out
}

/// In-place de Casteljau reduction of `b` at parameter `t`; returns the value.
#[inline]
pub(crate) fn de_casteljau<T: Scalar>(b: &mut [T], t: T) -> T {
    let s = T::one() - t;
    let n = b.len() - 1;
    for r in 1..=n {
        for j in 0..=n - r {
            b[j] = s * b[j] + t * b[j + 1];
        }
    }
    b[0]
}

impl<T: Scalar> BernsteinPoly<T> {
    pub fn new(degree: Vec<usize>, domain: HyperRect<T>, coeffs: Vec<T>) -> Result<Self, PolyError> {
        if degree.len() != domain.dim() {
            return Err(PolyError::DimensionMismatch { expected: domain.dim(), got: degree.len() });
        }
        let expected: usize = degree.iter().map(|n| n + 1).product();
        if coeffs.len() != expected {
            return Err(PolyError::CoefficientCount { expected, got: coeffs.len() });
        }
        if let Some(pos) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(PolyError::NonFinite(pos));
        }
        Ok(BernsteinPoly { degree, domain, coeffs })
    }

    /// Degree-0 polynomial with value `c` on `domain`.
    pub fn constant(domain: HyperRect<T>, c: T) -> Self {
        let d = domain.dim();
        BernsteinPoly { degree: vec![0; d], domain, coeffs: vec![c] }
    }

    /// Zero-dimensional polynomial, i.e. a single value.
    pub fn scalar(c: T) -> Self {
        Self::constant(HyperRect::point_marker(), c)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.degree.len()
    }

    #[inline]
    pub fn degree(&self) -> &[usize] {
        &self.degree
    }

    #[inline]
    pub fn domain(&self) -> &HyperRect<T> {
        &self.domain
    }

    #[inline]
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: &MultiIndex) -> T {
        self.coeffs[i.flat(&self.degree)]
    }

    pub(crate) fn extents(&self) -> Vec<usize> {
        self.degree.iter().map(|n| n + 1).collect()
    }

    pub fn min_coeff(&self) -> T {
        self.coeffs.iter().copied().fold(T::infinity(), T::min)
    }

    pub fn max_coeff(&self) -> T {
        self.coeffs.iter().copied().fold(T::neg_infinity(), T::max)
    }

    pub fn max_abs_coeff(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |m, c| m.max(c.abs()))
    }

    /// Value at `x` by dimension-by-dimension de Casteljau.
    pub fn evaluate(&self, x: &[T]) -> Result<T, PolyError> {
        if x.len() != self.dim() {
            return Err(PolyError::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: &[T]) -> T {
        if self.dim() == 0 {
            return self.coeffs[0];
        }
        let mut buf = self.coeffs.clone();
        let mut len = buf.len();
        for k in 0..self.dim() {
            let n1 = self.degree[k] + 1;
            let t = (x[k] - self.domain.lo()[k]) / self.domain.width(k);
            let count = len / n1;
            for f in 0..count {
                let v = de_casteljau(&mut buf[f * n1..(f + 1) * n1], t);
                buf[f] = v;
            }
            len = count;
        }
        buf[0]
    }

    fn check_axis(&self, axis: usize) -> Result<(), PolyError> {
        if axis >= self.dim() {
            return Err(PolyError::AxisOutOfRange { axis, dim: self.dim() });
        }
        Ok(())
    }

    /// Splits along `axis` at local parameter `t`, returning the polynomials on
    /// the lower and upper pieces.
    pub fn subdivide(&self, axis: usize, t: T) -> Result<(Self, Self), PolyError> {
        self.check_axis(axis)?;
        if !(t > T::zero() && t < T::one()) {
            return Err(PolyError::BadParameter);
        }
        Ok(self.subdivide_unchecked(axis, t))
    }

    pub(crate) fn subdivide_unchecked(&self, axis: usize, t: T) -> (Self, Self) {
        let ext = self.extents();
        let n = self.degree[axis];
        let stride = strides_of(&ext)[axis];
        let mut left = self.coeffs.clone();
        let mut right = self.coeffs.clone();
        let mut tmp = vec![T::zero(); n + 1];
        let s = T::one() - t;
        for start in fibers(&ext, axis) {
            for j in 0..=n {
                tmp[j] = self.coeffs[start + j * stride];
            }
            for r in 1..=n {
                for j in 0..=n - r {
                    tmp[j] = s * tmp[j] + t * tmp[j + 1];
                }
                left[start + r * stride] = tmp[0];
                right[start + (n - r) * stride] = tmp[n - r];
            }
        }
        let lo = self.domain.lo()[axis];
        let hi = self.domain.hi()[axis];
        let cut = if t == T::half() { midpoint(lo, hi) } else { lo + t * (hi - lo) };
        let mut l_hi = self.domain.hi().to_vec();
        l_hi[axis] = cut;
        let mut r_lo = self.domain.lo().to_vec();
        r_lo[axis] = cut;
        let l_dom = HyperRect::new(self.domain.lo().to_vec(), l_hi).expect("nondegenerate split");
        let r_dom = HyperRect::new(r_lo, self.domain.hi().to_vec()).expect("nondegenerate split");
        (
            BernsteinPoly { degree: self.degree.clone(), domain: l_dom, coeffs: left },
            BernsteinPoly { degree: self.degree.clone(), domain: r_dom, coeffs: right },
        )
    }

    /// The `2^d` midpoint children, in the child-code order of [`HyperRect::split`].
    pub fn split_children(&self) -> Vec<Self> {
        let mut out = vec![self.clone()];
        for k in 0..self.dim() {
            let (lefts, rights): (Vec<_>, Vec<_>) =
                out.iter().map(|q| q.subdivide_unchecked(k, T::half())).unzip();
            out = lefts;
            out.extend(rights);
        }
        out
    }

    /// A single midpoint child; performs the same arithmetic as
    /// [`split_children`](Self::split_children) along the chosen branch, so the
    /// result is bit-identical to `split_children()[code]`.
    pub fn child(&self, code: usize) -> Self {
        let mut q = self.clone();
        for k in 0..self.dim() {
            let (l, r) = q.subdivide_unchecked(k, T::half());
            q = if code >> k & 1 == 1 { r } else { l };
        }
        q
    }

    /// Restriction to a face; its coefficients are the boundary slice of the tensor.
    pub fn restrict_to_face(&self, face: FaceRef) -> Self {
        let ext = self.extents();
        let axis = face.axis;
        let n = self.degree[axis];
        let stride = strides_of(&ext)[axis];
        let j = match face.side {
            Side::Lower => 0,
            Side::Upper => n,
        };
        let coeffs: Vec<T> = fibers(&ext, axis).map(|start| self.coeffs[start + j * stride]).collect();
        let mut degree = self.degree.clone();
        degree.remove(axis);
        BernsteinPoly { degree, domain: self.domain.face_box(face), coeffs }
    }

    /// Partial derivative along `axis`, of degree `n - e_axis`.
    pub fn derivative(&self, axis: usize) -> Result<Self, PolyError> {
        self.check_axis(axis)?;
        let n = self.degree[axis];
        if n == 0 {
            return Err(PolyError::ZeroDegreeAxis { axis });
        }
        let ext = self.extents();
        let stride = strides_of(&ext)[axis];
        let mut degree = self.degree.clone();
        degree[axis] = n - 1;
        let out_ext: Vec<usize> = degree.iter().map(|m| m + 1).collect();
        let out_stride = strides_of(&out_ext)[axis];
        let scale = T::from_usize_exact(n) / self.domain.width(axis);
        let mut coeffs = vec![T::zero(); out_ext.iter().product()];
        for (src, dst) in fibers(&ext, axis).zip(fibers(&out_ext, axis)) {
            for j in 0..n {
                coeffs[dst + j * out_stride] =
                    scale * (self.coeffs[src + (j + 1) * stride] - self.coeffs[src + j * stride]);
            }
        }
        Ok(BernsteinPoly { degree, domain: self.domain.clone(), coeffs })
    }

    /// Re-bases the polynomial onto `sub`, one or two de Casteljau passes per axis.
    pub fn restrict_to_box(&self, sub: &HyperRect<T>) -> Result<Self, PolyError> {
        if !self.domain.contains_box(sub) {
            return Err(PolyError::NotContained);
        }
        let mut p = self.clone();
        for k in 0..self.dim() {
            let (a, b) = (sub.lo()[k], sub.hi()[k]);
            let lo = p.domain.lo()[k];
            if a > lo {
                let t = (a - lo) / (p.domain.hi()[k] - lo);
                p = p.subdivide_unchecked(k, t).1;
                p.set_bounds(k, a, p.domain.hi()[k]);
            }
            let (lo, hi) = (p.domain.lo()[k], p.domain.hi()[k]);
            if b < hi {
                let t = (b - lo) / (hi - lo);
                p = p.subdivide_unchecked(k, t).0;
            }
            p.set_bounds(k, a, b);
        }
        Ok(p)
    }

    fn set_bounds(&mut self, axis: usize, lo: T, hi: T) {
        let mut l = self.domain.lo().to_vec();
        let mut h = self.domain.hi().to_vec();
        l[axis] = lo;
        h[axis] = hi;
        self.domain = HyperRect::new(l, h).expect("nondegenerate sub-box");
    }

    fn from_axis_matrices(
        degree: Vec<usize>,
        domain: HyperRect<T>,
        coeffs: &[T],
        matrix_for_axis: impl Fn(usize) -> Vec<T>,
    ) -> Result<Self, PolyError> {
        let expected: usize = degree.iter().map(|n| n + 1).product();
        if coeffs.len() != expected {
            return Err(PolyError::CoefficientCount { expected, got: coeffs.len() });
        }
        let mut data = coeffs.to_vec();
        let mut ext: Vec<usize> = degree.iter().map(|n| n + 1).collect();
        for k in 0..degree.len() {
            let m = matrix_for_axis(k);
            let (d, e) = apply_axis_matrix(&data, &ext, k, &m, degree[k] + 1);
            data = d;
            ext = e;
        }
        Self::new(degree, domain, data)
    }

    /// Converts monomial coefficients `a_i` of `sum_i a_i x^i` (absolute
    /// coordinates, same storage order) to Bernstein form on `domain`.
    pub fn from_power(degree: Vec<usize>, domain: HyperRect<T>, coeffs: &[T]) -> Result<Self, PolyError> {
        if degree.len() != domain.dim() {
            return Err(PolyError::DimensionMismatch { expected: domain.dim(), got: degree.len() });
        }
        let dom = domain.clone();
        let deg = degree.clone();
        Self::from_axis_matrices(degree, domain, coeffs, |k| {
            monomial_to_bernstein(deg[k], dom.lo()[k], dom.hi()[k])
        })
    }

    /// Converts coefficients of `sum_i a_i prod_k p_{i_k}(xi_k)`, with `p_j` the
    /// Legendre polynomials and `xi` the affine map of `domain` onto `[-1,1]^d`.
    pub fn from_legendre(degree: Vec<usize>, domain: HyperRect<T>, coeffs: &[T]) -> Result<Self, PolyError> {
        if degree.len() != domain.dim() {
            return Err(PolyError::DimensionMismatch { expected: domain.dim(), got: degree.len() });
        }
        let deg = degree.clone();
        Self::from_axis_matrices(degree, domain, coeffs, |k| {
            let n = deg[k] + 1;
            let to_bern = monomial_to_bernstein(deg[k], -T::one(), T::one());
            matmul(&to_bern, &legendre_to_monomial(deg[k]), n)
        })
    }

    /// Degree-`(3,...,3)` polynomial `sum_i c_i omega^{|i|} prod_k p_{i_k}(x_k)`
    /// on `[-1,1]^d`, with `coeffs` indexed over `{0,1,2,3}^d` in storage order.
    pub fn from_legendre_tensor(dim: usize, coeffs: &[T], omega: T) -> Result<Self, PolyError> {
        if !(omega > T::zero()) {
            return Err(PolyError::BadOmega);
        }
        let degree = vec![3; dim];
        let expected = 4usize.pow(dim as u32);
        if coeffs.len() != expected {
            return Err(PolyError::CoefficientCount { expected, got: coeffs.len() });
        }
        let damped: Vec<T> = coeffs
            .iter()
            .enumerate()
            .map(|(off, &c)| {
                let order: usize = MultiIndex::from_flat(off, &degree).0.iter().sum();
                c * omega.powi(order as i32)
            })
            .collect();
        Self::from_legendre(degree, HyperRect::symmetric(dim), &damped)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(c: &[f64]) -> BernsteinPoly<f64> {
        BernsteinPoly::new(vec![c.len() - 1], HyperRect::unit(1), c.to_vec()).unwrap()
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn constant_and_linear_evaluation() {
        let p = BernsteinPoly::constant(HyperRect::<f64>::symmetric(3), 3.0);
        assert_eq!(p.evaluate(&[0.1, -0.7, 0.3]).unwrap(), 3.0);
        assert_eq!(line(&[0.0, 1.0]).evaluate(&[0.5]).unwrap(), 0.5);
        assert!(matches!(line(&[0.0, 1.0]).evaluate(&[0.5, 0.5]), Err(PolyError::DimensionMismatch { .. })));
    }

    #[test]
    fn rejects_bad_coefficients() {
        assert!(matches!(
            BernsteinPoly::new(vec![1, 1], HyperRect::<f64>::unit(2), vec![0.0; 3]),
            Err(PolyError::CoefficientCount { expected: 4, got: 3 })
        ));
        assert!(matches!(
            BernsteinPoly::new(vec![1], HyperRect::<f64>::unit(1), vec![0.0, f64::INFINITY]),
            Err(PolyError::NonFinite(1))
        ));
    }

    #[test]
    fn subdivide_linear_and_quadratic() {
        let (l, r) = line(&[0.0, 1.0]).subdivide(0, 0.5).unwrap();
        assert_eq!(l.coeffs(), &[0.0, 0.5]);
        assert_eq!(r.coeffs(), &[0.5, 1.0]);
        assert_eq!(l.domain().hi(), &[0.5]);
        assert_eq!(r.domain().lo(), &[0.5]);
        // de Casteljau triangle of (0,0,1) at 1/2: (0, 0, 1/4) | (1/4, 1/2, 1)
        let (l, r) = line(&[0.0, 0.0, 1.0]).subdivide(0, 0.5).unwrap();
        assert_eq!(l.coeffs(), &[0.0, 0.0, 0.25]);
        assert_eq!(r.coeffs(), &[0.25, 0.5, 1.0]);
        assert!(line(&[0.0, 1.0]).subdivide(0, 1.0).is_err());
        assert!(line(&[0.0, 1.0]).subdivide(1, 0.5).is_err());
    }

    #[test]
    fn face_slices() {
        // c_{i1 i2}: c00=0, c01=1, c10=2, c11=3 stored axis 0 fastest.
        let p = BernsteinPoly::new(vec![1, 1], HyperRect::<f64>::unit(2), vec![0.0, 2.0, 1.0, 3.0]).unwrap();
        let f = p.restrict_to_face(FaceRef::lower(0));
        assert_eq!(f.degree(), &[1]);
        assert_eq!(f.coeffs(), &[0.0, 1.0]);
        let g = p.restrict_to_face(FaceRef::upper(1));
        assert_eq!(g.coeffs(), &[1.0, 3.0]);
        let q = line(&[1.0, 2.0, 3.0, 7.0]);
        let e = q.restrict_to_face(FaceRef::upper(0));
        assert_eq!(e.dim(), 0);
        assert_eq!(e.coeffs(), &[7.0]);
    }

    #[test]
    fn derivative_examples() {
        let d = line(&[0.0, 1.0]).derivative(0).unwrap();
        assert_eq!(d.degree(), &[0]);
        assert_eq!(d.coeffs(), &[1.0]);
        // (2x-1)^2 = 4x^2 - 4x + 1, derivative 8x - 4.
        let d = line(&[1.0, -1.0, 1.0]).derivative(0).unwrap();
        assert_eq!(d.coeffs(), &[-4.0, 4.0]);
        assert!(matches!(
            BernsteinPoly::constant(HyperRect::<f64>::unit(1), 1.0).derivative(0),
            Err(PolyError::ZeroDegreeAxis { axis: 0 })
        ));
    }

    #[test]
    fn restrict_to_box_examples() {
        let p = line(&[0.0, 1.0]);
        assert_eq!(p.restrict_to_box(p.domain()).unwrap(), p);
        let q = p.restrict_to_box(&HyperRect::from_bounds(&[(0.25, 0.75)]).unwrap()).unwrap();
        assert!(close(q.coeffs(), &[0.25, 0.75], 1e-15));
        assert!(matches!(
            p.restrict_to_box(&HyperRect::from_bounds(&[(0.5, 1.5)]).unwrap()),
            Err(PolyError::NotContained)
        ));
    }

    #[test]
    fn legendre_examples() {
        let mut c = vec![0.0f64; 16];
        c[0] = 1.0;
        let p = BernsteinPoly::from_legendre_tensor(2, &c, 0.37).unwrap();
        assert!(p.coeffs().iter().all(|&v| (v - 1.0).abs() < 1e-15));
        let p = BernsteinPoly::from_legendre_tensor(1, &[0.0, 1.0, 0.0, 0.0], 1.0).unwrap();
        assert!(close(p.coeffs(), &[-1.0, -1.0 / 3.0, 1.0 / 3.0, 1.0], 1e-15));
        assert!(matches!(BernsteinPoly::from_legendre_tensor(1, &[0.0; 4], 0.0), Err(PolyError::BadOmega)));
    }

    #[test]
    fn legendre_matrix_matches_closed_forms() {
        // p2 = (3x^2 - 1)/2, p3 = (5x^3 - 3x)/2
        let m = legendre_to_monomial::<f64>(3);
        let col = |i: usize| (0..4).map(|j| m[j * 4 + i]).collect::<Vec<_>>();
        assert_eq!(col(2), vec![-0.5, 0.0, 1.5, 0.0]);
        assert_eq!(col(3), vec![0.0, -1.5, 0.0, 2.5]);
    }

    #[test]
    fn power_conversion_of_square() {
        // x^2 on [0,1] in degree 2: (0, 0, 1)
        let p = BernsteinPoly::from_power(vec![2], HyperRect::<f64>::unit(1), &[0.0, 0.0, 1.0]).unwrap();
        assert!(close(p.coeffs(), &[0.0, 0.0, 1.0], 1e-15));
        // x on [-1,1]: (-1, 1)
        let p = BernsteinPoly::from_power(vec![1], HyperRect::<f64>::symmetric(1), &[0.0, 1.0]).unwrap();
        assert!(close(p.coeffs(), &[-1.0, 1.0], 1e-15));
    }

    #[test]
    fn split_children_match_box_children() {
        let p = BernsteinPoly::new(vec![1, 2], HyperRect::from_bounds(&[(0.0, 2.0), (-1.0, 1.0)]).unwrap(), (0..6).map(|v| v as f64).collect()).unwrap();
        let kids = p.split_children();
        for (i, k) in kids.iter().enumerate() {
            assert_eq!(k.domain(), &p.domain().child(i));
            let c = k.domain().center();
            assert!((k.evaluate(&c).unwrap() - p.evaluate(&c).unwrap()).abs() < 1e-13);
        }
    }
}
