//! Range bounding, sign evaluation and the simply-connected cell test.
//!
//! [`range`] returns an interval containing every value the polynomial takes
//! on its box and contained in the Bernstein coefficient hull. One-dimensional
//! polynomials of degree at most 4 get their exact range from the closed-form
//! critical points of the derivative. In higher dimensions each axis along
//! which the coefficients are monotone tightens the hull by the ranges of the
//! two opposite faces, computed recursively.
//!
//! Low-degree exactness covers quartics (cubic derivative) and not only the
//! linear, quadratic and cubic cases.

use std::fmt;

use crate::bernstein::{de_casteljau, fibers, BernsteinPoly};
use crate::geometry::{strides_of, FaceRef};
use crate::scalar::{binomial, Scalar};

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Scalar> Interval<T> {
    pub fn new(lo: T, hi: T) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(v: T) -> Self {
        Interval { lo: v, hi: v }
    }

    pub fn hull(self, other: Self) -> Self {
        Interval { lo: self.lo.min(other.lo), hi: self.hi.max(other.hi) }
    }

    pub fn contains(&self, v: T) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn contains_interval(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

/// A subset of `{-1, 0, +1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SignSet(u8);

impl SignSet {
    const NEG_BIT: u8 = 1;
    const ZERO_BIT: u8 = 2;
    const POS_BIT: u8 = 4;

    pub const EMPTY: SignSet = SignSet(0);
    pub const NEG: SignSet = SignSet(Self::NEG_BIT);
    pub const ZERO: SignSet = SignSet(Self::ZERO_BIT);
    pub const POS: SignSet = SignSet(Self::POS_BIT);
    pub const ALL: SignSet = SignSet(Self::NEG_BIT | Self::ZERO_BIT | Self::POS_BIT);

    pub fn of_sign(s: i8) -> SignSet {
        match s.signum() {
            -1 => Self::NEG,
            0 => Self::ZERO,
            _ => Self::POS,
        }
    }

    pub fn of_value<T: Scalar>(v: T) -> SignSet {
        if v > T::zero() {
            Self::POS
        } else if v < T::zero() {
            Self::NEG
        } else {
            Self::ZERO
        }
    }

    pub fn has_neg(self) -> bool {
        self.0 & Self::NEG_BIT != 0
    }

    pub fn has_zero(self) -> bool {
        self.0 & Self::ZERO_BIT != 0
    }

    pub fn has_pos(self) -> bool {
        self.0 & Self::POS_BIT != 0
    }

    pub fn contains_sign(self, s: i8) -> bool {
        self.0 & Self::of_sign(s).0 != 0
    }

    pub fn union(self, other: SignSet) -> SignSet {
        SignSet(self.0 | other.0)
    }

    /// Union that adds 0 when the operands jointly hold both `-1` and `+1`.
    pub fn union_with_zero(self, other: SignSet) -> SignSet {
        let u = self.union(other);
        if u.has_neg() && u.has_pos() {
            u.union(Self::ZERO)
        } else {
            u
        }
    }

    pub fn is_subset_of(self, other: SignSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for SignSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.has_neg() {
            parts.push("-1");
        }
        if self.has_zero() {
            parts.push("0");
        }
        if self.has_pos() {
            parts.push("+1");
        }
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Outcome of the forward-difference test along one axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    /// All forward differences vanish (including degree-0 axes).
    Constant,
    None,
}

impl Monotonicity {
    pub fn is_monotone(self) -> bool {
        self != Monotonicity::None
    }
}

/// Absolute threshold used by the fuzzy sign rule.
///
/// With `eps > 0`, a range counts as positive only when its infimum is at
/// least `eps` (symmetrically for negative), and everything else is reported
/// as `{-1, 0, +1}`. With `eps == 0` the sign set is read off the range
/// exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<T> {
    pub eps: T,
}

/// Default multiple of machine epsilon.
pub const DEFAULT_TOL_SCALE: f64 = 1e3;

impl<T: Scalar> Tolerance<T> {
    pub fn exact() -> Self {
        Tolerance { eps: T::zero() }
    }

    pub fn absolute(eps: T) -> Self {
        assert!(eps >= T::zero(), "tolerance must be non-negative");
        Tolerance { eps }
    }

    /// `scale * machine_eps * max_i |c_i|` over the root coefficients.
    pub fn from_root(root: &BernsteinPoly<T>, scale: T) -> Self {
        Tolerance { eps: scale * T::epsilon() * root.max_abs_coeff() }
    }

    pub fn default_for(root: &BernsteinPoly<T>) -> Self {
        Self::from_root(root, T::lit(DEFAULT_TOL_SCALE))
    }
}

/// Forward-difference test of the coefficients along `axis`, with exact comparisons.
pub fn coeff_monotone<T: Scalar>(p: &BernsteinPoly<T>, axis: usize) -> Monotonicity {
    let n = p.degree()[axis];
    if n == 0 {
        return Monotonicity::Constant;
    }
    let ext = p.extents();
    let stride = strides_of(&ext)[axis];
    let c = p.coeffs();
    let (mut up, mut down) = (false, false);
    for start in fibers(&ext, axis) {
        for j in 0..n {
            let a = c[start + j * stride];
            let b = c[start + (j + 1) * stride];
            if b > a {
                up = true;
            } else if b < a {
                down = true;
            }
            if up && down {
                return Monotonicity::None;
            }
        }
    }
    match (up, down) {
        (false, false) => Monotonicity::Constant,
        (true, false) => Monotonicity::Increasing,
        (false, true) => Monotonicity::Decreasing,
        (true, true) => Monotonicity::None,
    }
}

/// Conservative range of `p` over its own domain.
pub fn range<T: Scalar>(p: &BernsteinPoly<T>) -> Interval<T> {
    let d = p.dim();
    if d == 0 {
        return Interval::point(p.coeffs()[0]);
    }
    if d == 1 && p.degree()[0] <= 4 {
        return exact_range_1d(p.coeffs());
    }
    let mut lo = p.min_coeff();
    let mut hi = p.max_coeff();
    if d > 1 {
        for k in 0..d {
            if lo == hi {
                break;
            }
            if coeff_monotone(p, k).is_monotone() {
                let r = range(&p.restrict_to_face(FaceRef::lower(k)))
                    .hull(range(&p.restrict_to_face(FaceRef::upper(k))));
                lo = lo.max(r.lo);
                hi = hi.min(r.hi);
            }
        }
    }
    Interval { lo, hi: hi.max(lo) }
}

/// Sign set of `p` from its range, under the fuzzy rule when `tol.eps > 0`.
pub fn sign_eval<T: Scalar>(p: &BernsteinPoly<T>, tol: Tolerance<T>) -> SignSet {
    if p.dim() == 0 {
        return SignSet::of_value(p.coeffs()[0]);
    }
    signs_of_range(range(p), tol)
}

pub(crate) fn signs_of_range<T: Scalar>(r: Interval<T>, tol: Tolerance<T>) -> SignSet {
    if tol.eps > T::zero() {
        if r.lo >= tol.eps {
            SignSet::POS
        } else if r.hi <= -tol.eps {
            SignSet::NEG
        } else {
            SignSet::ALL
        }
    } else {
        let mut s = SignSet::EMPTY;
        if r.lo < T::zero() {
            s = s.union(SignSet::NEG);
        }
        if r.hi > T::zero() {
            s = s.union(SignSet::POS);
        }
        if r.lo <= T::zero() && T::zero() <= r.hi {
            s = s.union(SignSet::ZERO);
        }
        s
    }
}

/// Result of classifying one cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellClass {
    pub signs: SignSet,
    pub simply_connected: bool,
}

/// Sign set and simply-connected flag in one pass.
pub fn classify<T: Scalar>(p: &BernsteinPoly<T>, tol: Tolerance<T>) -> CellClass {
    let signs = sign_eval(p, tol);
    let simply_connected = p.dim() == 0
        || signs == SignSet::POS
        || signs == SignSet::NEG
        || monotone_with_simple_faces(p, tol);
    CellClass { signs, simply_connected }
}

/// Recursive simply-connected test: uniformly signed, or coefficient monotone
/// along some axis (lowest first) with both opposite faces simply connected.
pub fn simply_connected<T: Scalar>(p: &BernsteinPoly<T>, tol: Tolerance<T>) -> bool {
    classify(p, tol).simply_connected
}

fn monotone_with_simple_faces<T: Scalar>(p: &BernsteinPoly<T>, tol: Tolerance<T>) -> bool {
    (0..p.dim()).any(|k| {
        coeff_monotone(p, k).is_monotone()
            && simply_connected(&p.restrict_to_face(FaceRef::lower(k)), tol)
            && simply_connected(&p.restrict_to_face(FaceRef::upper(k)), tol)
    })
}

/// Exact range of a univariate Bernstein polynomial of degree <= 4.
fn exact_range_1d<T: Scalar>(c: &[T]) -> Interval<T> {
    let n = c.len() - 1;
    let mut lo = c[0].min(c[n]);
    let mut hi = c[0].max(c[n]);
    if n >= 2 {
        // Derivative in power form on the local parameter t in [0,1].
        let a = bernstein_to_power(c);
        let deriv: Vec<T> = (1..=n).map(|j| T::from_usize_exact(j) * a[j]).collect();
        let mut buf = vec![T::zero(); n + 1];
        for t in real_roots_unit(&deriv) {
            buf.copy_from_slice(c);
            let v = de_casteljau(&mut buf, t);
            lo = lo.min(v);
            hi = hi.max(v);
        }
    }
    Interval { lo, hi }
}

/// Power-basis coefficients in `t` of a Bernstein polynomial on `[0,1]`.
fn bernstein_to_power<T: Scalar>(c: &[T]) -> Vec<T> {
    let n = c.len() - 1;
    (0..=n)
        .map(|j| {
            let mut acc = T::zero();
            for i in 0..=j {
                let term = binomial::<T>(j, i) * c[i];
                acc = if (j - i) % 2 == 0 { acc + term } else { acc - term };
            }
            binomial::<T>(n, j) * acc
        })
        .collect()
}

/// Real roots in `[0,1]` of `sum_j q[j] t^j` (degree <= 3), accepting roots
/// within `1e-12` outside the interval and clamping them onto it.
fn real_roots_unit<T: Scalar>(q: &[T]) -> Vec<T> {
    let scale = q.iter().fold(T::zero(), |m, v| m.max(v.abs()));
    if scale == T::zero() {
        return Vec::new();
    }
    let q: Vec<T> = q.iter().map(|&v| v / scale).collect();
    let mut deg = q.len() - 1;
    // Leading coefficients at roundoff level only produce roots far outside [0,1].
    while deg > 0 && q[deg].abs() <= T::lit(1e-14) {
        deg -= 1;
    }
    let roots = match deg {
        0 => Vec::new(),
        1 => vec![-q[0] / q[1]],
        2 => quadratic_roots(q[2], q[1], q[0]),
        _ => cubic_roots(q[3], q[2], q[1], q[0]),
    };
    let slack = T::lit(1e-12);
    roots
        .into_iter()
        .map(|r| polish(&q[..=deg], r))
        .filter(|r| r.is_finite() && *r >= -slack && *r <= T::one() + slack)
        .map(|r| r.max(T::zero()).min(T::one()))
        .collect()
}

fn quadratic_roots<T: Scalar>(a: T, b: T, c: T) -> Vec<T> {
    let disc = b * b - T::lit(4.0) * a * c;
    if disc < T::zero() {
        return Vec::new();
    }
    let s = disc.sqrt();
    let q = -T::half() * (b + if b >= T::zero() { s } else { -s });
    let mut out = Vec::with_capacity(2);
    if q != T::zero() {
        out.push(q / a);
        out.push(c / q);
    } else {
        out.push(T::zero());
    }
    out
}

fn cubic_roots<T: Scalar>(a: T, b: T, c: T, d: T) -> Vec<T> {
    let (b, c, d) = (b / a, c / a, d / a);
    let three = T::lit(3.0);
    let p = c - b * b / three;
    let q = T::lit(2.0) * b * b * b / T::lit(27.0) - b * c / three + d;
    let shift = b / three;
    let disc = (q * q) / T::lit(4.0) + (p * p * p) / T::lit(27.0);
    if p == T::zero() && q == T::zero() {
        return vec![-shift];
    }
    if disc > T::zero() {
        let sq = disc.sqrt();
        let u = (-q / T::lit(2.0) + sq).cbrt();
        let v = (-q / T::lit(2.0) - sq).cbrt();
        vec![u + v - shift]
    } else {
        // Three real roots (possibly repeated): trigonometric form.
        let m = T::lit(2.0) * (-p / three).sqrt();
        let arg = (three * q / (p * m)).max(-T::one()).min(T::one());
        let theta = arg.acos() / three;
        let two_pi_3 = T::lit(2.0) * T::PI() / three;
        (0..3)
            .map(|k| m * (theta - two_pi_3 * T::from_usize_exact(k)).cos() - shift)
            .collect()
    }
}

/// Two Newton steps on the (normalized) polynomial, kept only if they improve the residual.
fn polish<T: Scalar>(q: &[T], mut r: T) -> T {
    let eval = |t: T| {
        let mut v = T::zero();
        let mut dv = T::zero();
        for &a in q.iter().rev() {
            dv = dv * t + v;
            v = v * t + a;
        }
        (v, dv)
    };
    for _ in 0..2 {
        let (v, dv) = eval(r);
        if dv == T::zero() || !dv.is_finite() {
            break;
        }
        let next = r - v / dv;
        if eval(next).0.abs() <= v.abs() {
            r = next;
        } else {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::HyperRect;

    fn line(c: &[f64]) -> BernsteinPoly<f64> {
        BernsteinPoly::new(vec![c.len() - 1], HyperRect::unit(1), c.to_vec()).unwrap()
    }

    fn tiny() -> Tolerance<f64> {
        Tolerance::absolute(1e-12)
    }

    #[test]
    fn monotonicity_examples() {
        assert_eq!(coeff_monotone(&line(&[0.0, 1.0, 2.0]), 0), Monotonicity::Increasing);
        assert_eq!(coeff_monotone(&line(&[0.0, 1.0, 0.0]), 0), Monotonicity::None);
        assert_eq!(coeff_monotone(&line(&[2.0, 1.0, 1.0]), 0), Monotonicity::Decreasing);
        assert_eq!(coeff_monotone(&line(&[1.0, 1.0]), 0), Monotonicity::Constant);
        // c00=0, c01=2, c10=1, c11=3 (c_{i1 i2}), stored axis 0 fastest.
        let p = BernsteinPoly::new(vec![1, 1], HyperRect::unit(2), vec![0.0, 1.0, 2.0, 3.0]).unwrap();
        assert_eq!(coeff_monotone(&p, 0), Monotonicity::Increasing);
        assert_eq!(coeff_monotone(&p, 1), Monotonicity::Increasing);
        let c = BernsteinPoly::constant(HyperRect::<f64>::unit(2), 1.0);
        assert_eq!(coeff_monotone(&c, 1), Monotonicity::Constant);
    }

    #[test]
    fn range_examples() {
        let c = BernsteinPoly::constant(HyperRect::<f64>::unit(2), 3.0);
        assert_eq!(range(&c), Interval::new(3.0, 3.0));
        assert_eq!(range(&line(&[1.0, -1.0, 1.0])), Interval::new(0.0, 1.0));
        let p = BernsteinPoly::new(vec![1, 1], HyperRect::unit(2), vec![0.0, 1.0, 2.0, 3.0]).unwrap();
        assert_eq!(range(&p), Interval::new(0.0, 3.0));
    }

    #[test]
    fn exact_cubic_and_quartic_ranges() {
        // t^3 - t on [0,1]: min at t = 1/sqrt(3)
        let p = BernsteinPoly::from_power(vec![3], HyperRect::<f64>::unit(1), &[0.0, -1.0, 0.0, 1.0]).unwrap();
        let r = range(&p);
        let t = 1.0 / 3f64.sqrt();
        assert!((r.lo - (t * t * t - t)).abs() < 1e-14);
        assert!((r.hi - 0.0).abs() < 1e-14);
        // (t - 1/4)^2 (t - 3/4)^2: zeros at 1/4 and 3/4, local max 1/256 at 1/2.
        let pw = quartic_power(0.25, 0.75);
        let p = BernsteinPoly::from_power(vec![4], HyperRect::<f64>::unit(1), &pw).unwrap();
        let r = range(&p);
        assert!(r.lo.abs() < 1e-14, "{r:?}");
        assert!((r.hi - pw.iter().sum::<f64>()).abs() < 1e-14);
    }

    /// Power coefficients of (t-a)^2 (t-b)^2.
    fn quartic_power(a: f64, b: f64) -> Vec<f64> {
        let quad = [a * b, -(a + b), 1.0];
        let mut out = vec![0.0; 5];
        for i in 0..3 {
            for j in 0..3 {
                out[i + j] += quad[i] * quad[j];
            }
        }
        out
    }

    #[test]
    fn sign_examples() {
        let p = line(&[1.0, 2.0, 1.5]);
        assert_eq!(sign_eval(&p, tiny()), SignSet::POS);
        assert_eq!(sign_eval(&line(&[-1.0, 1.0]), tiny()), SignSet::ALL);
        assert_eq!(sign_eval(&line(&[1.0, -1.0, 1.0]), tiny()), SignSet::ALL);
        // exact mode reads the sign set off the range
        assert_eq!(sign_eval(&line(&[1.0, -1.0, 1.0]), Tolerance::exact()), SignSet::ZERO.union(SignSet::POS));
        assert_eq!(sign_eval(&BernsteinPoly::scalar(-2.0), tiny()), SignSet::NEG);
        assert_eq!(sign_eval(&BernsteinPoly::scalar(0.0), tiny()), SignSet::ZERO);
    }

    #[test]
    fn union_with_zero_rule() {
        assert_eq!(SignSet::NEG.union_with_zero(SignSet::POS), SignSet::ALL);
        assert_eq!(SignSet::NEG.union_with_zero(SignSet::NEG), SignSet::NEG);
        assert_eq!(SignSet::ZERO.union_with_zero(SignSet::POS), SignSet::ZERO.union(SignSet::POS));
    }

    #[test]
    fn simply_connected_examples() {
        assert!(simply_connected(&line(&[1.0, 3.0, 2.0]), tiny()));
        assert!(simply_connected(&line(&[-1.0, 0.0, 1.0]), tiny()));
        assert!(!simply_connected(&line(&[1.0, -1.0, 1.0]), tiny()));
        // x on [-1,1]^2
        let p = BernsteinPoly::from_power(vec![1, 0], HyperRect::<f64>::symmetric(2), &[0.0, 1.0]).unwrap();
        assert!(simply_connected(&p, tiny()));
        assert_eq!(classify(&p, tiny()).signs, SignSet::ALL);
    }

    #[test]
    fn cubic_solver_cases() {
        // (t-0.2)(t-0.5)(t-0.9)
        let roots = real_roots_unit(&[-0.09, 0.73, -1.6, 1.0]);
        let mut r = roots.clone();
        r.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(r.len(), 3);
        for (got, want) in r.iter().zip([0.2, 0.5, 0.9]) {
            assert!((*got - want as f64).abs() < 1e-13);
        }
        // t^3 + t + 1 has a single real root at about -0.6823: none inside [0,1].
        assert!(real_roots_unit(&[1.0, 1.0, 0.0, 1.0]).is_empty());
        // Boundary-grazing root slightly outside is clamped.
        let r = real_roots_unit(&[1e-13, 1.0]);
        assert_eq!(r, vec![0.0]);
    }
}
