//! Ground truth and outcome metrics.
//!
//! The grid oracle samples the polynomial at the cell centers of a uniform
//! grid (evaluating the Bernstein basis by its closed form, independently of
//! de Casteljau) and flood-fills same-sign cells across shared faces. Two
//! neighbouring cells are joined only if the polynomial keeps its sign and
//! stays outside the guard band along the segment between their centers:
//! a few interior samples are checked and the smallest `|phi|` among them is
//! refined by golden-section search. Cells with `|phi|` inside the guard band
//! are indeterminate and excluded from comparisons.
//!
//! Features thinner than a grid cell are not resolved; such components can be
//! missed, merged or fragmented.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bernstein::BernsteinPoly;
use crate::eval::Labeling;
use crate::geometry::HyperRect;
use crate::range::Tolerance;
use crate::scalar::{binomial, Scalar};
use crate::tree::{BuildError, Label};

/// Multiple of the fuzzy tolerance below which `|phi|` counts as indeterminate.
pub const GUARD_BAND_FACTOR: f64 = 10.0;

/// Default depth cap for reference runs.
pub const DEFAULT_HARD_CAP: u8 = 24;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error(
        "broken component: reference component {reference} received labels {first} and {second} \
         (components must never be split)"
    )]
    BrokenComponent { reference: u64, first: Label, second: Label },
    #[error("component sample {0} is empty")]
    EmptyComponent(usize),
    #[error("no components given")]
    NoComponents,
    #[error("reference run reached the depth cap {0} without certifying")]
    CapReached(u8),
    #[error(transparent)]
    Build(#[from] BuildError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleOptions<T> {
    pub res: usize,
    pub guard: T,
    /// Interior samples per segment between neighbouring centers.
    pub segment_samples: usize,
}

impl<T: Scalar> OracleOptions<T> {
    pub fn new(res: usize, guard: T) -> Self {
        OracleOptions { res, guard, segment_samples: 3 }
    }
}

/// Guard band `10 * eps` for a tolerance.
pub fn guard_band<T: Scalar>(tol: Tolerance<T>) -> T {
    T::lit(GUARD_BAND_FACTOR) * tol.eps
}

/// Flood-fill labeling of a uniform `res^d` grid of cells.
#[derive(Debug, Clone)]
pub struct GridLabeling<T> {
    domain: HyperRect<T>,
    res: usize,
    guard: T,
    values: Vec<T>,
    signs: Vec<i8>,
    comps: Vec<u32>,
    comp_sign: Vec<i8>,
    comp_size: Vec<usize>,
}

const NO_COMPONENT: u32 = u32::MAX;

/// Tabulates the degree-`n` Bernstein basis of `[lo, hi]` at the points `xs`,
/// row-major `xs.len() x (n+1)`.
fn tabulate_basis<T: Scalar>(n: usize, lo: T, hi: T, xs: &[T]) -> Vec<T> {
    let w = hi - lo;
    let mut out = Vec::with_capacity(xs.len() * (n + 1));
    for &x in xs {
        let (a, b) = ((x - lo) / w, (hi - x) / w);
        for l in 0..=n {
            out.push(binomial::<T>(n, l) * b.powi((n - l) as i32) * a.powi(l as i32));
        }
    }
    out
}

/// Contracts `data` (extents `ext`, axis 0 fastest) along `axis` with the
/// row-major table `basis` of shape `rows x ext[axis]`.
fn contract<T: Scalar>(data: &[T], ext: &[usize], axis: usize, basis: &[T], rows: usize) -> (Vec<T>, Vec<usize>) {
    let cols = ext[axis];
    let inner: usize = ext[..axis].iter().product();
    let outer: usize = ext[axis + 1..].iter().product();
    let mut out = vec![T::zero(); inner * rows * outer];
    for o in 0..outer {
        for r in 0..rows {
            for i in 0..inner {
                let mut acc = T::zero();
                for c in 0..cols {
                    acc = acc + basis[r * cols + c] * data[(o * cols + c) * inner + i];
                }
                out[(o * rows + r) * inner + i] = acc;
            }
        }
    }
    let mut e = ext.to_vec();
    e[axis] = rows;
    (out, e)
}

fn sign_of<T: Scalar>(v: T, guard: T) -> i8 {
    if v.abs() < guard || v == T::zero() {
        0
    } else if v > T::zero() {
        1
    } else {
        -1
    }
}

/// Flood-fill oracle with default segment checks.
pub fn oracle_labels<T: Scalar>(p: &BernsteinPoly<T>, res: usize, guard: T) -> GridLabeling<T> {
    oracle_labels_with(p, OracleOptions::new(res, guard))
}

pub fn oracle_labels_with<T: Scalar>(p: &BernsteinPoly<T>, opts: OracleOptions<T>) -> GridLabeling<T> {
    assert!(opts.res >= 2, "oracle resolution must be at least 2");
    let d = p.dim();
    let res = opts.res;
    let dom = p.domain().clone();
    let centers: Vec<Vec<T>> = (0..d)
        .map(|k| {
            let h = dom.width(k) / T::from_usize_exact(res);
            (0..res).map(|r| dom.lo()[k] + (T::from_usize_exact(r) + T::half()) * h).collect()
        })
        .collect();
    let bases: Vec<Vec<T>> =
        (0..d).map(|k| tabulate_basis(p.degree()[k], dom.lo()[k], dom.hi()[k], &centers[k])).collect();

    let mut values = p.coeffs().to_vec();
    let mut ext: Vec<usize> = p.degree().iter().map(|n| n + 1).collect();
    for k in 0..d {
        let (v, e) = contract(&values, &ext, k, &bases[k], res);
        values = v;
        ext = e;
    }
    let signs: Vec<i8> = values.iter().map(|&v| sign_of(v, opts.guard)).collect();

    // For each axis: may a cell connect to its +e_k neighbour?
    let strides: Vec<usize> = (0..d).map(|k| res.pow(k as u32)).collect();
    let mut links: Vec<Vec<bool>> = Vec::with_capacity(d);
    for k in 0..d {
        let n = p.degree()[k];
        // Line polynomials along axis k through every row of centers.
        let mut line = p.coeffs().to_vec();
        let mut lext: Vec<usize> = p.degree().iter().map(|m| m + 1).collect();
        for j in (0..d).filter(|&j| j != k) {
            let (v, e) = contract(&line, &lext, j, &bases[j], res);
            line = v;
            lext = e;
        }
        let lstride: usize = lext[..k].iter().product();
        let h = dom.width(k) / T::from_usize_exact(res);
        let m = opts.segment_samples;
        let fracs: Vec<T> = (1..=m).map(|i| T::from_usize_exact(i) / T::from_usize_exact(m + 1)).collect();
        let mut ok = vec![false; values.len()];
        let mut coef = vec![T::zero(); n + 1];
        let binom: Vec<T> = (0..=n).map(|l| binomial::<T>(n, l)).collect();
        for cell in 0..values.len() {
            let r = cell / strides[k] % res;
            if r + 1 >= res {
                continue;
            }
            let s = signs[cell];
            if s == 0 || signs[cell + strides[k]] != s {
                continue;
            }
            // Locate this cell's line: same coordinates off axis k, axis-k extent n+1.
            let below = cell % strides[k];
            let above = cell / (strides[k] * res);
            let base = above * (lstride * (n + 1)) + below;
            for (l, c) in coef.iter_mut().enumerate() {
                *c = line[base + l * lstride];
            }
            let x0 = centers[k][r];
            let w = dom.width(k);
            let eval = |x: T| -> T {
                let (a, b) = ((x - dom.lo()[k]) / w, (dom.hi()[k] - x) / w);
                let mut acc = T::zero();
                for (l, &c) in coef.iter().enumerate() {
                    acc = acc + c * binom[l] * b.powi((n - l) as i32) * a.powi(l as i32);
                }
                acc
            };
            // Bound on |d phi / dx| along the line.
            let lip = coef.windows(2).fold(T::zero(), |m, c| m.max((c[1] - c[0]).abs())) * T::from_usize_exact(n) / w;
            ok[cell] = segment_clear(&eval, x0, h, &fracs, lip, values[cell], values[cell + strides[k]], s, opts.guard);
        }
        links.push(ok);
    }

    // Flood fill.
    let mut comps = vec![NO_COMPONENT; values.len()];
    let mut comp_sign = Vec::new();
    let mut comp_size = Vec::new();
    let mut stack = Vec::new();
    for seed in 0..values.len() {
        if signs[seed] == 0 || comps[seed] != NO_COMPONENT {
            continue;
        }
        let id = comp_sign.len() as u32;
        comps[seed] = id;
        stack.push(seed);
        let mut size = 0;
        while let Some(c) = stack.pop() {
            size += 1;
            for k in 0..d {
                let r = c / strides[k] % res;
                if r + 1 < res && links[k][c] && comps[c + strides[k]] == NO_COMPONENT {
                    comps[c + strides[k]] = id;
                    stack.push(c + strides[k]);
                }
                if r > 0 && links[k][c - strides[k]] && comps[c - strides[k]] == NO_COMPONENT {
                    comps[c - strides[k]] = id;
                    stack.push(c - strides[k]);
                }
            }
        }
        comp_sign.push(signs[seed]);
        comp_size.push(size);
    }

    GridLabeling { domain: dom, res, guard: opts.guard, values, signs, comps, comp_sign, comp_size }
}

#[allow(clippy::too_many_arguments)]
fn segment_clear<T: Scalar>(
    eval: &impl Fn(T) -> T,
    x0: T,
    h: T,
    fracs: &[T],
    lip: T,
    v0: T,
    v1: T,
    sign: i8,
    guard: T,
) -> bool {
    let mut samples = Vec::with_capacity(fracs.len() + 2);
    samples.push((T::zero(), v0));
    for &f in fracs {
        let v = eval(x0 + f * h);
        if sign_of(v, guard) != sign {
            return false;
        }
        samples.push((f, v));
    }
    samples.push((T::one(), v1));
    // Between samples a and b, |phi| >= (|phi(a)| + |phi(b)| - lip * (b - a)) / 2.
    let two = T::lit(2.0);
    if samples.windows(2).all(|w| (w[0].1.abs() + w[1].1.abs() - lip * (w[1].0 - w[0].0) * h) / two >= guard.max(T::min_positive_value())) {
        return true;
    }
    let (imin, _) = samples
        .iter()
        .enumerate()
        .fold((0, T::infinity()), |(bi, bv), (i, &(_, v))| if v.abs() < bv { (i, v.abs()) } else { (bi, bv) });
    // Golden-section search for the minimum of |phi| between the neighbours
    // of the smallest sample.
    let (mut a, mut b) = (samples[imin.saturating_sub(1)].0, samples[(imin + 1).min(samples.len() - 1)].0);
    let g = T::lit(0.618_033_988_749_894_8);
    let f = |t: T| eval(x0 + t * h);
    let mut c = b - g * (b - a);
    let mut e = a + g * (b - a);
    let (mut fc, mut fe) = (f(c), f(e));
    for _ in 0..40 {
        if sign_of(fc, guard) != sign || sign_of(fe, guard) != sign {
            return false;
        }
        if fc.abs() < fe.abs() {
            b = e;
            e = c;
            fe = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = e;
            fc = fe;
            e = a + g * (b - a);
            fe = f(e);
        }
    }
    sign_of(fc, guard) == sign && sign_of(fe, guard) == sign
}

impl<T: Scalar> GridLabeling<T> {
    pub fn res(&self) -> usize {
        self.res
    }

    pub fn dim(&self) -> usize {
        self.domain.dim()
    }

    pub fn domain(&self) -> &HyperRect<T> {
        &self.domain
    }

    pub fn guard(&self) -> T {
        self.guard
    }

    pub fn cell_count(&self) -> usize {
        self.values.len()
    }

    pub fn cell_coords(&self, cell: usize) -> Vec<usize> {
        (0..self.dim()).map(|k| cell / self.res.pow(k as u32) % self.res).collect()
    }

    pub fn cell_center(&self, cell: usize) -> Vec<T> {
        self.cell_coords(cell)
            .iter()
            .enumerate()
            .map(|(k, &r)| {
                let h = self.domain.width(k) / T::from_usize_exact(self.res);
                self.domain.lo()[k] + (T::from_usize_exact(r) + T::half()) * h
            })
            .collect()
    }

    /// Grid cell containing `x`, if inside the domain.
    pub fn cell_of(&self, x: &[T]) -> Option<usize> {
        if !self.domain.contains(x) {
            return None;
        }
        let mut cell = 0;
        for k in (0..self.dim()).rev() {
            let t = (x[k] - self.domain.lo()[k]) / self.domain.width(k) * T::from_usize_exact(self.res);
            let r = t.floor().to_usize().unwrap_or(0).min(self.res - 1);
            cell = cell * self.res + r;
        }
        Some(cell)
    }

    pub fn value(&self, cell: usize) -> T {
        self.values[cell]
    }

    /// `-1`, `+1`, or `0` for an indeterminate cell.
    pub fn sign(&self, cell: usize) -> i8 {
        self.signs[cell]
    }

    pub fn component(&self, cell: usize) -> Option<u32> {
        match self.comps[cell] {
            NO_COMPONENT => None,
            c => Some(c),
        }
    }

    pub fn component_count(&self) -> usize {
        self.comp_sign.len()
    }

    pub fn component_sign(&self, comp: u32) -> i8 {
        self.comp_sign[comp as usize]
    }

    pub fn component_size(&self, comp: u32) -> usize {
        self.comp_size[comp as usize]
    }

    pub fn components_with_sign(&self, sign: i8) -> usize {
        self.comp_sign.iter().filter(|&&s| s == sign).count()
    }

    /// Determinate cells with a face neighbour outside their own component.
    pub fn boundary_cells(&self) -> Vec<usize> {
        let d = self.dim();
        (0..self.cell_count())
            .filter(|&c| {
                let Some(own) = self.component(c) else { return false };
                (0..d).any(|k| {
                    let s = self.res.pow(k as u32);
                    let r = c / s % self.res;
                    (r > 0 && self.component(c - s) != Some(own))
                        || (r + 1 < self.res && self.component(c + s) != Some(own))
                })
            })
            .collect()
    }

    /// Components of `sign` with at least `min_cells` cells.
    pub fn components_with_sign_min(&self, sign: i8, min_cells: usize) -> usize {
        self.comp_sign.iter().zip(&self.comp_size).filter(|&(&s, &n)| s == sign && n >= min_cells).count()
    }

    /// View that leaves components below `min_cells` cells unlabeled.
    pub fn ignoring_fragments(&self, min_cells: usize) -> SizeFiltered<'_, T> {
        SizeFiltered { grid: self, min_cells }
    }

    /// Centers of `n` distinct determinate cells picked uniformly at random.
    pub fn sample_cell_centers(&self, n: usize, rng: &mut impl rand::Rng) -> Vec<Vec<T>> {
        let cells = self.determinate_cells();
        rand::seq::index::sample(rng, cells.len(), n.min(cells.len()))
            .into_iter()
            .map(|i| self.cell_center(cells[i]))
            .collect()
    }

    /// Indices of every determinate cell.
    pub fn determinate_cells(&self) -> Vec<usize> {
        (0..self.cell_count()).filter(|&c| self.signs[c] != 0).collect()
    }
}

/// Something that assigns ground-truth component ids to points.
pub trait ReferenceLabels<T> {
    /// Label of `x`, where `sign` is the sign of `phi(x)`. `None` when the
    /// point cannot be labeled (indeterminate, outside, or sign disagrees).
    fn reference_label(&self, x: &[T], sign: i8) -> Option<u64>;
}

impl<T: Scalar> ReferenceLabels<T> for GridLabeling<T> {
    fn reference_label(&self, x: &[T], sign: i8) -> Option<u64> {
        let cell = self.cell_of(x)?;
        if self.sign(cell) != sign {
            return None;
        }
        self.component(cell).map(u64::from)
    }
}

impl<T: Scalar> ReferenceLabels<T> for Labeling<T> {
    fn reference_label(&self, x: &[T], _sign: i8) -> Option<u64> {
        self.label_of(x).ok().map(u64::from)
    }
}

/// Grid labels restricted to components of a minimum size. Thin features
/// such as cusp tips can break into one- or two-cell fragments on the grid;
/// these are sampling artifacts rather than components.
#[derive(Debug, Clone, Copy)]
pub struct SizeFiltered<'a, T> {
    grid: &'a GridLabeling<T>,
    min_cells: usize,
}

impl<T: Scalar> ReferenceLabels<T> for SizeFiltered<'_, T> {
    fn reference_label(&self, x: &[T], sign: i8) -> Option<u64> {
        let cell = self.grid.cell_of(x)?;
        if self.grid.sign(cell) != sign {
            return None;
        }
        let c = self.grid.component(cell)?;
        (self.grid.component_size(c) >= self.min_cells).then_some(u64::from(c))
    }
}

/// Reference labeling computed by the same algorithm with a large depth cap.
#[derive(Debug, Clone)]
pub struct ReferenceRun<T> {
    pub labeling: Labeling<T>,
    pub certified: bool,
}

impl<T: Scalar> ReferenceRun<T> {
    pub fn require_certified(self) -> Result<Labeling<T>, OracleError> {
        if self.certified {
            Ok(self.labeling)
        } else {
            Err(OracleError::CapReached(self.labeling.tree().max_depth()))
        }
    }
}

pub fn reference_run<T: Scalar>(
    p: &BernsteinPoly<T>,
    tol: Tolerance<T>,
    hard_cap: u8,
) -> Result<ReferenceRun<T>, OracleError> {
    let labeling = Labeling::build(p.clone(), hard_cap, tol)?;
    let certified = labeling.certified();
    Ok(ReferenceRun { labeling, certified })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    CertifiedExact,
    UncertainExact,
    Glued,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::CertifiedExact => "certified-exact",
            Outcome::UncertainExact => "uncertain-exact",
            Outcome::Glued => "glued",
        }
    }
}

/// How the algorithm's partition of the sample points relates to the reference.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PartitionComparison {
    /// Points that both labelings could label.
    pub compared: usize,
    /// Groups of two or more reference components that share one algorithm label.
    pub glued_groups: Vec<Vec<u64>>,
}

impl PartitionComparison {
    pub fn is_exact(&self) -> bool {
        self.glued_groups.is_empty()
    }
}

/// Compares `(algorithm label, reference label)` pairs. A reference component
/// spread over two algorithm labels is a broken component and an error.
pub fn compare_partitions(
    pairs: impl IntoIterator<Item = (Label, u64)>,
) -> Result<PartitionComparison, OracleError> {
    let mut by_ref: HashMap<u64, Label> = HashMap::new();
    let mut by_alg: HashMap<Label, Vec<u64>> = HashMap::new();
    let mut compared = 0;
    for (alg, reference) in pairs {
        compared += 1;
        match by_ref.get(&reference) {
            Some(&seen) if seen != alg => {
                return Err(OracleError::BrokenComponent { reference, first: seen, second: alg });
            }
            Some(_) => {}
            None => {
                by_ref.insert(reference, alg);
                by_alg.entry(alg).or_default().push(reference);
            }
        }
    }
    let mut glued_groups: Vec<Vec<u64>> = by_alg
        .into_values()
        .filter(|v| v.len() > 1)
        .map(|mut v| {
            v.sort_unstable();
            v
        })
        .collect();
    glued_groups.sort();
    Ok(PartitionComparison { compared, glued_groups })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub outcome: Outcome,
    pub comparison: PartitionComparison,
}

/// Classifies a labeling against a reference on the given points. Points
/// inside the guard band, or unlabeled by the reference, are skipped. Grid
/// references are most reliable at their own cell centers.
pub fn classify_outcome<T: Scalar, R: ReferenceLabels<T> + ?Sized>(
    st: &Labeling<T>,
    reference: &R,
    points: &[Vec<T>],
) -> Result<Classification, OracleError> {
    let guard = guard_band(st.tolerance());
    let pairs = points.iter().filter_map(|x| {
        let v = st.poly().evaluate(x).ok()?;
        if v.abs() < guard || v == T::zero() {
            return None;
        }
        let r = reference.reference_label(x, if v > T::zero() { 1 } else { -1 })?;
        let a = st.label_of(x).ok()?;
        Some((a, r))
    });
    let comparison = compare_partitions(pairs)?;
    let outcome = if st.certified() {
        Outcome::CertifiedExact
    } else if comparison.is_exact() {
        Outcome::UncertainExact
    } else {
        Outcome::Glued
    };
    Ok(Classification { outcome, comparison })
}

/// Outcome of comparing a labeling with the grid oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct GridCheck {
    /// Resolution at which the verdict was reached.
    pub res: usize,
    pub result: Result<PartitionComparison, OracleError>,
}

impl GridCheck {
    pub fn is_exact(&self) -> bool {
        matches!(&self.result, Ok(c) if c.is_exact())
    }
}

/// Compares a labeling's partition with the grid oracle on `points` randomly
/// chosen cell centers. Features thinner than a cell can make the grid split
/// or merge components, so any disagreement is re-checked at doubled
/// resolution, up to `max_res`; the last verdict stands.
pub fn check_against_grid<T: Scalar>(
    st: &Labeling<T>,
    base_res: usize,
    max_res: usize,
    points: usize,
    rng: &mut impl rand::Rng,
) -> GridCheck {
    let guard = guard_band(st.tolerance());
    let mut res = base_res;
    loop {
        let grid = oracle_labels(st.poly(), res, guard);
        let pts = grid.sample_cell_centers(points, rng);
        let result = classify_outcome(st, &grid, &pts).map(|c| c.comparison);
        let agree = matches!(&result, Ok(c) if c.is_exact());
        if agree || res * 2 > max_res {
            return GridCheck { res, result };
        }
        res *= 2;
    }
}

/// Corners and centers of every leaf of a labeling's tree. On a simply
/// connected leaf every nonempty sign region reaches a corner, so these
/// points witness every component of a certified labeling.
pub fn leaf_witness_points<T: Scalar>(st: &Labeling<T>) -> Vec<Vec<T>> {
    let mut pts = Vec::new();
    for leaf in st.tree().leaves() {
        pts.extend(leaf.cell.corners());
        pts.push(leaf.cell.center());
    }
    pts
}

/// Approximate cost of gluing point-sampled components: zero for one
/// component, the smallest gap for two, and the total length of the minimum
/// spanning tree of pairwise gaps in general.
pub fn glue_cost<T: Scalar>(components: &[Vec<Vec<T>>]) -> Result<T, OracleError> {
    if components.is_empty() {
        return Err(OracleError::NoComponents);
    }
    if let Some(i) = components.iter().position(|c| c.is_empty()) {
        return Err(OracleError::EmptyComponent(i));
    }
    let m = components.len();
    let mut gap = vec![T::zero(); m * m];
    for i in 0..m {
        for j in i + 1..m {
            let g = set_distance(&components[i], &components[j]);
            gap[i * m + j] = g;
            gap[j * m + i] = g;
        }
    }
    // Prim's algorithm on the complete gap graph.
    let mut in_tree = vec![false; m];
    let mut best = vec![T::infinity(); m];
    best[0] = T::zero();
    let mut total = T::zero();
    for _ in 0..m {
        let next = (0..m)
            .filter(|&i| !in_tree[i])
            .min_by(|&a, &b| best[a].partial_cmp(&best[b]).unwrap_or(std::cmp::Ordering::Equal))
            .expect("unvisited component");
        in_tree[next] = true;
        total = total + best[next];
        for j in 0..m {
            if !in_tree[j] && gap[next * m + j] < best[j] {
                best[j] = gap[next * m + j];
            }
        }
    }
    Ok(total)
}

fn set_distance<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> T {
    let mut best = T::infinity();
    for x in a {
        for y in b {
            let d2 = x.iter().zip(y).fold(T::zero(), |acc, (&u, &v)| acc + (u - v) * (u - v));
            if d2 < best {
                best = d2;
            }
        }
    }
    best.sqrt()
}

/// Gap of one glued instance, normalized by the smallest-cell diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapReport {
    pub e: f64,
    pub smallest_diagonal: f64,
    pub g: f64,
}

impl GapReport {
    /// For `[-1,1]^d` this gives `g = e 2^(depth-1) / sqrt(d)`.
    pub fn new<T: Scalar>(e: f64, root: &HyperRect<T>, depth: u8) -> Self {
        let smallest_diagonal = root.diagonal().as_f64() / 2f64.powi(depth as i32);
        GapReport { e, smallest_diagonal, g: e / smallest_diagonal }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapSummary {
    pub count: usize,
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
}

/// Five-number summary of `g` (linear interpolation between order statistics).
pub fn gap_statistics(reports: &[GapReport]) -> Option<GapSummary> {
    if reports.is_empty() {
        return None;
    }
    let mut g: Vec<f64> = reports.iter().map(|r| r.g).collect();
    g.sort_by(|a, b| a.total_cmp(b));
    let q = |p: f64| {
        let pos = p * (g.len() - 1) as f64;
        let (i, frac) = (pos.floor() as usize, pos.fract());
        if i + 1 < g.len() {
            g[i] + frac * (g[i + 1] - g[i])
        } else {
            g[i]
        }
    };
    Some(GapSummary { count: g.len(), min: g[0], q1: q(0.25), median: q(0.5), q3: q(0.75), max: g[g.len() - 1] })
}

/// Counts of the three outcomes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OutcomeTally {
    pub certified_exact: usize,
    pub uncertain_exact: usize,
    pub glued: usize,
}

impl OutcomeTally {
    pub fn record(&mut self, o: Outcome) {
        match o {
            Outcome::CertifiedExact => self.certified_exact += 1,
            Outcome::UncertainExact => self.uncertain_exact += 1,
            Outcome::Glued => self.glued += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.certified_exact + self.uncertain_exact + self.glued
    }

    fn pct(&self, n: usize) -> f64 {
        if self.total() == 0 {
            0.0
        } else {
            100.0 * n as f64 / self.total() as f64
        }
    }

    pub fn rho_certified(&self) -> f64 {
        self.pct(self.certified_exact)
    }

    pub fn rho_uncertain(&self) -> f64 {
        self.pct(self.uncertain_exact)
    }

    /// `100% - rho_certified - rho_uncertain`.
    pub fn rho_glued(&self) -> f64 {
        if self.total() == 0 {
            0.0
        } else {
            self.pct(self.glued)
        }
    }
}
