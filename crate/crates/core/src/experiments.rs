//! Random-geometry ensembles, depth sweeps and the singular-geometry corpus.

use std::collections::BTreeMap;
use std::io::Write;

use rand::distributions::{Distribution, Uniform};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bernstein::{BernsteinPoly, PolyError};
use crate::eval::Labeling;
use crate::geometry::HyperRect;
use crate::oracle::{
    classify_outcome, gap_statistics, glue_cost, guard_band, leaf_witness_points, oracle_labels, reference_run,
    GapReport, GapSummary, GridLabeling, OracleError, Outcome, OutcomeTally, PartitionComparison, ReferenceLabels,
};
use crate::power::PowerPoly;
use crate::range::Tolerance;
use crate::tree::BuildError;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("dimension must be 2 or 3, got {0}")]
    Dimension(usize),
    #[error("instance count must be at least 1")]
    EmptyEnsemble,
    #[error("omega must be positive and finite")]
    Omega,
    #[error("depth range {0}..={1} is empty")]
    DepthRange(u8, u8),
    #[error("hard cap {cap} must exceed the largest swept depth {max}")]
    HardCap { cap: u8, max: u8 },
    #[error("oracle resolution must be at least 2")]
    Resolution,
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("instance {index} at depth {depth}: {source}")]
    Oracle { index: u64, depth: u8, source: OracleError },
    #[error("instance {index}: {source}")]
    Poly { index: u64, source: PolyError },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl SweepError {
    pub fn is_broken_component(&self) -> bool {
        matches!(self, SweepError::Oracle { source: OracleError::BrokenComponent { .. }, .. })
    }
}

/// Scaling of the Legendre modes in the random polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    /// `L2`-orthonormal on `[-1, 1]`: mode `i` scaled by `sqrt((2i+1)/2)`.
    #[default]
    Orthonormal,
    /// Classical Legendre polynomials with `p_i(1) = 1`.
    Classical,
}

/// Parameters of a random ensemble sweep; serializable as a JSON config file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct EnsembleConfig {
    pub dim: usize,
    pub count: u64,
    pub omega: f64,
    pub normalization: Normalization,
    pub min_depth: u8,
    pub max_depth: u8,
    pub seed: u64,
    /// Grid resolution for the gap measurements of glued instances.
    pub oracle_res: usize,
    /// Uniform random comparison points per instance, on top of the
    /// reference leaf witnesses.
    pub samples: usize,
    pub hard_cap: u8,
    pub tol_scale: f64,
    /// Compare certified instances against the reference as well.
    pub check_certified: bool,
}

impl Default for EnsembleConfig {
    fn default() -> Self {
        EnsembleConfig {
            dim: 2,
            count: 1000,
            omega: 0.5,
            normalization: Normalization::Orthonormal,
            min_depth: 1,
            max_depth: 8,
            seed: 1,
            oracle_res: 512,
            samples: 256,
            hard_cap: crate::oracle::DEFAULT_HARD_CAP,
            tol_scale: crate::range::DEFAULT_TOL_SCALE,
            check_certified: true,
        }
    }
}

impl EnsembleConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(2..=3).contains(&self.dim) {
            return Err(ConfigError::Dimension(self.dim));
        }
        if self.count == 0 {
            return Err(ConfigError::EmptyEnsemble);
        }
        if !(self.omega > 0.0 && self.omega.is_finite()) {
            return Err(ConfigError::Omega);
        }
        if self.min_depth > self.max_depth {
            return Err(ConfigError::DepthRange(self.min_depth, self.max_depth));
        }
        if self.hard_cap <= self.max_depth {
            return Err(ConfigError::HardCap { cap: self.hard_cap, max: self.max_depth });
        }
        if self.oracle_res < 2 {
            return Err(ConfigError::Resolution);
        }
        Ok(())
    }

    pub fn depths(&self) -> impl Iterator<Item = u8> {
        self.min_depth..=self.max_depth
    }
}

/// Generator for instance `index`: ChaCha8 seeded with the ensemble seed,
/// on stream `index`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// The `4^d` undamped Legendre coefficients of instance `index`, uniform on `[-1, 1]`.
pub fn raw_coefficients(cfg: &EnsembleConfig, index: u64) -> Vec<f64> {
    let mut rng = instance_rng(cfg.seed, index);
    draw_coefficients(cfg.dim, &mut rng)
}

fn draw_coefficients(dim: usize, rng: &mut impl Rng) -> Vec<f64> {
    let u = Uniform::new_inclusive(-1.0, 1.0);
    (0..4usize.pow(dim as u32)).map(|_| u.sample(rng)).collect()
}

/// Converts raw coefficients into the damped random polynomial on `[-1, 1]^d`.
pub fn poly_from_raw(cfg: &EnsembleConfig, raw: &[f64]) -> Result<BernsteinPoly<f64>, PolyError> {
    match cfg.normalization {
        Normalization::Classical => BernsteinPoly::from_legendre_tensor(cfg.dim, raw, cfg.omega),
        Normalization::Orthonormal => {
            let scaled: Vec<f64> = raw
                .iter()
                .enumerate()
                .map(|(flat, &c)| {
                    let mut f = flat;
                    let mut s = 1.0;
                    for _ in 0..cfg.dim {
                        s *= ((2 * (f % 4) + 1) as f64 / 2.0).sqrt();
                        f /= 4;
                    }
                    c * s
                })
                .collect();
            BernsteinPoly::from_legendre_tensor(cfg.dim, &scaled, cfg.omega)
        }
    }
}

/// Random degree-3 polynomial number `index`; identical for identical `(seed, index)`.
pub fn random_poly(cfg: &EnsembleConfig, index: u64) -> Result<BernsteinPoly<f64>, PolyError> {
    poly_from_raw(cfg, &raw_coefficients(cfg, index))
}

/// One ensemble instance at one depth.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceRow {
    pub seed: u64,
    pub index: u64,
    pub max_depth: u8,
    pub outcome: Outcome,
    pub depth_used: u8,
    pub e: Option<f64>,
    pub g: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DepthSummary {
    pub max_depth: u8,
    pub tally: OutcomeTally,
    pub gaps: Option<GapSummary>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub config: EnsembleConfig,
    /// Ordered by instance index, then depth.
    pub rows: Vec<InstanceRow>,
    pub summary: Vec<DepthSummary>,
    /// Instances whose reference run hit the hard cap.
    pub excluded: Vec<u64>,
}

enum InstanceResult {
    Rows(Vec<InstanceRow>),
    Excluded(u64),
}

/// Runs the ensemble: every instance is built at every depth and classified
/// against its reference run.
pub fn sweep(cfg: &EnsembleConfig) -> Result<SweepReport, SweepError> {
    cfg.validate()?;
    let results: Vec<Result<InstanceResult, SweepError>> =
        (0..cfg.count).into_par_iter().map(|i| run_instance(cfg, i)).collect();
    let mut rows = Vec::new();
    let mut excluded = Vec::new();
    for r in results {
        match r? {
            InstanceResult::Rows(r) => rows.extend(r),
            InstanceResult::Excluded(i) => excluded.push(i),
        }
    }
    let summary = summarize(cfg, &rows);
    Ok(SweepReport { config: cfg.clone(), rows, summary, excluded })
}

fn summarize(cfg: &EnsembleConfig, rows: &[InstanceRow]) -> Vec<DepthSummary> {
    cfg.depths()
        .map(|depth| {
            let mut tally = OutcomeTally::default();
            let mut gaps = Vec::new();
            for r in rows.iter().filter(|r| r.max_depth == depth) {
                tally.record(r.outcome);
                if let (Some(e), Some(g)) = (r.e, r.g) {
                    let smallest_diagonal = if g > 0.0 { e / g } else { 0.0 };
                    gaps.push(GapReport { e, smallest_diagonal, g });
                }
            }
            DepthSummary { max_depth: depth, tally, gaps: gap_statistics(&gaps) }
        })
        .collect()
}

fn run_instance(cfg: &EnsembleConfig, index: u64) -> Result<InstanceResult, SweepError> {
    let mut rng = instance_rng(cfg.seed, index);
    let raw = draw_coefficients(cfg.dim, &mut rng);
    let p = poly_from_raw(cfg, &raw).map_err(|source| SweepError::Poly { index, source })?;
    let tol = Tolerance::from_root(&p, cfg.tol_scale);
    let oracle_err = |depth: u8| move |source: OracleError| SweepError::Oracle { index, depth, source };

    let reference = match reference_run(&p, tol, cfg.hard_cap) {
        Ok(r) if r.certified => r.labeling,
        Ok(_) | Err(OracleError::Build(BuildError::Degenerate)) => return Ok(InstanceResult::Excluded(index)),
        Err(e) => return Err(oracle_err(cfg.hard_cap)(e)),
    };
    let unit = Uniform::new_inclusive(-1.0, 1.0);
    let mut points: Vec<Vec<f64>> =
        (0..cfg.samples).map(|_| (0..cfg.dim).map(|_| unit.sample(&mut rng)).collect()).collect();
    points.extend(leaf_witness_points(&reference));

    let mut rows = Vec::new();
    for depth in cfg.depths() {
        let st = Labeling::build(p.clone(), depth, tol).map_err(|e| oracle_err(depth)(e.into()))?;
        let (outcome, comparison) = if st.certified() && !cfg.check_certified {
            (Outcome::CertifiedExact, PartitionComparison::default())
        } else {
            let c = classify_outcome(&st, &reference, &points).map_err(oracle_err(depth))?;
            (c.outcome, c.comparison)
        };
        let (e, g) = if outcome == Outcome::Glued {
            let e = glued_gap(&p, &reference, &comparison.glued_groups, &points, cfg.oracle_res, tol);
            let report = GapReport::new(e, p.domain(), depth);
            (Some(report.e), Some(report.g))
        } else {
            (None, None)
        };
        rows.push(InstanceRow {
            seed: cfg.seed,
            index,
            max_depth: depth,
            outcome,
            depth_used: st.tree().depth_reached(),
            e,
            g,
        });
    }
    Ok(InstanceResult::Rows(rows))
}

/// Largest glue cost over the glued groups, each reference component being
/// sampled by the grid cells on its boundary plus the comparison points.
pub fn glued_gap<R: ReferenceLabels<f64>>(
    p: &BernsteinPoly<f64>,
    reference: &R,
    groups: &[Vec<u64>],
    extra_points: &[Vec<f64>],
    res: usize,
    tol: Tolerance<f64>,
) -> f64 {
    if groups.is_empty() {
        return 0.0;
    }
    let wanted: std::collections::BTreeSet<u64> = groups.iter().flatten().copied().collect();
    let grid = oracle_labels(p, res, guard_band(tol));
    let mut samples: BTreeMap<u64, Vec<Vec<f64>>> = BTreeMap::new();
    let candidates = grid.boundary_cells().into_iter().map(|c| grid.cell_center(c)).chain(extra_points.iter().cloned());
    for x in candidates {
        let v = p.evaluate(&x).unwrap_or(0.0);
        if v == 0.0 {
            continue;
        }
        if let Some(l) = reference.reference_label(&x, if v > 0.0 { 1 } else { -1 }) {
            if wanted.contains(&l) {
                samples.entry(l).or_default().push(x);
            }
        }
    }
    groups
        .iter()
        .filter_map(|group| {
            let comps: Vec<Vec<Vec<f64>>> = group.iter().filter_map(|l| samples.get(l).cloned()).collect();
            glue_cost(&comps).ok()
        })
        .fold(0.0, f64::max)
}

impl SweepReport {
    pub fn summary_for(&self, depth: u8) -> Option<&DepthSummary> {
        self.summary.iter().find(|s| s.max_depth == depth)
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), SweepError> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["seed", "index", "max_depth", "outcome", "depth_used", "e", "g"])?;
        let opt = |v: Option<f64>| v.map(|x| format!("{x:.6e}")).unwrap_or_default();
        for r in &self.rows {
            out.write_record([
                r.seed.to_string(),
                r.index.to_string(),
                r.max_depth.to_string(),
                r.outcome.as_str().to_string(),
                r.depth_used.to_string(),
                opt(r.e),
                opt(r.g),
            ])?;
        }
        out.flush()?;
        Ok(())
    }

    /// Plain-text table: one row per depth with the three percentages and gap quartiles.
    pub fn write_summary<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(
            w,
            "d={} N={} omega={} seed={} excluded={}",
            self.config.dim,
            self.config.count,
            self.config.omega,
            self.config.seed,
            self.excluded.len()
        )?;
        writeln!(w, "depth  rho_eq%  rho_ok%  rho_glued%  g_min  g_q1  g_med  g_q3  g_max")?;
        for s in &self.summary {
            write!(
                w,
                "{:>5}  {:>7.2}  {:>7.2}  {:>10.2}",
                s.max_depth,
                s.tally.rho_certified(),
                s.tally.rho_uncertain(),
                s.tally.rho_glued()
            )?;
            match s.gaps {
                Some(g) => {
                    writeln!(w, "  {:.3}  {:.3}  {:.3}  {:.3}  {:.3}", g.min, g.q1, g.median, g.q3, g.max)?
                }
                None => writeln!(w, "  -  -  -  -  -")?,
            }
        }
        Ok(())
    }
}

/// One closed-form singular geometry with its box and expected behaviour.
#[derive(Debug, Clone)]
pub struct RegressionCase {
    pub name: &'static str,
    pub formula: &'static str,
    pub poly: PowerPoly,
    pub domain: HyperRect<f64>,
    pub depth: u8,
    pub expected: Outcome,
    /// Grid resolution for the oracle comparison.
    pub oracle_res: usize,
    pub note: &'static str,
}

impl RegressionCase {
    pub fn bernstein(&self) -> BernsteinPoly<f64> {
        self.poly.to_bernstein(self.domain.clone()).expect("corpus polynomials are valid")
    }
}

fn boxed(bounds: &[(f64, f64)]) -> HyperRect<f64> {
    HyperRect::from_bounds(bounds).expect("corpus boxes are valid")
}

/// The six singular test geometries. Boxes are slightly off-center so that
/// singular points do not lie on subdivision planes.
pub fn regression_corpus() -> Vec<RegressionCase> {
    let [x, y]: [PowerPoly; 2] = PowerPoly::vars(2).try_into().unwrap();
    let r2 = x.clone().powi(2) + y.clone().powi(2);
    let deltoid = r2.clone().powi(2) + r2.clone() * 18.0 - (x.clone().powi(3) - x.clone() * y.clone().powi(2) * 3.0) * 8.0
        - 27.0;
    let trifolium = r2.clone().powi(2) - x.clone().powi(3) + x.clone() * y.clone().powi(2) * 3.0;
    let ring = (r2 - 0.25).powi(2);

    let [x, y, z]: [PowerPoly; 3] = PowerPoly::vars(3).try_into().unwrap();
    let oloid = x.clone().powi(2) + y.clone().powi(2) + z.clone().powi(3);
    let plane = |a: f64, b: f64, c: f64| x.clone() * a + y.clone() * b + z.clone() * c - 1.0;
    let junction = plane(1.0, 1.0, 1.0) * plane(-1.0, -1.0, 1.0) * plane(1.0, -1.0, -1.0) * plane(-1.0, 1.0, -1.0)
        - (x.clone().powi(2) + y.clone().powi(2) + z.clone().powi(2) - 3.0).powi(2) * 2.0;
    let pinched = x.clone() * y.clone() * z.clone() - x.clone().powi(2) - y.clone().powi(2);

    vec![
        RegressionCase {
            name: "deltoid",
            formula: "(x^2+y^2)^2 + 18(x^2+y^2) - 8(x^3-3xy^2) - 27",
            poly: deltoid,
            domain: boxed(&[(-3.43, 3.61), (-3.53, 3.49)]),
            depth: 8,
            expected: Outcome::UncertainExact,
            oracle_res: 512,
            note: "cusps at (3,0) and (-3/2, +-3 sqrt(3)/2); depth cap always met, labels exact",
        },
        RegressionCase {
            name: "trifolium",
            formula: "(x^2+y^2)^2 - x^3 + 3xy^2",
            poly: trifolium,
            domain: boxed(&[(-0.71, 1.13), (-0.97, 0.93)]),
            depth: 6,
            expected: Outcome::Glued,
            oracle_res: 512,
            note: "three lobes {phi < 0} meet at the origin and share one label",
        },
        RegressionCase {
            name: "squared-circle",
            formula: "(x^2+y^2-1/4)^2",
            poly: ring,
            domain: boxed(&[(-1.03, 0.97), (-0.98, 1.02)]),
            depth: 6,
            expected: Outcome::Glued,
            oracle_res: 512,
            note: "non-negative; disk and exterior glued through the ring of undecided cells",
        },
        RegressionCase {
            name: "oloid",
            formula: "x^2 + y^2 + z^3",
            poly: oloid,
            domain: boxed(&[(-1.03, 0.97), (-0.98, 1.02), (-1.01, 0.99)]),
            depth: 6,
            expected: Outcome::UncertainExact,
            oracle_res: 96,
            note: "isolated cusp at the origin; depth cap met, labels exact",
        },
        RegressionCase {
            name: "junction",
            formula: "(x+y+z-1)(-x-y+z-1)(x-y-z-1)(-x+y-z-1) - 2(x^2+y^2+z^2-3)^2",
            poly: junction,
            domain: boxed(&[(0.27, 1.71), (0.31, 1.69), (-1.73, -0.29)]),
            depth: 6,
            expected: Outcome::Glued,
            oracle_res: 96,
            note: "box around the junction at (1,1,-1); glue count depends on the box",
        },
        RegressionCase {
            name: "pinched-sheets",
            formula: "xyz - x^2 - y^2",
            poly: pinched,
            domain: boxed(&[(-1.03, 0.97), (-0.98, 1.02), (-4.03, 3.97)]),
            depth: 6,
            expected: Outcome::Glued,
            oracle_res: 96,
            note: "singular along the z-axis; {phi > 0} needs |z| > 2 and has four sheets, glued across the axis",
        },
    ]
}

/// Oracle components smaller than this many cells are treated as grid artifacts.
pub const MIN_COMPONENT_CELLS: usize = 4;

/// Result of running one corpus case against the grid oracle.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseReport {
    pub name: &'static str,
    pub outcome: Outcome,
    pub certified: bool,
    pub depth_reached: u8,
    pub comparison: PartitionComparison,
    /// Distinct labels seen on negative and positive comparison points.
    pub labels_neg: usize,
    pub labels_pos: usize,
    pub oracle_neg: usize,
    pub oracle_pos: usize,
}

/// Builds the case at `depth` and compares it with the grid oracle on every
/// determinate cell center, ignoring grid fragments.
pub fn run_case(case: &RegressionCase, depth: u8, tol_scale: f64) -> Result<CaseReport, OracleError> {
    let p = case.bernstein();
    let tol = Tolerance::from_root(&p, tol_scale);
    let st = Labeling::build(p.clone(), depth, tol)?;
    let grid = oracle_labels(&p, case.oracle_res, guard_band(tol));
    run_case_against(case, &st, &grid)
}

pub fn run_case_against(
    case: &RegressionCase,
    st: &Labeling<f64>,
    grid: &GridLabeling<f64>,
) -> Result<CaseReport, OracleError> {
    let points: Vec<Vec<f64>> = grid.determinate_cells().into_iter().map(|c| grid.cell_center(c)).collect();
    let c = classify_outcome(st, &grid.ignoring_fragments(MIN_COMPONENT_CELLS), &points)?;
    let mut neg = std::collections::BTreeSet::new();
    let mut pos = std::collections::BTreeSet::new();
    for x in &points {
        if let (Ok(s), Ok(l)) = (st.sign_at(x), st.label_of(x)) {
            if s < 0 { &mut neg } else { &mut pos }.insert(l);
        }
    }
    Ok(CaseReport {
        name: case.name,
        outcome: c.outcome,
        certified: st.certified(),
        depth_reached: st.tree().depth_reached(),
        comparison: c.comparison,
        labels_neg: neg.len(),
        labels_pos: pos.len(),
        oracle_neg: grid.components_with_sign_min(-1, MIN_COMPONENT_CELLS),
        oracle_pos: grid.components_with_sign_min(1, MIN_COMPONENT_CELLS),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(dim: usize) -> EnsembleConfig {
        EnsembleConfig { dim, count: 6, min_depth: 1, max_depth: 4, oracle_res: 64, samples: 64, ..Default::default() }
    }

    #[test]
    fn coefficient_counts_and_determinism() {
        assert_eq!(raw_coefficients(&small(2), 0).len(), 16);
        assert_eq!(raw_coefficients(&small(3), 0).len(), 64);
        let cfg = small(2);
        assert_eq!(random_poly(&cfg, 7).unwrap(), random_poly(&cfg, 7).unwrap());
        assert_ne!(raw_coefficients(&cfg, 7), raw_coefficients(&cfg, 8));
    }

    #[test]
    fn orthonormal_scaling() {
        // Only the (1, 0) mode: orthonormal p_0 p_1 = sqrt(1/2) sqrt(3/2) x.
        let mut raw = vec![0.0; 16];
        raw[1] = 1.0;
        let cfg = EnsembleConfig { omega: 1.0, ..small(2) };
        let p = poly_from_raw(&cfg, &raw).unwrap();
        let want = 0.75f64.sqrt() * 0.3;
        assert!((p.evaluate(&[0.3, -0.8]).unwrap() - want).abs() < 1e-14);
        let classical = EnsembleConfig { normalization: Normalization::Classical, ..cfg };
        assert!((poly_from_raw(&classical, &raw).unwrap().evaluate(&[0.3, -0.8]).unwrap() - 0.3).abs() < 1e-14);
    }

    #[test]
    fn zero_coefficients_are_degenerate() {
        let cfg = small(2);
        let p = poly_from_raw(&cfg, &[0.0; 16]).unwrap();
        let err = Labeling::build(p, 4, Tolerance::from_root(&BernsteinPoly::scalar(1.0), 1e3)).unwrap_err();
        assert_eq!(err, BuildError::Degenerate);
    }

    #[test]
    fn config_validation() {
        assert!(small(2).validate().is_ok());
        assert!(EnsembleConfig { dim: 4, ..small(2) }.validate().is_err());
        assert!(EnsembleConfig { omega: 0.0, ..small(2) }.validate().is_err());
        assert!(EnsembleConfig { count: 0, ..small(2) }.validate().is_err());
        assert!(EnsembleConfig { min_depth: 5, ..small(2) }.validate().is_err());
        let json = serde_json::to_string(&small(3)).unwrap();
        let back: EnsembleConfig = serde_json::from_str(&json).unwrap();
        assert_eq!(back, small(3));
        let partial: EnsembleConfig = serde_json::from_str(r#"{"dim": 3, "count": 5}"#).unwrap();
        assert_eq!(partial.omega, 0.5);
        assert_eq!(partial.normalization, Normalization::Orthonormal);
        let classical: EnsembleConfig = serde_json::from_str(r#"{"normalization": "classical"}"#).unwrap();
        assert_eq!(classical.normalization, Normalization::Classical);
    }

    #[test]
    fn tiny_sweep_is_deterministic() {
        let cfg = small(2);
        let a = sweep(&cfg).unwrap();
        let b = sweep(&cfg).unwrap();
        let (mut ca, mut cb) = (Vec::new(), Vec::new());
        a.write_csv(&mut ca).unwrap();
        b.write_csv(&mut cb).unwrap();
        assert_eq!(ca, cb);
        assert_eq!(a.summary.len(), 4);
        for s in &a.summary {
            let t = s.tally;
            assert!((t.rho_certified() + t.rho_uncertain() + t.rho_glued() - 100.0).abs() < 1e-9);
        }
    }

    #[test]
    fn corpus_formulas() {
        let corpus = regression_corpus();
        assert_eq!(corpus.len(), 6);
        let deltoid = &corpus[0].poly;
        let s3 = 3f64.sqrt();
        for pt in [[3.0, 0.0], [-1.5, 1.5 * s3], [-1.5, -1.5 * s3]] {
            assert!(deltoid.eval(&pt).abs() < 1e-9);
        }
        assert_eq!(deltoid.eval(&[0.0, 0.0]), -27.0);
        let junction = &corpus[4].poly;
        assert_eq!(junction.eval(&[1.0, 1.0, -1.0]), 0.0);
        for case in &corpus {
            assert_eq!(case.poly.dim(), case.domain.dim());
            let p = case.bernstein();
            let c = case.domain.center();
            assert!((p.evaluate(&c).unwrap() - case.poly.eval(&c)).abs() < 1e-9);
        }
    }
}
