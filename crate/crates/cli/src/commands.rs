use std::fs;
use std::io::Write;
use std::path::Path;

use ccl_core::eval::EvalError;
use ccl_core::experiments::{instance_rng, regression_corpus, run_case, sweep as run_sweep, EnsembleConfig, MIN_COMPONENT_CELLS};
use ccl_core::io::{Basis, PolyFile, TreeDump};
use ccl_core::oracle::{classify_outcome, guard_band, oracle_labels, OracleError};
use ccl_core::{Labeling, LeafKind, Tolerance};
use thiserror::Error;

use crate::render::{render_svg, RenderSpec};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("broken component: {0}")]
    Broken(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Broken(_) => 2,
        }
    }
}

fn input<E: std::fmt::Display>(context: &Path) -> impl FnOnce(E) -> CliError + '_ {
    move |e| CliError::Input(format!("{}: {e}", context.display()))
}

fn oracle_error(e: OracleError) -> CliError {
    match e {
        OracleError::BrokenComponent { .. } => CliError::Broken(e.to_string()),
        other => CliError::Input(other.to_string()),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(input(path))
}

fn write(path: &Path, contents: &[u8]) -> Result<(), CliError> {
    fs::write(path, contents).map_err(input(path))
}

fn load_labeling(input_path: &Path, max_depth: u8, tol_scale: f64) -> Result<Labeling<f64>, CliError> {
    let poly = PolyFile::from_json(&read(input_path)?).and_then(|f| f.to_bernstein()).map_err(input(input_path))?;
    if !(tol_scale >= 0.0 && tol_scale.is_finite()) {
        return Err(CliError::Input(format!("tolerance scale {tol_scale} must be finite and non-negative")));
    }
    let tol = Tolerance::from_root(&poly, tol_scale);
    Labeling::build(poly, max_depth, tol).map_err(input(input_path))
}

fn load_dump(path: &Path) -> Result<Labeling<f64>, CliError> {
    TreeDump::from_json(&read(path)?).and_then(|d| d.to_labeling()).map_err(input(path))
}

/// Human-readable statistics; the first line reads like "12 leaves, not certified".
pub fn stats(st: &Labeling<f64>) -> String {
    let tree = st.tree();
    let n = tree.leaf_count();
    let mut s = format!(
        "{n} {}, {}\n",
        if n == 1 { "leaf" } else { "leaves" },
        if st.certified() { "certified" } else { "not certified" }
    );
    let kinds = [
        ("uniform-neg", LeafKind::UniformNeg),
        ("uniform-pos", LeafKind::UniformPos),
        ("mixed", LeafKind::MixedSimplyConnected),
        ("not-simply-connected", LeafKind::NotSimplyConnected),
    ];
    let parts: Vec<String> = kinds.iter().map(|(name, k)| format!("{name} {}", tree.count_kind(*k))).collect();
    s.push_str(&format!("kinds: {}\n", parts.join(", ")));
    let hist: Vec<String> = tree
        .depth_histogram()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(d, c)| format!("{d}:{c}"))
        .collect();
    s.push_str(&format!("depths: {}\n", hist.join(" ")));
    s
}

pub fn build(input_path: &Path, max_depth: u8, tol_scale: f64, out: Option<&Path>) -> Result<(), CliError> {
    let st = load_labeling(input_path, max_depth, tol_scale)?;
    print!("{}", stats(&st));
    if let Some(out) = out {
        write(out, TreeDump::from_labeling(&st).to_json().as_bytes())?;
    }
    Ok(())
}

fn read_points(path: &Path, dim: usize) -> Result<Vec<Vec<f64>>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_path(path)
        .map_err(input(path))?;
    let mut points = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(input(path))?;
        let x: Vec<f64> = record
            .iter()
            .map(|v| v.parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|e| CliError::Input(format!("{} row {}: {e}", path.display(), row + 1)))?;
        if x.len() != dim {
            return Err(CliError::Input(format!(
                "{} row {}: {} coordinates, expected {dim}",
                path.display(),
                row + 1,
                x.len()
            )));
        }
        points.push(x);
    }
    Ok(points)
}

pub fn query(dump: &Path, points: &Path, out: Option<&Path>) -> Result<(), CliError> {
    let st = load_dump(dump)?;
    let pts = read_points(points, st.tree().dim())?;
    let mut buf = Vec::new();
    {
        let mut w = csv::Writer::from_writer(&mut buf);
        let to_input = |e: csv::Error| CliError::Input(e.to_string());
        w.write_record(["index", "label", "status"]).map_err(to_input)?;
        for (i, x) in pts.iter().enumerate() {
            let (label, status) = match st.label_of(x) {
                Ok(l) => (l.to_string(), "ok"),
                Err(EvalError::OnZeroSet) => (String::new(), "on-zero-set"),
                Err(e) => return Err(CliError::Input(format!("point {i}: {e}"))),
            };
            w.write_record([i.to_string(), label, status.to_string()]).map_err(to_input)?;
        }
        w.flush().map_err(|e| CliError::Input(e.to_string()))?;
    }
    match out {
        Some(out) => write(out, &buf),
        None => std::io::stdout().write_all(&buf).map_err(|e| CliError::Input(e.to_string())),
    }
}

pub fn render(dump: &Path, spec: &RenderSpec, out: &Path) -> Result<(), CliError> {
    let st = load_dump(dump)?;
    let svg = render_svg(&st, spec).map_err(CliError::Input)?;
    write(out, svg.as_bytes())
}

pub fn sweep(config: &Path, seed: Option<u64>, samples: Option<u64>, out: Option<&Path>) -> Result<(), CliError> {
    let mut cfg: EnsembleConfig = serde_json::from_str(&read(config)?).map_err(input(config))?;
    if let Some(seed) = seed {
        cfg.seed = seed;
    }
    if let Some(n) = samples {
        cfg.count = n;
    }
    let report = run_sweep(&cfg).map_err(|e| {
        if e.is_broken_component() {
            CliError::Broken(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    })?;
    let mut text = Vec::new();
    report.write_summary(&mut text).map_err(|e| CliError::Input(e.to_string()))?;
    std::io::stdout().write_all(&text).map_err(|e| CliError::Input(e.to_string()))?;
    if let Some(out) = out {
        let mut csv = Vec::new();
        report.write_csv(&mut csv).map_err(|e| CliError::Input(e.to_string()))?;
        write(out, &csv)?;
    }
    Ok(())
}

pub fn verify(
    input_path: &Path,
    max_depth: u8,
    tol_scale: f64,
    res: Option<usize>,
    samples: usize,
    seed: u64,
) -> Result<(), CliError> {
    let st = load_labeling(input_path, max_depth, tol_scale)?;
    let d = st.tree().dim();
    let res = res.unwrap_or(match d {
        1 => 4096,
        2 => 512,
        3 => 96,
        _ => 24,
    });
    if res < 2 {
        return Err(CliError::Input("grid resolution must be at least 2".into()));
    }
    let grid = oracle_labels(st.poly(), res, guard_band(st.tolerance()));
    let points = if samples == 0 {
        grid.determinate_cells().into_iter().map(|c| grid.cell_center(c)).collect()
    } else {
        grid.sample_cell_centers(samples, &mut instance_rng(seed, 0))
    };
    let c = classify_outcome(&st, &grid.ignoring_fragments(MIN_COMPONENT_CELLS), &points).map_err(oracle_error)?;
    print!("{}", stats(&st));
    println!("outcome: {}", c.outcome.as_str());
    println!(
        "oracle components: neg {}, pos {} (res {res}, {} points)",
        grid.components_with_sign_min(-1, MIN_COMPONENT_CELLS),
        grid.components_with_sign_min(1, MIN_COMPONENT_CELLS),
        c.comparison.compared
    );
    for g in &c.comparison.glued_groups {
        println!("glued: {} oracle components", g.len());
    }
    Ok(())
}

pub fn corpus(name: Option<&str>, tol_scale: f64, out: Option<&Path>) -> Result<(), CliError> {
    let cases: Vec<_> = regression_corpus().into_iter().filter(|c| name.map_or(true, |n| c.name == n)).collect();
    if cases.is_empty() {
        return Err(CliError::Input(format!("no corpus case named {}", name.unwrap_or(""))));
    }
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(input(dir))?;
        for case in &cases {
            let file = PolyFile {
                dim: case.domain.dim(),
                degree: case.poly.degree(),
                bounds: case.domain.to_f64_bounds(),
                basis: Basis::Power,
                coeffs: case.poly.dense(),
            };
            write(&dir.join(format!("{}.json", case.name)), file.to_json().as_bytes())?;
        }
        return Ok(());
    }
    println!("{:<16} {:>5}  {:<16} {:<16} {:>9} {:>9}", "case", "depth", "expected", "outcome", "labels", "oracle");
    for case in &cases {
        let r = run_case(case, case.depth, tol_scale).map_err(oracle_error)?;
        println!(
            "{:<16} {:>5}  {:<16} {:<16} {:>4}/{:<4} {:>4}/{:<4}{}",
            case.name,
            case.depth,
            case.expected.as_str(),
            r.outcome.as_str(),
            r.labels_neg,
            r.labels_pos,
            r.oracle_neg,
            r.oracle_pos,
            if r.outcome == case.expected { "" } else { "  unexpected" }
        );
    }
    Ok(())
}
