//! SVG rendering of 2D labelings.
//!
//! Labels are sampled at pixel centers and drawn as flat-colored runs. Colors
//! come from the label id through a seeded hash, so glued components share a
//! color. Coordinates are in pixel units with y pointing up in the domain and
//! are rounded to 3 decimals so output is byte-stable.

use std::fmt::Write;

use ccl_core::{Labeling, LeafKind};

/// Display width of the canvas in SVG user units.
const CANVAS: usize = 512;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    res: usize,
    seed: u64,
    pub tree_lines: bool,
    pub shade_not_simply_connected: bool,
    pub zero_contour: bool,
}

impl RenderSpec {
    pub const MIN_RES: usize = 64;

    pub fn new(res: usize, seed: u64) -> Result<Self, String> {
        if res < Self::MIN_RES {
            return Err(format!("render resolution {res} is below the minimum {}", Self::MIN_RES));
        }
        Ok(RenderSpec { res, seed, tree_lines: true, shade_not_simply_connected: true, zero_contour: true })
    }

    pub fn with_overlays(mut self, tree: bool, shade: bool, contour: bool) -> Self {
        self.tree_lines = tree;
        self.shade_not_simply_connected = shade;
        self.zero_contour = contour;
        self
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Color of a label as `#rrggbb`.
pub fn label_color(seed: u64, label: u32) -> String {
    let h = splitmix64(seed ^ splitmix64(label as u64));
    let hue = (h % 360) as f64;
    let sat = 0.45 + ((h >> 16) % 30) as f64 / 100.0;
    let light = 0.55 + ((h >> 32) % 20) as f64 / 100.0;
    let (r, g, b) = hsl_to_rgb(hue, sat, light);
    format!("#{r:02x}{g:02x}{b:02x}")
}

fn hsl_to_rgb(h: f64, s: f64, l: f64) -> (u8, u8, u8) {
    let c = (1.0 - (2.0 * l - 1.0).abs()) * s;
    let hp = h / 60.0;
    let x = c * (1.0 - (hp % 2.0 - 1.0).abs());
    let (r, g, b) = match hp as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = l - c / 2.0;
    let byte = |v: f64| ((v + m) * 255.0).round().clamp(0.0, 255.0) as u8;
    (byte(r), byte(g), byte(b))
}

fn r3(v: f64) -> String {
    let v = (v * 1000.0).round() / 1000.0;
    // Avoid "-0".
    format!("{}", if v == 0.0 { 0.0 } else { v })
}

struct Frame {
    lo: [f64; 2],
    width: [f64; 2],
    res: usize,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        (x - self.lo[0]) / self.width[0] * self.res as f64
    }

    fn py(&self, y: f64) -> f64 {
        self.res as f64 - (y - self.lo[1]) / self.width[1] * self.res as f64
    }

    /// Domain point at pixel-grid coordinates `(i, j)`, with `j` counted from the top.
    fn point(&self, i: f64, j: f64) -> [f64; 2] {
        let n = self.res as f64;
        [self.lo[0] + i / n * self.width[0], self.lo[1] + (n - j) / n * self.width[1]]
    }
}

pub fn render_svg(st: &Labeling<f64>, spec: &RenderSpec) -> Result<String, String> {
    let d = st.tree().dim();
    if d != 2 {
        return Err(format!("rendering needs a 2D tree, this one is {d}D"));
    }
    let root = st.tree().root_box();
    let frame = Frame { lo: [root.lo()[0], root.lo()[1]], width: [root.width(0), root.width(1)], res: spec.res };
    let n = spec.res;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {n} {n}" shape-rendering="crispEdges">"#
    );
    let _ = writeln!(svg, r##"<rect x="0" y="0" width="{n}" height="{n}" fill="#ffffff"/>"##);

    let _ = writeln!(svg, r#"<g id="labels">"#);
    for j in 0..n {
        let labels: Vec<Option<u32>> =
            (0..n).map(|i| st.label_of(&frame.point(i as f64 + 0.5, j as f64 + 0.5)).ok()).collect();
        let mut start = 0;
        while start < n {
            let mut end = start + 1;
            while end < n && labels[end] == labels[start] {
                end += 1;
            }
            if let Some(l) = labels[start] {
                let _ = writeln!(
                    svg,
                    r#"<rect x="{start}" y="{j}" width="{}" height="1" fill="{}"/>"#,
                    end - start,
                    label_color(spec.seed, l)
                );
            }
            start = end;
        }
    }
    let _ = writeln!(svg, "</g>");

    if spec.shade_not_simply_connected {
        let _ = writeln!(svg, r##"<g id="not-simply-connected" fill="#000000" fill-opacity="0.3">"##);
        for leaf in st.tree().leaves().iter().filter(|l| l.kind == LeafKind::NotSimplyConnected) {
            let _ = writeln!(svg, "{}", cell_rect(&frame, leaf.cell.lo(), leaf.cell.hi()));
        }
        let _ = writeln!(svg, "</g>");
    }

    if spec.zero_contour {
        let path = contour_path(st, &frame);
        if !path.is_empty() {
            let _ = writeln!(svg, r##"<path id="zero-set" d="{path}" fill="none" stroke="#202020" stroke-width="0.6"/>"##);
        }
    }

    if spec.tree_lines {
        let _ = writeln!(svg, r##"<g id="tree" fill="none" stroke="#404040" stroke-width="0.3">"##);
        for leaf in st.tree().leaves() {
            let _ = writeln!(svg, "{}", cell_rect(&frame, leaf.cell.lo(), leaf.cell.hi()));
        }
        let _ = writeln!(svg, "</g>");
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn cell_rect(frame: &Frame, lo: &[f64], hi: &[f64]) -> String {
    let (x0, x1) = (frame.px(lo[0]), frame.px(hi[0]));
    let (y0, y1) = (frame.py(hi[1]), frame.py(lo[1]));
    format!(r#"<rect x="{}" y="{}" width="{}" height="{}"/>"#, r3(x0), r3(y0), r3(x1 - x0), r3(y1 - y0))
}

/// Marching squares over the pixel-corner lattice.
fn contour_path(st: &Labeling<f64>, frame: &Frame) -> String {
    let n = frame.res;
    let poly = st.poly();
    let value = |i: usize, j: usize| poly.evaluate(&frame.point(i as f64, j as f64)).unwrap_or(0.0);
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        rows.push((0..=n).map(|i| value(i, j)).collect());
    }
    let cross = |a: f64, b: f64| -> f64 {
        let t = a / (a - b);
        if t.is_finite() {
            t.clamp(0.0, 1.0)
        } else {
            0.5
        }
    };
    let mut d = String::new();
    for j in 0..n {
        for i in 0..n {
            // Corners clockwise from the top left, in pixel space.
            let c = [rows[j][i], rows[j][i + 1], rows[j + 1][i + 1], rows[j + 1][i]];
            let pos = c.map(|v| v > 0.0);
            if pos.iter().all(|&p| p == pos[0]) {
                continue;
            }
            let corner = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
            let mut hits = Vec::with_capacity(4);
            for e in 0..4 {
                let (a, b) = (e, (e + 1) % 4);
                if pos[a] != pos[b] {
                    let t = cross(c[a], c[b]);
                    let (xa, ya) = (corner[a].0 as f64, corner[a].1 as f64);
                    let (xb, yb) = (corner[b].0 as f64, corner[b].1 as f64);
                    hits.push((xa + t * (xb - xa), ya + t * (yb - ya)));
                }
            }
            let pairs: &[(usize, usize)] = if hits.len() == 2 {
                &[(0, 1)]
            } else {
                // Saddle: the cell center decides which corners connect.
                let center = poly.evaluate(&frame.point(i as f64 + 0.5, j as f64 + 0.5)).unwrap_or(0.0);
                if (center > 0.0) == pos[0] {
                    &[(0, 1), (2, 3)]
                } else {
                    &[(3, 0), (1, 2)]
                }
            };
            for &(a, b) in pairs {
                let _ = write!(d, "M{} {}L{} {}", r3(hits[a].0), r3(hits[a].1), r3(hits[b].0), r3(hits[b].1));
            }
        }
    }
    d
}
