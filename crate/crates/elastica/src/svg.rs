//! Hand-written SVG.
//!
//! Shapes are drawn in their own coordinates with `y` flipped, inside a
//! viewBox fitted to the bounding box plus a 5% margin. The diagram is drawn
//! on a fixed pixel canvas.

use std::fmt::Write as _;

use elastica_core::diagram::{AsymptoteMetrics, DiagramPoint, PointSource};
use elastica_core::{OptimalShape, SweepTable};

const MARGIN: f64 = 0.05;
const CANVAS: f64 = 640.0;

/// One closed boundary path, plus a `<line class="segment">` for each
/// straight segment.
pub fn shape_svg(shape: &OptimalShape) -> String {
    let poly = &shape.polyline;
    let ([x0, y0], [x1, y1]) = poly.bounding_box();
    let pad = MARGIN * (x1 - x0).max(y1 - y0);
    let (vx, vy) = (x0 - pad, -y1 - pad);
    let (vw, vh) = (x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad);

    let mut d = String::new();
    for (i, v) in poly.vertices.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        write!(d, "{cmd}{} {} ", v[0], -v[1]).unwrap();
    }
    d.push('Z');

    let mut out = header(vx, vy, vw, vh);
    writeln!(
        out,
        "<title>mu = {}, mode = {}, k_M = {}, lambda = {}</title>",
        shape.mu,
        shape.mode.label(),
        shape.params.k_max,
        shape.params.lambda
    )
    .unwrap();
    writeln!(
        out,
        r##"<path class="boundary" d="{d}" fill="#dde8f4" stroke="#1f4e79" stroke-width="2" vector-effect="non-scaling-stroke"/>"##
    )
    .unwrap();
    for (a, b) in segments(shape) {
        writeln!(
            out,
            r##"<line class="segment" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#c0392b" stroke-width="4" vector-effect="non-scaling-stroke"/>"##,
            a[0], -a[1], b[0], -b[1]
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// Straight edges of the assembled polygon: the edges whose length is the
/// segment length, as opposed to the short chords of the elastic arcs.
pub fn segments(shape: &OptimalShape) -> Vec<([f64; 2], [f64; 2])> {
    let Some(l) = shape.segment_length.filter(|&l| l > 0.0) else {
        return Vec::new();
    };
    let v = &shape.polyline.vertices;
    let n = v.len();
    (0..n)
        .map(|i| (v[i], v[(i + 1) % n]))
        .filter(|(a, b)| ((b[0] - a[0]).hypot(b[1] - a[1]) - l).abs() <= 1e-6 * l.max(1.0))
        .collect()
}

/// The solved boundary locus, the interior family points, and the
/// hyperbolas `xy = 1` and `xy = ρ²/π²`.
pub fn diagram_svg(table: &SweepTable, families: &[DiagramPoint]) -> String {
    let solved: Vec<[f64; 2]> = table.rows.iter().filter(|r| r.converged()).map(|r| [r.x, r.y]).collect();
    let y_top = solved.iter().map(|p| p[1]).chain(families.iter().map(|p| p.y)).fold(1.5, f64::max) * 1.05;
    let (x_lo, x_hi, y_lo) = (0.0, 1.05, 0.95);
    let px = |x: f64| 40.0 + (CANVAS - 60.0) * (x - x_lo) / (x_hi - x_lo);
    let py = |y: f64| CANVAS - 40.0 - (CANVAS - 60.0) * (y - y_lo) / (y_top - y_lo);
    let path = |pts: &[[f64; 2]]| -> String {
        let mut d = String::new();
        for (i, p) in pts.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            write!(d, "{cmd}{:.3} {:.3} ", px(p[0]), py(p[1])).unwrap();
        }
        d.trim_end().to_string()
    };

    let hyperbola = |c: f64| -> Vec<[f64; 2]> {
        let start = (c / y_top).max(0.02);
        (0..=200)
            .map(|i| start + (x_hi - start) * i as f64 / 200.0)
            .map(|x| [x, c / x])
            .filter(|p| p[1] >= y_lo)
            .collect()
    };
    let (_, _, rho_xy) = AsymptoteMetrics::limits();

    let mut out = header(0.0, 0.0, CANVAS, CANVAS);
    writeln!(out, "<title>diagram of (4 pi A / P^2, E P / (2 pi^2))</title>").unwrap();
    writeln!(
        out,
        r#"<path class="axes" d="{}" fill="none" stroke="black"/>"#,
        path(&[[x_lo, y_top], [x_lo, y_lo], [x_hi, y_lo]])
    )
    .unwrap();
    writeln!(
        out,
        r##"<path class="gage" d="{}" fill="none" stroke="#7f7f7f" stroke-dasharray="6 4"/>"##,
        path(&hyperbola(1.0))
    )
    .unwrap();
    writeln!(
        out,
        r##"<path class="asymptote" d="{}" fill="none" stroke="#2e8b57" stroke-dasharray="2 3"/>"##,
        path(&hyperbola(rho_xy))
    )
    .unwrap();

    let mut ns: Vec<u32> = families
        .iter()
        .filter_map(|p| match p.source {
            PointSource::Family { n, .. } => Some(n),
            _ => None,
        })
        .collect();
    ns.dedup();
    for n in ns {
        let pts: Vec<[f64; 2]> = families
            .iter()
            .filter(|p| matches!(p.source, PointSource::Family { n: m, .. } if m == n))
            .map(|p| [p.x, p.y])
            .collect();
        writeln!(out, r##"<path class="family" data-n="{n}" d="{}" fill="none" stroke="#e67e22"/>"##, path(&pts))
            .unwrap();
    }
    if !solved.is_empty() {
        writeln!(out, r##"<path class="locus" d="{}" fill="none" stroke="#1f4e79" stroke-width="2"/>"##, path(&solved))
            .unwrap();
    }
    for (label, x, y) in [("x", x_hi, y_lo), ("y", x_lo, y_top)] {
        writeln!(out, r#"<text x="{:.3}" y="{:.3}" font-size="14">{label}</text>"#, px(x) + 4.0, py(y) - 4.0).unwrap();
    }
    out.push_str("</svg>\n");
    out
}

fn header(x: f64, y: f64, w: f64, h: f64) -> String {
    format!(
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x} {y} {w} {h}">
"#
    )
}
