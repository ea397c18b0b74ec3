//! Text formats.
//!
//! Floats are written in the shortest decimal that parses back to the same
//! bits, so every table round-trips exactly. Absent optional values are
//! empty CSV fields; failed sweep rows carry the mode `failed` and `NaN`.

use std::fmt::Write as _;
use std::path::Path;

use elastica_core::geometry::{reconstruct_polyline, Harmonic};
use elastica_core::{OptimalShape, ShootingMode, SupportBody, SweepRow, SweepTable};
use serde::{Deserialize, Serialize};

use crate::{CliError, Result};

pub const FAILED_MODE: &str = "failed";

pub fn mode_from_label(label: &str) -> Option<ShootingMode> {
    [ShootingMode::StrictlyConvex, ShootingMode::WithSegments, ShootingMode::DiskBranch]
        .into_iter()
        .find(|m| m.label() == label)
}

/// `a0 <value>` followed by one `k a_k b_k` line per harmonic.
pub fn format_support_body(body: &SupportBody) -> String {
    let mut out = format!("a0 {}\n", body.a0());
    for h in body.harmonics() {
        writeln!(out, "{} {} {}", h.k, h.a, h.b).expect("writing to a String");
    }
    out
}

/// Inverse of [`format_support_body`]. Blank lines and lines starting with
/// `#` are skipped.
pub fn parse_support_body(text: &str) -> Result<SupportBody> {
    let mut a0 = None;
    let mut harmonics = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| CliError::Parse { line: i + 1, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| s.parse::<f64>().map_err(|e| err(format!("{s:?}: {e}")));
        match fields.as_slice() {
            ["a0", v] if a0.is_none() => a0 = Some(num(v)?),
            ["a0", _] => return Err(err("a0 given twice".into())),
            [k, a, b] if a0.is_some() => {
                let k = k.parse::<u32>().map_err(|e| err(format!("{k:?}: {e}")))?;
                harmonics.push(Harmonic::new(k, num(a)?, num(b)?));
            }
            [_, _, _] => return Err(err("harmonic before the a0 line".into())),
            _ => return Err(err(format!("expected `a0 <v>` or `k a b`, got {line:?}"))),
        }
    }
    let a0 = a0.ok_or(CliError::Parse { line: 0, message: "missing a0 line".into() })?;
    Ok(SupportBody::new(a0, harmonics)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShapeSample {
    pub s: f64,
    pub theta: f64,
    pub k: f64,
    pub x: f64,
    pub y: f64,
}

/// Boundary samples on the tangent-angle grid. `k` is the closed-form
/// curvature; `(x, y)` is integrated from `θ` starting at the origin.
pub fn shape_samples(shape: &OptimalShape) -> Vec<ShapeSample> {
    let (poly, _) = reconstruct_polyline(&shape.theta);
    poly.vertices
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let s = shape.theta.arclength(i);
            ShapeSample { s, theta: shape.theta.theta()[i], k: shape.curvature(s), x: v[0], y: v[1] }
        })
        .collect()
}

pub fn shape_csv(shape: &OptimalShape) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for sample in shape_samples(shape) {
        w.serialize(sample)?;
    }
    into_string(w)
}

pub fn parse_shape_csv(text: &str) -> Result<Vec<ShapeSample>> {
    csv::Reader::from_reader(text.as_bytes()).deserialize().map(|r| r.map_err(CliError::from)).collect()
}

#[derive(Debug, Serialize, Deserialize)]
struct DiagramRecord {
    mu: f64,
    mode: String,
    k_max: f64,
    lambda: f64,
    s1: Option<f64>,
    segment_length: Option<f64>,
    area: f64,
    energy: f64,
    objective: f64,
    x: f64,
    y: f64,
    residual_norm: f64,
}

impl From<&SweepRow> for DiagramRecord {
    fn from(r: &SweepRow) -> Self {
        DiagramRecord {
            mu: r.mu,
            mode: r.mode.map_or(FAILED_MODE, ShootingMode::label).to_string(),
            k_max: r.k_max,
            lambda: r.lambda,
            s1: r.s1,
            segment_length: r.segment_length,
            area: r.area,
            energy: r.energy,
            objective: r.objective,
            x: r.x,
            y: r.y,
            residual_norm: r.residual_norm,
        }
    }
}

impl TryFrom<DiagramRecord> for SweepRow {
    type Error = String;

    fn try_from(r: DiagramRecord) -> std::result::Result<Self, String> {
        let mode = match r.mode.as_str() {
            FAILED_MODE => None,
            label => Some(mode_from_label(label).ok_or_else(|| format!("unknown mode {label:?}"))?),
        };
        Ok(SweepRow {
            mu: r.mu,
            mode,
            k_max: r.k_max,
            lambda: r.lambda,
            s1: r.s1,
            segment_length: r.segment_length,
            area: r.area,
            energy: r.energy,
            objective: r.objective,
            x: r.x,
            y: r.y,
            residual_norm: r.residual_norm,
        })
    }
}

/// The sweep table with a header row, one line per `μ`.
pub fn diagram_csv(table: &SweepTable) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in &table.rows {
        w.serialize(DiagramRecord::from(row))?;
    }
    into_string(w)
}

pub fn parse_diagram_csv(text: &str) -> Result<SweepTable> {
    let mut rows = Vec::new();
    for (i, record) in csv::Reader::from_reader(text.as_bytes()).deserialize::<DiagramRecord>().enumerate() {
        let row = SweepRow::try_from(record?).map_err(|message| CliError::Parse { line: i + 2, message })?;
        rows.push(row);
    }
    Ok(SweepTable { rows })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamsRecord {
    pub mu: f64,
    pub lambda: f64,
    pub k_max: f64,
    pub c: f64,
    pub k_min: f64,
    pub sigma: f64,
    pub delta: f64,
    pub gamma: f64,
    pub alpha: f64,
    pub beta: f64,
    pub omega: f64,
    pub m: f64,
    pub r0: f64,
    pub q: u32,
    pub degenerate: bool,
}

/// Everything needed to reproduce a solved shape.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShapeRecord {
    pub mu: f64,
    pub mode: String,
    pub params: ParamsRecord,
    pub s1: Option<f64>,
    pub segment_length: Option<f64>,
    pub area: f64,
    pub perimeter: f64,
    pub energy: f64,
    pub objective: f64,
    pub x: f64,
    pub y: f64,
    pub residual_norm: f64,
    pub closure_residual: f64,
    pub iterations: usize,
}

impl From<&OptimalShape> for ShapeRecord {
    fn from(s: &OptimalShape) -> Self {
        let p = &s.params;
        ShapeRecord {
            mu: s.mu,
            mode: s.mode.label().to_string(),
            params: ParamsRecord {
                mu: p.mu,
                lambda: p.lambda,
                k_max: p.k_max,
                c: p.c,
                k_min: p.k_min,
                sigma: p.sigma,
                delta: p.delta,
                gamma: p.gamma,
                alpha: p.alpha,
                beta: p.beta,
                omega: p.omega,
                m: p.m,
                r0: p.r0,
                q: p.q,
                degenerate: p.degenerate,
            },
            s1: s.s1,
            segment_length: s.segment_length,
            area: s.functionals.area,
            perimeter: s.functionals.perimeter,
            energy: s.functionals.elastic_energy,
            objective: s.objective,
            x: s.diagram.x,
            y: s.diagram.y,
            residual_norm: s.residual_norm,
            closure_residual: s.closure_residual,
            iterations: s.iterations,
        }
    }
}

pub fn shape_json(shape: &OptimalShape) -> Result<String> {
    Ok(serde_json::to_string_pretty(&ShapeRecord::from(shape))? + "\n")
}

pub fn parse_shape_json(text: &str) -> Result<ShapeRecord> {
    Ok(serde_json::from_str(text)?)
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn into_string(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| CliError::Config(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}
