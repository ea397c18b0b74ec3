use std::f64::consts::PI;

use elastica::io::{
    diagram_csv, format_support_body, parse_diagram_csv, parse_shape_csv, parse_shape_json, parse_support_body,
    shape_csv, shape_json, shape_samples,
};
use elastica::svg::{diagram_svg, segments, shape_svg};
use elastica_core::diagram::{interior_families, sweep, MuGrid};
use elastica_core::geometry::{functionals_from_support, Harmonic};
use elastica_core::shooting::solve_mu;
use elastica_core::{OptimalShape, SolveOptions, SupportBody, SweepRow};

fn solve(mu: f64) -> OptimalShape {
    solve_mu(mu, &SolveOptions::default()).unwrap()
}

fn same_bits(a: f64, b: f64) -> bool {
    a.to_bits() == b.to_bits() || (a.is_nan() && b.is_nan())
}

fn rows_identical(a: &SweepRow, b: &SweepRow) -> bool {
    let fa = [a.mu, a.k_max, a.lambda, a.area, a.energy, a.objective, a.x, a.y, a.residual_norm];
    let fb = [b.mu, b.k_max, b.lambda, b.area, b.energy, b.objective, b.x, b.y, b.residual_norm];
    let opt = |x: Option<f64>, y: Option<f64>| match (x, y) {
        (Some(x), Some(y)) => same_bits(x, y),
        (None, None) => true,
        _ => false,
    };
    a.mode == b.mode
        && fa.iter().zip(fb.iter()).all(|(&x, &y)| same_bits(x, y))
        && opt(a.s1, b.s1)
        && opt(a.segment_length, b.segment_length)
}

#[test]
fn support_body_text_preserves_functionals() {
    let body = SupportBody::new(
        1.0,
        [Harmonic::new(2, 0.1 / 3.0, 0.02), Harmonic::new(3, -0.01, 0.0), Harmonic::new(7, 1e-4, -2e-4)],
    )
    .unwrap();
    let back = parse_support_body(&format_support_body(&body)).unwrap();
    let f = functionals_from_support(&body, 2048).unwrap();
    let g = functionals_from_support(&back, 2048).unwrap();
    assert_eq!(f, g);
}

#[test]
fn diagram_csv_round_trips_bit_exactly() {
    let mut table = sweep(1.0, 60.0, 12, MuGrid::Geometric, &SolveOptions::default()).unwrap();
    table.rows.push(SweepRow::failed(61.0));
    let text = diagram_csv(&table).unwrap();
    let header = text.lines().next().unwrap();
    assert_eq!(header, "mu,mode,k_max,lambda,s1,segment_length,area,energy,objective,x,y,residual_norm");
    assert_eq!(text.lines().count(), 14);
    let back = parse_diagram_csv(&text).unwrap();
    assert_eq!(back.rows.len(), table.rows.len());
    for (a, b) in table.rows.iter().zip(back.rows.iter()) {
        assert!(rows_identical(a, b), "{a:?} vs {b:?}");
    }
    assert_eq!(diagram_csv(&back).unwrap(), text);
}

#[test]
fn shape_csv_columns_and_values() {
    let s = solve(4.0);
    let text = shape_csv(&s).unwrap();
    assert_eq!(text.lines().next().unwrap(), "s,theta,k,x,y");
    let samples = parse_shape_csv(&text).unwrap();
    assert_eq!(samples, shape_samples(&s));
    assert_eq!(samples.len(), s.theta.intervals());

    let first = samples[0];
    assert_eq!((first.s, first.theta, first.x, first.y), (0.0, 0.0, 0.0, 0.0));
    assert!((first.k - s.params.k_max).abs() < 1e-12);
    let last = samples.last().unwrap();
    assert!((last.s + s.theta.step() - s.theta.perimeter()).abs() < 1e-12);
    assert!((s.theta.perimeter() - 2.0 * PI).abs() < 1e-9, "{}", s.theta.perimeter());
    // Straight segments carry zero curvature.
    assert!(samples.iter().filter(|p| p.k == 0.0).count() > 10);
    // Trapezoid-summed turning recovers 2π.
    let turning: f64 = samples.iter().map(|p| p.k).sum::<f64>() * s.theta.step();
    assert!((turning - 2.0 * PI).abs() < 1e-6, "{turning}");
}

#[test]
fn shape_json_records_all_parameters() {
    let s = solve(10.0);
    let text = shape_json(&s).unwrap();
    for key in [
        "\"mu\"",
        "\"lambda\"",
        "\"k_max\"",
        "\"c\"",
        "\"k_min\"",
        "\"sigma\"",
        "\"delta\"",
        "\"gamma\"",
        "\"alpha\"",
        "\"beta\"",
        "\"omega\"",
        "\"m\"",
        "\"r0\"",
        "\"q\"",
        "\"degenerate\"",
    ] {
        assert!(text.contains(key), "missing {key}");
    }
    let record = parse_shape_json(&text).unwrap();
    assert_eq!(record.params.k_max.to_bits(), s.params.k_max.to_bits());
    assert_eq!(record.params.omega.to_bits(), s.params.omega.to_bits());
    assert_eq!(record.mode, "segments");
    assert_eq!(record.objective.to_bits(), s.objective.to_bits());
}

#[test]
fn identical_runs_are_byte_identical() {
    let a = shape_csv(&solve(7.0)).unwrap();
    let b = shape_csv(&solve(7.0)).unwrap();
    assert_eq!(a, b);
}

fn closed_paths(doc: &roxmltree::Document) -> usize {
    doc.descendants()
        .filter(|n| n.has_tag_name("path"))
        .filter(|n| n.attribute("d").is_some_and(|d| d.trim_end().ends_with('Z')))
        .count()
}

#[test]
fn shape_svg_is_valid_with_two_segments() {
    let s = solve(4.0);
    let text = shape_svg(&s);
    let doc = roxmltree::Document::parse(&text).unwrap();
    assert_eq!(closed_paths(&doc), 1);
    let lines: Vec<_> =
        doc.descendants().filter(|n| n.has_tag_name("line") && n.attribute("class") == Some("segment")).collect();
    assert_eq!(lines.len(), 2);
    let l = s.segment_length.unwrap();
    for line in lines {
        let get = |k: &str| line.attribute(k).unwrap().parse::<f64>().unwrap();
        let len = (get("x2") - get("x1")).hypot(get("y2") - get("y1"));
        assert!((len - l).abs() < 1e-9);
    }
}

#[test]
fn shape_svg_viewbox_has_five_percent_margin() {
    let s = solve(20.0);
    let text = shape_svg(&s);
    let doc = roxmltree::Document::parse(&text).unwrap();
    let vb: Vec<f64> =
        doc.root_element().attribute("viewBox").unwrap().split_whitespace().map(|v| v.parse().unwrap()).collect();
    let ([x0, y0], [x1, y1]) = s.polyline.bounding_box();
    let pad = 0.05 * (x1 - x0).max(y1 - y0);
    assert!((vb[0] - (x0 - pad)).abs() < 1e-12);
    assert!((vb[1] - (-y1 - pad)).abs() < 1e-12);
    assert!((vb[2] - (x1 - x0 + 2.0 * pad)).abs() < 1e-12);
    assert!((vb[3] - (y1 - y0 + 2.0 * pad)).abs() < 1e-12);
}

#[test]
fn strictly_convex_and_disk_shapes_have_no_segments() {
    for mu in [2.0, 3.2] {
        let s = solve(mu);
        assert!(segments(&s).is_empty());
        let text = shape_svg(&s);
        let doc = roxmltree::Document::parse(&text).unwrap();
        assert_eq!(closed_paths(&doc), 1);
        assert!(!text.contains("class=\"segment\""));
    }
}

#[test]
fn diagram_svg_overlays_every_layer() {
    let table = sweep(1.0, 100.0, 10, MuGrid::Geometric, &SolveOptions::default()).unwrap();
    let families = interior_families(6, 10).unwrap();
    let text = diagram_svg(&table, &families);
    let doc = roxmltree::Document::parse(&text).unwrap();
    let class_count = |c: &str| doc.descendants().filter(|n| n.attribute("class") == Some(c)).count();
    assert_eq!(class_count("locus"), 1);
    assert_eq!(class_count("gage"), 1);
    assert_eq!(class_count("asymptote"), 1);
    assert_eq!(class_count("family"), 5);
}
