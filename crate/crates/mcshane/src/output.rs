//! CSV and JSON writers.
//!
//! Floats are written in their shortest round-trip form, so identical runs
//! produce identical bytes.

use std::io::Write;

use mcshane_core::pants::FootLayout;
use mcshane_core::verify::{TermRow, VerificationReport};
use mcshane_core::{BoundaryKind, BoundarySpec, ComplexValue};
use serde::Serialize;

/// CSV header of a verification run.
pub const CSV_HEADER: [&str; 6] = [
    "slope_p",
    "slope_q",
    "trace",
    "length",
    "term",
    "cumulative_sum",
];

/// Shortest decimal string that parses back to `v`.
pub fn float(v: f64) -> String {
    format!("{v:?}")
}

/// `cusp`, `cone` or `hole`.
pub fn boundary_kind(b: &BoundarySpec) -> &'static str {
    match b.kind() {
        BoundaryKind::Cusp => "cusp",
        BoundaryKind::ConePoint => "cone",
        BoundaryKind::Geodesic => "hole",
    }
}

#[derive(Serialize)]
struct ReportJson {
    boundary_kind: &'static str,
    boundary_value: f64,
    identity: String,
    cutoff: f64,
    term_count: usize,
    partial_sum: f64,
    target: f64,
    residual: f64,
    tail_estimate: f64,
    monotone_ok: bool,
}

/// The report as a JSON object, newline terminated.
pub fn report_json(r: &VerificationReport) -> String {
    let j = ReportJson {
        boundary_kind: boundary_kind(&r.boundary),
        boundary_value: r.boundary.magnitude(),
        identity: r.identity.label(),
        cutoff: r.cutoff,
        term_count: r.term_count,
        partial_sum: r.partial_sum,
        target: r.target,
        residual: r.residual,
        tail_estimate: r.tail_estimate,
        monotone_ok: r.monotone_ok,
    };
    let mut s = serde_json::to_string_pretty(&j).expect("plain struct serializes");
    s.push('\n');
    s
}

/// One line summarizing the report, for stderr.
pub fn report_summary(r: &VerificationReport) -> String {
    let boundary = match r.boundary.kind() {
        BoundaryKind::Cusp => "cusp".to_string(),
        BoundaryKind::ConePoint => format!("cone theta={}", float(r.boundary.magnitude())),
        BoundaryKind::Geodesic => format!("hole l={}", float(r.boundary.magnitude())),
    };
    format!(
        "{boundary} identity={} cutoff={} terms={} partial_sum={} target={} residual={} tail_estimate={} monotone_ok={}",
        r.identity.label(),
        float(r.cutoff),
        r.term_count,
        float(r.partial_sum),
        float(r.target),
        float(r.residual),
        float(r.tail_estimate),
        r.monotone_ok
    )
}

/// Term rows as CSV.
pub fn write_rows_csv<W: Write>(out: W, rows: &[TermRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record([
            r.slope.p.to_string(),
            r.slope.q.to_string(),
            float(r.trace),
            float(r.length),
            float(r.term),
            float(r.cumulative_sum),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Named scalar fields as either a one-row CSV or a JSON object.
///
/// `None` becomes an empty CSV field or JSON `null`; so does a non-finite value
/// in JSON.
pub fn fields(names: &[&str], values: &[Option<f64>], json: bool) -> String {
    if json {
        let mut map = serde_json::Map::new();
        for (n, v) in names.iter().zip(values) {
            let v = v
                .and_then(serde_json::Number::from_f64)
                .map_or(serde_json::Value::Null, serde_json::Value::Number);
            map.insert((*n).to_string(), v);
        }
        let mut s = serde_json::to_string_pretty(&map).expect("map serializes");
        s.push('\n');
        s
    } else {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(names).expect("in-memory write");
        w.write_record(values.iter().map(|v| v.map(float).unwrap_or_default()))
            .expect("in-memory write");
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii")
    }
}

/// Fields of a foot layout.
pub fn layout_fields(f: &FootLayout) -> ([&'static str; 6], [Option<f64>; 6]) {
    (
        [
            "perp_a",
            "perp_b",
            "width_a",
            "width_b",
            "main_gap",
            "full_measure",
        ],
        [
            Some(f.perp_a),
            Some(f.perp_b),
            Some(f.width_a),
            Some(f.width_b),
            Some(f.main_gap),
            Some(f.full_measure),
        ],
    )
}

/// `re`/`im` pair.
pub fn complex(v: ComplexValue) -> [Option<f64>; 2] {
    [Some(v.re), Some(v.im)]
}
