//! Partial sums of the torus identities.
//!
//! For a torus with one boundary component `Δ₀` the gap left by each simple
//! closed geodesic `γ` depends only on `|γ|`, and the gaps fill `Δ₀`:
//!
//! ```text
//! cusp:  Σ 1/(1 + e^{|γ|})                               = 1/2
//! cone:  Σ 2·atan(sin(θ₀/2) / (cos(θ₀/2) + e^{|γ|}))     = θ₀/2
//! hole:  Σ 2·atanh(sinh(l₀/2) / (cosh(l₀/2) + e^{|γ|}))  = l₀/2
//! ```
//!
//! Restricted to one Weierstrass class the summands become
//! `asin(1/cosh(|γ|/2))`, `atan(cos(θ₀/4)/sinh(|γ|/2))` or
//! `atan(cosh(l₀/4)/sinh(|γ|/2))`, each class summing to `π/2`.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use crate::error::Result;
use crate::gapcat::{identity_target, BoundaryKind, BoundarySpec};
use crate::markoff::{enumerate_geodesics, GeodesicRecord, Slope, TraceTriple, WeierstrassClass};

/// Which identity to sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// All geodesics, gap summands.
    Full,
    /// One Weierstrass class.
    Weierstrass(WeierstrassClass),
    /// All three Weierstrass classes together.
    Combined,
}

impl Identity {
    /// `full`, `weierstrass:A`, … or `combined`.
    pub fn label(&self) -> alloc::string::String {
        match self {
            Identity::Full => "full".into(),
            Identity::Weierstrass(c) => alloc::format!("weierstrass:{c}"),
            Identity::Combined => "combined".into(),
        }
    }

    fn includes(&self, r: &GeodesicRecord) -> bool {
        match self {
            Identity::Weierstrass(c) => r.wclass == *c,
            _ => true,
        }
    }

    fn decay_rate(&self) -> f64 {
        match self {
            Identity::Full => 1.0,
            _ => 0.5,
        }
    }
}

/// Convergence report for one identity at one cutoff.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerificationReport {
    /// Boundary of the torus.
    pub boundary: BoundarySpec,
    /// Identity summed.
    pub identity: Identity,
    /// Length cutoff.
    pub cutoff: f64,
    /// Number of summands.
    pub term_count: usize,
    /// Compensated sum of the summands.
    pub partial_sum: f64,
    /// Right-hand side.
    pub target: f64,
    /// `target − partial_sum`.
    pub residual: f64,
    /// Heuristic bound on the omitted tail, see [`tail_estimate`].
    pub tail_estimate: f64,
    /// Every prefix sum stays `≤ target + 1e-12`.
    pub monotone_ok: bool,
}

/// One summand with its running total.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TermRow {
    /// Slope of the geodesic.
    pub slope: Slope,
    /// Its trace.
    pub trace: f64,
    /// Its length.
    pub length: f64,
    /// The summand.
    pub term: f64,
    /// Compensated sum up to and including this row.
    pub cumulative_sum: f64,
}

/// Right-hand side of `identity` for boundary `b`.
pub fn target(b: &BoundarySpec, identity: Identity) -> f64 {
    match identity {
        Identity::Full => identity_target(b),
        Identity::Weierstrass(_) => FRAC_PI_2,
        Identity::Combined => 1.5 * PI,
    }
}

/// Summand for a geodesic of length `length`.
pub fn summand(b: &BoundarySpec, identity: Identity, length: f64) -> f64 {
    let m = b.magnitude();
    match (identity, b.kind()) {
        (Identity::Full, BoundaryKind::Cusp) => 1.0 / (1.0 + libm::exp(length)),
        (Identity::Full, BoundaryKind::ConePoint) => {
            let (s, c) = libm::sincos(0.5 * m);
            2.0 * libm::atan(s / (c + libm::exp(length)))
        }
        (Identity::Full, BoundaryKind::Geodesic) => {
            let u = libm::sinh(0.5 * m) / (libm::cosh(0.5 * m) + libm::exp(length));
            2.0 * libm::atanh(u)
        }
        (_, BoundaryKind::Cusp) => libm::asin(1.0 / libm::cosh(0.5 * length)),
        (_, BoundaryKind::ConePoint) => libm::atan(libm::cos(0.25 * m) / libm::sinh(0.5 * length)),
        (_, BoundaryKind::Geodesic) => libm::atan(libm::cosh(0.25 * m) / libm::sinh(0.5 * length)),
    }
}

/// Neumaier's compensated summation.
#[derive(Clone, Copy, Debug, Default)]
struct Compensated {
    sum: f64,
    comp: f64,
}

impl Compensated {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if libm::fabs(self.sum) >= libm::fabs(v) {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Summand rows for the records selected by `identity`, in record order.
pub fn term_rows(b: &BoundarySpec, identity: Identity, records: &[GeodesicRecord]) -> Vec<TermRow> {
    let mut acc = Compensated::default();
    records
        .iter()
        .filter(|r| identity.includes(r))
        .map(|r| {
            let term = summand(b, identity, r.length);
            acc.add(term);
            TermRow {
                slope: r.slope,
                trace: r.trace,
                length: r.length,
                term,
                cumulative_sum: acc.value(),
            }
        })
        .collect()
}

/// Fits `c·(1+s)²·e^{−rs}` to the summands with length in the last ten units
/// below `cutoff` and returns its value at `cutoff`, with `r = 1` for the full
/// identity and `r = ½` otherwise.
///
/// Summands are weighted by a trapezoid over the window (ramps of 30% of its
/// width at both ends), so the estimate varies continuously with `cutoff`.
/// The residual itself drops in steps at clusters of equal lengths; the fitted
/// `c` is doubled to stay above it just before such a step.
/// Falls back to the target when fewer than two summands fall in the window.
pub fn tail_estimate(
    records: &[GeodesicRecord],
    b: &BoundarySpec,
    identity: Identity,
    cutoff: f64,
) -> f64 {
    let fallback = target(b, identity);
    let r = identity.decay_rate();
    let model = |s: f64| (1.0 + s) * (1.0 + s) * libm::exp(-r * s);
    // antiderivative of −model
    let primitive = |s: f64| {
        let u = 1.0 + s;
        libm::exp(-r * s) * (u * u / r + 2.0 * u / (r * r) + 2.0 / (r * r * r))
    };
    let lo = (cutoff - 10.0).max(0.0);
    let h = 0.3 * (cutoff - lo);
    let weight = |s: f64| ((s - lo) / h).min((cutoff - s) / h).clamp(0.0, 1.0);
    let mut acc = Compensated::default();
    let mut n = 0usize;
    for rec in records
        .iter()
        .filter(|rec| identity.includes(rec) && rec.length > lo && rec.length <= cutoff)
    {
        acc.add(weight(rec.length) * summand(b, identity, rec.length));
        n += 1;
    }
    // ∫ weight·(−model') = ∫ weight'·model
    let fitted =
        ((primitive(lo) - primitive(lo + h)) - (primitive(cutoff - h) - primitive(cutoff))) / h;
    if n < 2 || !(h > 0.0) || !(fitted > 0.0) {
        return fallback;
    }
    let est = 2.0 * acc.value() / fitted * model(cutoff);
    if est.is_finite() {
        est.max(0.0)
    } else {
        fallback
    }
}

/// Report for records already enumerated at `cutoff`.
pub fn report_from_records(
    b: &BoundarySpec,
    identity: Identity,
    cutoff: f64,
    records: &[GeodesicRecord],
) -> VerificationReport {
    let rows = term_rows(b, identity, records);
    report_from_rows(b, identity, cutoff, records, &rows)
}

/// As [`report_from_records`], reusing rows from [`term_rows`].
pub fn report_from_rows(
    b: &BoundarySpec,
    identity: Identity,
    cutoff: f64,
    records: &[GeodesicRecord],
    rows: &[TermRow],
) -> VerificationReport {
    let target = target(b, identity);
    let partial_sum = match identity {
        // the sum of the three class totals, so that it matches them exactly
        Identity::Combined => WeierstrassClass::ALL
            .iter()
            .map(|&c| class_total(b, c, records))
            .fold(0.0, |acc, v| acc + v),
        _ => rows.last().map_or(0.0, |r| r.cumulative_sum),
    };
    VerificationReport {
        boundary: *b,
        identity,
        cutoff,
        term_count: rows.len(),
        partial_sum,
        target,
        residual: target - partial_sum,
        tail_estimate: tail_estimate(records, b, identity, cutoff),
        monotone_ok: rows.iter().all(|r| r.cumulative_sum <= target + 1e-12),
    }
}

fn class_total(b: &BoundarySpec, class: WeierstrassClass, records: &[GeodesicRecord]) -> f64 {
    let identity = Identity::Weierstrass(class);
    let mut acc = Compensated::default();
    for r in records.iter().filter(|r| r.wclass == class) {
        acc.add(summand(b, identity, r.length));
    }
    acc.value()
}

fn run(
    b: &BoundarySpec,
    identity: Identity,
    cutoff: f64,
    seed: Option<TraceTriple>,
) -> Result<VerificationReport> {
    let records = enumerate_geodesics(b, cutoff, seed)?;
    Ok(report_from_records(b, identity, cutoff, &records))
}

/// Gap identity over all geodesics of length `≤ cutoff` on the symmetric structure.
pub fn verify_full_identity(b: &BoundarySpec, cutoff: f64) -> Result<VerificationReport> {
    run(b, Identity::Full, cutoff, None)
}

/// Weierstrass identity for one class.
pub fn verify_weierstrass(
    b: &BoundarySpec,
    class: WeierstrassClass,
    cutoff: f64,
) -> Result<VerificationReport> {
    run(b, Identity::Weierstrass(class), cutoff, None)
}

/// Weierstrass identity summed over all three classes.
pub fn verify_combined(b: &BoundarySpec, cutoff: f64) -> Result<VerificationReport> {
    run(b, Identity::Combined, cutoff, None)
}

/// Any identity on any structure with boundary `b`.
pub fn verify_with_seed(
    b: &BoundarySpec,
    identity: Identity,
    cutoff: f64,
    seed: Option<TraceTriple>,
) -> Result<VerificationReport> {
    run(b, identity, cutoff, seed)
}
