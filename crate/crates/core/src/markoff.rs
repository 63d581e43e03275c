//! Simple closed geodesics on a one-boundary torus.
//!
//! A hyperbolic torus with one cusp, cone point or hole is described by a
//! triple of traces `(x, y, z)` of three simple closed curves meeting pairwise
//! once. The Fricke invariant `μ = x² + y² + z² − xyz` equals `2 + tr ∂`, with
//! boundary trace `−2` (cusp), `−2cos(θ₀/2)` (cone) or `−2cosh(l₀/2)` (hole).
//! Replacing `z` by `xy − z` moves to the adjacent triangle of the Farey
//! tessellation, and every simple closed geodesic appears exactly once in the
//! resulting tree. Lengths follow from `|γ| = 2·arccosh(tr/2)`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::gapcat::{BoundaryKind, BoundarySpec};
use crate::kernel::length_from_trace;

/// Primitive slope `p/q` in canonical form: `q > 0`, or `(1, 0)` for `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    /// Numerator.
    pub p: i64,
    /// Denominator.
    pub q: i64,
}

impl Slope {
    /// Canonical form of `p/q`; fails unless `gcd(|p|, |q|) = 1`.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if gcd(p.unsigned_abs(), q.unsigned_abs()) != 1 {
            return Err(Error::Domain("slope must be primitive"));
        }
        let (p, q) = if q < 0 || (q == 0 && p < 0) {
            (
                p.checked_neg().ok_or(Error::SlopeOverflow)?,
                q.checked_neg().ok_or(Error::SlopeOverflow)?,
            )
        } else {
            (p, q)
        };
        Ok(Self { p, q })
    }

    /// `|p₁q₂ − p₂q₁|`, which is 1 for Farey neighbours.
    pub fn intersection(self, other: Self) -> i128 {
        (self.p as i128 * other.q as i128 - other.p as i128 * self.q as i128).abs()
    }

    fn combine(self, other: Self, sign: i64) -> Result<Self> {
        let p = other
            .p
            .checked_mul(sign)
            .and_then(|v| self.p.checked_add(v))
            .ok_or(Error::SlopeOverflow)?;
        let q = other
            .q
            .checked_mul(sign)
            .and_then(|v| self.q.checked_add(v))
            .ok_or(Error::SlopeOverflow)?;
        Slope::new(p, q)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The three Weierstrass classes, by slope parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeierstrassClass {
    /// `(p, q) ≡ (1, 1) mod 2`.
    A,
    /// `(p, q) ≡ (0, 1) mod 2`.
    B,
    /// `(p, q) ≡ (1, 0) mod 2`.
    C,
}

impl WeierstrassClass {
    /// All three classes in order.
    pub const ALL: [WeierstrassClass; 3] = [Self::A, Self::B, Self::C];
}

impl fmt::Display for WeierstrassClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::A => "A",
            Self::B => "B",
            Self::C => "C",
        })
    }
}

/// Class of a canonical slope.
pub fn weierstrass_class(s: Slope) -> WeierstrassClass {
    match (s.p.rem_euclid(2), s.q.rem_euclid(2)) {
        (1, 1) => WeierstrassClass::A,
        (0, _) => WeierstrassClass::B,
        _ => WeierstrassClass::C,
    }
}

/// Traces of three pairwise once-intersecting curves with their slopes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TraceTriple {
    /// `(x, y, z)`.
    pub traces: [f64; 3],
    /// Slopes of the three curves; a Farey triangle.
    pub slopes: [Slope; 3],
    /// `x² + y² + z² − xyz`, evaluated from `traces`.
    pub mu: f64,
}

/// Slopes `(0/1, 1/1, 1/0)`.
pub const ROOT_SLOPES: [Slope; 3] = [
    Slope { p: 0, q: 1 },
    Slope { p: 1, q: 1 },
    Slope { p: 1, q: 0 },
];

fn fricke(t: [f64; 3]) -> f64 {
    let [x, y, z] = t;
    x * x + y * y + z * z - x * y * z
}

impl TraceTriple {
    /// A triple on the root triangle.
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self::with_slopes([x, y, z], ROOT_SLOPES)
    }

    /// A triple on an arbitrary slope triangle.
    pub fn with_slopes(traces: [f64; 3], slopes: [Slope; 3]) -> Self {
        Self {
            traces,
            slopes,
            mu: fricke(traces),
        }
    }
}

/// One simple closed geodesic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeodesicRecord {
    /// Canonical slope.
    pub slope: Slope,
    /// Trace, `> 2`.
    pub trace: f64,
    /// `2·arccosh(trace/2)`.
    pub length: f64,
    /// Weierstrass class of `slope`.
    pub wclass: WeierstrassClass,
}

impl GeodesicRecord {
    fn new(slope: Slope, trace: f64) -> Result<Self> {
        if !(trace > 2.0) {
            return Err(Error::InvalidStructure { trace });
        }
        Ok(Self {
            slope,
            trace,
            length: length_from_trace(trace)?,
            wclass: weierstrass_class(slope),
        })
    }

    /// Ordering by `(length, p, q)`.
    pub fn cmp_key(&self, other: &Self) -> Ordering {
        self.length
            .total_cmp(&other.length)
            .then(self.slope.cmp(&other.slope))
    }
}

/// `μ = 2 + tr ∂` for the torus with boundary `b`.
pub fn boundary_invariant(b: &BoundarySpec) -> f64 {
    let m = b.magnitude();
    match b.kind() {
        BoundaryKind::Cusp => 0.0,
        BoundaryKind::ConePoint => 2.0 - 2.0 * libm::cos(0.5 * m),
        BoundaryKind::Geodesic => 2.0 - 2.0 * libm::cosh(0.5 * m),
    }
}

/// The equilateral structure: all traces equal the largest root of `t³ − 3t² + μ`.
pub fn symmetric_seed(mu: f64) -> Result<TraceTriple> {
    if mu.is_nan() {
        return Err(Error::NonFinite("μ"));
    }
    if mu >= 4.0 {
        return Err(Error::DegenerateStructure);
    }
    let f = |t: f64| t * t * (t - 3.0) + mu;
    // f(2) = μ − 4 < 0 and f(hi) > 0.
    let mut lo = 2.0_f64;
    let mut hi = 4.0 + libm::cbrt(libm::fabs(mu));
    if !hi.is_finite() {
        return Err(Error::NonFinite("μ"));
    }
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = if libm::fabs(f(lo)) < libm::fabs(f(hi)) {
        lo
    } else {
        hi
    };
    if !(t > 2.0) {
        return Err(Error::DegenerateStructure);
    }
    Ok(TraceTriple::new(t, t, t))
}

/// Replaces slot `slot` (0, 1 or 2) by `xy − z` and its slope by the other
/// Farey neighbour of the retained edge.
pub fn vieta_flip(tr: &TraceTriple, slot: usize) -> Result<TraceTriple> {
    if slot > 2 {
        return Err(Error::Domain("flip slot must be 0, 1 or 2"));
    }
    let (i, j) = others(slot);
    let mut traces = tr.traces;
    traces[slot] = traces[i] * traces[j] - traces[slot];
    let mut slopes = tr.slopes;
    slopes[slot] = farey_partner(tr.slopes[i], tr.slopes[j], tr.slopes[slot])?;
    Ok(TraceTriple::with_slopes(traces, slopes))
}

fn others(slot: usize) -> (usize, usize) {
    match slot {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

fn farey_partner(a: Slope, b: Slope, old: Slope) -> Result<Slope> {
    let sum = a.combine(b, 1)?;
    if sum != old {
        return Ok(sum);
    }
    a.combine(b, -1)
}

/// Seed for `b`: the override if given (after checking its `μ`), otherwise
/// [`symmetric_seed`].
pub fn prepare_seed(b: &BoundarySpec, override_seed: Option<TraceTriple>) -> Result<TraceTriple> {
    let mu = boundary_invariant(b);
    let seed = match override_seed {
        None => symmetric_seed(mu)?,
        Some(s) => {
            let seed_mu = fricke(s.traces);
            let scale = s.traces.iter().map(|t| t * t).sum::<f64>().max(1.0);
            if !(libm::fabs(seed_mu - mu) <= 1e-9 * scale) {
                return Err(Error::SeedMismatch {
                    seed_mu,
                    boundary_mu: mu,
                });
            }
            TraceTriple::with_slopes(s.traces, s.slopes)
        }
    };
    for &t in &seed.traces {
        if !(t > 2.0) {
            return Err(Error::InvalidStructure { trace: t });
        }
    }
    Ok(seed)
}

fn check_cutoff(cutoff: f64) -> Result<()> {
    if cutoff > 0.0 && cutoff.is_finite() {
        Ok(())
    } else {
        Err(Error::Range("cutoff must be positive and finite"))
    }
}

/// Records for the three curves of `seed` with length `≤ cutoff`.
pub fn root_records(seed: &TraceTriple, cutoff: f64) -> Result<Vec<GeodesicRecord>> {
    check_cutoff(cutoff)?;
    let mut out = Vec::new();
    for k in 0..3 {
        let r = GeodesicRecord::new(seed.slopes[k], seed.traces[k])?;
        if r.length <= cutoff {
            out.push(r);
        }
    }
    Ok(out)
}

/// Records in the subtree reached by first flipping `slot` of `seed`.
///
/// The three branches of the root partition all non-root curves, so they can
/// be expanded independently.
pub fn expand_branch(seed: &TraceTriple, slot: usize, cutoff: f64) -> Result<Vec<GeodesicRecord>> {
    check_cutoff(cutoff)?;
    let mut out = Vec::new();
    let mut stack = vec![(vieta_flip(seed, slot)?, slot)];
    while let Some((tr, k)) = stack.pop() {
        let t = tr.traces[k];
        let rec = GeodesicRecord::new(tr.slopes[k], t)?;
        let (i, j) = others(k);
        let inside = rec.length <= cutoff;
        if inside {
            out.push(rec);
        } else if t > tr.traces[i] && t > tr.traces[j] {
            continue;
        }
        for s in [j, i] {
            stack.push((vieta_flip(&tr, s)?, s));
        }
    }
    Ok(out)
}

/// Deduplicates by slope and sorts by `(length, p, q)`.
pub fn finalize_records(mut records: Vec<GeodesicRecord>) -> Vec<GeodesicRecord> {
    let mut seen = BTreeSet::new();
    records.retain(|r| seen.insert(r.slope));
    records.sort_by(GeodesicRecord::cmp_key);
    records
}

/// Every simple closed geodesic of length `≤ cutoff`, sorted by `(length, p, q)`.
pub fn enumerate_geodesics(
    b: &BoundarySpec,
    cutoff: f64,
    override_seed: Option<TraceTriple>,
) -> Result<Vec<GeodesicRecord>> {
    check_cutoff(cutoff)?;
    let seed = prepare_seed(b, override_seed)?;
    let mut records = root_records(&seed, cutoff)?;
    for slot in 0..3 {
        records.extend(expand_branch(&seed, slot, cutoff)?);
    }
    Ok(finalize_records(records))
}
