//! Trigonometry of one pair of pants `𝒫(Δ₀, α, β)`.
//!
//! `δ_α` is the common perpendicular from `Δ₀` to `α`. Its foot on `Δ₀` sits at
//! angle (cone `Δ₀`) or distance (geodesic `Δ₀`) `x` from the ray `γ_α` that
//! spirals onto `α`; likewise `y` for `β`. Right-angled hexagon relations give
//!
//! ```text
//! cone Δ₀:      tan x  = 1/sinh|δ_α| = sin(θ/2)·sinh(|α|/2) / (c_β + cos(θ/2)·cosh(|α|/2))
//! geodesic Δ₀:  tanh x = 1/cosh|δ_α| = sinh(l/2)·sinh(|α|/2) / (c_β + cosh(l/2)·cosh(|α|/2))
//! ```
//!
//! where `c_β` is `cosh(|β|/2)`, `cos(φ/2)` for a cone point `β`, or 1 for a
//! cusp. A cone-point end has `x = 0` since its perpendicular is its own ray.
//! The main gap is what is left of `θ/2` (or `l/2`) after the two feet.

use crate::error::{Error, Result};
use crate::gapcat::{cos_half, normalize, BoundaryKind, BoundarySpec, EndDescriptor, EndKind};
use crate::kernel::{g_func, s_func};
use crate::ComplexValue;

/// A pair of pants bounded by `Δ₀` and two generalized simple closed geodesics.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PantsSpec {
    /// The distinguished component; a cone point (angle `≤ π`) or a geodesic.
    pub delta0: BoundarySpec,
    /// First end `α`.
    pub end_a: EndDescriptor,
    /// Second end `β`.
    pub end_b: EndDescriptor,
}

/// Perpendicular feet and widths on `Δ₀`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FootLayout {
    /// `|δ_α|`; `+∞` when `α` is a cusp.
    pub perp_a: f64,
    /// `|δ_β|`; `+∞` when `β` is a cusp.
    pub perp_b: f64,
    /// `x`, radians for a cone `Δ₀`, length for a geodesic `Δ₀`.
    pub width_a: f64,
    /// `y`.
    pub width_b: f64,
    /// Width of the combined gap; equals `gapcat::gap` for the same pants.
    pub main_gap: f64,
    /// `θ₀` or `l₀`.
    pub full_measure: f64,
}

impl PantsSpec {
    /// Validates the combination: non-cusp `Δ₀`, cone angle `≤ π`, and at most
    /// one end a geometric boundary component (two cusps excepted).
    pub fn new(delta0: BoundarySpec, end_a: EndDescriptor, end_b: EndDescriptor) -> Result<Self> {
        match delta0.kind() {
            BoundaryKind::Cusp => {
                return Err(Error::InvalidCombination("pants widths need a non-cusp Δ₀"))
            }
            BoundaryKind::ConePoint if delta0.magnitude() > core::f64::consts::PI => {
                return Err(Error::Range("pants formulas need a cone angle in (0, π]"))
            }
            _ => {}
        }
        normalize(&end_a, &end_b)?;
        Ok(Self {
            delta0,
            end_a,
            end_b,
        })
    }

    fn swapped(&self) -> Self {
        Self {
            delta0: self.delta0,
            end_a: self.end_b,
            end_b: self.end_a,
        }
    }
}

/// `c_β`: the partner term in the hexagon relations.
fn partner_term(end: &EndDescriptor) -> f64 {
    match end.kind() {
        EndKind::Cusp => 1.0,
        EndKind::ConePoint => cos_half(end.magnitude()),
        _ => libm::cosh(0.5 * end.magnitude()),
    }
}

/// `(sinh or sin, cosh or cos)` of half the measure of `Δ₀`.
fn delta0_halves(delta0: &BoundarySpec) -> (f64, f64) {
    let m = delta0.magnitude();
    match delta0.kind() {
        BoundaryKind::ConePoint => (libm::sin(0.5 * m), cos_half(m)),
        _ => (libm::sinh(0.5 * m), libm::cosh(0.5 * m)),
    }
}

/// Distance from `Δ₀` to `end`; `+∞` for a cusp.
fn perpendicular(delta0: &BoundarySpec, end: &EndDescriptor, partner: &EndDescriptor) -> f64 {
    let (s0, c0) = delta0_halves(delta0);
    let c = partner_term(partner);
    let cone_delta0 = delta0.kind() == BoundaryKind::ConePoint;
    let m = end.magnitude();
    match end.kind() {
        EndKind::Cusp => f64::INFINITY,
        EndKind::ConePoint => {
            let (se, ce) = (libm::sin(0.5 * m), cos_half(m));
            let v = (c + c0 * ce) / (s0 * se);
            if cone_delta0 {
                libm::acosh(v)
            } else {
                libm::asinh(v)
            }
        }
        _ => {
            let (se, ce) = (libm::sinh(0.5 * m), libm::cosh(0.5 * m));
            let v = (c + c0 * ce) / (s0 * se);
            if cone_delta0 {
                libm::asinh(v)
            } else {
                libm::acosh(v)
            }
        }
    }
}

/// Foot width of `end`; 0 for cone points and cusps.
fn width(delta0: &BoundarySpec, end: &EndDescriptor, partner: &EndDescriptor) -> f64 {
    if matches!(end.kind(), EndKind::Cusp | EndKind::ConePoint) {
        return 0.0;
    }
    let c = partner_term(partner);
    let half_end = 0.5 * end.magnitude();
    let half0 = 0.5 * delta0.magnitude();
    match delta0.kind() {
        BoundaryKind::ConePoint => {
            let (s0, c0) = delta0_halves(delta0);
            libm::atan2(s0 * libm::sinh(half_end), c + c0 * libm::cosh(half_end))
        }
        // atanh(u) with (1+u)/(1-u) = (c + cosh(l/2 + a/2)) / (c + cosh(l/2 - a/2))
        _ => {
            0.5 * libm::log((c + libm::cosh(half0 + half_end)) / (c + libm::cosh(half0 - half_end)))
        }
    }
}

/// `(|δ_α|, |δ_β|)` from the Fenchel/hexagon formulas.
pub fn perpendicular_lengths(p: &PantsSpec) -> Result<(f64, f64)> {
    if p.end_a.kind() == EndKind::Cusp || p.end_b.kind() == EndKind::Cusp {
        return Err(Error::Domain("perpendicular to a cusp is infinite"));
    }
    let da = perpendicular(&p.delta0, &p.end_a, &p.end_b);
    let db = perpendicular(&p.delta0, &p.end_b, &p.end_a);
    if !(da.is_finite() && db.is_finite()) {
        return Err(Error::Domain(
            "degenerate pants: perpendicular is not finite",
        ));
    }
    Ok((da, db))
}

/// Feet, widths and the main gap.
pub fn foot_widths(p: &PantsSpec) -> Result<FootLayout> {
    let (d0, a, b) = (&p.delta0, &p.end_a, &p.end_b);
    let width_a = width(d0, a, b);
    let width_b = width(d0, b, a);
    let half = 0.5 * d0.magnitude();
    // The combined gap starts at δ of a boundary end, at γ of an interior end.
    let main_gap = match (a.is_boundary_component(), b.is_boundary_component()) {
        (false, false) => half - (width_a + width_b),
        (true, false) => half - width_b,
        (false, true) => half - width_a,
        (true, true) => half,
    };
    let layout = FootLayout {
        perp_a: perpendicular(d0, a, b),
        perp_b: perpendicular(d0, b, a),
        width_a,
        width_b,
        main_gap,
        full_measure: d0.magnitude(),
    };
    if [layout.width_a, layout.width_b, layout.main_gap]
        .iter()
        .any(|v| !v.is_finite())
        || layout.perp_a.is_nan()
        || layout.perp_b.is_nan()
    {
        return Err(Error::Domain("degenerate pants"));
    }
    Ok(layout)
}

/// Full decomposition of a geodesic `Δ₀` of length `l₀` in the pants with
/// boundary lengths `(l₀, |α|, |β|)`: `(2G, 2S(l₀/2, |α|/2, |β|/2), 2S(l₀/2, |β|/2, |α|/2))`,
/// i.e. the two gaps together, the projection of `α`, and the projection of `β`.
/// The three sum to `l₀`.
pub fn partition_widths(p: &PantsSpec) -> Result<(f64, f64, f64)> {
    if p.delta0.kind() != BoundaryKind::Geodesic {
        return Err(Error::Domain("partition widths need a geodesic Δ₀"));
    }
    let geodesic = |e: &EndDescriptor| {
        matches!(
            e.kind(),
            EndKind::BoundaryGeodesic | EndKind::InteriorGeodesic
        )
    };
    if !(geodesic(&p.end_a) && geodesic(&p.end_b)) {
        return Err(Error::Domain("partition widths need two geodesic ends"));
    }
    let x = ComplexValue::real(0.5 * p.delta0.magnitude());
    let y = ComplexValue::real(0.5 * p.end_a.magnitude());
    let z = ComplexValue::real(0.5 * p.end_b.magnitude());
    let gaps = 2.0 * g_func(x, y, z)?.re;
    let proj_a = 2.0 * s_func(x, y, z)?.re;
    let proj_b = 2.0 * s_func(x, z, y)?.re;
    Ok((gaps, proj_a, proj_b))
}

/// [`foot_widths`] of the pants with its ends exchanged.
pub fn foot_widths_swapped(p: &PantsSpec) -> Result<FootLayout> {
    foot_widths(&p.swapped())
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn spec(d: BoundarySpec, a: EndDescriptor, b: EndDescriptor) -> PantsSpec {
        PantsSpec::new(d, a, b).unwrap()
    }
    fn interior(l: f64) -> EndDescriptor {
        EndDescriptor::interior(l).unwrap()
    }

    #[test]
    fn perpendicular_cone_pi() {
        let p = spec(
            BoundarySpec::cone(PI).unwrap(),
            interior(2.0),
            interior(2.0),
        );
        let (da, db) = perpendicular_lengths(&p).unwrap();
        let expected = libm::asinh(libm::cosh(1.0) / libm::sinh(1.0));
        assert!((da - expected).abs() < 1e-15);
        // mpmath: asinh(coth 1) = 1.08637385300999084746…
        assert!((da - 1.086_373_853_009_991).abs() < 1e-15);
        assert_eq!(da, db);
    }

    #[test]
    fn perpendicular_to_interior_end_opposite_a_cone_point() {
        let p = spec(
            BoundarySpec::geodesic(2.0).unwrap(),
            EndDescriptor::cone(PI).unwrap(),
            interior(2.0),
        );
        let (_, db) = perpendicular_lengths(&p).unwrap();
        let c1 = libm::cosh(1.0);
        let s1 = libm::sinh(1.0);
        assert!((libm::cosh(db) - c1 * c1 / (s1 * s1)).abs() < 1e-14);
        // mpmath: 1.14054700638619725400…
        assert!((db - 1.140_547_006_386_197_3).abs() < 1e-14);
    }

    #[test]
    fn two_angle_pi_cone_points_are_half_of_beta_apart() {
        let p = spec(
            BoundarySpec::cone(PI).unwrap(),
            EndDescriptor::cone(PI).unwrap(),
            interior(3.0),
        );
        let f = foot_widths(&p).unwrap();
        assert!((f.perp_a - 1.5).abs() < 1e-14);
        assert_eq!(f.width_a, 0.0);
        assert_eq!(f.main_gap, 0.0);
    }

    #[test]
    fn cone_end_has_zero_width() {
        let p = spec(
            BoundarySpec::cone(1.2).unwrap(),
            EndDescriptor::cone(0.7).unwrap(),
            interior(1.0),
        );
        assert_eq!(foot_widths(&p).unwrap().width_a, 0.0);
    }

    #[test]
    fn cusp_end_limits() {
        let p = spec(
            BoundarySpec::geodesic(1.0).unwrap(),
            EndDescriptor::cusp(),
            interior(1.0),
        );
        let f = foot_widths(&p).unwrap();
        assert_eq!(f.width_a, 0.0);
        assert_eq!(f.perp_a, f64::INFINITY);
        assert!(matches!(perpendicular_lengths(&p), Err(Error::Domain(_))));
    }

    #[test]
    fn main_gap_closed_form_cone_interior() {
        let theta = 2.3;
        let l = 1.4;
        let p = spec(BoundarySpec::cone(theta).unwrap(), interior(l), interior(l));
        let f = foot_widths(&p).unwrap();
        let expected =
            2.0 * libm::atan(libm::sin(theta / 2.0) / (libm::cos(theta / 2.0) + libm::exp(l)));
        assert!((f.main_gap - expected).abs() < 1e-15);
    }

    #[test]
    fn geodesic_widths_sum_to_half_length() {
        let p = spec(
            BoundarySpec::geodesic(2.5).unwrap(),
            interior(1.0),
            interior(3.0),
        );
        let f = foot_widths(&p).unwrap();
        assert!((f.main_gap + f.width_a + f.width_b - 1.25).abs() < 1e-15);
        assert_eq!(f.full_measure, 2.5);
    }

    #[test]
    fn partition_examples() {
        let p = spec(
            BoundarySpec::geodesic(2.0).unwrap(),
            interior(2.0),
            interior(2.0),
        );
        let (g, a, b) = partition_widths(&p).unwrap();
        assert!((g + a + b - 2.0).abs() < 1e-15);

        let p = spec(
            BoundarySpec::geodesic(2.0).unwrap(),
            interior(3.0),
            interior(4.0),
        );
        let (g, a, b) = partition_widths(&p).unwrap();
        // mpmath: G(1,1.5,2), S(1,1.5,2), S(1,2,1.5)
        assert!((g - 2.0 * 0.067_841_989_443_955_81).abs() < 1e-15);
        assert!((a - 2.0 * 0.352_410_858_376_699_2).abs() < 1e-15);
        assert!((b - 2.0 * 0.579_747_152_179_344_9).abs() < 1e-15);
        assert!((g + a + b - 2.0).abs() < 1e-15);
    }

    #[test]
    fn partition_rejects_non_geodesic_configurations() {
        let p = spec(
            BoundarySpec::cone(1.0).unwrap(),
            interior(2.0),
            interior(2.0),
        );
        assert!(partition_widths(&p).is_err());
        let p = spec(
            BoundarySpec::geodesic(1.0).unwrap(),
            EndDescriptor::cusp(),
            interior(2.0),
        );
        assert!(partition_widths(&p).is_err());
    }

    #[test]
    fn rejected_specs() {
        assert!(PantsSpec::new(BoundarySpec::cusp(), interior(1.0), interior(1.0)).is_err());
        assert!(PantsSpec::new(
            BoundarySpec::cone(4.0).unwrap(),
            interior(1.0),
            interior(1.0)
        )
        .is_err());
        assert!(PantsSpec::new(
            BoundarySpec::geodesic(1.0).unwrap(),
            EndDescriptor::boundary(1.0).unwrap(),
            EndDescriptor::cone(1.0).unwrap()
        )
        .is_err());
    }
}
