//! Gap widths attributed to one embedded pair of pants `(Δ₀, α, β)`.
//!
//! `Δ₀` is the distinguished geometric boundary component (cusp, cone point or
//! boundary geodesic); `α` and `β` are generalized simple closed geodesics. The
//! width is an angle at a cone point, a length along a boundary geodesic, and a
//! normalized horocyclic measure ([`gap_prime`]) at a cusp.
//!
//! [`gap_via_gs`] recomputes every width from the complex G/S kernel, with cone
//! points carrying the purely imaginary complex length `θi`.

use core::f64::consts::{PI, TAU};

use crate::complex::ComplexValue;
use crate::error::{Error, Result};
use crate::kernel::{g_func, s_func};

/// Kind of the distinguished boundary component `Δ₀`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryKind {
    /// A cusp (complex length 0).
    Cusp,
    /// A cone point of angle `θ₀` (complex length `θ₀·i`).
    ConePoint,
    /// A boundary geodesic of length `l₀` (complex length `l₀`).
    Geodesic,
}

/// The distinguished boundary component `Δ₀`.
///
/// Cone angles up to `2π` (exclusive) are accepted because the one-cone torus
/// identity holds on that whole range; the pair-of-pants formulas in this
/// module additionally require `θ₀ ≤ π`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundarySpec {
    kind: BoundaryKind,
    magnitude: f64,
}

impl BoundarySpec {
    /// A cusp.
    pub const fn cusp() -> Self {
        Self {
            kind: BoundaryKind::Cusp,
            magnitude: 0.0,
        }
    }

    /// A cone point of angle `theta ∈ (0, 2π)` radians.
    pub fn cone(theta: f64) -> Result<Self> {
        if !(theta > 0.0 && theta < TAU) {
            return Err(Error::Range("cone angle must lie in (0, 2π)"));
        }
        Ok(Self {
            kind: BoundaryKind::ConePoint,
            magnitude: theta,
        })
    }

    /// A boundary geodesic of length `l > 0`.
    pub fn geodesic(l: f64) -> Result<Self> {
        if !(l > 0.0 && l.is_finite()) {
            return Err(Error::Range("boundary length must be positive and finite"));
        }
        Ok(Self {
            kind: BoundaryKind::Geodesic,
            magnitude: l,
        })
    }

    /// Kind of the component.
    pub fn kind(&self) -> BoundaryKind {
        self.kind
    }

    /// `θ₀`, `l₀`, or 0 for a cusp.
    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    /// `0`, `θ₀·i` or `l₀`.
    pub fn complex_length(&self) -> ComplexValue {
        match self.kind {
            BoundaryKind::Cusp => ComplexValue::ZERO,
            BoundaryKind::ConePoint => ComplexValue::imag(self.magnitude),
            BoundaryKind::Geodesic => ComplexValue::real(self.magnitude),
        }
    }

    /// Rejects cusps and cone angles above `π` (pair-of-pants formulas).
    fn pants_half_measure(&self) -> Result<f64> {
        match self.kind {
            BoundaryKind::Cusp => Err(Error::InvalidCombination(
                "cusp Δ₀ has a normalized gap; use gap_prime",
            )),
            BoundaryKind::ConePoint if self.magnitude > PI => Err(Error::Range(
                "pair-of-pants gap formulas need a cone angle in (0, π]",
            )),
            _ => Ok(0.5 * self.magnitude),
        }
    }
}

/// Kind of a non-distinguished end of a pair of pants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EndKind {
    /// A cusp.
    Cusp,
    /// A cone point of angle `φ ∈ (0, π]`.
    ConePoint,
    /// A boundary geodesic of the surface.
    BoundaryGeodesic,
    /// An interior generalized simple closed geodesic.
    InteriorGeodesic,
}

/// One end `α` or `β` of a pair of pants.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EndDescriptor {
    kind: EndKind,
    magnitude: f64,
}

impl EndDescriptor {
    /// A cusp end.
    pub const fn cusp() -> Self {
        Self {
            kind: EndKind::Cusp,
            magnitude: 0.0,
        }
    }

    /// A cone point of angle `phi ∈ (0, π]`.
    pub fn cone(phi: f64) -> Result<Self> {
        if !(phi > 0.0 && phi <= PI) {
            return Err(Error::Range("end cone angle must lie in (0, π]"));
        }
        Ok(Self {
            kind: EndKind::ConePoint,
            magnitude: phi,
        })
    }

    /// A boundary geodesic of length `l > 0`.
    pub fn boundary(l: f64) -> Result<Self> {
        Ok(Self {
            kind: EndKind::BoundaryGeodesic,
            magnitude: positive_length(l)?,
        })
    }

    /// An interior simple closed geodesic of length `l > 0`.
    pub fn interior(l: f64) -> Result<Self> {
        Ok(Self {
            kind: EndKind::InteriorGeodesic,
            magnitude: positive_length(l)?,
        })
    }

    /// The double of a geodesic arc of length `arc` joining two angle-π cone
    /// points; its length is `2·arc`.
    pub fn degenerate(arc: f64) -> Result<Self> {
        Self::interior(2.0 * positive_length(arc)?)
    }

    /// Kind of the end.
    pub fn kind(&self) -> EndKind {
        self.kind
    }

    /// Cone angle, length, or 0 for a cusp.
    pub fn magnitude(&self) -> f64 {
        self.magnitude
    }

    /// `0`, `φ·i` or the length.
    pub fn complex_length(&self) -> ComplexValue {
        match self.kind {
            EndKind::Cusp => ComplexValue::ZERO,
            EndKind::ConePoint => ComplexValue::imag(self.magnitude),
            _ => ComplexValue::real(self.magnitude),
        }
    }

    /// True for cusps, cone points and boundary geodesics.
    pub fn is_boundary_component(&self) -> bool {
        self.kind != EndKind::InteriorGeodesic
    }
}

fn positive_length(l: f64) -> Result<f64> {
    if l > 0.0 && l.is_finite() {
        Ok(l)
    } else {
        Err(Error::Range("geodesic length must be positive and finite"))
    }
}

/// Unordered end pair normalized so that a boundary component comes first.
#[derive(Clone, Copy, Debug)]
pub(crate) enum EndPair {
    /// Two interior geodesics with lengths `|α|`, `|β|`.
    Interior(f64, f64),
    /// A geometric boundary component and an interior geodesic of length `|β|`.
    Boundary(EndDescriptor, f64),
    /// Two cusps, evaluated as a boundary cusp with `|β| = 0`.
    TwoCusps,
}

pub(crate) fn normalize(a: &EndDescriptor, b: &EndDescriptor) -> Result<EndPair> {
    match (a.is_boundary_component(), b.is_boundary_component()) {
        (false, false) => Ok(EndPair::Interior(a.magnitude, b.magnitude)),
        (true, false) => Ok(EndPair::Boundary(*a, b.magnitude)),
        (false, true) => Ok(EndPair::Boundary(*b, a.magnitude)),
        (true, true) if a.kind == EndKind::Cusp && b.kind == EndKind::Cusp => Ok(EndPair::TwoCusps),
        (true, true) => Err(Error::InvalidCombination(
            "both ends are geometric boundary components",
        )),
    }
}

/// `cos(φ/2)` computed as `sin((π-φ)/2)`, exactly 0 at `φ = π`.
pub(crate) fn cos_half(angle: f64) -> f64 {
    libm::sin(0.5 * (PI - angle))
}

/// Gap width `Gap(Δ₀; α, β)` for a cone point or boundary geodesic `Δ₀`.
///
/// Radians when `Δ₀` is a cone point (angle `≤ π`), hyperbolic length when it
/// is a boundary geodesic. Argument order does not matter.
pub fn gap(delta0: &BoundarySpec, a: &EndDescriptor, b: &EndDescriptor) -> Result<f64> {
    let half = delta0.pants_half_measure()?;
    let pair = normalize(a, b)?;
    let value = match delta0.kind {
        BoundaryKind::ConePoint => {
            let (s0, c0) = (libm::sin(half), cos_half(delta0.magnitude));
            match pair {
                EndPair::Interior(la, lb) => {
                    2.0 * libm::atan(s0 / (c0 + libm::exp(0.5 * (la + lb))))
                }
                EndPair::TwoCusps => 2.0 * libm::atan(s0 / (c0 + 1.0)),
                EndPair::Boundary(end, lb) => {
                    let (sb, cb) = (libm::sinh(0.5 * lb), libm::cosh(0.5 * lb));
                    match end.kind {
                        EndKind::Cusp => 2.0 * libm::atan(s0 / (c0 + libm::exp(0.5 * lb))),
                        EndKind::BoundaryGeodesic => {
                            let ca = libm::cosh(0.5 * end.magnitude);
                            half - libm::atan2(s0 * sb, ca + c0 * cb)
                        }
                        EndKind::ConePoint => {
                            let ca = cos_half(end.magnitude);
                            // θ₀ = φ = π: atan2(_, 0) = π/2 exactly, so no gap.
                            half - libm::atan2(s0 * sb, ca + c0 * cb)
                        }
                        EndKind::InteriorGeodesic => unreachable!("normalized"),
                    }
                }
            }
        }
        BoundaryKind::Geodesic => {
            let (s0, c0) = (libm::sinh(half), libm::cosh(half));
            match pair {
                EndPair::Interior(la, lb) => {
                    2.0 * libm::atanh(s0 / (c0 + libm::exp(0.5 * (la + lb))))
                }
                EndPair::TwoCusps => 2.0 * libm::atanh(s0 / (c0 + 1.0)),
                EndPair::Boundary(end, lb) => {
                    let (sb, cb) = (libm::sinh(0.5 * lb), libm::cosh(0.5 * lb));
                    match end.kind {
                        EndKind::Cusp => 2.0 * libm::atanh(s0 / (c0 + libm::exp(0.5 * lb))),
                        EndKind::BoundaryGeodesic => {
                            let ca = libm::cosh(0.5 * end.magnitude);
                            half - libm::atanh(s0 * sb / (ca + c0 * cb))
                        }
                        EndKind::ConePoint => {
                            let ca = cos_half(end.magnitude);
                            half - libm::atanh(s0 * sb / (ca + c0 * cb))
                        }
                        EndKind::InteriorGeodesic => unreachable!("normalized"),
                    }
                }
            }
        }
        BoundaryKind::Cusp => unreachable!("rejected above"),
    };
    crate::kernel::finite_real(value, "gap")
}

/// Normalized gap `Gap'(Δ₀; α, β)` for a cusp `Δ₀`, in `(0, 1/2]`.
pub fn gap_prime(a: &EndDescriptor, b: &EndDescriptor) -> Result<f64> {
    let value = match normalize(a, b)? {
        EndPair::Interior(la, lb) => 1.0 / (1.0 + libm::exp(0.5 * (la + lb))),
        EndPair::TwoCusps => 0.5,
        EndPair::Boundary(end, lb) => {
            let (sb, cb) = (libm::sinh(0.5 * lb), libm::cosh(0.5 * lb));
            match end.kind {
                EndKind::Cusp => 1.0 / (1.0 + libm::exp(0.5 * lb)),
                EndKind::BoundaryGeodesic => {
                    0.5 - 0.5 * sb / (libm::cosh(0.5 * end.magnitude) + cb)
                }
                EndKind::ConePoint => 0.5 - 0.5 * sb / (cos_half(end.magnitude) + cb),
                EndKind::InteriorGeodesic => unreachable!("normalized"),
            }
        }
    };
    crate::kernel::finite_real(value, "gap_prime")
}

/// The same width from the G/S kernel: `G(L₀/2, |α|/2, |β|/2)` for two
/// interior ends, `G + S` with the boundary end in the middle slot otherwise.
///
/// Real and equal to [`gap`] for a geodesic `Δ₀`; equal to `gap·i` for a cone
/// point `Δ₀`.
pub fn gap_via_gs(
    delta0: &BoundarySpec,
    a: &EndDescriptor,
    b: &EndDescriptor,
) -> Result<ComplexValue> {
    delta0.pants_half_measure()?;
    let x = delta0.complex_length().scale(0.5);
    match normalize(a, b)? {
        EndPair::Interior(la, lb) => g_func(
            x,
            ComplexValue::real(0.5 * la),
            ComplexValue::real(0.5 * lb),
        ),
        EndPair::TwoCusps => {
            let z = ComplexValue::ZERO;
            Ok(g_func(x, z, z)? + s_func(x, z, z)?)
        }
        EndPair::Boundary(end, lb) => {
            let y = end.complex_length().scale(0.5);
            let z = ComplexValue::real(0.5 * lb);
            Ok(g_func(x, y, z)? + s_func(x, y, z)?)
        }
    }
}

/// `θ₀/2` or `l₀/2`: the bound every gap stays below.
pub fn half_measure(delta0: &BoundarySpec) -> f64 {
    0.5 * delta0.magnitude
}

/// Width of the full circle of directions that a sum of gaps must fill: `θ₀/2`,
/// `l₀/2`, or `1/2` for a cusp.
pub fn identity_target(delta0: &BoundarySpec) -> f64 {
    match delta0.kind {
        BoundaryKind::Cusp => 0.5,
        _ => 0.5 * delta0.magnitude,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(t: f64) -> BoundarySpec {
        BoundarySpec::cone(t).unwrap()
    }
    fn hole(l: f64) -> BoundarySpec {
        BoundarySpec::geodesic(l).unwrap()
    }
    fn interior(l: f64) -> EndDescriptor {
        EndDescriptor::interior(l).unwrap()
    }

    #[test]
    fn no_gap_between_two_angle_pi_cone_points() {
        let g = gap(&cone(PI), &EndDescriptor::cone(PI).unwrap(), &interior(2.0)).unwrap();
        assert_eq!(g, 0.0);
        let g = gap_via_gs(&cone(PI), &EndDescriptor::cone(PI).unwrap(), &interior(2.0)).unwrap();
        assert!(g.abs() < 1e-15);
    }

    #[test]
    fn subcase_2_1_matches_torus_summand() {
        let g = gap(&hole(2.0), &interior(3.0), &interior(3.0)).unwrap();
        let expected = 2.0 * libm::atanh(libm::sinh(1.0) / (libm::cosh(1.0) + libm::exp(3.0)));
        assert_eq!(g, expected);
        // mpmath: 0.10877808312516275608…
        assert!((g - 0.108_778_083_125_162_76).abs() < 1e-15);
    }

    #[test]
    fn cusp_end_is_the_common_value() {
        let g = gap(&cone(1.0), &EndDescriptor::cusp(), &interior(2.0)).unwrap();
        // mpmath: 2·atan(sin ½ / (cos ½ + e)) = 0.26509046999660806347…
        assert!((g - 0.265_090_469_996_608_06).abs() < 1e-15);
        let second_form = 0.5
            - libm::atan(
                libm::sin(0.5) * libm::sinh(1.0) / (1.0 + libm::cos(0.5) * libm::cosh(1.0)),
            );
        assert!((g - second_form).abs() < 1e-15);
    }

    #[test]
    fn normalized_gap_examples() {
        let l = 1.7;
        let g = gap_prime(&interior(l), &interior(l)).unwrap();
        assert_eq!(g, 1.0 / (1.0 + libm::exp(l)));
        let g = gap_prime(&EndDescriptor::cusp(), &interior(2.0)).unwrap();
        assert!((g - 1.0 / (1.0 + core::f64::consts::E)).abs() < 1e-16);
        let g = gap_prime(&EndDescriptor::cone(PI).unwrap(), &interior(2.0)).unwrap();
        assert!((g - (0.5 - 0.5 * libm::tanh(1.0))).abs() < 1e-16);
        assert_eq!(
            gap_prime(&EndDescriptor::cusp(), &EndDescriptor::cusp()).unwrap(),
            0.5
        );
    }

    #[test]
    fn argument_order_is_irrelevant() {
        let d = hole(1.3);
        let a = EndDescriptor::boundary(0.8).unwrap();
        let b = interior(2.5);
        assert_eq!(gap(&d, &a, &b).unwrap(), gap(&d, &b, &a).unwrap());
        assert_eq!(gap_prime(&a, &b).unwrap(), gap_prime(&b, &a).unwrap());
        assert_eq!(
            gap_via_gs(&d, &a, &b).unwrap(),
            gap_via_gs(&d, &b, &a).unwrap()
        );
    }

    #[test]
    fn invalid_combinations() {
        let a = EndDescriptor::boundary(1.0).unwrap();
        let b = EndDescriptor::cone(1.0).unwrap();
        assert!(matches!(
            gap(&hole(1.0), &a, &b),
            Err(Error::InvalidCombination(_))
        ));
        assert!(matches!(
            gap_prime(&a, &EndDescriptor::cusp()),
            Err(Error::InvalidCombination(_))
        ));
        assert!(matches!(
            gap(&BoundarySpec::cusp(), &interior(1.0), &interior(1.0)),
            Err(Error::InvalidCombination(_))
        ));
        assert!(matches!(
            gap(&cone(4.0), &interior(1.0), &interior(1.0)),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn two_cusps_fill_the_whole_measure() {
        let c = EndDescriptor::cusp();
        assert!((gap(&cone(2.0), &c, &c).unwrap() - 1.0).abs() < 1e-15);
        assert!((gap(&hole(3.0), &c, &c).unwrap() - 1.5).abs() < 1e-15);
        let v = gap_via_gs(&cone(2.0), &c, &c).unwrap();
        assert!((v - ComplexValue::imag(1.0)).abs() < 1e-15);
    }

    #[test]
    fn descriptor_ranges() {
        assert!(BoundarySpec::cone(0.0).is_err());
        assert!(BoundarySpec::cone(TAU).is_err());
        assert!(BoundarySpec::cone(5.0).is_ok());
        assert!(BoundarySpec::geodesic(-1.0).is_err());
        assert!(EndDescriptor::cone(3.2).is_err());
        assert!(EndDescriptor::interior(0.0).is_err());
        assert_eq!(EndDescriptor::degenerate(1.5).unwrap().magnitude(), 3.0);
        assert_eq!(cone(1.0).complex_length(), ComplexValue::imag(1.0));
        assert_eq!(identity_target(&BoundarySpec::cusp()), 0.5);
    }
}
