//! Principal complex branches and the G/S functions.
//!
//! ```text
//! G(x,y,z) = 2·atanh( sinh x / (cosh x + e^(y+z)) )
//!          = log[ (e^x + e^(y+z)) / (e^-x + e^(y+z)) ]
//! S(x,y,z) = atanh( sinh x·sinh y / (cosh z + cosh x·cosh y) )
//!          = ½·log[ (cosh z + cosh(x+y)) / (cosh z + cosh(x-y)) ]
//! ```
//!
//! `atanh` has imaginary part in `(-π/2, π/2]` and `log` in `(-π, π]`. With
//! those conventions the two closed forms are the same function: the atanh
//! form is evaluated as `½·log((1+u)/(1-u))`, and `(1+u)/(1-u)` is exactly the
//! ratio of the log form.
//!
//! Real inputs with `x, y, z ≥ 0` give the pair-of-pants decomposition
//! `G(x,y,z) + S(x,y,z) + S(x,z,y) = x`.

use crate::complex::ComplexValue;
use crate::error::{Error, Result};

/// Input-space distance below which a pole or branch point of either closed
/// form is considered hit.
pub const SINGULAR_GUARD: f64 = 1e-3;

/// `|u|` above which G and S are evaluated through their log form.
pub const LOG_FORM_SWITCH: f64 = 1.0 - 1e-3;

/// Principal `atanh`, imaginary part in `(-π/2, π/2]`.
///
/// Both branch cuts `(-∞,-1)` and `(1,∞)` map to imaginary part `+π/2`.
pub fn principal_atanh(w: ComplexValue) -> Result<ComplexValue> {
    if w.im == 0.0 && (w.re == 1.0 || w.re == -1.0) {
        return Err(Error::PoleInput);
    }
    let (x, y) = (w.re, w.im);
    let one_minus = 1.0 - x;
    let one_plus = 1.0 + x;
    let den = one_minus * one_minus + y * y;
    let re = if libm::fabs(x) <= 0.5 {
        0.25 * libm::log1p(4.0 * x / den)
    } else {
        // 1 ± x is exact here; log1p would cancel near x = -1.
        0.25 * libm::log((one_plus * one_plus + y * y) / den)
    };
    // (1+w)(1-conj w) = (1 - x² - y²) + 2y·i; halve its argument.
    let y2 = if y == 0.0 { 0.0 } else { 2.0 * y };
    let im = 0.5 * libm::atan2(y2, one_minus * one_plus - y * y);
    finite(ComplexValue::new(re, im), "principal_atanh")
}

/// Principal `log`, imaginary part in `(-π, π]`.
pub fn principal_log(w: ComplexValue) -> Result<ComplexValue> {
    if w.re == 0.0 && w.im == 0.0 {
        return Err(Error::PoleInput);
    }
    finite(
        ComplexValue::new(libm::log(w.abs()), w.arg()),
        "principal_log",
    )
}

/// `G(x, y, z)`, evaluated by the atanh form unless `|u| > 1 - 1e-3`.
pub fn g_func(x: ComplexValue, y: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    let parts = GParts::new(x, y, z);
    parts.guard()?;
    let u = parts.atanh_arg();
    if u.abs() <= LOG_FORM_SWITCH {
        finite(principal_atanh(u).map_err(pole)?.scale(2.0), "G")
    } else {
        finite(principal_log(parts.num / parts.den).map_err(pole)?, "G")
    }
}

/// `S(x, y, z)`, evaluated by the atanh form unless `|u| > 1 - 1e-3`.
pub fn s_func(x: ComplexValue, y: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    let parts = SParts::new(x, y, z);
    parts.guard()?;
    let u = parts.atanh_arg();
    if u.abs() <= LOG_FORM_SWITCH {
        finite(principal_atanh(u).map_err(pole)?, "S")
    } else {
        finite(
            principal_log(parts.num / parts.den)
                .map_err(pole)?
                .scale(0.5),
            "S",
        )
    }
}

/// `G` through `2·atanh(sinh x / (cosh x + e^(y+z)))` only.
pub fn g_atanh_form(x: ComplexValue, y: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    let parts = GParts::new(x, y, z);
    parts.guard()?;
    finite(
        principal_atanh(parts.atanh_arg()).map_err(pole)?.scale(2.0),
        "G",
    )
}

/// `G` through `log[(e^x + e^(y+z)) / (e^-x + e^(y+z))]` only.
pub fn g_log_form(x: ComplexValue, y: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    let parts = GParts::new(x, y, z);
    parts.guard()?;
    finite(principal_log(parts.num / parts.den).map_err(pole)?, "G")
}

/// `S` through `atanh(sinh x·sinh y / (cosh z + cosh x·cosh y))` only.
pub fn s_atanh_form(x: ComplexValue, y: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    let parts = SParts::new(x, y, z);
    parts.guard()?;
    finite(principal_atanh(parts.atanh_arg()).map_err(pole)?, "S")
}

/// `S` through `½·log[(cosh z + cosh(x+y)) / (cosh z + cosh(x-y))]` only.
pub fn s_log_form(x: ComplexValue, y: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    let parts = SParts::new(x, y, z);
    parts.guard()?;
    finite(
        principal_log(parts.num / parts.den)
            .map_err(pole)?
            .scale(0.5),
        "S",
    )
}

/// Hyperbolic length `2·arccosh(t/2)` of a geodesic whose holonomy has trace `t`.
pub fn length_from_trace(t: f64) -> Result<f64> {
    // NaN fails this comparison too.
    if !(t >= 2.0) {
        return Err(Error::Domain("trace must be >= 2"));
    }
    finite_real(2.0 * libm::acosh(0.5 * t), "length_from_trace")
}

/// Mirzakhani's `𝒟(a, b, c) = 2·G(a/2, b/2, c/2)`.
pub fn mirzakhani_d(a: ComplexValue, b: ComplexValue, c: ComplexValue) -> Result<ComplexValue> {
    Ok(g_func(a.scale(0.5), b.scale(0.5), c.scale(0.5))?.scale(2.0))
}

/// Mirzakhani's `ℛ(a, b, c) = a/2 - 2·S(a/2, c/2, b/2)`.
pub fn mirzakhani_r(a: ComplexValue, b: ComplexValue, c: ComplexValue) -> Result<ComplexValue> {
    let s = s_func(a.scale(0.5), c.scale(0.5), b.scale(0.5))?;
    Ok(a.scale(0.5) - s.scale(2.0))
}

/// Intermediate quantities of G: log-form numerator/denominator and atanh denominator.
struct GParts {
    num: ComplexValue,
    den: ComplexValue,
    sinh_x: ComplexValue,
    cosh_x: ComplexValue,
    exp_x: ComplexValue,
    exp_mx: ComplexValue,
    exp_yz: ComplexValue,
}

impl GParts {
    fn new(x: ComplexValue, y: ComplexValue, z: ComplexValue) -> Self {
        let exp_x = x.exp();
        let exp_mx = (-x).exp();
        let exp_yz = (y + z).exp();
        Self {
            num: exp_x + exp_yz,
            den: exp_mx + exp_yz,
            sinh_x: x.sinh(),
            cosh_x: x.cosh(),
            exp_x,
            exp_mx,
            exp_yz,
        }
    }

    fn atanh_arg(&self) -> ComplexValue {
        self.sinh_x / (self.cosh_x + self.exp_yz)
    }

    fn guard(&self) -> Result<()> {
        let e = self.exp_yz.abs();
        // ∂/∂y and ∂/∂z of every factor contribute e^(y+z) each.
        near_zero(
            self.num,
            &[self.exp_x.abs(), e, e],
            "log-form numerator of G",
        )?;
        near_zero(
            self.den,
            &[self.exp_mx.abs(), e, e],
            "log-form denominator of G",
        )?;
        near_zero(
            self.cosh_x + self.exp_yz,
            &[self.sinh_x.abs(), e, e],
            "atanh denominator of G",
        )?;
        near_cut(self.num, self.den, "log-form ratio of G on the branch cut")
    }
}

/// Intermediate quantities of S.
struct SParts {
    num: ComplexValue,
    den: ComplexValue,
    atanh_num: ComplexValue,
    atanh_den: ComplexValue,
    grad_num: [f64; 3],
    grad_den: [f64; 3],
    grad_atanh_den: [f64; 3],
}

impl SParts {
    fn new(x: ComplexValue, y: ComplexValue, z: ComplexValue) -> Self {
        let (sx, cx) = (x.sinh(), x.cosh());
        let (sy, cy) = (y.sinh(), y.cosh());
        let (sz, cz) = (z.sinh(), z.cosh());
        let s_plus = (x + y).sinh().abs();
        let s_minus = (x - y).sinh().abs();
        Self {
            num: cz + (x + y).cosh(),
            den: cz + (x - y).cosh(),
            atanh_num: sx * sy,
            atanh_den: cz + cx * cy,
            grad_num: [s_plus, s_plus, sz.abs()],
            grad_den: [s_minus, s_minus, sz.abs()],
            grad_atanh_den: [(sx * cy).abs(), (cx * sy).abs(), sz.abs()],
        }
    }

    fn atanh_arg(&self) -> ComplexValue {
        self.atanh_num / self.atanh_den
    }

    fn guard(&self) -> Result<()> {
        near_zero(self.num, &self.grad_num, "log-form numerator of S")?;
        near_zero(self.den, &self.grad_den, "log-form denominator of S")?;
        near_zero(
            self.atanh_den,
            &self.grad_atanh_den,
            "atanh denominator of S",
        )?;
        near_cut(self.num, self.den, "log-form ratio of S on the branch cut")
    }
}

/// First-order distance `|f| / |∇f|` from the inputs to the zero set of `f`.
fn near_zero(f: ComplexValue, grad: &[f64; 3], what: &'static str) -> Result<()> {
    let g = libm::sqrt(grad.iter().map(|d| d * d).sum::<f64>());
    let m = f.abs();
    if m == 0.0 || (g > 0.0 && m < SINGULAR_GUARD * g) {
        return Err(Error::SingularConfiguration(what));
    }
    Ok(())
}

/// Rejects log-form ratios within `SINGULAR_GUARD` radians of the negative real axis.
fn near_cut(num: ComplexValue, den: ComplexValue, what: &'static str) -> Result<()> {
    // arg(num/den) = arg(num·conj(den)); no division needed.
    let r = num * den.conj();
    if core::f64::consts::PI - libm::fabs(r.arg()) < SINGULAR_GUARD {
        return Err(Error::SingularConfiguration(what));
    }
    Ok(())
}

fn pole(_: Error) -> Error {
    Error::SingularConfiguration("atanh argument at ±1")
}

pub(crate) fn finite(v: ComplexValue, what: &'static str) -> Result<ComplexValue> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(what))
    }
}

pub(crate) fn finite_real(v: f64, what: &'static str) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(what))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_PI_2, PI};

    const R: fn(f64) -> ComplexValue = ComplexValue::real;
    const I: fn(f64) -> ComplexValue = ComplexValue::imag;

    fn assert_close(a: ComplexValue, b: ComplexValue, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn atanh_examples() {
        assert_eq!(principal_atanh(R(0.0)).unwrap(), ComplexValue::ZERO);
        // ½·ln 3 from a 40-digit evaluation
        let half_ln3 = 0.549_306_144_334_054_8;
        assert_close(principal_atanh(R(0.5)).unwrap(), R(half_ln3), 1e-15);
        assert_close(
            principal_atanh(R(2.0)).unwrap(),
            ComplexValue::new(half_ln3, FRAC_PI_2),
            1e-15,
        );
        assert_close(
            principal_atanh(R(-2.0)).unwrap(),
            ComplexValue::new(-half_ln3, FRAC_PI_2),
            1e-15,
        );
    }

    #[test]
    fn atanh_cut_ignores_sign_of_zero() {
        let a = principal_atanh(ComplexValue::new(3.0, 0.0)).unwrap();
        let b = principal_atanh(ComplexValue::new(3.0, -0.0)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.im, FRAC_PI_2);
    }

    #[test]
    fn atanh_poles() {
        assert_eq!(principal_atanh(R(1.0)), Err(Error::PoleInput));
        assert_eq!(principal_atanh(R(-1.0)), Err(Error::PoleInput));
    }

    #[test]
    fn log_examples() {
        assert_eq!(principal_log(R(1.0)).unwrap(), ComplexValue::ZERO);
        assert_close(principal_log(R(-1.0)).unwrap(), I(PI), 0.0);
        assert_close(
            principal_log(ComplexValue::new(-1.0, -0.0)).unwrap(),
            I(PI),
            0.0,
        );
        assert_close(principal_log(I(1.0)).unwrap(), I(FRAC_PI_2), 0.0);
        assert_eq!(principal_log(ComplexValue::ZERO), Err(Error::PoleInput));
    }

    #[test]
    fn g_examples() {
        assert_close(
            g_func(R(0.0), R(1.0), R(1.0)).unwrap(),
            ComplexValue::ZERO,
            0.0,
        );
        // mpmath: G(1,1,1) = 0.26467433594448077529…
        let g111 = g_func(R(1.0), R(1.0), R(1.0)).unwrap();
        assert_close(g111, R(0.264_674_335_944_480_78), 1e-15);
        assert_close(g_log_form(R(1.0), R(1.0), R(1.0)).unwrap(), g111, 1e-15);

        let g = g_func(R(1.0), I(FRAC_PI_2), R(1.0)).unwrap();
        let s1 = libm::sinh(1.0);
        let c1 = libm::cosh(1.0);
        let expected_re = 1.0 - libm::atanh(s1 * s1 / (libm::cos(FRAC_PI_2) + c1 * c1));
        assert!((g.re - expected_re).abs() < 1e-14);
    }

    #[test]
    fn s_examples() {
        for (x, z) in [(0.3, 2.0), (4.0, 0.1), (1.0, 1.0)] {
            assert_eq!(s_func(R(x), R(0.0), R(z)).unwrap(), ComplexValue::ZERO);
        }
        // mpmath: S(1,1,1) = 0.36766283202775961235…
        let s111 = s_func(R(1.0), R(1.0), R(1.0)).unwrap();
        assert_close(s111, R(0.367_662_832_027_759_6), 1e-15);
        assert_close(s_log_form(R(1.0), R(1.0), R(1.0)).unwrap(), s111, 1e-15);

        let s = s_func(R(1.0), I(FRAC_PI_2), R(1.0)).unwrap();
        let expected = libm::atan(libm::sinh(1.0) / libm::cosh(1.0));
        assert_close(s, I(expected), 1e-15);
    }

    #[test]
    fn real_g_is_positive() {
        for x in [1e-6, 0.5, 3.0, 9.0] {
            let g = g_func(R(x), R(2.0), R(0.5)).unwrap();
            assert!(g.re > 0.0 && g.im == 0.0);
        }
    }

    #[test]
    fn log_form_takes_over_near_unit_argument() {
        // u = sinh 6·sinh 6 / (1 + cosh² 6) ≈ 1 - 1.2e-5
        let s = s_func(R(6.0), R(6.0), R(0.0)).unwrap();
        let reference = s_log_form(R(6.0), R(6.0), R(0.0)).unwrap();
        assert_eq!(s, reference);
        let g = g_func(R(6.0), R(6.0), R(0.0)).unwrap();
        let s_swapped = s_func(R(6.0), R(0.0), R(6.0)).unwrap();
        assert!((g.re + s.re + s_swapped.re - 6.0).abs() < 1e-13);
    }

    #[test]
    fn singular_configurations_error() {
        // cosh x + e^(y+z) = 0 at x = 0, y + z = iπ
        let err = g_func(R(0.0), I(PI), R(0.0)).unwrap_err();
        assert!(matches!(err, Error::SingularConfiguration(_)));
        // cosh z + cosh(x+y) = 0 at z = 0, x + y = iπ
        let err = s_func(I(FRAC_PI_2), I(FRAC_PI_2), R(0.0)).unwrap_err();
        assert!(matches!(err, Error::SingularConfiguration(_)));
        // just outside the guard band the value is finite and correct
        let s = s_func(I(FRAC_PI_2), I(FRAC_PI_2), R(0.05)).unwrap();
        let expected = libm::atanh(-1.0 / libm::cosh(0.05));
        assert!((s.re - expected).abs() < 1e-13 && s.im.abs() < 1e-15);
    }

    #[test]
    fn trace_to_length() {
        assert_eq!(length_from_trace(2.0).unwrap(), 0.0);
        // 2·ln((3+√5)/2) and 2·arccosh 3 from a 40-digit evaluation
        assert!((length_from_trace(3.0).unwrap() - 1.924_847_300_238_413_9).abs() < 1e-15);
        assert!((length_from_trace(6.0).unwrap() - 3.525_494_348_078_172).abs() < 1e-15);
        assert!(matches!(length_from_trace(1.999), Err(Error::Domain(_))));
        assert!(matches!(length_from_trace(f64::NAN), Err(Error::Domain(_))));
        assert!(length_from_trace(2.0 + 1e-12).unwrap() > 0.0);
    }

    #[test]
    fn mirzakhani_wrappers() {
        let z = ComplexValue::ZERO;
        assert_eq!(mirzakhani_d(z, R(1.3), R(0.2)).unwrap(), z);
        let two = R(2.0);
        let one = R(1.0);
        assert_eq!(
            mirzakhani_d(two, two, two).unwrap(),
            g_func(one, one, one).unwrap().scale(2.0)
        );
        assert_eq!(
            mirzakhani_r(two, two, two).unwrap(),
            one - s_func(one, one, one).unwrap().scale(2.0)
        );
        // S(x,y,z) = (x − ℛ(2x,2z,2y))/2 with distinct arguments
        let (x, y, z) = (R(0.7), R(1.9), R(0.4));
        let r = mirzakhani_r(x.scale(2.0), z.scale(2.0), y.scale(2.0)).unwrap();
        assert_close((x - r).scale(0.5), s_func(x, y, z).unwrap(), 1e-15);
    }
}
