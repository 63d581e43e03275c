//! Minimal complex arithmetic over `libm`.
//!
//! Complex lengths are `0` (cusp), `θi` (cone point) or `l` (geodesic), so the
//! kernel only needs the field operations plus `exp`, `sinh` and `cosh`.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

/// A complex number `re + im·i`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ComplexValue {
    /// Real part.
    pub re: f64,
    /// Imaginary part.
    pub im: f64,
}

impl ComplexValue {
    /// Zero.
    pub const ZERO: Self = Self { re: 0.0, im: 0.0 };
    /// One.
    pub const ONE: Self = Self { re: 1.0, im: 0.0 };
    /// The imaginary unit.
    pub const I: Self = Self { re: 0.0, im: 1.0 };

    /// Builds `re + im·i`.
    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    /// A real number.
    pub const fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    /// A purely imaginary number `im·i`.
    pub const fn imag(im: f64) -> Self {
        Self { re: 0.0, im }
    }

    /// Both components finite.
    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Modulus, computed without intermediate overflow.
    pub fn abs(self) -> f64 {
        libm::hypot(self.re, self.im)
    }

    /// Argument in `(-π, π]`; a signed zero imaginary part is treated as `+0`.
    pub fn arg(self) -> f64 {
        let im = if self.im == 0.0 { 0.0 } else { self.im };
        libm::atan2(im, self.re)
    }

    /// Multiplication by a real scalar.
    pub fn scale(self, k: f64) -> Self {
        Self::new(self.re * k, self.im * k)
    }

    /// Complex conjugate.
    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    /// `e^z`.
    pub fn exp(self) -> Self {
        let m = libm::exp(self.re);
        let (s, c) = libm::sincos(self.im);
        Self::new(m * c, m * s)
    }

    /// `sinh z = sinh a·cos b + i·cosh a·sin b`.
    pub fn sinh(self) -> Self {
        let (s, c) = libm::sincos(self.im);
        Self::new(libm::sinh(self.re) * c, libm::cosh(self.re) * s)
    }

    /// `cosh z = cosh a·cos b + i·sinh a·sin b`.
    pub fn cosh(self) -> Self {
        let (s, c) = libm::sincos(self.im);
        Self::new(libm::cosh(self.re) * c, libm::sinh(self.re) * s)
    }

    /// `tanh z`, used by the round-trip checks.
    pub fn tanh(self) -> Self {
        self.sinh() / self.cosh()
    }
}

impl From<f64> for ComplexValue {
    fn from(re: f64) -> Self {
        Self::real(re)
    }
}

impl Add for ComplexValue {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for ComplexValue {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for ComplexValue {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Mul for ComplexValue {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Div for ComplexValue {
    type Output = Self;
    // Smith's algorithm.
    fn div(self, rhs: Self) -> Self {
        if libm::fabs(rhs.re) >= libm::fabs(rhs.im) {
            let r = rhs.im / rhs.re;
            let d = rhs.re + rhs.im * r;
            Self::new((self.re + self.im * r) / d, (self.im - self.re * r) / d)
        } else {
            let r = rhs.re / rhs.im;
            let d = rhs.re * r + rhs.im;
            Self::new((self.re * r + self.im) / d, (self.im * r - self.re) / d)
        }
    }
}

impl fmt::Display for ComplexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_sign_negative() {
            write!(f, "{:?}-{:?}i", self.re, -self.im)
        } else {
            write!(f, "{:?}+{:?}i", self.re, self.im)
        }
    }
}
