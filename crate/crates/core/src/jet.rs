//! Second-order jets: a value together with its first and second derivative
//! with respect to one coordinate. Closed-form amplitudes return jets so the
//! residual checks can compare analytic derivatives with finite differences.

use num_complex::Complex64;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

impl Jet {
    pub const fn new(value: f64, d1: f64, d2: f64) -> Self {
        Self { value, d1, d2 }
    }

    pub const fn constant(value: f64) -> Self {
        Self::new(value, 0.0, 0.0)
    }

    /// The coordinate itself.
    pub const fn variable(x: f64) -> Self {
        Self::new(x, 1.0, 0.0)
    }

    /// Chain rule with an outer function given by its value and first two
    /// derivatives at `self.value`.
    pub fn compose(self, f: f64, df: f64, d2f: f64) -> Self {
        Self::new(f, df * self.d1, d2f * self.d1 * self.d1 + df * self.d2)
    }

    pub fn exp(self) -> Self {
        let e = self.value.exp();
        self.compose(e, e, e)
    }

    pub fn powf(self, p: f64) -> Self {
        let v = self.value;
        self.compose(v.powf(p), p * v.powf(p - 1.0), p * (p - 1.0) * v.powf(p - 2.0))
    }

    pub fn sqrt(self) -> Self {
        self.powf(0.5)
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.value * s, self.d1 * s, self.d2 * s)
    }

    /// `d/dq ln f`.
    pub fn log_derivative(self) -> f64 {
        self.d1 / self.value
    }

    /// `f''/f`.
    pub fn curvature_ratio(self) -> f64 {
        self.d2 / self.value
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet::new(self.value + o.value, self.d1 + o.d1, self.d2 + o.d2)
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, o: Jet) -> Jet {
        Jet::new(self.value - o.value, self.d1 - o.d1, self.d2 - o.d2)
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        Jet::new(
            self.value * o.value,
            self.d1 * o.value + self.value * o.d1,
            self.d2 * o.value + 2.0 * self.d1 * o.d1 + self.value * o.d2,
        )
    }
}

impl Div for Jet {
    type Output = Jet;
    fn div(self, o: Jet) -> Jet {
        let inv = o.compose(1.0 / o.value, -1.0 / (o.value * o.value), 2.0 / (o.value * o.value * o.value));
        self * inv
    }
}

/// Complex counterpart of [`Jet`], used for the azimuthal Whittaker
/// amplitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexJet {
    pub value: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
}

impl ComplexJet {
    pub const fn new(value: Complex64, d1: Complex64, d2: Complex64) -> Self {
        Self { value, d1, d2 }
    }

    /// Jet of `f` at `q` from five-point central differences with step `h`.
    pub fn from_stencil(f: impl Fn(f64) -> crate::Result<Complex64>, q: f64, h: f64) -> crate::Result<Self> {
        let (m2, m1, c, p1, p2) = (f(q - 2.0 * h)?, f(q - h)?, f(q)?, f(q + h)?, f(q + 2.0 * h)?);
        let d1 = (m2 - p2 + (p1 - m1) * 8.0) / (12.0 * h);
        let d2 = (-(m2 + p2) + (m1 + p1) * 16.0 - c * 30.0) / (12.0 * h * h);
        Ok(Self::new(c, d1, d2))
    }

    pub fn curvature_ratio(self) -> Complex64 {
        self.d2 / self.value
    }
}

impl From<Jet> for ComplexJet {
    fn from(j: Jet) -> Self {
        Self::new(j.value.into(), j.d1.into(), j.d2.into())
    }
}

impl Jet {
    /// Real jet from five-point central differences with step `h`.
    pub fn from_stencil(f: impl Fn(f64) -> crate::Result<f64>, q: f64, h: f64) -> crate::Result<Self> {
        let c = ComplexJet::from_stencil(|x| f(x).map(Complex64::from), q, h)?;
        Ok(Self::new(c.value.re, c.d1.re, c.d2.re))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_quotient_rules() {
        let x = Jet::variable(0.7);
        let f = (x * x).exp() / (x + Jet::constant(1.0));
        // d/dx e^{x^2}/(x+1), checked by differences
        let g = |x: f64| (x * x).exp() / (x + 1.0);
        let h = 1e-4;
        let d1 = (g(0.7 + h) - g(0.7 - h)) / (2.0 * h);
        let d2 = (g(0.7 + h) - 2.0 * g(0.7) + g(0.7 - h)) / (h * h);
        assert!((f.value - g(0.7)).abs() < 1e-15);
        assert!((f.d1 - d1).abs() < 1e-7);
        assert!((f.d2 - d2).abs() < 1e-6);
    }

    #[test]
    fn sqrt_of_square() {
        let x = Jet::variable(2.5);
        let s = (x * x).sqrt();
        assert!((s.value - 2.5).abs() < 1e-15);
        assert!((s.d1 - 1.0).abs() < 1e-15);
        assert!(s.d2.abs() < 1e-14);
    }

    #[test]
    fn stencil_jet_of_sine() {
        let j = Jet::from_stencil(|x| Ok(x.sin()), 0.8, 1e-3).unwrap();
        assert!((j.d1 - 0.8f64.cos()).abs() < 1e-11);
        assert!((j.d2 + 0.8f64.sin()).abs() < 1e-9);
    }
}
