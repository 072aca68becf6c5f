//! Minimal double-double arithmetic for alternating ascending series.
//!
//! Only the handful of operations the Bessel and Kummer series need. The value is
//! `hi + lo` with `|lo| <= ulp(hi)/2`.

use std::ops::{Add, Div, Mul, Neg};

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact sum of two doubles.
    pub fn sum(a: f64, b: f64) -> Self {
        let (hi, lo) = two_sum(a, b);
        Dd { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> f64 {
        self.to_f64().abs()
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, rhs: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        // long division, two correction steps
        let q1 = self.hi / rhs.hi;
        let r = self + -(rhs * Dd::from_f64(q1));
        let q2 = r.hi / rhs.hi;
        let r = r + -(rhs * Dd::from_f64(q2));
        let q3 = r.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from_f64(q3)
    }
}

impl Dd {
    fn recip(self) -> Dd {
        Dd::ONE / self
    }
}

/// Complex double-double.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub const ONE: Cdd = Cdd { re: Dd::ONE, im: Dd { hi: 0.0, lo: 0.0 } };

    pub fn new(re: Dd, im: Dd) -> Self {
        Cdd { re, im }
    }

    pub fn from_c64(z: num_complex::Complex64) -> Self {
        Cdd::new(Dd::from_f64(z.re), Dd::from_f64(z.im))
    }

    /// `z + k` without rounding.
    pub fn shifted(z: num_complex::Complex64, k: f64) -> Self {
        Cdd::new(Dd::sum(z.re, k), Dd::from_f64(z.im))
    }

    pub fn to_c64(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn norm(self) -> f64 {
        self.to_c64().norm()
    }

    pub fn is_zero(self) -> bool {
        self.re.hi == 0.0 && self.im.hi == 0.0
    }
}

impl Add for Cdd {
    type Output = Cdd;
    fn add(self, rhs: Cdd) -> Cdd {
        Cdd::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Mul for Cdd {
    type Output = Cdd;
    fn mul(self, rhs: Cdd) -> Cdd {
        Cdd::new(self.re * rhs.re + -(self.im * rhs.im), self.re * rhs.im + self.im * rhs.re)
    }
}

impl Div for Cdd {
    type Output = Cdd;
    fn div(self, rhs: Cdd) -> Cdd {
        let inv = (rhs.re * rhs.re + rhs.im * rhs.im).recip();
        let conj = Cdd::new(rhs.re, -rhs.im);
        let p = self * conj;
        Cdd::new(p.re * inv, p.im * inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn third_is_more_precise_than_double() {
        let third = Dd::ONE / Dd::from_f64(3.0);
        let back = third * Dd::from_f64(3.0);
        assert!((back.hi - 1.0).abs() + back.lo.abs() < 1e-30);
    }

    #[test]
    fn complex_quotient_round_trip() {
        let a = Cdd::from_c64(num_complex::Complex64::new(0.3, -1.7));
        let b = Cdd::from_c64(num_complex::Complex64::new(2.1, 0.9));
        let back = (a / b) * b;
        let d = back.to_c64() - a.to_c64();
        assert!(d.norm() < 1e-30 + (back.re.lo - a.re.lo).abs());
        assert!((back.re.hi - 0.3).abs() + (back.re.lo).abs() < 1e-30);
    }

    #[test]
    fn exact_sum_keeps_tail() {
        let s = Dd::sum(1.0, 1e-20);
        assert_eq!(s.hi, 1.0);
        assert_eq!(s.lo, 1e-20);
    }
}
