use num_complex::Complex64;

use super::ddouble::Cdd;
use super::{is_nonpositive_integer, SeriesControl, SERIES_RANGE};
use crate::{Error, Result};

/// Upper parameter of `1F1(a; b; x)`.
///
/// The terminating (polynomial) case is carried as an explicit integer so
/// that detection never depends on floating-point rounding of `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Upper {
    /// `a = -n`: a polynomial of degree `n` in `x`.
    Degree(u32),
    General(Complex64),
}

impl Upper {
    pub fn value(self) -> Complex64 {
        match self {
            Upper::Degree(n) => Complex64::new(-(n as f64), 0.0),
            Upper::General(a) => a,
        }
    }
}

impl From<f64> for Upper {
    fn from(a: f64) -> Self {
        Upper::General(Complex64::new(a, 0.0))
    }
}

impl From<Complex64> for Upper {
    fn from(a: Complex64) -> Self {
        Upper::General(a)
    }
}

/// Kummer's confluent hypergeometric function `1F1(a; b; x) = sum (a)_k x^k / ((b)_k k!)`.
///
/// Terminating parameters are summed exactly to degree `n`. Otherwise the
/// series is truncated once two consecutive terms fall below
/// `ctl.rel_tol * |partial sum|`. For `Re x < 0` the Kummer transformation
/// `1F1(a; b; x) = e^x 1F1(b - a; b; -x)` is applied first, which removes the
/// alternating cancellation on the negative real axis.
pub fn hyp1f1(a: impl Into<Upper>, b: Complex64, x: Complex64, ctl: &SeriesControl) -> Result<Complex64> {
    let a = a.into();
    if is_nonpositive_integer(b) {
        let m = (-b.re) as u64;
        match a {
            Upper::Degree(n) if (n as u64) <= m => {}
            _ => return Err(Error::KummerPole { b: b.re }),
        }
    }
    match a {
        Upper::Degree(n) => Ok(polynomial(n, b, x)),
        Upper::General(a) => {
            if x.norm() > SERIES_RANGE {
                return Err(Error::OutOfValidatedRange { abs_x: x.norm(), limit: SERIES_RANGE });
            }
            if x.re < 0.0 && !is_nonpositive_integer(a) {
                Ok(x.exp() * series(b - a, b, -x, ctl)?)
            } else {
                series(a, b, x, ctl)
            }
        }
    }
}

/// Real-argument convenience wrapper around [`hyp1f1`].
pub fn hyp1f1_real(a: impl Into<Upper>, b: f64, x: f64, ctl: &SeriesControl) -> Result<f64> {
    let a = match a.into() {
        Upper::General(a) if a.im != 0.0 => {
            return Err(Error::InvalidParameter("hyp1f1_real needs a real upper parameter".into()))
        }
        other => other,
    };
    hyp1f1(a, Complex64::new(b, 0.0), Complex64::new(x, 0.0), ctl).map(|v| v.re)
}

fn polynomial(n: u32, b: Complex64, x: Complex64) -> Complex64 {
    let a = -(n as f64);
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..n {
        let kf = k as f64;
        term = term * (a + kf) * x / ((b + kf) * (kf + 1.0));
        sum += term;
    }
    sum
}

fn series(a: Complex64, b: Complex64, x: Complex64, ctl: &SeriesControl) -> Result<Complex64> {
    if x.im == 0.0 && a.im == 0.0 && b.im == 0.0 {
        series_f64(a, b, x, ctl)
    } else {
        series_dd(a, b, x, ctl)
    }
}

fn series_f64(a: Complex64, b: Complex64, x: Complex64, ctl: &SeriesControl) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut small = 0;
    for k in 0..ctl.max_terms {
        let kf = k as f64;
        term = term * (a + kf) * x / ((b + kf) * (kf + 1.0));
        sum += term;
        if term == Complex64::new(0.0, 0.0) {
            return Ok(sum);
        }
        if term.norm() <= ctl.rel_tol * sum.norm() {
            small += 1;
            if small == 2 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::SeriesBudgetExceeded { terms: ctl.max_terms })
}

// Complex arguments: the terms rotate and cancel, so the sum is carried in
// complex double-double.
fn series_dd(a: Complex64, b: Complex64, x: Complex64, ctl: &SeriesControl) -> Result<Complex64> {
    let xd = Cdd::from_c64(x);
    let mut term = Cdd::ONE;
    let mut sum = term;
    let mut small = 0;
    for k in 0..ctl.max_terms {
        let kf = k as f64;
        let den = Cdd::shifted(b, kf) * Cdd::from_c64(Complex64::new(kf + 1.0, 0.0));
        term = term * Cdd::shifted(a, kf) * xd / den;
        sum = sum + term;
        if term.is_zero() {
            return Ok(sum.to_c64());
        }
        if term.norm() <= ctl.rel_tol * sum.norm() {
            small += 1;
            if small == 2 {
                return Ok(sum.to_c64());
            }
        } else {
            small = 0;
        }
    }
    Err(Error::SeriesBudgetExceeded { terms: ctl.max_terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn f(a: f64, b: f64, x: f64) -> f64 {
        hyp1f1_real(a, b, x, &SeriesControl::default()).unwrap()
    }

    #[test]
    fn zero_upper_parameter_is_one() {
        assert_eq!(f(0.0, 0.5, 3.7), 1.0);
        let v = hyp1f1(Upper::Degree(0), c(0.5), c(3.7), &SeriesControl::default()).unwrap();
        assert_eq!(v, c(1.0));
    }

    #[test]
    fn degree_one_polynomial() {
        let v = hyp1f1(Upper::Degree(1), c(0.5), c(1.0), &SeriesControl::default()).unwrap();
        assert!((v.re + 1.0).abs() < 1e-15);
    }

    #[test]
    fn equal_parameters_give_exponential() {
        assert!((f(1.0, 1.0, 1.0) - std::f64::consts::E).abs() < 1e-14);
        for &x in &[-7.5, -1.0, 0.3, 4.0, 12.0] {
            let rel = (f(2.3, 2.3, x) - x.exp()).abs() / x.exp();
            assert!(rel < 1e-13, "x={x} rel={rel}");
        }
    }

    #[test]
    fn one_two_closed_form() {
        for &x in &[-9.0f64, -2.0, 0.5, 2.0, 9.0] {
            let exact = (x.exp() - 1.0) / x;
            assert!((f(1.0, 2.0, x) - exact).abs() < 1e-13 * exact.abs());
        }
    }

    #[test]
    fn laguerre_degree_two() {
        // 1F1(-2; 1; x) = L_2(x) = 1 - 2x + x^2/2
        for &x in &[0.0, 0.7, 3.0, 11.0] {
            let v = hyp1f1_real(Upper::Degree(2), 1.0, x, &SeriesControl::default()).unwrap();
            assert!((v - (1.0 - 2.0 * x + 0.5 * x * x)).abs() < 1e-12);
        }
    }

    #[test]
    fn pole_and_polynomial_exception() {
        let ctl = SeriesControl::default();
        assert!(matches!(hyp1f1(0.5, c(-2.0), c(1.0), &ctl), Err(Error::KummerPole { .. })));
        assert!(matches!(hyp1f1(0.5, c(0.0), c(1.0), &ctl), Err(Error::KummerPole { .. })));
        // a = -1, b = -3: polynomial stops before the pole
        let v = hyp1f1(Upper::Degree(1), c(-3.0), c(1.5), &ctl).unwrap();
        assert!((v.re - (1.0 + 1.5 / 3.0)).abs() < 1e-15);
        assert!(matches!(hyp1f1(Upper::Degree(4), c(-3.0), c(1.0), &ctl), Err(Error::KummerPole { .. })));
    }

    #[test]
    fn budget_and_range() {
        let tight = SeriesControl::new(1e-16, 3).unwrap();
        assert!(matches!(hyp1f1(0.5, c(1.5), c(5.0), &tight), Err(Error::SeriesBudgetExceeded { .. })));
        let ctl = SeriesControl::default();
        assert!(matches!(hyp1f1(0.5, c(1.5), c(31.0), &ctl), Err(Error::OutOfValidatedRange { .. })));
        // polynomials are not range-limited
        assert!(hyp1f1(Upper::Degree(3), c(1.5), c(60.0), &ctl).is_ok());
        assert!(SeriesControl::new(0.0, 10).is_err());
    }

    #[test]
    fn kummer_transform_matches_direct_series() {
        let ctl = SeriesControl::default();
        let (a, b, x) = (c(0.3), c(1.7), c(-2.5));
        let transformed = hyp1f1(a, b, x, &ctl).unwrap();
        let direct = series(a, b, x, &ctl).unwrap();
        assert!((transformed - direct).norm() < 1e-13);
    }

    proptest! {
        // b M(a,b,x) - b M(a-1,b,x) - x M(a,b+1,x) = 0
        #[test]
        fn contiguity(a in -4.0f64..4.0, b in 0.3f64..5.0, x in -10.0f64..10.0) {
            let ctl = SeriesControl::default();
            let m = |a: f64, b: f64| hyp1f1_real(a, b, x, &ctl).unwrap();
            let lhs = b * m(a, b) - b * m(a - 1.0, b) - x * m(a, b + 1.0);
            let scale = (b * m(a, b)).abs() + (b * m(a - 1.0, b)).abs() + (x * m(a, b + 1.0)).abs();
            prop_assert!(lhs.abs() <= 1e-10 * scale, "residual {} scale {}", lhs, scale);
        }
    }
}
