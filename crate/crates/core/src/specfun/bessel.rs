use num_complex::Complex64;

use super::ddouble::Dd;
use super::{ln_gamma, SeriesControl, SERIES_RANGE};
use crate::{Error, Result};

/// Bessel function of the first kind `J_nu(x)` from the ascending series
/// `sum (-1)^k (x/2)^{2k+nu} / (k! Gamma(k+nu+1))`.
///
/// The alternating sum is carried in double-double precision so that the
/// cancellation near the top of the validated range (`x <= 30`) does not eat
/// the result.
pub fn bessel_j(nu: f64, x: f64, ctl: &SeriesControl) -> Result<f64> {
    if !(nu >= 0.0) || !(x >= 0.0) {
        return Err(Error::InvalidParameter(format!("bessel_j needs nu >= 0 and x >= 0 (got nu = {nu}, x = {x})")));
    }
    if x > SERIES_RANGE {
        return Err(Error::OutOfValidatedRange { abs_x: x, limit: SERIES_RANGE });
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    let half = x / 2.0;
    let lead = (nu * half.ln() - ln_gamma(Complex64::new(nu + 1.0, 0.0))?.re).exp();

    let q = Dd::from_f64(half) * Dd::from_f64(half);
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    let mut small = 0;
    for k in 0..ctl.max_terms {
        let k1 = (k + 1) as f64;
        let denom = Dd::from_f64(k1) * Dd::sum(k1, nu);
        term = -(term * q) / denom;
        sum = sum + term;
        if term.abs() <= ctl.rel_tol * sum.abs() {
            small += 1;
            if small == 2 {
                return Ok(lead * sum.to_f64());
            }
        } else {
            small = 0;
        }
    }
    Err(Error::SeriesBudgetExceeded { terms: ctl.max_terms })
}

/// `J_nu'(x) = (nu/x) J_nu(x) - J_{nu+1}(x)`.
pub fn bessel_j_derivative(nu: f64, x: f64, ctl: &SeriesControl) -> Result<f64> {
    if x == 0.0 {
        return Ok(match nu {
            0.0 => 0.0,
            n if n < 1.0 => f64::INFINITY,
            1.0 => 0.5,
            _ => 0.0,
        });
    }
    Ok(nu / x * bessel_j(nu, x, ctl)? - bessel_j(nu + 1.0, x, ctl)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn j(nu: f64, x: f64) -> f64 {
        bessel_j(nu, x, &SeriesControl::default()).unwrap()
    }

    #[test]
    fn order_zero_at_origin() {
        assert_eq!(j(0.0, 0.0), 1.0);
        assert_eq!(j(FRAC_1_SQRT_2, 0.0), 0.0);
    }

    #[test]
    fn half_order_identity() {
        assert!((j(0.5, PI / 2.0) - 2.0 / PI).abs() < 1e-15);
        let mut x = 0.1;
        while x <= 20.0 {
            let envelope = (2.0 / (PI * x)).sqrt();
            let exact = envelope * x.sin();
            assert!((j(0.5, x) - exact).abs() <= 1e-10 * envelope, "x={x}");
            x += 0.0997;
        }
    }

    #[test]
    fn known_integer_order_values() {
        // J0(1), J1(2.5), J0(30)
        assert!((j(0.0, 1.0) - 0.765_197_686_557_966_6).abs() < 1e-15);
        assert!((j(1.0, 2.5) - 0.497_094_102_464_274_4).abs() < 1e-15);
        assert!((j(0.0, 30.0) - (-0.086_367_983_581_040_2)).abs() < 1e-13);
    }

    #[test]
    fn satisfies_bessel_equation() {
        let nu = FRAC_1_SQRT_2;
        let x = 3.0;
        // five-point stencils keep roundoff well below the target
        let h = 1e-3;
        let f = |k: f64| j(nu, x + k * h);
        let d2 = (-f(2.0) + 16.0 * f(1.0) - 30.0 * f(0.0) + 16.0 * f(-1.0) - f(-2.0)) / (12.0 * h * h);
        let d1 = (-f(2.0) + 8.0 * f(1.0) - 8.0 * f(-1.0) + f(-2.0)) / (12.0 * h);
        let res = x * x * d2 + x * d1 + (x * x - nu * nu) * j(nu, x);
        assert!(res.abs() < 1e-8, "residual {res}");
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        let ctl = SeriesControl::default();
        for &x in &[0.4, 2.0, 7.3] {
            let h = 1e-5;
            let fd = (j(1.3, x + h) - j(1.3, x - h)) / (2.0 * h);
            assert!((bessel_j_derivative(1.3, x, &ctl).unwrap() - fd).abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_out_of_range() {
        let ctl = SeriesControl::default();
        assert!(matches!(bessel_j(0.5, 31.0, &ctl), Err(Error::OutOfValidatedRange { .. })));
        assert!(bessel_j(-0.5, 1.0, &ctl).is_err());
        assert!(bessel_j(0.5, -1.0, &ctl).is_err());
    }
}
