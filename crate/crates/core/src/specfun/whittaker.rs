use num_complex::Complex64;

use super::{hyp1f1, ln_gamma, recip_gamma, SeriesControl, Upper};
use crate::{Error, Result};

fn prefactor(mu: Complex64, x: Complex64) -> Complex64 {
    // e^{-x/2} x^{mu + 1/2}, principal branch (cut on the negative real axis)
    if x == Complex64::new(0.0, 0.0) {
        return if (mu + 0.5).re > 0.0 { Complex64::new(0.0, 0.0) } else { Complex64::new(f64::NAN, f64::NAN) };
    }
    (-x * 0.5 + (mu + 0.5) * x.ln()).exp()
}

/// Whittaker `M_{kappa,mu}(x) = e^{-x/2} x^{mu+1/2} 1F1(mu - kappa + 1/2; 1 + 2 mu; x)`.
pub fn whittaker_m(kappa: Complex64, mu: Complex64, x: Complex64) -> Result<Complex64> {
    let ctl = SeriesControl::default();
    if x == Complex64::new(0.0, 0.0) {
        // still reject a forbidden lower parameter
        hyp1f1(Upper::General(mu - kappa + 0.5), 1.0 + 2.0 * mu, x, &ctl)?;
        return Ok(prefactor(mu, x));
    }
    let f = hyp1f1(Upper::General(mu - kappa + 0.5), 1.0 + 2.0 * mu, x, &ctl)?;
    Ok(prefactor(mu, x) * f)
}

fn whittaker_m_with_derivative(kappa: Complex64, mu: Complex64, x: Complex64) -> Result<(Complex64, Complex64)> {
    let ctl = SeriesControl::default();
    let a = mu - kappa + 0.5;
    let b = 1.0 + 2.0 * mu;
    let f = hyp1f1(Upper::General(a), b, x, &ctl)?;
    let df = a / b * hyp1f1(Upper::General(a + 1.0), b + 1.0, x, &ctl)?;
    let p = prefactor(mu, x);
    let m = p * f;
    let dm = p * ((-0.5 + (mu + 0.5) / x) * f + df);
    Ok((m, dm))
}

fn connection_coefficients(kappa: Complex64, mu: Complex64) -> Result<(Complex64, Complex64)> {
    let two_mu = 2.0 * mu;
    if two_mu.im == 0.0 && two_mu.re.fract() == 0.0 {
        return Err(Error::ConnectionDegenerate { two_mu: two_mu.re });
    }
    let c_plus = ln_gamma(-two_mu)?.exp() * recip_gamma(0.5 - mu - kappa);
    let c_minus = ln_gamma(two_mu)?.exp() * recip_gamma(0.5 + mu - kappa);
    Ok((c_plus, c_minus))
}

/// Second Whittaker solution from the connection formula
/// `W = Gamma(-2mu)/Gamma(1/2-mu-kappa) M_{kappa,mu} + Gamma(2mu)/Gamma(1/2+mu-kappa) M_{kappa,-mu}`.
///
/// Requires `2 mu` non-integer.
pub fn whittaker_w(kappa: Complex64, mu: Complex64, x: Complex64) -> Result<Complex64> {
    let (c_plus, c_minus) = connection_coefficients(kappa, mu)?;
    Ok(c_plus * whittaker_m(kappa, mu, x)? + c_minus * whittaker_m(kappa, -mu, x)?)
}

/// Wronskian `M W' - M' W` evaluated from the series at `x`.
///
/// Analytically it equals `-Gamma(1 + 2mu) / Gamma(1/2 + mu - kappa)`, independent of `x`.
pub fn whittaker_wronskian(kappa: Complex64, mu: Complex64, x: Complex64) -> Result<Complex64> {
    let (c_plus, c_minus) = connection_coefficients(kappa, mu)?;
    let (m, dm) = whittaker_m_with_derivative(kappa, mu, x)?;
    let (mn, dmn) = whittaker_m_with_derivative(kappa, -mu, x)?;
    let w = c_plus * m + c_minus * mn;
    let dw = c_plus * dm + c_minus * dmn;
    Ok(m * dw - dm * w)
}
