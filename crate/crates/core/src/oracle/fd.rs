use num_complex::Complex64;

use crate::profile::{ProfileValues, SampledProfile};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualReport {
    pub max_abs: f64,
    /// Grid coordinate where `max_abs` is attained.
    pub location: f64,
    pub step: f64,
}

fn check_grid(candidate: &SampledProfile) -> Result<f64> {
    if candidate.len() < 5 {
        return Err(Error::InvalidGrid(format!("residual needs at least 5 points (got {})", candidate.len())));
    }
    candidate.uniform_step()
}

fn scan<T>(grid: &[f64], ys: &[T], h: f64, mut eval: impl FnMut(T, T, T, f64) -> f64) -> ResidualReport
where
    T: Copy + std::ops::Sub<Output = T> + std::ops::Add<Output = T> + std::ops::Mul<f64, Output = T>,
{
    let mut report = ResidualReport { max_abs: 0.0, location: grid[1], step: h };
    for i in 1..ys.len() - 1 {
        let d1 = (ys[i + 1] - ys[i - 1]) * (0.5 / h);
        let d2 = (ys[i + 1] + ys[i - 1] - ys[i] * 2.0) * (1.0 / (h * h));
        let r = eval(ys[i], d1, d2, grid[i]);
        // NaN must surface as a failure, not be skipped by the comparison
        if r.is_nan() || r > report.max_abs {
            report.max_abs = if r.is_nan() { f64::INFINITY } else { r };
            report.location = grid[i];
        }
    }
    report
}

/// Max over interior points of `|ode_form(y, y', y'', q)|` with central
/// second-order differences.
pub fn fd_residual(candidate: &SampledProfile, ode_form: impl Fn(f64, f64, f64, f64) -> f64) -> Result<ResidualReport> {
    let h = check_grid(candidate)?;
    match &candidate.values {
        ProfileValues::Real(ys) => Ok(scan(&candidate.grid, ys, h, |y, d1, d2, q| ode_form(y, d1, d2, q).abs())),
        ProfileValues::Complex(_) => {
            Err(Error::InvalidParameter("complex profile passed to real residual; use fd_residual_complex".into()))
        }
    }
}

/// Complex analogue of [`fd_residual`]; real profiles are promoted.
pub fn fd_residual_complex(
    candidate: &SampledProfile,
    ode_form: impl Fn(Complex64, Complex64, Complex64, f64) -> Complex64,
) -> Result<ResidualReport> {
    let h = check_grid(candidate)?;
    let ys: Vec<Complex64> = match &candidate.values {
        ProfileValues::Real(v) => v.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        ProfileValues::Complex(v) => v.clone(),
    };
    Ok(scan(&candidate.grid, &ys, h, |y, d1, d2, q| ode_form(y, d1, d2, q).norm()))
}
