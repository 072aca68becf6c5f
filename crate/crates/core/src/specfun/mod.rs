//! Special functions used by the closed-form amplitudes: Kummer's confluent
//! hypergeometric function, complex log-gamma, the Whittaker pair and Bessel
//! functions of the first kind with real order.
//!
//! Everything here is evaluated from ascending series. The series are only
//! trusted for moderate arguments (`|x| <= 30`); larger arguments are rejected
//! with [`Error::OutOfValidatedRange`](crate::Error::OutOfValidatedRange)
//! instead of returning a silently inaccurate value.

mod bessel;
pub(crate) mod ddouble;
mod gamma;
mod kummer;
mod whittaker;

pub use bessel::{bessel_j, bessel_j_derivative};
pub use gamma::{gamma, ln_gamma, recip_gamma};
pub use kummer::{hyp1f1, hyp1f1_real, Upper};
pub use whittaker::{whittaker_m, whittaker_w, whittaker_wronskian};

pub use num_complex::Complex64;

/// Complex scalar used throughout the special-function layer.
pub type ComplexValue = Complex64;

/// Largest `|x|` for which the raw ascending series are accepted.
pub const SERIES_RANGE: f64 = 30.0;

/// Truncation controls for ascending series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl SeriesControl {
    pub fn new(rel_tol: f64, max_terms: usize) -> crate::Result<Self> {
        if !(rel_tol > 0.0) || max_terms == 0 {
            return Err(crate::Error::InvalidParameter(format!(
                "series control needs rel_tol > 0 and max_terms >= 1 (got {rel_tol}, {max_terms})"
            )));
        }
        Ok(Self { rel_tol, max_terms })
    }
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self { rel_tol: 1e-17, max_terms: 2000 }
    }
}

/// True when `z` is exactly a non-positive integer.
pub(crate) fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}
