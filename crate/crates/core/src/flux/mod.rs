//! Stationary states with nonzero sectorial currents: the coupled
//! `(pi_theta, w)` flow, its zero-current closed forms, the first integral
//! of the azimuthal amplitude, the `F` branch equation, and the divergence
//! and Bohm-energy checks on full three-dimensional fields.

mod azimuthal;
mod fbranch;
mod fields;
mod first_integral;

pub use azimuthal::{
    momentum_period, nonlinpie_residual, pi_theta_closed, pi_theta_jet, s_theta_closed, uw_flow, AzimuthalState,
};
pub use fbranch::{f_branch_flow, linear_flow_solution, theta_from_w, Branch};
pub use fields::{
    bohm_energy_residual, divergence_residual, AmplitudeJets, FieldBox, FieldSample, Momenta, SpacePoint,
};
pub use first_integral::{theta_first_integral_quadrature, FirstIntegral};

use crate::params::PhysParams;
use crate::{Error, Result};

/// Sectorial current constants with `C_r + C_theta + C_z = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurrentBranch {
    pub c_r: f64,
    pub c_theta: f64,
    pub c_z: f64,
}

impl CurrentBranch {
    pub fn new(c_r: f64, c_theta: f64, c_z: f64) -> Result<Self> {
        let sum = c_r + c_theta + c_z;
        let scale = c_r.abs().max(c_theta.abs()).max(c_z.abs()).max(1.0);
        if !sum.is_finite() || sum.abs() > 1e-14 * scale {
            return Err(Error::CurrentImbalance { sum });
        }
        Ok(Self { c_r, c_theta, c_z })
    }

    /// Close the constraint with `C_theta = -(C_r + C_z)`.
    pub fn from_radial_axial(c_r: f64, c_z: f64) -> Result<Self> {
        Self::new(c_r, -(c_r + c_z), c_z)
    }

    pub fn zero() -> Self {
        Self { c_r: 0.0, c_theta: 0.0, c_z: 0.0 }
    }

    pub fn sum(&self) -> f64 {
        self.c_r + self.c_theta + self.c_z
    }
}

/// Azimuthal data at fixed radius: `phi = beta r^2`, `Lambda = l^2 + phi^2`,
/// the integration constant `E_pi` and phase `theta0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxContext {
    pub r: f64,
    pub phi: f64,
    pub lambda: f64,
    pub e_pi: f64,
    pub theta0: f64,
    pub hbar: f64,
}

impl FluxContext {
    pub fn new(r: f64, l: i32, params: &PhysParams, e_pi: f64, theta0: f64) -> Result<Self> {
        params.validate()?;
        let phi = params.flux_ratio(r);
        let l = l as f64;
        Self::with_lambda(l * l + phi * phi, phi, r, params.hbar, e_pi, theta0)
    }

    /// Context from `Lambda` directly; needs `Lambda >= phi^2` so that an
    /// `l^2 >= 0` exists.
    pub fn with_lambda(lambda: f64, phi: f64, r: f64, hbar: f64, e_pi: f64, theta0: f64) -> Result<Self> {
        if ![lambda, phi, r, hbar, e_pi, theta0].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidParameter("flux context needs finite inputs".into()));
        }
        if lambda < phi * phi {
            return Err(Error::InvalidParameter(format!("Lambda = {lambda} is below phi^2 = {}", phi * phi)));
        }
        if !(hbar > 0.0) {
            return Err(Error::InvalidParameter(format!("hbar must be positive (got {hbar})")));
        }
        Ok(Self { r, phi, lambda, e_pi, theta0, hbar })
    }

    /// `Delta_pi = E_pi^2 - 64 Lambda / hbar^2`.
    pub fn discriminant(&self) -> f64 {
        self.e_pi * self.e_pi - 64.0 * self.lambda / (self.hbar * self.hbar)
    }

    pub fn l_squared(&self) -> f64 {
        self.lambda - self.phi * self.phi
    }
}
