use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Physical constants. `beta` and `omega_c` are always derived from the
/// primaries.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysParams {
    pub hbar: f64,
    pub mass: f64,
    /// Signed charge `e`.
    pub charge: f64,
    /// Field strength `B`.
    pub field: f64,
}

impl Default for PhysParams {
    fn default() -> Self {
        Self { hbar: 1.0, mass: 1.0, charge: 1.0, field: 1.0 }
    }
}

impl PhysParams {
    pub fn new(hbar: f64, mass: f64, charge: f64, field: f64) -> Result<Self> {
        let p = Self { hbar, mass, charge, field };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.hbar > 0.0) || !(self.mass > 0.0) || !(self.field > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "hbar, mass and B must be positive (got {}, {}, {})",
                self.hbar, self.mass, self.field
            )));
        }
        if !self.charge.is_finite() || !self.hbar.is_finite() || !self.mass.is_finite() || !self.field.is_finite() {
            return Err(Error::InvalidParameter("physical constants must be finite".into()));
        }
        Ok(())
    }

    /// `eB / 2hbar`.
    pub fn beta(&self) -> f64 {
        self.charge * self.field / (2.0 * self.hbar)
    }

    /// `|e| B / m`.
    pub fn omega_c(&self) -> f64 {
        self.charge.abs() * self.field / self.mass
    }

    pub fn eb(&self) -> f64 {
        self.charge * self.field
    }

    /// Flux ratio `Phi/Phi0 = beta r^2` through a disc of radius `r`.
    pub fn flux_ratio(&self, r: f64) -> f64 {
        self.beta() * r * r
    }

    /// `hbar^2 k^2 / 2m`.
    pub fn axial_kinetic(&self, k_z: f64) -> f64 {
        self.hbar * self.hbar * k_z * k_z / (2.0 * self.mass)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumNumbers {
    pub n_r: u32,
    pub l: i32,
    pub k_z: f64,
}

impl QuantumNumbers {
    pub fn new(n_r: u32, l: i32, k_z: f64) -> Self {
        Self { n_r, l, k_z }
    }
}
