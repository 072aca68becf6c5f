//! Landau-level energies from the standard, Ermakov–Lewis and canonically
//! regularised routes.

use serde::{Deserialize, Serialize};

use crate::params::{PhysParams, QuantumNumbers};
pub use crate::sectors::energy_el;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum SpectrumModel {
    Qm,
    El,
    Cbr,
}

impl SpectrumModel {
    pub const ALL: [SpectrumModel; 3] = [SpectrumModel::Qm, SpectrumModel::El, SpectrumModel::Cbr];

    pub fn energy(self, qn: &QuantumNumbers, params: &PhysParams) -> f64 {
        match self {
            SpectrumModel::Qm => energy_qm(qn, params),
            SpectrumModel::El => energy_el(qn, params),
            SpectrumModel::Cbr => energy_cbr(qn, params),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SpectrumModel::Qm => "QM",
            SpectrumModel::El => "EL",
            SpectrumModel::Cbr => "CBR",
        }
    }
}

impl std::str::FromStr for SpectrumModel {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "QM" => Ok(SpectrumModel::Qm),
            "EL" => Ok(SpectrumModel::El),
            "CBR" => Ok(SpectrumModel::Cbr),
            _ => Err(crate::Error::InvalidParameter(format!("unknown spectrum model '{s}'"))),
        }
    }
}

/// Symmetric-gauge Landau levels
/// `hbar w_c (n_r + (|l| - s l)/2 + 1/2) + hbar^2 k_z^2 / 2m`, `s = sign(eB)`.
pub fn energy_qm(qn: &QuantumNumbers, params: &PhysParams) -> f64 {
    let l = qn.l as f64;
    let s = params.eb().signum();
    params.hbar * params.omega_c() * (qn.n_r as f64 + 0.5 * (l.abs() - s * l) + 0.5) + params.axial_kinetic(qn.k_z)
}

/// `(hbar w_c / 2)(2 n_r + sqrt(l^2 + 1/4) + 1) + hbar^2 k_z^2 / 2m`.
pub fn energy_cbr(qn: &QuantumNumbers, params: &PhysParams) -> f64 {
    let l = qn.l as f64;
    0.5 * params.hbar * params.omega_c() * (2.0 * qn.n_r as f64 + (l * l + 0.25).sqrt() + 1.0)
        + params.axial_kinetic(qn.k_z)
}

/// `(hbar w_c / 2) sqrt(l^2 + 1/4)`.
pub fn degeneracy_splitting(l: i32, params: &PhysParams) -> f64 {
    let l = l as f64;
    0.5 * params.hbar * params.omega_c() * (l * l + 0.25).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrderingViolation {
    pub n_r: u32,
    pub l: i32,
    pub k_z: f64,
    pub e_qm: f64,
    pub e_el: f64,
    pub e_cbr: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderingReport {
    pub checked: usize,
    /// States with `l < 1`, which the ordering does not cover.
    pub skipped: usize,
    pub violations: Vec<OrderingViolation>,
}

impl OrderingReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check `E_QM <= E_EL <= E_CBR` on every state with `l >= 1`, allowing a
/// relative slack of `1e-12` for rounding.
pub fn spectral_ordering_check<'a>(
    states: impl IntoIterator<Item = &'a QuantumNumbers>,
    params: &PhysParams,
) -> OrderingReport {
    let le = |a: f64, b: f64| a <= b + 1e-12 * a.abs().max(b.abs());
    let mut report = OrderingReport { checked: 0, skipped: 0, violations: Vec::new() };
    for qn in states {
        if qn.l < 1 {
            report.skipped += 1;
            continue;
        }
        report.checked += 1;
        let (e_qm, e_el, e_cbr) = (energy_qm(qn, params), energy_el(qn, params), energy_cbr(qn, params));
        if !(le(e_qm, e_el) && le(e_el, e_cbr)) {
            report.violations.push(OrderingViolation { n_r: qn.n_r, l: qn.l, k_z: qn.k_z, e_qm, e_el, e_cbr });
        }
    }
    report
}

/// `n_r in [0, 10]`, `l in [1, 10]`, `k_z in {0, 1, 2}`.
pub fn standard_sweep() -> Vec<QuantumNumbers> {
    let mut out = Vec::with_capacity(11 * 10 * 3);
    for n in 0..=10 {
        for l in 1..=10 {
            for k in [0.0, 1.0, 2.0] {
                out.push(QuantumNumbers::new(n, l, k));
            }
        }
    }
    out
}
