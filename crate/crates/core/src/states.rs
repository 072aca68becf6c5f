//! Complete stationary states (amplitudes, momenta and energy) assembled
//! from the sector solutions, and the density/momentum fields used by the
//! continuity check.

use num_complex::Complex64;

use crate::ermakov::{EPCoefficients, PinneyAmplitude, TrigPair};
use crate::flux::{AmplitudeJets, CurrentBranch, FieldSample, Momenta, SpacePoint};
use crate::jet::{ComplexJet, Jet};
use crate::params::{PhysParams, QuantumNumbers};
use crate::regular::{azimuthal_whittaker, radial_regularised, AxialRegularised, RadialRegularised};
use crate::sectors::{axial_amplitude_trig, energy_el, radial_basis_quantised, theta_amplitude_trig, RadialPair};
use crate::specfun::{hyp1f1_real, SeriesControl, Upper};
use crate::spectrum::energy_cbr;
use crate::{flux, Error, Result};

/// Step of the five-point stencils used for amplitudes without analytic jets.
pub const STENCIL_STEP: f64 = 1e-3;

/// A state that can be fed to the Bohm energy check.
pub trait BohmState {
    fn amplitudes(&self, p: &SpacePoint) -> Result<AmplitudeJets>;
    fn momenta(&self, p: &SpacePoint) -> Result<Momenta>;
    fn energy(&self) -> f64;
    fn params(&self) -> &PhysParams;

    fn energy_residual(&self, p: &SpacePoint) -> Result<f64> {
        flux::bohm_energy_residual(&self.amplitudes(p)?, &self.momenta(p)?, self.energy(), self.params(), p)
    }
}

/// Zero-current state with `Theta = 1`, `p_theta = l hbar / r`, the Landau
/// radial profile `r^|l| e^{-|beta| r^2/2} 1F1(-n_r; |l| + 1; |beta| r^2)`
/// with `p_r = 0`, and an axial Pinney amplitude with `p_z = hbar c / Z^2`.
/// Its energy is `E_EL`; needs `l >= 0`.
#[derive(Debug, Clone)]
pub struct ElState {
    qn: QuantumNumbers,
    params: PhysParams,
    axial: PinneyAmplitude<TrigPair>,
}

impl ElState {
    pub fn new(qn: QuantumNumbers, params: PhysParams, axial: EPCoefficients) -> Result<Self> {
        params.validate()?;
        if qn.l < 0 {
            return Err(Error::InvalidParameter(format!("Ermakov-Lewis state needs l >= 0 (got {})", qn.l)));
        }
        Ok(Self { qn, params, axial: axial_amplitude_trig(axial, qn.k_z)? })
    }

    fn radial_jet(&self, r: f64) -> Result<Jet> {
        let b = self.params.beta().abs();
        let l = self.qn.l as f64;
        let n = self.qn.n_r;
        let rj = Jet::variable(r);
        let x = (rj * rj).scale(b);
        let ctl = SeriesControl::default();
        let c = l + 1.0;
        let m0 = hyp1f1_real(Upper::Degree(n), c, x.value, &ctl)?;
        let m1 =
            if n >= 1 { -(n as f64) / c * hyp1f1_real(Upper::Degree(n - 1), c + 1.0, x.value, &ctl)? } else { 0.0 };
        let m2 = if n >= 2 {
            (n as f64) * (n as f64 - 1.0) / (c * (c + 1.0)) * hyp1f1_real(Upper::Degree(n - 2), c + 2.0, x.value, &ctl)?
        } else {
            0.0
        };
        let power = if self.qn.l == 0 { Jet::constant(1.0) } else { rj.powf(l) };
        Ok(power * x.scale(-0.5).exp() * x.compose(m0, m1, m2))
    }
}

impl BohmState for ElState {
    fn amplitudes(&self, p: &SpacePoint) -> Result<AmplitudeJets> {
        Ok(AmplitudeJets { r: self.radial_jet(p.r)?, theta: Jet::constant(1.0).into(), z: self.axial.jet(p.z)? })
    }

    fn momenta(&self, p: &SpacePoint) -> Result<Momenta> {
        let z = self.axial.value(p.z)?;
        Ok(Momenta {
            p_r: 0.0,
            p_theta: self.qn.l as f64 * self.params.hbar / p.r,
            p_z: self.params.hbar * self.axial.coefficients().c / (z * z),
        })
    }

    fn energy(&self) -> f64 {
        energy_el(&self.qn, &self.params)
    }

    fn params(&self) -> &PhysParams {
        &self.params
    }
}

/// Canonically regularised state: `p_r = hbar/2r`, `p_theta = hbar/(2 r theta)`,
/// `p_z = hbar/2z`, with the Langer radial solution, the Whittaker azimuthal
/// solution at `phi = beta r^2` and `Z = sqrt(z) J_{1/sqrt 2}(k_z z)`.
/// Its energy is `E_CBR`; needs `l != 0`, `k_z > 0`, `theta != 0`, `z > 0`.
#[derive(Debug, Clone)]
pub struct CbrState {
    qn: QuantumNumbers,
    params: PhysParams,
    radial: RadialRegularised,
    axial: AxialRegularised,
}

impl CbrState {
    pub fn new(qn: QuantumNumbers, params: PhysParams) -> Result<Self> {
        if qn.l == 0 {
            return Err(Error::WhittakerDegenerate);
        }
        Ok(Self {
            qn,
            radial: radial_regularised(&qn, &params)?,
            axial: crate::regular::axial_regularised(qn.k_z)?,
            params,
        })
    }

    fn theta_at(&self, r: f64, theta: f64) -> Result<Complex64> {
        let one = Complex64::new(1.0, 0.0);
        azimuthal_whittaker(theta, self.qn.l, self.params.flux_ratio(r), one, Complex64::new(0.0, 0.0))
    }
}

impl BohmState for CbrState {
    fn amplitudes(&self, p: &SpacePoint) -> Result<AmplitudeJets> {
        Ok(AmplitudeJets {
            r: self.radial.jet(p.r)?,
            theta: ComplexJet::from_stencil(|t| self.theta_at(p.r, t), p.theta, STENCIL_STEP)?,
            z: Jet::from_stencil(|z| self.axial.value(z), p.z, STENCIL_STEP)?,
        })
    }

    fn momenta(&self, p: &SpacePoint) -> Result<Momenta> {
        if p.theta == 0.0 {
            return Err(Error::CanonicalRegularisationPoint);
        }
        if !(p.z > 0.0) {
            return Err(Error::AxialHalfLine { z: p.z });
        }
        let h = self.params.hbar;
        Ok(Momenta { p_r: h / (2.0 * p.r), p_theta: h / (2.0 * p.r * p.theta), p_z: h / (2.0 * p.z) })
    }

    fn energy(&self) -> f64 {
        energy_cbr(&self.qn, &self.params)
    }

    fn params(&self) -> &PhysParams {
        &self.params
    }
}

/// Zero-current fields built from three Pinney amplitudes:
/// `R = chi/sqrt(r)` with `p_r = hbar c_r / chi^2`,
/// `p_theta = beta hbar r + hbar c_theta / (r Theta^2)` and `p_z = hbar c_z / Z^2`.
/// Each sector flux `r R^2 p_r`, `Theta^2 (p_theta - eBr/2)`, `Z^2 p_z` is constant.
#[derive(Debug, Clone)]
pub struct PinneyFields {
    params: PhysParams,
    radial: PinneyAmplitude<RadialPair>,
    theta: PinneyAmplitude<TrigPair>,
    axial: PinneyAmplitude<TrigPair>,
}

impl PinneyFields {
    pub fn new(
        qn: &QuantumNumbers,
        params: PhysParams,
        radial: EPCoefficients,
        theta: EPCoefficients,
        axial: EPCoefficients,
    ) -> Result<Self> {
        if qn.l == 0 {
            return Err(Error::InvalidParameter("azimuthal Pinney amplitude needs l != 0".into()));
        }
        Ok(Self {
            radial: PinneyAmplitude::new(radial_basis_quantised(qn.n_r, &params)?, radial)?,
            theta: theta_amplitude_trig(theta, qn.l.unsigned_abs() as f64)?,
            axial: axial_amplitude_trig(axial, qn.k_z)?,
            params,
        })
    }

    /// Fixed coefficient choice used by the continuity checks.
    pub fn standard(qn: &QuantumNumbers, params: PhysParams) -> Result<Self> {
        let theta_w = qn.l.unsigned_abs() as f64;
        Self::new(
            qn,
            params,
            EPCoefficients::from_ad(1.0, 0.0, 1.0, 1.0)?,
            EPCoefficients::from_ad(1.0, 0.2, 0.5, theta_w)?,
            EPCoefficients::from_ad(1.0, -0.1, 0.7, qn.k_z)?,
        )
    }

    pub fn sample(&self, p: SpacePoint) -> Result<FieldSample> {
        if !(p.r > 0.0) {
            return Err(Error::AxisExcluded { r: p.r });
        }
        let h = self.params.hbar;
        let chi = self.radial.value(p.r)?;
        let th = self.theta.value(p.theta)?;
        let z = self.axial.value(p.z)?;
        Ok(FieldSample {
            rho: chi * chi / p.r * th * th * z * z,
            p_r: h * self.radial.coefficients().c / (chi * chi),
            p_theta: self.params.beta() * h * p.r + h * self.theta.coefficients().c / (p.r * th * th),
            p_z: h * self.axial.coefficients().c / (z * z),
        })
    }
}

/// Fields carrying nonzero sector currents `C_r + C_theta + C_z = 0` on the
/// amplitudes `R^2 = e^{-r^2}`, `Theta^2 = 1 + cos(theta)/2`,
/// `Z^2 = 1/(1 + z^2)`, with momenta from the integrated continuity relations
/// `r R^2 p_r = K_r - C_r e^{-r^2}/2`,
/// `Theta^2 (p_theta - eBr/2) = K_theta + r C_theta (theta + sin(theta)/2)`,
/// `Z^2 p_z = K_z + C_z atan(z)`.
#[derive(Debug, Clone, Copy)]
pub struct CurrentFields {
    pub branch: CurrentBranch,
    pub k: [f64; 3],
    params: PhysParams,
}

impl CurrentFields {
    pub fn new(branch: CurrentBranch, k: [f64; 3], params: PhysParams) -> Result<Self> {
        params.validate()?;
        Ok(Self { branch, k, params })
    }

    pub fn sample(&self, p: SpacePoint) -> Result<FieldSample> {
        if !(p.r > 0.0) {
            return Err(Error::AxisExcluded { r: p.r });
        }
        let CurrentBranch { c_r, c_theta, c_z } = self.branch;
        let r2 = (-p.r * p.r).exp();
        let t2 = 1.0 + 0.5 * p.theta.cos();
        let z2 = 1.0 / (1.0 + p.z * p.z);
        Ok(FieldSample {
            rho: r2 * t2 * z2,
            p_r: (self.k[0] - 0.5 * c_r * r2) / (p.r * r2),
            p_theta: 0.5 * self.params.eb() * p.r + (self.k[1] + p.r * c_theta * (p.theta + 0.5 * p.theta.sin())) / t2,
            p_z: (self.k[2] + c_z * p.z.atan()) / z2,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flux::{divergence_residual, FieldBox};
    use crate::profile::UniformGrid;

    fn unit_beta() -> PhysParams {
        PhysParams::new(1.0, 1.0, 2.0, 1.0).unwrap()
    }

    #[test]
    fn el_state_has_el_energy() {
        let p = PhysParams::new(1.0, 1.3, 1.0, 1.7).unwrap();
        for (n, l) in [(0, 0), (1, 2), (3, 1), (2, 4)] {
            let s =
                ElState::new(QuantumNumbers::new(n, l, 0.8), p, EPCoefficients::from_ad(1.0, 0.3, 0.6, 0.8).unwrap())
                    .unwrap();
            for &(r, t, z) in &[(0.4, 0.3, 0.2), (1.0, 2.0, -0.7), (1.9, -1.0, 1.5)] {
                let res = s.energy_residual(&SpacePoint::new(r, t, z)).unwrap();
                assert!(res < 1e-11 * s.energy().max(1.0), "n={n} l={l} r={r}: {res}");
            }
        }
        assert!(ElState::new(QuantumNumbers::new(0, -1, 1.0), p, EPCoefficients::symmetric(0.0, 1.0).unwrap()).is_err());
    }

    #[test]
    fn el_state_residual_sees_wrong_energy() {
        let p = unit_beta();
        let s = ElState::new(QuantumNumbers::new(1, 1, 1.0), p, EPCoefficients::from_ad(1.0, 0.0, 1.0, 1.0).unwrap())
            .unwrap();
        let pt = SpacePoint::new(0.8, 0.1, 0.1);
        let a = s.amplitudes(&pt).unwrap();
        let m = s.momenta(&pt).unwrap();
        let off = flux::bohm_energy_residual(&a, &m, s.energy() + 0.1, &p, &pt).unwrap();
        assert!((off - 0.1).abs() < 1e-10);
    }

    #[test]
    fn cbr_state_has_cbr_energy() {
        for p in [PhysParams::default(), unit_beta(), PhysParams::new(1.0, 1.0, -1.0, 1.5).unwrap()] {
            for (n, l) in [(0, 1), (2, -1), (1, 3)] {
                let s = CbrState::new(QuantumNumbers::new(n, l, 1.2), p).unwrap();
                for &(r, t, z) in &[(0.5, 0.4, 0.3), (1.2, 1.5, 1.1), (2.0, -0.7, 2.4)] {
                    let res = s.energy_residual(&SpacePoint::new(r, t, z)).unwrap();
                    assert!(res < 1e-7, "n={n} l={l} r={r}: {res}");
                }
            }
        }
        assert_eq!(
            CbrState::new(QuantumNumbers::new(0, 0, 1.0), PhysParams::default()).err(),
            Some(Error::WhittakerDegenerate)
        );
    }

    #[test]
    fn pinney_fields_are_divergence_free() {
        let p = unit_beta();
        let f = PinneyFields::standard(&QuantumNumbers::new(1, 2, 1.0), p).unwrap();
        let b = FieldBox::new(
            UniformGrid::new(0.5, 2.5, 14).unwrap(),
            UniformGrid::new(0.0, 3.0, 14).unwrap(),
            UniformGrid::new(-1.0, 1.0, 14).unwrap(),
        )
        .unwrap();
        let res = divergence_residual(&b, |pt| f.sample(pt), &p).unwrap();
        assert!(res < 1e-10, "{res}");
    }

    #[test]
    fn current_fields_are_divergence_free() {
        let p = unit_beta();
        let br = CurrentBranch::from_radial_axial(-1.0, -0.5).unwrap();
        let f = CurrentFields::new(br, [1.0, 0.4, 0.2], p).unwrap();
        let b = FieldBox::new(
            UniformGrid::new(0.5, 2.0, 40).unwrap(),
            UniformGrid::new(0.2, 3.0, 40).unwrap(),
            UniformGrid::new(-1.0, 1.0, 40).unwrap(),
        )
        .unwrap();
        let res = divergence_residual(&b, |pt| f.sample(pt), &p).unwrap();
        assert!(res < 1e-5, "{res}");
        // breaking the zero sum leaves a source rho * sum C
        let bad = CurrentFields { branch: CurrentBranch { c_r: -1.0, c_theta: 1.5, c_z: 0.0 }, ..f };
        let res = divergence_residual(&b, |pt| bad.sample(pt), &p).unwrap();
        assert!(res > 1e-3);
    }
}
