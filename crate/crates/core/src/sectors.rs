//! Zero-current amplitudes of the separated radial, azimuthal and axial
//! sectors, and the Ermakov–Lewis energy.

use crate::ermakov::{EPCoefficients, LinearPair, PairSample, PinneyAmplitude, TrigPair};
use crate::params::{PhysParams, QuantumNumbers};
use crate::specfun::{hyp1f1_real, SeriesControl, Upper};
use crate::{Error, Result};

fn shift(a: Upper, by: u32) -> Upper {
    match a {
        Upper::Degree(n) if n >= by => Upper::Degree(n - by),
        other => Upper::General(other.value() + by as f64),
    }
}

/// Even/odd parabolic-cylinder pair
/// `u1 = e^{-b r^2/2} 1F1(a; 1/2; b r^2)`, `u2 = r e^{-b r^2/2} 1F1(a + 1/2; 3/2; b r^2)`
/// with `b = |beta|`. Both solve `chi'' + (kappa^2 - beta^2 r^2) chi = 0`
/// with `kappa^2 = b (1 - 4a)`; the Wronskian is `1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialPair {
    a: Upper,
    b: f64,
}

impl RadialPair {
    pub fn kappa_sq(&self) -> f64 {
        self.b * (1.0 - 4.0 * self.a.value().re)
    }

    pub fn upper(&self) -> Upper {
        self.a
    }
}

/// Radial pair for a real Kummer parameter `a`.
pub fn radial_basis(a: f64, params: &PhysParams) -> Result<RadialPair> {
    params.validate()?;
    if !a.is_finite() {
        return Err(Error::InvalidParameter(format!("radial parameter a = {a}")));
    }
    Ok(RadialPair { a: Upper::General(a.into()), b: params.beta().abs() })
}

/// Radial pair for `a = -n_r`, with the even member summed as a polynomial.
pub fn radial_basis_quantised(n_r: u32, params: &PhysParams) -> Result<RadialPair> {
    params.validate()?;
    Ok(RadialPair { a: Upper::Degree(n_r), b: params.beta().abs() })
}

impl LinearPair for RadialPair {
    fn sample(&self, r: f64) -> Result<PairSample> {
        let ctl = SeriesControl::default();
        let b = self.b;
        let x = b * r * r;
        let g = (-0.5 * x).exp();
        let a_half = shift_half(self.a);
        let m1 = hyp1f1_real(self.a, 0.5, x, &ctl)?;
        let dm1 = 2.0 * self.a.value().re * hyp1f1_real(shift(self.a, 1), 1.5, x, &ctl)?;
        let m2 = hyp1f1_real(a_half, 1.5, x, &ctl)?;
        let dm2 = a_half.value().re / 1.5 * hyp1f1_real(shift(a_half, 1), 2.5, x, &ctl)?;
        // dx/dr = 2 b r
        let dx = 2.0 * b * r;
        Ok(PairSample {
            u1: g * m1,
            du1: g * (-b * r * m1 + dm1 * dx),
            u2: r * g * m2,
            du2: g * (m2 * (1.0 - x) + r * dm2 * dx),
        })
    }

    fn omega_sq(&self, r: f64) -> f64 {
        self.kappa_sq() - self.b * self.b * r * r
    }

    fn reference_point(&self) -> f64 {
        0.0
    }
}

fn shift_half(a: Upper) -> Upper {
    Upper::General(a.value() + 0.5)
}

/// Frequencies of the three separated equations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorFrequencies {
    pub kappa_r_sq: f64,
    pub beta: f64,
    pub l: i32,
    pub k_z: f64,
}

impl SectorFrequencies {
    pub fn new(qn: &QuantumNumbers, params: &PhysParams) -> Self {
        let beta = params.beta();
        Self { kappa_r_sq: beta.abs() * (4.0 * qn.n_r as f64 + 1.0), beta, l: qn.l, k_z: qn.k_z }
    }

    pub fn omega_r_sq(&self, r: f64) -> f64 {
        self.kappa_r_sq - self.beta * self.beta * r * r
    }

    pub fn omega_theta_sq(&self, r: f64) -> f64 {
        let l = self.l as f64;
        l * l - 2.0 * self.beta * l * r * r
    }

    pub fn omega_z_sq(&self) -> f64 {
        self.k_z * self.k_z
    }
}

fn trig_amplitude(coef: EPCoefficients, omega: f64) -> Result<PinneyAmplitude<TrigPair>> {
    PinneyAmplitude::new(TrigPair::new(omega)?, coef)
}

/// `Theta(theta) = sqrt(A cos^2 + B sin^2 + 2D sin cos)` at fixed frequency.
pub fn theta_amplitude_trig(coef: EPCoefficients, omega_theta: f64) -> Result<PinneyAmplitude<TrigPair>> {
    trig_amplitude(coef, omega_theta)
}

/// `Z(z)` analogue of [`theta_amplitude_trig`] with frequency `k_z`.
pub fn axial_amplitude_trig(coef: EPCoefficients, k_z: f64) -> Result<PinneyAmplitude<TrigPair>> {
    trig_amplitude(coef, k_z)
}

/// `hbar w_c (n_r + 1/2) + (hbar l / 2m)(|eB| - eB) + hbar^2 k_z^2 / 2m`.
pub fn energy_el(qn: &QuantumNumbers, params: &PhysParams) -> f64 {
    let eb = params.eb();
    params.hbar * params.omega_c() * (qn.n_r as f64 + 0.5)
        + params.hbar * qn.l as f64 / (2.0 * params.mass) * (eb.abs() - eb)
        + params.axial_kinetic(qn.k_z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ermakov::{pinney_residual, relative_variation, wronskian_variation};
    use crate::oracle::fd_residual;
    use crate::profile::{Provenance, SampledProfile, UniformGrid};

    fn unit_beta() -> PhysParams {
        PhysParams::new(1.0, 1.0, 2.0, 1.0).unwrap()
    }

    #[test]
    fn ground_radial_member_is_gaussian() {
        let pair = radial_basis(0.0, &unit_beta()).unwrap();
        assert_eq!(pair.kappa_sq(), 1.0);
        for &r in &[0.0, 0.5, 2.0] {
            assert!((pair.sample(r).unwrap().u1 - (-0.5 * r * r).exp()).abs() < 1e-15);
        }
    }

    #[test]
    fn ground_member_residual_at_unit_beta() {
        let pair = radial_basis(0.0, &unit_beta()).unwrap();
        let g = UniformGrid::new(0.1, 3.0, 2901).unwrap();
        let prof = SampledProfile::tabulate("r", &g, Provenance::default(), |r| Ok(pair.sample(r)?.u1)).unwrap();
        let rep = fd_residual(&prof, |y, _d1, d2, r| d2 + pair.omega_sq(r) * y).unwrap();
        assert!(rep.max_abs < 1e-6, "{rep:?}");
    }

    #[test]
    fn radial_members_solve_the_linear_equation() {
        // natural units: beta = 1/2
        let params = PhysParams::default();
        for a in [0.0, -1.0, -2.0, 0.3] {
            let pair = radial_basis(a, &params).unwrap();
            let g = UniformGrid::new(0.1, 2.5, 4801).unwrap();
            for pick in [0, 1] {
                let prof = SampledProfile::tabulate("r", &g, Provenance::default(), |r| {
                    let s = pair.sample(r)?;
                    Ok(if pick == 0 { s.u1 } else { s.u2 })
                })
                .unwrap();
                let rep = fd_residual(&prof, |y, _d1, d2, r| d2 + pair.omega_sq(r) * y).unwrap();
                assert!(rep.max_abs < 1e-6, "a={a} member {pick}: {rep:?}");
            }
        }
    }

    #[test]
    fn radial_derivatives_are_analytic() {
        let pair = radial_basis_quantised(2, &unit_beta()).unwrap();
        let h = 1e-5;
        for &r in &[0.3, 1.1, 2.4] {
            let s = pair.sample(r).unwrap();
            let (p, m) = (pair.sample(r + h).unwrap(), pair.sample(r - h).unwrap());
            assert!((s.du1 - (p.u1 - m.u1) / (2.0 * h)).abs() < 1e-8);
            assert!((s.du2 - (p.u2 - m.u2) / (2.0 * h)).abs() < 1e-8);
        }
    }

    #[test]
    fn quantised_and_real_parameter_agree() {
        let p = unit_beta();
        let q = radial_basis_quantised(3, &p).unwrap();
        let r = radial_basis(-3.0, &p).unwrap();
        for &x in &[0.2, 1.0, 2.5] {
            let (a, b) = (q.sample(x).unwrap(), r.sample(x).unwrap());
            assert!((a.u1 - b.u1).abs() < 1e-13 && (a.du1 - b.du1).abs() < 1e-12);
        }
        assert_eq!(q.kappa_sq(), 13.0);
    }

    #[test]
    fn radial_wronskian_is_constant() {
        let pair = radial_basis(-1.0, &unit_beta()).unwrap();
        let w1 = pair.sample(0.5).unwrap().wronskian();
        let w2 = pair.sample(2.0).unwrap().wronskian();
        assert!((w1 - w2).abs() < 1e-8 * w1.abs());
        assert!((pair.wronskian().unwrap() - 1.0).abs() < 1e-15);
        assert!(wronskian_variation(&pair, &UniformGrid::new(0.2, 3.0, 200).unwrap()).unwrap() < 1e-8);
    }

    #[test]
    fn radial_pinney_amplitude() {
        let pair = radial_basis(0.0, &PhysParams::default()).unwrap();
        let coef = EPCoefficients::from_ad(1.0, 0.2, 0.5, 1.0).unwrap();
        let amp = PinneyAmplitude::new(pair, coef).unwrap();
        let g = UniformGrid::new(0.2, 2.5, 2301).unwrap();
        let rep = pinney_residual(|r| amp.value(r), |r| pair.omega_sq(r), coef.c, &g).unwrap();
        assert!(rep.max_abs < 1e-6, "{rep:?}");
        // invariant on the wider unit-beta window
        let pair = radial_basis(0.0, &unit_beta()).unwrap();
        let amp = PinneyAmplitude::new(pair, coef).unwrap();
        let g = UniformGrid::new(0.2, 3.0, 281).unwrap();
        let inv: Vec<f64> = g.points().iter().map(|&r| amp.invariant_u1(r).unwrap()).collect();
        assert!(relative_variation(&inv) < 1e-8);
    }

    #[test]
    fn trig_sector_amplitudes() {
        let th = theta_amplitude_trig(EPCoefficients::symmetric(2.0, 3.0).unwrap(), 3.0).unwrap();
        assert!((th.value(0.4).unwrap() - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
        let z = axial_amplitude_trig(EPCoefficients::new(1.0, 0.0, 0.0, 0.0, 1.5).unwrap(), 1.5).unwrap();
        assert!((z.value(0.9).unwrap() - (1.35f64).cos().abs()).abs() < 1e-15);
        assert!(theta_amplitude_trig(EPCoefficients::symmetric(2.0, 3.0).unwrap(), 2.0).is_err());
    }

    #[test]
    fn frequencies() {
        let f = SectorFrequencies::new(&QuantumNumbers::new(1, 3, 2.0), &unit_beta());
        assert_eq!(f.omega_theta_sq(0.0), 9.0);
        assert_eq!(f.omega_z_sq(), 4.0);
        assert_eq!(f.omega_r_sq(0.0), 5.0);
    }

    #[test]
    fn el_energies_in_natural_units() {
        let p = PhysParams::default();
        assert_eq!(energy_el(&QuantumNumbers::new(0, 0, 0.0), &p), 0.5);
        assert_eq!(energy_el(&QuantumNumbers::new(2, 5, 0.0), &p), 2.5);
        assert_eq!(energy_el(&QuantumNumbers::new(0, 0, 2.0), &p), 2.5);
        for l in 0..20 {
            assert_eq!(energy_el(&QuantumNumbers::new(1, l, 0.0), &p), 1.5);
        }
        // opposite field sign: linear growth in l
        let flipped = PhysParams::new(1.0, 1.0, -1.0, 1.0).unwrap();
        assert_eq!(energy_el(&QuantumNumbers::new(0, 2, 0.0), &flipped), 2.5);
    }
}
