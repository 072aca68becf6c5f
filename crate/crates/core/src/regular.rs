//! Sector amplitudes under the canonical shell regularisation
//! `q_i p_i = hbar/2`: the Langer-corrected radial solution, the Bessel
//! axial solution, the complex Whittaker azimuthal solution, the real local
//! azimuthal branch and the damped profiles selected by the current
//! constants.

use num_complex::Complex64;

use crate::flux::CurrentBranch;
use crate::jet::Jet;
use crate::params::{PhysParams, QuantumNumbers};
use crate::specfun::{bessel_j, bessel_j_derivative, hyp1f1_real, whittaker_m, whittaker_w, SeriesControl, Upper};
use crate::{Error, Result};

/// Order `mu = 1/sqrt 2` shared by the axial Bessel and azimuthal Whittaker solutions.
pub const SHELL_ORDER: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Labels of a regularised radial state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularisedLabels {
    /// `sqrt(l^2 + 1/4)`.
    pub nu: f64,
    /// `-n_r`.
    pub a_r: f64,
    /// `2|beta| (2 n_r + nu + 1)`.
    pub kappa_sq: f64,
}

impl RegularisedLabels {
    pub fn new(qn: &QuantumNumbers, params: &PhysParams) -> Result<Self> {
        params.validate()?;
        let l = qn.l as f64;
        let nu = (l * l + 0.25).sqrt();
        let b = params.beta().abs();
        Ok(Self { nu, a_r: -(qn.n_r as f64), kappa_sq: 2.0 * b * (2.0 * qn.n_r as f64 + nu + 1.0) })
    }

    /// `(nu + 1)/2 - kappa^2/(4|beta|) - a_r`, zero for a quantised state.
    pub fn quantisation_defect(&self, params: &PhysParams) -> f64 {
        0.5 * (self.nu + 1.0) - self.kappa_sq / (4.0 * params.beta().abs()) - self.a_r
    }
}

/// `R(r) = r^nu e^{-|beta| r^2/2} 1F1(-n_r; nu + 1; |beta| r^2)` and
/// `chi = sqrt(r) R`, which solves
/// `chi'' + [kappa^2 - beta^2 r^2 - (nu^2 - 1/4)/r^2] chi = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialRegularised {
    pub labels: RegularisedLabels,
    n_r: u32,
    b: f64,
}

pub fn radial_regularised(qn: &QuantumNumbers, params: &PhysParams) -> Result<RadialRegularised> {
    Ok(RadialRegularised { labels: RegularisedLabels::new(qn, params)?, n_r: qn.n_r, b: params.beta().abs() })
}

fn kummer_jet(a: u32, c: f64, x: Jet) -> Result<Jet> {
    let ctl = SeriesControl::default();
    let n = a as f64;
    let m0 = hyp1f1_real(Upper::Degree(a), c, x.value, &ctl)?;
    let m1 = if a >= 1 { -n / c * hyp1f1_real(Upper::Degree(a - 1), c + 1.0, x.value, &ctl)? } else { 0.0 };
    let m2 = if a >= 2 {
        n * (n - 1.0) / (c * (c + 1.0)) * hyp1f1_real(Upper::Degree(a - 2), c + 2.0, x.value, &ctl)?
    } else {
        0.0
    };
    Ok(x.compose(m0, m1, m2))
}

impl RadialRegularised {
    pub fn value(&self, r: f64) -> Result<f64> {
        if r < 0.0 {
            return Err(Error::AxisExcluded { r });
        }
        let x = self.b * r * r;
        let m = hyp1f1_real(Upper::Degree(self.n_r), self.labels.nu + 1.0, x, &SeriesControl::default())?;
        Ok(r.powf(self.labels.nu) * (-0.5 * x).exp() * m)
    }

    pub fn jet(&self, r: f64) -> Result<Jet> {
        if !(r > 0.0) {
            return Err(Error::AxisExcluded { r });
        }
        let rj = Jet::variable(r);
        let x = (rj * rj).scale(self.b);
        Ok(rj.powf(self.labels.nu) * x.scale(-0.5).exp() * kummer_jet(self.n_r, self.labels.nu + 1.0, x)?)
    }

    pub fn chi_jet(&self, r: f64) -> Result<Jet> {
        Ok(Jet::variable(r).sqrt() * self.jet(r)?)
    }

    /// Coefficient `kappa^2 - beta^2 r^2 - (nu^2 - 1/4)/r^2` of the Langer form.
    pub fn omega_sq(&self, r: f64) -> f64 {
        let nu = self.labels.nu;
        self.labels.kappa_sq - self.b * self.b * r * r - (nu * nu - 0.25) / (r * r)
    }
}

/// `Z(z) = sqrt(z) J_{1/sqrt 2}(k_z z)` on `z > 0`; solves
/// `-Z'' + Z/(4z^2) = k_z^2 Z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxialRegularised {
    pub k_z: f64,
}

pub fn axial_regularised(k_z: f64) -> Result<AxialRegularised> {
    if !(k_z > 0.0) || !k_z.is_finite() {
        return Err(Error::InvalidParameter(format!("axial wavenumber must be positive (got {k_z})")));
    }
    Ok(AxialRegularised { k_z })
}

impl AxialRegularised {
    pub fn value(&self, z: f64) -> Result<f64> {
        if !(z > 0.0) {
            return Err(Error::AxialHalfLine { z });
        }
        Ok(z.sqrt() * bessel_j(SHELL_ORDER, self.k_z * z, &SeriesControl::default())?)
    }

    pub fn jet(&self, z: f64) -> Result<Jet> {
        if !(z > 0.0) {
            return Err(Error::AxialHalfLine { z });
        }
        let ctl = SeriesControl::default();
        let x = self.k_z * z;
        let j = bessel_j(SHELL_ORDER, x, &ctl)?;
        let dj = bessel_j_derivative(SHELL_ORDER, x, &ctl)?;
        let d2j = -dj / x - (1.0 - SHELL_ORDER * SHELL_ORDER / (x * x)) * j;
        let inner = Jet::variable(z).scale(self.k_z).compose(j, dj, d2j);
        Ok(Jet::variable(z).sqrt() * inner)
    }
}

/// `Theta = c1 M_{kappa,mu}(2 i l theta) + c2 W_{kappa,mu}(2 i l theta)` with
/// `mu = 1/sqrt 2` and `kappa = -i phi / (2l)`; solves
/// `Theta'' + (l^2 + phi/theta - 1/(4 theta^2)) Theta = 0`.
pub fn azimuthal_whittaker(theta: f64, l: i32, phi: f64, c1: Complex64, c2: Complex64) -> Result<Complex64> {
    if l == 0 {
        return Err(Error::WhittakerDegenerate);
    }
    if theta == 0.0 {
        return Err(Error::CanonicalRegularisationPoint);
    }
    let lf = l as f64;
    let kappa = Complex64::new(0.0, -phi / (2.0 * lf));
    let mu = Complex64::new(SHELL_ORDER, 0.0);
    let x = Complex64::new(0.0, 2.0 * lf * theta);
    let mut out = Complex64::new(0.0, 0.0);
    if c1 != Complex64::new(0.0, 0.0) {
        out += c1 * whittaker_m(kappa, mu, x)?;
    }
    if c2 != Complex64::new(0.0, 0.0) {
        out += c2 * whittaker_w(kappa, mu, x)?;
    }
    Ok(out)
}

/// Parameters of the real local azimuthal branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalBranchParams {
    pub a_theta: f64,
    /// Flux ratio `beta r^2`.
    pub phi: f64,
    /// `r^2 C_theta / hbar`.
    pub kappa: f64,
}

impl LocalBranchParams {
    pub fn new(a_theta: f64, phi: f64, kappa: f64) -> Result<Self> {
        if !(a_theta > 0.0) || !phi.is_finite() || !kappa.is_finite() || !a_theta.is_finite() {
            return Err(Error::InvalidParameter("local branch needs A > 0 and finite phi, kappa".into()));
        }
        Ok(Self { a_theta, phi, kappa })
    }

    pub fn from_current(a_theta: f64, r: f64, c_theta: f64, params: &PhysParams) -> Result<Self> {
        params.validate()?;
        Self::new(a_theta, params.flux_ratio(r), r * r * c_theta / params.hbar)
    }
}

/// `(-ln(1 - x) - x) / x^2`, continuous at `x = 0`; `|1 - x|` inside the log.
fn log_remainder(x: f64) -> f64 {
    if x.abs() < 0.1 {
        let (mut sum, mut pow) = (0.0, 1.0);
        for k in 2..40 {
            sum += pow / k as f64;
            pow *= x;
        }
        sum
    } else {
        (-(1.0 - x).abs().ln() - x) / (x * x)
    }
}

/// `Theta = sqrt(A) |theta|^{1/2} |1 - 2 phi theta|^{-(1 + kappa/(2 phi^2))/2} exp(-kappa theta/(2 phi))`.
///
/// The `kappa` part is evaluated as `exp(kappa theta^2 g(2 phi theta))` with
/// `g(x) = (-ln|1-x| - x)/x^2`, which stays finite as `phi -> 0` where the
/// amplitude tends to `sqrt(A) |theta|^{1/2} exp(kappa theta^2 / 2)`.
pub fn theta_local_branch(theta: f64, p: &LocalBranchParams) -> Result<f64> {
    if theta == 0.0 {
        return Err(Error::CanonicalRegularisationPoint);
    }
    let x = 2.0 * p.phi * theta;
    let gap = 1.0 - x;
    if gap.abs() <= 1e-14 {
        return Err(Error::FluxSingularity { theta });
    }
    let log = 0.5 * p.a_theta.ln() + 0.5 * theta.abs().ln() - 0.5 * gap.abs().ln()
        + p.kappa * theta * theta * log_remainder(x);
    Ok(log.exp())
}

/// `R^2(r) = exp(C_r r^2 / hbar)`.
pub fn damped_radial_profile(r: f64, c_r: f64, params: &PhysParams) -> Result<f64> {
    params.validate()?;
    Ok((c_r * r * r / params.hbar).exp())
}

/// `int_0^inf r R^2 dr = hbar / (2|C_r|)`, finite only for `C_r < 0`.
pub fn damped_radial_norm(c_r: f64, params: &PhysParams) -> Result<f64> {
    params.validate()?;
    if !(c_r < 0.0) {
        return Err(Error::DivergentTail { constant: c_r });
    }
    Ok(params.hbar / (2.0 * c_r.abs()))
}

/// `Z(z) = |z|^{1/2} exp(-|C_z| z^2 / (2 hbar))` for `C_z <= 0`.
pub fn damped_axial_profile(z: f64, c_z: f64, params: &PhysParams) -> Result<f64> {
    params.validate()?;
    if c_z > 0.0 {
        return Err(Error::DivergentTail { constant: c_z });
    }
    Ok(z.abs().sqrt() * (-c_z.abs() * z * z / (2.0 * params.hbar)).exp())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchClass {
    /// `C_r < 0` and `C_z < 0`, so `C_theta > 0`.
    ComponentwiseDamping,
    /// `C_z = -C_r`, `C_theta = 0`.
    RadialAxialCompensating,
    /// `C_theta < 0`.
    Inadmissible,
    /// Admissible `C_theta > 0` without damping in both radial and axial sectors.
    Irregular,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchAssignment {
    pub branch: CurrentBranch,
    pub class: BranchClass,
}

/// Close the current constraint with `C_theta = -(C_r + C_z)` and classify.
pub fn branch_assignment(c_r: f64, c_z: f64) -> Result<BranchAssignment> {
    if !c_r.is_finite() || !c_z.is_finite() {
        return Err(Error::InvalidParameter("current constants must be finite".into()));
    }
    let branch = CurrentBranch::from_radial_axial(c_r, c_z)?;
    let class = if c_r < 0.0 && c_z < 0.0 {
        BranchClass::ComponentwiseDamping
    } else if branch.c_theta == 0.0 {
        BranchClass::RadialAxialCompensating
    } else if branch.c_theta < 0.0 {
        BranchClass::Inadmissible
    } else {
        BranchClass::Irregular
    };
    Ok(BranchAssignment { branch, class })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{fd_residual, fd_residual_complex, quad_singular};
    use crate::profile::{ProfileValues, Provenance, SampledProfile, UniformGrid};
    use proptest::prelude::*;

    fn unit_beta() -> PhysParams {
        PhysParams::new(1.0, 1.0, 2.0, 1.0).unwrap()
    }

    #[test]
    fn ground_state_closed_form() {
        let rad = radial_regularised(&QuantumNumbers::new(0, 0, 0.0), &unit_beta()).unwrap();
        assert_eq!(rad.labels.nu, 0.5);
        for &r in &[0.3f64, 1.0, 2.2] {
            let expected = r.sqrt() * (-0.5 * r * r).exp();
            assert!((rad.value(r).unwrap() - expected).abs() < 1e-15);
        }
        assert!((rad.value(1e-6).unwrap() / 1e-6f64.powf(0.5) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn quantisation_identity() {
        let p = PhysParams::new(1.0, 1.0, 0.6, 1.5).unwrap();
        for n in 0..6 {
            for l in -4..5 {
                let lab = RegularisedLabels::new(&QuantumNumbers::new(n, l, 0.0), &p).unwrap();
                assert!(lab.quantisation_defect(&p).abs() < 1e-12);
                assert!(lab.nu >= 0.5);
            }
        }
    }

    #[test]
    fn radial_jet_matches_differences() {
        let rad = radial_regularised(&QuantumNumbers::new(3, 2, 0.0), &unit_beta()).unwrap();
        for &r in &[0.4, 1.1, 2.5] {
            let j = rad.jet(r).unwrap();
            let s = Jet::from_stencil(|x| rad.value(x), r, 1e-3).unwrap();
            assert!((j.value - s.value).abs() < 1e-14);
            assert!((j.d1 - s.d1).abs() < 1e-9 && (j.d2 - s.d2).abs() < 1e-7);
        }
    }

    #[test]
    fn langer_residual() {
        for (n, l) in [(0, 0), (2, 1), (4, 3)] {
            let rad = radial_regularised(&QuantumNumbers::new(n, l, 0.0), &unit_beta()).unwrap();
            let g = UniformGrid::new(0.2, 3.0, 14001).unwrap();
            let chi = SampledProfile::tabulate("r", &g, Provenance::default(), |r| Ok(rad.chi_jet(r)?.value)).unwrap();
            let rep = fd_residual(&chi, |y, _, d2, r| (d2 + rad.omega_sq(r) * y).abs()).unwrap();
            assert!(rep.max_abs < 1e-6, "n={n} l={l}: {}", rep.max_abs);
            for i in 0..g.count {
                let r = g.point(i);
                let j = rad.chi_jet(r).unwrap();
                assert!((j.d2 + rad.omega_sq(r) * j.value).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn axial_residual_and_scaling() {
        let ax = axial_regularised(1.0).unwrap();
        let g = UniformGrid::new(0.2, 5.0, 24001).unwrap();
        let z = SampledProfile::tabulate("z", &g, Provenance::default(), |z| ax.value(z)).unwrap();
        let rep = fd_residual(&z, |y, _, d2, z| (-d2 + y / (4.0 * z * z) - y).abs()).unwrap();
        assert!(rep.max_abs < 1e-6, "{}", rep.max_abs);
        let j = ax.jet(1.3).unwrap();
        assert!((-j.d2 + j.value / (4.0 * 1.69) - j.value).abs() < 1e-12);
        // Z_k(z) = Z_1(k z) / sqrt(k)
        let k2 = axial_regularised(2.0).unwrap();
        assert!((k2.value(0.7).unwrap() - ax.value(1.4).unwrap() / 2f64.sqrt()).abs() < 1e-15);
        assert!(matches!(ax.value(0.0), Err(Error::AxialHalfLine { .. })));
        assert!(axial_regularised(0.0).is_err());
    }

    #[test]
    fn axial_small_argument_order() {
        let ax = axial_regularised(1.0).unwrap();
        let p = 0.5 + SHELL_ORDER;
        let ratio = |z: f64| ax.value(z).unwrap() / z.powf(p);
        assert!((ratio(1e-4) / ratio(1e-5) - 1.0).abs() < 1e-7);
    }

    #[test]
    fn whittaker_residual_and_obstruction() {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let g = UniformGrid::new(0.2, 2.0, 18001).unwrap();
        for &(l, phi) in &[(1, 0.0), (2, 0.5), (-1, 0.8)] {
            let vals: Vec<Complex64> =
                g.points().iter().map(|&t| azimuthal_whittaker(t, l, phi, one, zero).unwrap()).collect();
            let prof =
                SampledProfile::new("theta", g.points(), ProfileValues::Complex(vals), Provenance::default()).unwrap();
            let lf = l as f64;
            let rep = fd_residual_complex(&prof, |y, _, d2, t| d2 + y * (lf * lf + phi / t - 0.25 / (t * t))).unwrap();
            assert!(rep.max_abs < 1e-6, "l={l} phi={phi}: {}", rep.max_abs);
        }
        let v = azimuthal_whittaker(0.7, 1, 0.5, one, zero).unwrap();
        assert!(v.im != 0.0);
        let two = azimuthal_whittaker(0.7, 1, 0.5, one * 2.0, zero).unwrap();
        assert!((two - v * 2.0).norm() < 1e-15);
        assert_eq!(azimuthal_whittaker(0.7, 0, 0.5, one, zero), Err(Error::WhittakerDegenerate));
        assert_eq!(azimuthal_whittaker(0.0, 1, 0.5, one, zero), Err(Error::CanonicalRegularisationPoint));
        let w = azimuthal_whittaker(0.7, 1, 0.5, zero, one).unwrap();
        assert!(w.norm().is_finite() && w.norm() > 0.0);
    }

    #[test]
    fn local_branch_limits() {
        let p = LocalBranchParams::new(2.0, 0.3, 0.0).unwrap();
        for &t in &[-1.0f64, 0.2, 0.9, 2.5] {
            let expected = 2f64.sqrt() * t.abs().sqrt() / (1.0 - 0.6 * t).abs().sqrt();
            assert!((theta_local_branch(t, &p).unwrap() - expected).abs() < 1e-15 * expected);
        }
        let q = LocalBranchParams::new(1.0, 0.0, 0.7).unwrap();
        let t = 0.8f64;
        assert!((theta_local_branch(t, &q).unwrap() - t.sqrt() * (0.35 * t * t).exp()).abs() < 1e-15);
        let tiny = LocalBranchParams::new(1.0, 1e-9, 0.7).unwrap();
        assert!((theta_local_branch(t, &tiny).unwrap() - theta_local_branch(t, &q).unwrap()).abs() < 1e-8);
        assert!((theta_local_branch(1e-8, &q).unwrap() / 1e-4 - 1.0).abs() < 1e-10);
        assert_eq!(theta_local_branch(0.0, &q), Err(Error::CanonicalRegularisationPoint));
        assert!(matches!(theta_local_branch(1.0 / 0.6, &p), Err(Error::FluxSingularity { .. })));
    }

    #[test]
    fn local_branch_matches_printed_form() {
        let p = LocalBranchParams::new(1.5, 0.4, -0.3).unwrap();
        for &t in &[-0.8, 0.3, 0.9, 2.0] {
            let gap = (1.0 - 2.0 * p.phi * t).abs();
            let direct = p.a_theta.sqrt()
                * t.abs().sqrt()
                * gap.powf(-(1.0 + p.kappa / (2.0 * p.phi * p.phi)) / 2.0)
                * (-p.kappa * t / (2.0 * p.phi)).exp();
            let v = theta_local_branch(t, &p).unwrap();
            assert!((v - direct).abs() < 1e-13 * direct, "theta={t}");
        }
    }

    #[test]
    fn local_branch_log_density_ode() {
        for &(phi, kappa) in &[(0.4, -0.3), (0.25, 1.1), (0.0, 0.5)] {
            let p = LocalBranchParams::new(1.0, phi, kappa).unwrap();
            let h = 1e-4;
            for &t in &[0.3, 0.7, 1.1, -0.6] {
                let ln2 = |x: f64| 2.0 * theta_local_branch(x, &p).unwrap().ln();
                let fd = (ln2(t + h) - ln2(t - h)) / (2.0 * h);
                let exact = (1.0 / t + 2.0 * kappa * t) / (1.0 - 2.0 * phi * t);
                assert!((fd - exact).abs() < 1e-6, "phi={phi} kappa={kappa} theta={t}");
            }
        }
    }

    #[test]
    fn damped_profiles() {
        let p = PhysParams::default();
        assert_eq!(damped_radial_profile(1.7, 0.0, &p).unwrap(), 1.0);
        let quad = quad_singular(|r| r * damped_radial_profile(r, -1.0, &p).unwrap(), 0.0, 12.0, 0.0, 1e-13).unwrap();
        assert!((quad - 0.5).abs() < 1e-12);
        assert_eq!(damped_radial_norm(-1.0, &p).unwrap(), 0.5);
        assert!(matches!(damped_radial_norm(1.0, &p), Err(Error::DivergentTail { .. })));
        let h = 1e-5;
        let z = |x: f64| damped_axial_profile(x, -1.0, &p).unwrap().ln();
        assert!(((z(1.0 + h) - z(1.0 - h)) / (2.0 * h) + 0.5).abs() < 1e-9);
        assert!((damped_axial_profile(1e-10, -1.0, &p).unwrap() / 1e-5 - 1.0).abs() < 1e-12);
        assert_eq!(damped_axial_profile(0.49, 0.0, &p).unwrap(), 0.7);
    }

    #[test]
    fn branch_examples() {
        let a = branch_assignment(-1.0, -2.0).unwrap();
        assert_eq!((a.branch.c_theta, a.class), (3.0, BranchClass::ComponentwiseDamping));
        let b = branch_assignment(-1.0, 1.0).unwrap();
        assert_eq!((b.branch.c_theta, b.class), (0.0, BranchClass::RadialAxialCompensating));
        let c = branch_assignment(1.0, 1.0).unwrap();
        assert_eq!((c.branch.c_theta, c.class), (-2.0, BranchClass::Inadmissible));
        let d = branch_assignment(0.5, -1.0).unwrap();
        assert_eq!(d.class, BranchClass::Irregular);
    }

    proptest! {
        #[test]
        fn branch_sum_and_sign_rules(c_r in -1e3f64..1e3, c_z in -1e3f64..1e3) {
            let a = branch_assignment(c_r, c_z).unwrap();
            let scale = c_r.abs().max(c_z.abs()).max(1.0);
            prop_assert!(a.branch.sum().abs() <= 4.0 * f64::EPSILON * scale);
            match a.class {
                BranchClass::ComponentwiseDamping => prop_assert!(a.branch.c_theta > 0.0),
                BranchClass::RadialAxialCompensating => prop_assert_eq!(a.branch.c_theta, 0.0),
                BranchClass::Inadmissible => prop_assert!(a.branch.c_theta < 0.0),
                BranchClass::Irregular => prop_assert!(a.branch.c_theta > 0.0 && (c_r >= 0.0 || c_z >= 0.0)),
            }
        }
    }
}
