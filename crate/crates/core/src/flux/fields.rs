use num_complex::Complex64;

use crate::jet::{ComplexJet, Jet};
use crate::params::PhysParams;
use crate::profile::UniformGrid;
use crate::{Error, Result};

/// Point in cylindrical coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacePoint {
    pub r: f64,
    pub theta: f64,
    pub z: f64,
}

impl SpacePoint {
    pub fn new(r: f64, theta: f64, z: f64) -> Self {
        Self { r, theta, z }
    }
}

/// Sector amplitudes `R(r)`, `Theta(theta)`, `Z(z)` with their first two
/// derivatives at a point. `Theta` may be complex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeJets {
    pub r: Jet,
    pub theta: ComplexJet,
    pub z: Jet,
}

/// Canonical momentum components `(p_r, p_theta, p_z)`; `p_theta` is the
/// physical component `(1/r) dS/dtheta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Momenta {
    pub p_r: f64,
    pub p_theta: f64,
    pub p_z: f64,
}

/// `|H_B - E|` with
/// `H_B = [p_r^2 + (p_theta - eBr/2)^2 + p_z^2] / 2m + Q` and
/// `Q = -(hbar^2/2m) (R''/R + R'/(rR) + Theta''/(r^2 Theta) + Z''/Z)`.
pub fn bohm_energy_residual(
    amps: &AmplitudeJets,
    mom: &Momenta,
    energy: f64,
    params: &PhysParams,
    point: &SpacePoint,
) -> Result<f64> {
    params.validate()?;
    if !(point.r > 0.0) {
        return Err(Error::AxisExcluded { r: point.r });
    }
    if amps.r.value == 0.0 || amps.theta.value == Complex64::new(0.0, 0.0) || amps.z.value == 0.0 {
        return Err(Error::QuantumPotentialSingular);
    }
    let r = point.r;
    let kin_theta = mom.p_theta - 0.5 * params.eb() * r;
    let kinetic = (mom.p_r * mom.p_r + kin_theta * kin_theta + mom.p_z * mom.p_z) / (2.0 * params.mass);
    let laplacian =
        Complex64::from(amps.r.d2 / amps.r.value + amps.r.d1 / (r * amps.r.value) + amps.z.d2 / amps.z.value)
            + amps.theta.curvature_ratio() / (r * r);
    let q = -laplacian * (params.hbar * params.hbar / (2.0 * params.mass));
    let res = q + kinetic - energy;
    if !res.re.is_finite() || !res.im.is_finite() {
        return Err(Error::QuantumPotentialSingular);
    }
    Ok(res.norm())
}

/// Density and momenta of a stationary field at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub rho: f64,
    pub p_r: f64,
    pub p_theta: f64,
    pub p_z: f64,
}

/// Regular `(r, theta, z)` sampling box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldBox {
    pub r: UniformGrid,
    pub theta: UniformGrid,
    pub z: UniformGrid,
}

impl FieldBox {
    pub fn new(r: UniformGrid, theta: UniformGrid, z: UniformGrid) -> Result<Self> {
        if !(r.start > 0.0) {
            return Err(Error::AxisExcluded { r: r.start });
        }
        for g in [&r, &theta, &z] {
            if g.count < 5 {
                return Err(Error::InvalidGrid("divergence box needs at least 5 points per axis".into()));
            }
        }
        Ok(Self { r, theta, z })
    }

    /// Number of interior points reached by the five-point stencils.
    pub fn interior_count(&self) -> usize {
        (self.r.count - 4) * (self.theta.count - 4) * (self.z.count - 4)
    }
}

fn d5(f: [f64; 5], h: f64) -> f64 {
    (f[0] - f[4] + 8.0 * (f[3] - f[1])) / (12.0 * h)
}

/// Largest `|(1/r) d_r(r rho p_r) + (1/r) d_theta[rho (p_theta - eBr/2)] + d_z(rho p_z)|`
/// over the interior of the box. Fields are sampled on the box and
/// differentiated with five-point central differences along each axis.
pub fn divergence_residual(
    field_box: &FieldBox,
    fields: impl Fn(SpacePoint) -> Result<FieldSample>,
    params: &PhysParams,
) -> Result<f64> {
    params.validate()?;
    let FieldBox { r: gr, theta: gt, z: gz } = *field_box;
    if !(gr.start > 0.0) {
        return Err(Error::AxisExcluded { r: gr.start });
    }
    if gr.count < 5 || gt.count < 5 || gz.count < 5 {
        return Err(Error::InvalidGrid("divergence box needs at least 5 points per axis".into()));
    }
    let (rs, ts, zs) = (gr.points(), gt.points(), gz.points());
    let (nr, nt, nz) = (rs.len(), ts.len(), zs.len());
    let idx = |i: usize, j: usize, k: usize| (i * nt + j) * nz + k;
    let half_eb = 0.5 * params.eb();
    // fluxes r rho p_r, rho (p_theta - eBr/2), rho p_z
    let mut flux = vec![[0.0f64; 3]; nr * nt * nz];
    for (i, &r) in rs.iter().enumerate() {
        for (j, &t) in ts.iter().enumerate() {
            for (k, &z) in zs.iter().enumerate() {
                let s = fields(SpacePoint::new(r, t, z))?;
                flux[idx(i, j, k)] = [r * s.rho * s.p_r, s.rho * (s.p_theta - half_eb * r), s.rho * s.p_z];
            }
        }
    }
    let (hr, ht, hz) = (gr.step(), gt.step(), gz.step());
    let mut worst = 0.0f64;
    for i in 2..nr - 2 {
        for j in 2..nt - 2 {
            for k in 2..nz - 2 {
                let fr = [0, 1, 2, 3, 4].map(|o| flux[idx(i + o - 2, j, k)][0]);
                let ft = [0, 1, 2, 3, 4].map(|o| flux[idx(i, j + o - 2, k)][1]);
                let fz = [0, 1, 2, 3, 4].map(|o| flux[idx(i, j, k + o - 2)][2]);
                let div = (d5(fr, hr) + d5(ft, ht)) / rs[i] + d5(fz, hz);
                if div.is_nan() {
                    return Ok(f64::INFINITY);
                }
                worst = worst.max(div.abs());
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flat_jets() -> AmplitudeJets {
        AmplitudeJets { r: Jet::constant(1.0), theta: Jet::constant(1.0).into(), z: Jet::constant(1.0) }
    }

    #[test]
    fn pure_gauge_energy() {
        let p = PhysParams::new(1.0, 1.3, 0.7, 2.0).unwrap();
        let pt = SpacePoint::new(1.4, 0.3, 0.2);
        let e = (p.eb() * pt.r).powi(2) / (8.0 * p.mass);
        let mom = Momenta { p_r: 0.0, p_theta: 0.0, p_z: 0.0 };
        assert!(bohm_energy_residual(&flat_jets(), &mom, e, &p, &pt).unwrap() < 1e-15);
    }

    #[test]
    fn plane_wave_along_axis() {
        // Z = cos(kz) with p_z = 0 carries the same energy as a plane wave
        let p = PhysParams::default();
        let k = 1.7f64;
        let z = 0.4;
        let amps =
            AmplitudeJets { z: Jet::new((k * z).cos(), -k * (k * z).sin(), -k * k * (k * z).cos()), ..flat_jets() };
        let pt = SpacePoint::new(1.0, 0.0, z);
        let e = 0.125 + 0.5 * k * k;
        let mom = Momenta { p_r: 0.0, p_theta: 0.0, p_z: 0.0 };
        assert!(bohm_energy_residual(&amps, &mom, e, &p, &pt).unwrap() < 1e-14);
    }

    #[test]
    fn guards() {
        let p = PhysParams::default();
        let mom = Momenta { p_r: 0.0, p_theta: 0.0, p_z: 0.0 };
        let mut amps = flat_jets();
        amps.z = Jet::new(0.0, 1.0, 0.0);
        assert_eq!(
            bohm_energy_residual(&amps, &mom, 0.0, &p, &SpacePoint::new(1.0, 0.0, 0.0)),
            Err(Error::QuantumPotentialSingular)
        );
        assert!(matches!(
            bohm_energy_residual(&flat_jets(), &mom, 0.0, &p, &SpacePoint::new(0.0, 0.0, 0.0)),
            Err(Error::AxisExcluded { .. })
        ));
    }

    fn unit_box() -> FieldBox {
        FieldBox::new(
            UniformGrid::new(0.5, 2.0, 14).unwrap(),
            UniformGrid::new(0.0, 3.0, 14).unwrap(),
            UniformGrid::new(-1.0, 1.0, 14).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn constant_density_at_rest() {
        // the gauge flux rho eBr/2 has no theta dependence
        let res = divergence_residual(
            &unit_box(),
            |_| Ok(FieldSample { rho: 2.0, p_r: 0.0, p_theta: 0.0, p_z: 0.0 }),
            &PhysParams::default(),
        )
        .unwrap();
        assert_eq!(res, 0.0);
    }

    #[test]
    fn detects_a_source() {
        // rho p_r = 1 gives div = 1/r
        let res = divergence_residual(
            &unit_box(),
            |_| Ok(FieldSample { rho: 1.0, p_r: 1.0, p_theta: 0.0, p_z: 0.0 }),
            &PhysParams::default(),
        )
        .unwrap();
        assert!(res > 0.5);
    }

    #[test]
    fn axis_is_excluded() {
        let g = UniformGrid::new(0.0, 1.0, 10).unwrap();
        assert!(matches!(FieldBox::new(g, g, g), Err(Error::AxisExcluded { .. })));
        let b = FieldBox { r: g, theta: g, z: g };
        let r = divergence_residual(
            &b,
            |_| Ok(FieldSample { rho: 1.0, p_r: 0.0, p_theta: 0.0, p_z: 0.0 }),
            &PhysParams::default(),
        );
        assert!(matches!(r, Err(Error::AxisExcluded { .. })));
    }
}
