use num_complex::Complex64;
use rand::rngs::Xoshiro256PlusPlus;
use rand::{RngExt, SeedableRng};

use super::{worst, Bound, Check, VerifyOptions};
use crate::oracle::{fd_residual, fd_residual_complex, quad_singular};
use crate::params::{PhysParams, QuantumNumbers};
use crate::profile::{ProfileValues, Provenance, SampledProfile, UniformGrid};
use crate::regular::{
    axial_regularised, azimuthal_whittaker, branch_assignment, damped_radial_norm, damped_radial_profile,
    radial_regularised, theta_local_branch, BranchClass, LocalBranchParams, RegularisedLabels,
};
use crate::Result;

pub(crate) fn checks() -> Vec<Check> {
    vec![
        Check { name: "regular.langer_radial", bound: Bound::Residual(1e-6), run: langer_radial },
        Check { name: "regular.axial_bessel", bound: Bound::Residual(1e-6), run: axial_bessel },
        Check { name: "regular.whittaker_azimuthal", bound: Bound::Residual(1e-6), run: whittaker_azimuthal },
        Check { name: "regular.azimuthal_obstruction", bound: Bound::Fixed(1.0), run: azimuthal_obstruction },
        Check { name: "regular.quantisation_identity", bound: Bound::Residual(1e-12), run: quantisation_identity },
        Check { name: "regular.local_branch_log_density", bound: Bound::Residual(1e-6), run: local_log_density },
        Check { name: "regular.local_branch_zero_current", bound: Bound::Residual(1e-14), run: local_zero_current },
        Check { name: "regular.damped_radial_norm", bound: Bound::Residual(1e-10), run: damped_norm },
        Check { name: "regular.branch_zero_sum", bound: Bound::Fixed(4.0 * f64::EPSILON), run: branch_zero_sum },
        Check { name: "regular.branch_classification", bound: Bound::Fixed(0.0), run: branch_classification },
    ]
}

fn unit_beta() -> Result<PhysParams> {
    PhysParams::new(1.0, 1.0, 2.0, 1.0)
}

fn langer_radial(opts: &VerifyOptions) -> Result<f64> {
    let shift = if opts.inject_fault { 1e-3 } else { 0.0 };
    let g = UniformGrid::new(0.2, 3.0, 14001)?;
    let mut out = 0.0f64;
    for (n, l) in [(0, 0), (2, 1), (4, 3)] {
        let rad = radial_regularised(&QuantumNumbers::new(n, l, 0.0), &unit_beta()?)?;
        let chi = SampledProfile::tabulate("r", &g, Provenance::new("langer_radial"), |r| Ok(rad.chi_jet(r)?.value))?;
        let rep = fd_residual(&chi, |y, _, d2, r| d2 + (rad.omega_sq(r) + shift) * y)?;
        out = worst(out, rep.max_abs);
    }
    Ok(out)
}

fn axial_bessel(_: &VerifyOptions) -> Result<f64> {
    let g = UniformGrid::new(0.2, 5.0, 24001)?;
    let mut out = 0.0f64;
    for k in [1.0, 1.6] {
        let ax = axial_regularised(k)?;
        let z = SampledProfile::tabulate("z", &g, Provenance::new("axial_regularised"), |z| ax.value(z))?;
        let rep = fd_residual(&z, |y, _, d2, z| -d2 + y / (4.0 * z * z) - k * k * y)?;
        out = worst(out, rep.max_abs);
    }
    Ok(out)
}

fn whittaker_profile(g: &UniformGrid, l: i32, phi: f64) -> Result<SampledProfile> {
    let (one, zero) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
    let vals = g.points().iter().map(|&t| azimuthal_whittaker(t, l, phi, one, zero)).collect::<Result<Vec<_>>>()?;
    SampledProfile::new("theta", g.points(), ProfileValues::Complex(vals), Provenance::new("azimuthal_whittaker"))
}

fn whittaker_azimuthal(_: &VerifyOptions) -> Result<f64> {
    let g = UniformGrid::new(0.2, 2.0, 18001)?;
    let mut out = 0.0f64;
    for &(l, phi) in &[(1, 0.0), (2, 0.5), (-1, 0.8)] {
        let lf = l as f64;
        let rep = fd_residual_complex(&whittaker_profile(&g, l, phi)?, |y, _, d2, t| {
            d2 + y * (lf * lf + phi / t - 0.25 / (t * t))
        })?;
        out = worst(out, rep.max_abs);
    }
    Ok(out)
}

/// `1e-6 max|Theta| / max|Im Theta|`: below one when the imaginary part
/// exceeds a part per million of the amplitude.
fn azimuthal_obstruction(_: &VerifyOptions) -> Result<f64> {
    let g = UniformGrid::new(0.2, 2.0, 181)?;
    let prof = whittaker_profile(&g, 1, 0.5)?;
    let ProfileValues::Complex(vals) = &prof.values else {
        return Ok(f64::INFINITY);
    };
    let max_abs = vals.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let max_im = vals.iter().map(|v| v.im.abs()).fold(0.0, f64::max);
    Ok(1e-6 * max_abs / max_im)
}

fn quantisation_identity(_: &VerifyOptions) -> Result<f64> {
    let mut out = 0.0f64;
    for p in [PhysParams::new(1.0, 1.0, 0.6, 1.5)?, PhysParams::new(1.0, 2.0, -1.0, 1.0)?] {
        for n in 0..6 {
            for l in -4..5 {
                let lab = RegularisedLabels::new(&QuantumNumbers::new(n, l, 0.0), &p)?;
                out = worst(out, lab.quantisation_defect(&p).abs());
            }
        }
    }
    Ok(out)
}

fn local_log_density(_: &VerifyOptions) -> Result<f64> {
    let h = 1e-4;
    let mut out = 0.0f64;
    for &(phi, kappa) in &[(0.4, -0.3), (0.25, 1.1), (0.0, 0.5)] {
        let p = LocalBranchParams::new(1.0, phi, kappa)?;
        let ln2 = |x: f64| theta_local_branch(x, &p).map(|v| 2.0 * v.ln());
        for &t in &[-0.6, 0.3, 0.7, 1.1] {
            let fd = (ln2(t + h)? - ln2(t - h)?) / (2.0 * h);
            let exact = (1.0 / t + 2.0 * kappa * t) / (1.0 - 2.0 * phi * t);
            out = worst(out, (fd - exact).abs());
        }
    }
    Ok(out)
}

fn local_zero_current(_: &VerifyOptions) -> Result<f64> {
    let mut out = 0.0f64;
    for &(a, phi) in &[(2.0, 0.3), (0.5, -0.7)] {
        let p = LocalBranchParams::new(a, phi, 0.0)?;
        for &t in &[-1.0f64, 0.2, 0.9, 2.5] {
            let expected = (a * t.abs() / (1.0 - 2.0 * phi * t).abs()).sqrt();
            out = worst(out, (theta_local_branch(t, &p)? - expected).abs() / expected);
        }
    }
    Ok(out)
}

fn damped_norm(_: &VerifyOptions) -> Result<f64> {
    let mut out = 0.0f64;
    for p in [PhysParams::default(), PhysParams::new(0.5, 1.0, 1.0, 1.0)?] {
        for c in [-1.0f64, -0.3] {
            let tail = 40.0 * p.hbar / c.abs();
            let quad = quad_singular(
                |r| r * damped_radial_profile(r, c, &p).unwrap_or(f64::NAN),
                0.0,
                tail.sqrt(),
                0.0,
                1e-13,
            )?;
            let exact = damped_radial_norm(c, &p)?;
            out = worst(out, (quad - exact).abs() / exact);
        }
    }
    Ok(out)
}

fn random_currents() -> Vec<(f64, f64)> {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(2024);
    let mut v: Vec<(f64, f64)> =
        (0..1000).map(|_| (rng.random_range(-100.0..100.0), rng.random_range(-100.0..100.0))).collect();
    v.extend([(-1.0, -2.0), (-1.0, 1.0), (1.0, 1.0), (0.5, -1.0), (0.0, 0.0), (-3.0, 0.0)]);
    v
}

fn branch_zero_sum(_: &VerifyOptions) -> Result<f64> {
    random_currents().into_iter().try_fold(0.0f64, |m, (c_r, c_z)| {
        let a = branch_assignment(c_r, c_z)?;
        Ok(worst(m, a.branch.sum().abs() / c_r.abs().max(c_z.abs()).max(1.0)))
    })
}

fn expected_class(c_r: f64, c_z: f64) -> BranchClass {
    let s = c_r + c_z;
    if c_r < 0.0 && c_z < 0.0 {
        BranchClass::ComponentwiseDamping
    } else if s == 0.0 {
        BranchClass::RadialAxialCompensating
    } else if s > 0.0 {
        BranchClass::Inadmissible
    } else {
        BranchClass::Irregular
    }
}

fn branch_classification(_: &VerifyOptions) -> Result<f64> {
    let mut mismatches = 0usize;
    for (c_r, c_z) in random_currents() {
        if branch_assignment(c_r, c_z)?.class != expected_class(c_r, c_z) {
            mismatches += 1;
        }
    }
    Ok(mismatches as f64)
}
