use num_complex::Complex64;

use super::{worst, Bound, Check, VerifyOptions};
use crate::ermakov::{
    pinney_residual, relative_variation, wronskian_variation, EPCoefficients, LinearPair, PinneyAmplitude, TrigPair,
};
use crate::oracle::fd_residual_complex;
use crate::params::{PhysParams, QuantumNumbers};
use crate::profile::{ProfileValues, Provenance, SampledProfile, UniformGrid};
use crate::sectors::{energy_el, radial_basis, SectorFrequencies};
use crate::specfun::{bessel_j, gamma, hyp1f1_real, whittaker_m, SeriesControl};
use crate::Result;

pub(crate) fn checks() -> Vec<Check> {
    vec![
        Check { name: "specfun.kummer_contiguity", bound: Bound::Residual(1e-10), run: kummer_contiguity },
        Check { name: "specfun.whittaker_ode", bound: Bound::Residual(1e-6), run: whittaker_ode },
        Check { name: "specfun.bessel_half_order", bound: Bound::Residual(1e-10), run: bessel_half_order },
        Check { name: "specfun.gamma_reflection", bound: Bound::Residual(1e-10), run: gamma_reflection },
        Check { name: "ep.invariant_constancy", bound: Bound::Residual(1e-8), run: invariant_constancy },
        Check { name: "ep.pinney_residual_radial", bound: Bound::Residual(1e-6), run: pinney_radial },
        Check { name: "ep.pinney_residual_theta", bound: Bound::Residual(1e-6), run: pinney_theta },
        Check { name: "ep.pinney_residual_axial", bound: Bound::Residual(1e-6), run: pinney_axial },
        Check { name: "ep.pinney_convergence_order", bound: Bound::Fixed(0.5), run: convergence_order },
        Check { name: "ep.wronskian_constancy", bound: Bound::Residual(1e-10), run: wronskian_constancy },
        Check { name: "sectors.el_degeneracy", bound: Bound::Residual(1e-13), run: el_degeneracy },
        Check { name: "sectors.theta_frequency_on_axis", bound: Bound::Residual(1e-14), run: theta_frequency },
    ]
}

fn grid_with_step(a: f64, b: f64, h: f64) -> Result<UniformGrid> {
    UniformGrid::new(a, b, ((b - a) / h).round() as usize + 1)
}

fn kummer_contiguity(_: &VerifyOptions) -> Result<f64> {
    // b M(a) - b M(a-1) - x M(a, b+1) = 0
    let ctl = SeriesControl::default();
    let mut out = 0.0f64;
    for &a in &[-1.3, 0.4, 2.2] {
        for &b in &[0.7, 1.5, 3.1] {
            for &x in &[-9.5, -3.0, 0.5, 4.0, 10.0] {
                let m = |a: f64, b: f64| hyp1f1_real(a, b, x, &ctl);
                let (t1, t2, t3) = (b * m(a, b)?, b * m(a - 1.0, b)?, x * m(a, b + 1.0)?);
                out = worst(out, (t1 - t2 - t3).abs() / (t1.abs() + t2.abs() + t3.abs()));
            }
        }
    }
    Ok(out)
}

fn whittaker_ode(_: &VerifyOptions) -> Result<f64> {
    let g = grid_with_step(0.5, 4.0, 5e-4)?;
    let mut out = 0.0f64;
    for &(kappa, mu) in
        &[(Complex64::new(0.3, 0.0), 0.25), (Complex64::new(0.0, -0.4), std::f64::consts::FRAC_1_SQRT_2)]
    {
        let mu_c = Complex64::new(mu, 0.0);
        let vals =
            g.points().iter().map(|&x| whittaker_m(kappa, mu_c, Complex64::new(x, 0.0))).collect::<Result<Vec<_>>>()?;
        let prof = SampledProfile::new("x", g.points(), ProfileValues::Complex(vals), Provenance::new("whittaker_m"))?;
        let rep = fd_residual_complex(&prof, |y, _, d2, x| d2 + y * (kappa / x - 0.25 + (0.25 - mu * mu) / (x * x)))?;
        out = worst(out, rep.max_abs);
    }
    Ok(out)
}

fn bessel_half_order(_: &VerifyOptions) -> Result<f64> {
    let ctl = SeriesControl::default();
    let mut out = 0.0f64;
    for i in 0..200 {
        let x = 0.1 + 0.1 * i as f64;
        let envelope = (2.0 / (std::f64::consts::PI * x)).sqrt();
        let exact = envelope * x.sin();
        out = worst(out, (bessel_j(0.5, x, &ctl)? - exact).abs() / envelope);
    }
    Ok(out)
}

fn gamma_reflection(_: &VerifyOptions) -> Result<f64> {
    let pi = std::f64::consts::PI;
    let mut out = 0.0f64;
    for i in 1..20 {
        for &im in &[0.0, 0.7, -2.5] {
            let z = Complex64::new(0.05 * i as f64, im);
            let lhs = gamma(z)? * gamma(Complex64::new(1.0, 0.0) - z)?;
            let rhs = pi / (z * pi).sin();
            out = worst(out, (lhs - rhs).norm() / rhs.norm());
        }
    }
    Ok(out)
}

fn radial_amplitude(
    params: &PhysParams,
    a: f64,
    coef: (f64, f64, f64),
) -> Result<PinneyAmplitude<crate::sectors::RadialPair>> {
    let pair = radial_basis(a, params)?;
    let w = pair.wronskian()?;
    PinneyAmplitude::new(pair, EPCoefficients::from_ad(coef.0, coef.1, coef.2, w)?)
}

fn invariant_constancy(_: &VerifyOptions) -> Result<f64> {
    let p = PhysParams::new(1.0, 1.0, 2.0, 1.0)?;
    let g = UniformGrid::new(0.2, 3.0, 281)?;
    let mut out = 0.0f64;
    for coef in [(1.0, 0.0, 1.0), (1.0, 0.2, 0.5), (2.0, -0.3, 1.0)] {
        let amp = radial_amplitude(&p, 0.0, coef)?;
        let vals = g.points().iter().map(|&r| amp.invariant_u1(r)).collect::<Result<Vec<_>>>()?;
        out = worst(out, relative_variation(&vals));
    }
    Ok(out)
}

fn radial_residual(h: f64, fault: bool) -> Result<f64> {
    let p = PhysParams::default();
    let amp = radial_amplitude(&p, 0.0, (1.0, 0.2, 0.5))?;
    let bump = if fault { 1e-3 } else { 0.0 };
    let rep = pinney_residual(
        |r| amp.value(r).map(|s| s * (1.0 + bump * (3.0 * r).sin())),
        |r| amp.pair().omega_sq(r),
        amp.coefficients().c,
        &grid_with_step(0.2, 2.5, h)?,
    )?;
    Ok(rep.max_abs)
}

fn trig_residual(omega: f64, coef: (f64, f64, f64), span: (f64, f64), h: f64) -> Result<f64> {
    let amp = PinneyAmplitude::new(TrigPair::new(omega)?, EPCoefficients::from_ad(coef.0, coef.1, coef.2, omega)?)?;
    let rep = pinney_residual(|q| amp.value(q), |_| omega * omega, coef.2, &grid_with_step(span.0, span.1, h)?)?;
    Ok(rep.max_abs)
}

fn theta_residual(h: f64) -> Result<f64> {
    trig_residual(1.0, (0.8, 0.2, 1.0), (0.0, 2.0 * std::f64::consts::PI), h)
}

fn axial_residual(h: f64) -> Result<f64> {
    trig_residual(1.5, (0.6, -0.05, 1.0), (-3.0, 3.0), h)
}

fn pinney_radial(opts: &VerifyOptions) -> Result<f64> {
    radial_residual(1e-3, opts.inject_fault)
}

fn pinney_theta(_: &VerifyOptions) -> Result<f64> {
    theta_residual(1e-3)
}

fn pinney_axial(_: &VerifyOptions) -> Result<f64> {
    axial_residual(1e-3)
}

fn convergence_order(_: &VerifyOptions) -> Result<f64> {
    let ratios = [
        radial_residual(1e-3, false)? / radial_residual(5e-4, false)?,
        theta_residual(1e-3)? / theta_residual(5e-4)?,
        axial_residual(1e-3)? / axial_residual(5e-4)?,
    ];
    Ok(ratios.iter().fold(0.0, |m, r| worst(m, (r - 4.0).abs())))
}

fn wronskian_constancy(_: &VerifyOptions) -> Result<f64> {
    let g = UniformGrid::new(0.0, 2.0, 201)?;
    let mut out = 0.0f64;
    for p in [PhysParams::default(), PhysParams::new(1.0, 1.0, -2.0, 1.5)?] {
        for a in [0.0, -0.3, 1.2] {
            out = worst(out, wronskian_variation(&radial_basis(a, &p)?, &g)?);
        }
    }
    Ok(out)
}

fn el_degeneracy(_: &VerifyOptions) -> Result<f64> {
    let p = PhysParams::new(1.0, 1.3, 1.0, 1.7)?;
    let mut out = 0.0f64;
    for n in 0..6 {
        let base = energy_el(&QuantumNumbers::new(n, 0, 0.5), &p);
        for l in 1..11 {
            out = worst(out, (energy_el(&QuantumNumbers::new(n, l, 0.5), &p) - base).abs() / base);
        }
    }
    Ok(out)
}

fn theta_frequency(_: &VerifyOptions) -> Result<f64> {
    let p = PhysParams::new(1.0, 1.0, 2.0, 1.0)?;
    let mut out = 0.0f64;
    for l in -5..6 {
        let f = SectorFrequencies::new(&QuantumNumbers::new(0, l, 0.0), &p);
        out = worst(out, (f.omega_theta_sq(0.0) - (l * l) as f64).abs());
    }
    Ok(out)
}
