use rand::rngs::Xoshiro256PlusPlus;
use rand::{RngExt, SeedableRng};

use super::{worst, Bound, Check, VerifyOptions};
use crate::ermakov::EPCoefficients;
use crate::flux::{
    divergence_residual, f_branch_flow, linear_flow_solution, momentum_period, nonlinpie_residual, pi_theta_closed,
    pi_theta_jet, s_theta_closed, theta_first_integral_quadrature, theta_from_w, uw_flow, AzimuthalState, Branch,
    CurrentBranch, FieldBox, FirstIntegral, FluxContext, SpacePoint,
};
use crate::oracle::{integrate_ivp, IvpProblem};
use crate::params::{PhysParams, QuantumNumbers};
use crate::profile::{Provenance, SampledProfile, UniformGrid};
use crate::states::{BohmState, CbrState, CurrentFields, ElState, PinneyFields};
use crate::Result;

pub(crate) fn checks() -> Vec<Check> {
    vec![
        Check { name: "flux.closed_form_vs_ode", bound: Bound::Residual(1e-6), run: closed_form_vs_ode },
        Check { name: "flux.action_derivative", bound: Bound::Residual(1e-4), run: action_derivative },
        Check { name: "flux.action_derivative_order", bound: Bound::Fixed(0.25), run: action_derivative_order },
        Check { name: "flux.nonlinpie_residual", bound: Bound::Residual(1e-5), run: nonlinpie },
        Check { name: "flux.f_branch_linear", bound: Bound::Residual(1e-8), run: f_branch_linear },
        Check { name: "flux.f_branch_split", bound: Bound::Residual(1e-12), run: f_branch_split },
        Check { name: "flux.quadrature_arcsin", bound: Bound::Residual(1e-8), run: quadrature_arcsin },
        Check { name: "flux.quadrature_round_trip", bound: Bound::Residual(1e-6), run: quadrature_round_trip },
        Check { name: "flux.theta_reconstruction", bound: Bound::Residual(1e-5), run: theta_reconstruction },
        Check { name: "flux.divergence_zero_current", bound: Bound::Residual(1e-5), run: divergence_zero_current },
        Check { name: "flux.divergence_current_branch", bound: Bound::Residual(1e-5), run: divergence_current_branch },
        Check { name: "flux.bohm_energy_el", bound: Bound::Residual(1e-5), run: bohm_energy_el },
        Check { name: "flux.bohm_energy_cbr", bound: Bound::Residual(1e-5), run: bohm_energy_cbr },
    ]
}

fn unit_ctx() -> Result<FluxContext> {
    FluxContext::with_lambda(1.0, 0.0, 1.0, 1.0, 10.0, 0.0)
}

fn skewed_ctx() -> Result<FluxContext> {
    FluxContext::with_lambda(2.5, 1.2, 1.3, 0.7, 30.0, 0.4)
}

fn closed_form_vs_ode(opts: &VerifyOptions) -> Result<f64> {
    let ctx = unit_ctx()?;
    let j0 = pi_theta_jet(ctx.theta0, &ctx)?;
    let mut w0 = -j0.d1 / (2.0 * j0.value);
    if opts.inject_fault {
        w0 += 1e-3;
    }
    let t1 = ctx.theta0 + momentum_period(&ctx);
    let p = IvpProblem::new(
        |_t, y: &[f64], d: &mut [f64]| {
            let (dp, dw) = uw_flow(AzimuthalState { pi_theta: y[0], w: y[1] }, &ctx, 0.0);
            d[0] = dp;
            d[1] = dw;
        },
        vec![j0.value, w0],
        ctx.theta0,
        t1,
        1e-11,
        1e-13,
    )?;
    let tr = integrate_ivp(&p)?;
    let mut out = 0.0f64;
    for i in 0..=400 {
        let th = ctx.theta0 + (t1 - ctx.theta0) * i as f64 / 400.0;
        out = worst(out, (tr.eval(th)[0] - pi_theta_closed(th, &ctx)?).abs());
    }
    Ok(out)
}

fn action_error(h: f64) -> Result<f64> {
    let ctx = skewed_ctx()?;
    let mut out = 0.0f64;
    for i in 0..100 {
        let th = -4.0 + 0.08 * i as f64;
        let fd = (s_theta_closed(th + h, &ctx, 0.0)? - s_theta_closed(th - h, &ctx, 0.0)?) / (2.0 * h);
        out = worst(out, (fd - ctx.hbar * ctx.phi - pi_theta_closed(th, &ctx)?).abs());
    }
    Ok(out)
}

fn action_derivative(_: &VerifyOptions) -> Result<f64> {
    action_error(1e-3)
}

fn action_derivative_order(_: &VerifyOptions) -> Result<f64> {
    let e = [action_error(4e-3)?, action_error(2e-3)?, action_error(1e-3)?];
    Ok(e.windows(2).fold(0.0, |m, w| worst(m, ((w[0] / w[1]).log2() - 2.0).abs())))
}

fn nonlinpie(_: &VerifyOptions) -> Result<f64> {
    let h = 1e-4;
    let mut out = 0.0f64;
    // absolute at unit scale, relative to the quartic term otherwise
    for (ctx, relative) in [(unit_ctx()?, false), (skewed_ctx()?, true)] {
        let period = momentum_period(&ctx);
        for i in 0..=200 {
            let th = ctx.theta0 + period * i as f64 / 200.0;
            let (pm, p0, pp) =
                (pi_theta_closed(th - h, &ctx)?, pi_theta_closed(th, &ctx)?, pi_theta_closed(th + h, &ctx)?);
            let d1 = (pp - pm) / (2.0 * h);
            let d2 = (pp - 2.0 * p0 + pm) / (h * h);
            let scale = if relative { 4.0 * p0.powi(4) / (ctx.hbar * ctx.hbar) } else { 1.0 };
            out = worst(out, nonlinpie_residual(p0, d1, d2, &ctx, 0.0).abs() / scale);
        }
    }
    Ok(out)
}

fn f_branch_linear(_: &VerifyOptions) -> Result<f64> {
    let ctx = unit_ctx()?;
    let (p0, p1) = (0.6, 1.9);
    let prob = IvpProblem::new(
        |pi, y: &[f64], d: &mut [f64]| {
            d[0] = f_branch_flow(y[0].max(0.0), pi, &ctx, 0.0, Branch::Plus).unwrap_or(f64::NAN);
        },
        vec![linear_flow_solution(p0, &ctx)],
        p0,
        p1,
        1e-12,
        1e-14,
    )?;
    let tr = integrate_ivp(&prob)?;
    let mut out = 0.0f64;
    for i in 0..=100 {
        let pi = p0 + (p1 - p0) * i as f64 / 100.0;
        let exact = linear_flow_solution(pi, &ctx);
        out = worst(out, (tr.eval(pi)[0] - exact).abs() / exact.abs().max(1.0));
    }
    // F / pi is the squared logarithmic derivative of the closed-form momentum
    for i in 0..100 {
        let j = pi_theta_jet(0.03 * i as f64, &ctx)?;
        let xi_sq = (j.d1 / j.value).powi(2);
        out = worst(out, (linear_flow_solution(j.value, &ctx) / j.value - xi_sq).abs() / xi_sq.max(1.0));
    }
    Ok(out)
}

fn f_branch_split(_: &VerifyOptions) -> Result<f64> {
    let ctx = FluxContext::with_lambda(2.0, 0.5, 1.4, 1.0, 10.0, 0.0)?;
    let mut out = 0.0f64;
    for &(f, p, ct) in &[(2.3, 0.9, 0.35), (0.4, 1.7, -1.2), (5.0, 0.3, 2.0)] {
        let d = f_branch_flow(f, p, &ctx, ct, Branch::Plus)? - f_branch_flow(f, p, &ctx, ct, Branch::Minus)?;
        let expected = -8.0 * ctx.r * ctx.r * ct * (f / p).sqrt() / p;
        out = worst(out, (d - expected).abs() / expected.abs());
    }
    Ok(out)
}

fn quadrature_arcsin(_: &VerifyOptions) -> Result<f64> {
    let mut out = 0.0f64;
    for &(e, l) in &[(1.3, 2.0), (0.5, 1.0)] {
        let amp = (2.0f64 * e).sqrt() / l;
        for i in 1..20 {
            let t = amp * 0.05 * i as f64;
            let q = theta_first_integral_quadrature(t, e, l, 0.0, 0.7, 1.0)?;
            let exact = (std::f64::consts::FRAC_PI_2 - (t / amp).asin()) / l;
            out = worst(out, (q - exact).abs());
        }
    }
    Ok(out)
}

fn quadrature_round_trip(_: &VerifyOptions) -> Result<f64> {
    let fi = FirstIntegral::new(1.5, 1.0, 0.4, 0.8, 1.0)?;
    let (lo, hi) = fi.turning_points(1.0);
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Err(crate::Error::ClassicallyForbidden { theta_amp: 1.0 });
    };
    let p = IvpProblem::new(
        |_t, y: &[f64], d: &mut [f64]| {
            d[0] = y[1];
            d[1] = fi.acceleration(y[0]);
        },
        vec![hi, 0.0],
        0.0,
        0.4,
        1e-12,
        1e-14,
    )?;
    let tr = integrate_ivp(&p)?;
    let mut out = 0.0f64;
    for i in 1..=8 {
        let th = 0.05 * i as f64;
        let y = tr.eval(th);
        if hi - y[0] < y[0] - lo {
            out = worst(out, (fi.quadrature(y[0])? - th).abs());
        }
    }
    Ok(out)
}

fn theta_reconstruction(_: &VerifyOptions) -> Result<f64> {
    let ctx = FluxContext::with_lambda(4.0, 0.0, 1.0, 1.0, 20.0, 0.0)?;
    let j = pi_theta_jet(0.0, &ctx)?;
    let span = 1.5;
    let p = IvpProblem::new(
        |_t, y: &[f64], d: &mut [f64]| {
            let (dp, dw) = uw_flow(AzimuthalState { pi_theta: y[0], w: y[1] }, &ctx, 0.0);
            d[0] = dp;
            d[1] = dw;
        },
        vec![j.value, -j.d1 / (2.0 * j.value)],
        0.0,
        span,
        1e-12,
        1e-14,
    )?;
    let tr = integrate_ivp(&p)?;
    let g = UniformGrid::new(0.0, span, 3001)?;
    let w = SampledProfile::tabulate("theta", &g, Provenance::new("uw_flow"), |t| Ok(tr.eval(t)[1]))?;
    let th = theta_from_w(&w, 1.0)?;
    let fi = FirstIntegral::new(0.0, 2.0, j.value, 0.0, 1.0)?;
    let energies: Vec<f64> = th
        .real_values()
        .unwrap_or_default()
        .iter()
        .zip(w.real_values().unwrap_or_default())
        .map(|(&t, &wv)| fi.energy(t, wv * t))
        .collect();
    let max = energies.iter().cloned().fold(f64::MIN, f64::max);
    let min = energies.iter().cloned().fold(f64::MAX, f64::min);
    Ok((max - min) / energies[0].abs())
}

fn divergence_box(n: usize) -> Result<FieldBox> {
    FieldBox::new(UniformGrid::new(0.5, 2.5, n)?, UniformGrid::new(0.2, 3.0, n)?, UniformGrid::new(-1.0, 1.0, n)?)
}

fn unit_beta() -> Result<PhysParams> {
    PhysParams::new(1.0, 1.0, 2.0, 1.0)
}

fn divergence_zero_current(_: &VerifyOptions) -> Result<f64> {
    let p = unit_beta()?;
    let f = PinneyFields::standard(&QuantumNumbers::new(1, 2, 1.0), p)?;
    divergence_residual(&divergence_box(54)?, |pt| f.sample(pt), &p)
}

fn divergence_current_branch(_: &VerifyOptions) -> Result<f64> {
    let p = unit_beta()?;
    let mut out = 0.0f64;
    for br in [CurrentBranch::from_radial_axial(-1.0, -0.5)?, CurrentBranch::from_radial_axial(-0.8, 0.8)?] {
        let f = CurrentFields::new(br, [1.0, 0.4, 0.2], p)?;
        out = worst(out, divergence_residual(&divergence_box(54)?, |pt| f.sample(pt), &p)?);
    }
    Ok(out)
}

fn sample_points(seed: u64, count: usize) -> Vec<SpacePoint> {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    (0..count)
        .map(|_| SpacePoint::new(rng.random_range(0.3..2.5), rng.random_range(0.2..3.0), rng.random_range(0.2..2.0)))
        .collect()
}

fn max_residual(state: &impl BohmState, points: &[SpacePoint]) -> Result<f64> {
    let scale = state.energy().abs().max(1.0);
    points.iter().try_fold(0.0f64, |m, pt| Ok(worst(m, state.energy_residual(pt)? / scale)))
}

fn bohm_energy_el(_: &VerifyOptions) -> Result<f64> {
    let p = PhysParams::new(1.0, 1.3, 1.0, 1.7)?;
    let pts = sample_points(11, 20);
    let mut out = 0.0f64;
    for (n, l) in [(0, 0), (2, 3)] {
        let s = ElState::new(QuantumNumbers::new(n, l, 0.8), p, EPCoefficients::from_ad(1.0, 0.3, 0.6, 0.8)?)?;
        out = worst(out, max_residual(&s, &pts)?);
    }
    Ok(out)
}

fn bohm_energy_cbr(_: &VerifyOptions) -> Result<f64> {
    let pts = sample_points(12, 20);
    let mut out = 0.0f64;
    for p in [PhysParams::default(), PhysParams::new(1.0, 1.0, -1.0, 1.5)?] {
        for (n, l) in [(0, 1), (1, -2)] {
            let s = CbrState::new(QuantumNumbers::new(n, l, 1.0), p)?;
            out = worst(out, max_residual(&s, &pts)?);
        }
    }
    Ok(out)
}
