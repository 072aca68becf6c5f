use std::f64::consts::PI;

use super::FluxContext;
use crate::jet::Jet;
use crate::{Error, Result};

/// Shifted angular momentum and logarithmic amplitude derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AzimuthalState {
    pub pi_theta: f64,
    pub w: f64,
}

/// Right-hand side of the coupled system
/// `pi' = r C_theta - 2 w pi`, `w' = (pi^2 - Lambda)/hbar^2 - w^2`.
pub fn uw_flow(state: AzimuthalState, ctx: &FluxContext, c_theta: f64) -> (f64, f64) {
    let AzimuthalState { pi_theta: p, w } = state;
    let dp = ctx.r * c_theta - 2.0 * w * p;
    let dw = (p * p - ctx.lambda) / (ctx.hbar * ctx.hbar) - w * w;
    (dp, dw)
}

/// `3 pi'^2 - 2 pi pi'' - 4 r^2 C pi' - (4/hbar^2) pi^4 + 4 Lambda pi^2 + r^4 C^2`.
pub fn nonlinpie_residual(pi: f64, dpi: f64, d2pi: f64, ctx: &FluxContext, c_theta: f64) -> f64 {
    let r2c = ctx.r * ctx.r * c_theta;
    3.0 * dpi * dpi - 2.0 * pi * d2pi - 4.0 * r2c * dpi - 4.0 / (ctx.hbar * ctx.hbar) * pi.powi(4)
        + 4.0 * ctx.lambda * pi * pi
        + r2c * r2c
}

fn closed_form_data(ctx: &FluxContext) -> Result<(f64, f64)> {
    if !(ctx.lambda > 0.0) {
        return Err(Error::InvalidParameter(format!("closed form needs Lambda > 0 (got {})", ctx.lambda)));
    }
    let delta = ctx.discriminant();
    if !(delta > 0.0) {
        return Err(Error::DiscriminantBranch { delta });
    }
    Ok((ctx.lambda.sqrt(), delta.sqrt()))
}

/// Period `pi / sqrt(Lambda)` of the closed-form momentum.
pub fn momentum_period(ctx: &FluxContext) -> f64 {
    PI / ctx.lambda.sqrt()
}

/// `pi_theta = 8 Lambda / (E_pi + sqrt(Delta) sin(2 sqrt(Lambda) (theta - theta0)))`
/// with analytic first and second derivatives.
pub fn pi_theta_jet(theta: f64, ctx: &FluxContext) -> Result<Jet> {
    let (sl, sd) = closed_form_data(ctx)?;
    let psi = 2.0 * sl * (theta - ctx.theta0);
    let (s, c) = psi.sin_cos();
    let den = Jet::new(ctx.e_pi + sd * s, 2.0 * sl * sd * c, -4.0 * ctx.lambda * sd * s);
    if den.value.abs() <= 1e-12 * (ctx.e_pi.abs() + sd) {
        return Err(Error::MomentumPole { theta });
    }
    Ok(Jet::constant(8.0 * ctx.lambda) / den)
}

pub fn pi_theta_closed(theta: f64, ctx: &FluxContext) -> Result<f64> {
    pi_theta_jet(theta, ctx).map(|j| j.value)
}

/// `S_theta = hbar phi theta + hbar atan[(E_pi tan(sqrt(Lambda)(theta - theta0)) + sqrt(Delta)) hbar / (8 sqrt(Lambda))] + S0`,
/// unwrapped across the poles of `tan` so that it is continuous.
pub fn s_theta_closed(theta: f64, ctx: &FluxContext, s0: f64) -> Result<f64> {
    let (sl, sd) = closed_form_data(ctx)?;
    let arg = sl * (theta - ctx.theta0);
    let arc = ((ctx.e_pi * arg.tan() + sd) * ctx.hbar / (8.0 * sl)).atan();
    // number of tan poles between theta0 and theta
    let sheets = ((arg + 0.5 * PI) / PI).floor();
    Ok(ctx.hbar * ctx.phi * theta + ctx.hbar * (arc + PI * ctx.e_pi.signum() * sheets) + s0)
}
