use super::FluxContext;
use crate::profile::{Provenance, SampledProfile};
use crate::{Error, Result};

/// Sign of `xi = pi'/pi = +-sqrt(F/pi)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

/// `dF/dpi = 2F/pi -+ (4 r^2 C / pi) sqrt(F/pi) - (4/hbar^2) pi^2 + 4 Lambda + r^4 C^2 / pi^2`,
/// upper sign on the `Plus` branch.
pub fn f_branch_flow(f: f64, pi: f64, ctx: &FluxContext, c_theta: f64, branch: Branch) -> Result<f64> {
    if pi == 0.0 {
        return Err(Error::MomentumAxisSingularity);
    }
    let ratio = f / pi;
    if ratio < 0.0 {
        return Err(Error::BranchViolation { ratio });
    }
    let r2c = ctx.r * ctx.r * c_theta;
    Ok(2.0 * ratio - branch.sign() * 4.0 * r2c / pi * ratio.sqrt() - 4.0 / (ctx.hbar * ctx.hbar) * pi * pi
        + 4.0 * ctx.lambda
        + r2c * r2c / (pi * pi))
}

/// Zero-current solution `F = E_pi pi^2 - 4 pi^3 / hbar^2 - 4 Lambda pi`.
pub fn linear_flow_solution(pi: f64, ctx: &FluxContext) -> f64 {
    pi * (ctx.e_pi * pi - 4.0 * pi * pi / (ctx.hbar * ctx.hbar) - 4.0 * ctx.lambda)
}

/// `Theta = Theta0 exp(int w)` by cumulative trapezoidal integration on a
/// uniform grid.
pub fn theta_from_w(w_samples: &SampledProfile, theta0: f64) -> Result<SampledProfile> {
    let h = w_samples.uniform_step()?;
    let w = w_samples.real_values().ok_or_else(|| Error::InvalidParameter("w samples must be real".into()))?;
    let mut acc = 0.0;
    let mut out = Vec::with_capacity(w.len());
    out.push(theta0);
    for pair in w.windows(2) {
        acc += 0.5 * h * (pair[0] + pair[1]);
        out.push(theta0 * acc.exp());
    }
    SampledProfile::real(
        w_samples.coordinate.clone(),
        w_samples.grid.clone(),
        out,
        Provenance::new("theta_from_w").with("Theta0", theta0),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flux::{pi_theta_jet, uw_flow, AzimuthalState, FirstIntegral};
    use crate::oracle::{integrate_ivp, IvpProblem};
    use crate::profile::UniformGrid;

    fn ctx() -> FluxContext {
        FluxContext::with_lambda(1.0, 0.0, 1.0, 1.0, 10.0, 0.0).unwrap()
    }

    #[test]
    fn zero_current_is_the_linear_flow() {
        let c = ctx();
        for &(f, p) in &[(1.0, 0.7), (3.2, 1.9), (0.0, 0.5)] {
            let lin = 2.0 * f / p - 4.0 * p * p + 4.0 * c.lambda;
            for b in [Branch::Plus, Branch::Minus] {
                assert_eq!(f_branch_flow(f, p, &c, 0.0, b).unwrap(), lin);
            }
        }
    }

    #[test]
    fn branch_split() {
        let c = FluxContext::with_lambda(2.0, 0.5, 1.4, 1.0, 10.0, 0.0).unwrap();
        let (f, p, ct) = (2.3, 0.9, 0.35);
        let d =
            f_branch_flow(f, p, &c, ct, Branch::Plus).unwrap() - f_branch_flow(f, p, &c, ct, Branch::Minus).unwrap();
        let expected = -8.0 * c.r * c.r * ct * (f / p).sqrt() / p;
        assert!((d - expected).abs() < 1e-14);
    }

    #[test]
    fn domain_errors() {
        let c = ctx();
        assert_eq!(f_branch_flow(1.0, 0.0, &c, 0.0, Branch::Plus), Err(Error::MomentumAxisSingularity));
        assert!(matches!(f_branch_flow(-1.0, 1.0, &c, 0.0, Branch::Plus), Err(Error::BranchViolation { .. })));
    }

    #[test]
    fn linear_solution_matches_closed_form_momentum() {
        let c = ctx();
        for i in 0..50 {
            let j = pi_theta_jet(0.06 * i as f64, &c).unwrap();
            let xi_sq = (j.d1 / j.value).powi(2);
            assert!((linear_flow_solution(j.value, &c) / j.value - xi_sq).abs() < 1e-12);
        }
    }

    #[test]
    fn exponential_reconstruction() {
        let g = UniformGrid::new(0.0, 2.0, 201).unwrap();
        let zero = SampledProfile::tabulate("theta", &g, Provenance::default(), |_| Ok(0.0)).unwrap();
        assert!(theta_from_w(&zero, 1.7).unwrap().real_values().unwrap().iter().all(|&v| v == 1.7));
        let lin = SampledProfile::tabulate("theta", &g, Provenance::default(), |_| Ok(0.3)).unwrap();
        let th = theta_from_w(&lin, 2.0).unwrap();
        for (x, v) in th.grid.iter().zip(th.real_values().unwrap()) {
            assert!((v - 2.0 * (0.3 * x).exp()).abs() < 1e-8);
        }
    }

    #[test]
    fn reconstructed_amplitude_keeps_first_integral() {
        // phi = 0, hbar = 1: Lambda = l^2 and kappa = Theta^2 pi is conserved
        let c = FluxContext::with_lambda(4.0, 0.0, 1.0, 1.0, 20.0, 0.0).unwrap();
        let j = pi_theta_jet(0.0, &c).unwrap();
        let w0 = -j.d1 / (2.0 * j.value);
        let span = 1.5;
        let p = IvpProblem::new(
            |_t, y: &[f64], d: &mut [f64]| {
                let (dp, dw) = uw_flow(AzimuthalState { pi_theta: y[0], w: y[1] }, &c, 0.0);
                d[0] = dp;
                d[1] = dw;
            },
            vec![j.value, w0],
            0.0,
            span,
            1e-12,
            1e-14,
        )
        .unwrap();
        let tr = integrate_ivp(&p).unwrap();
        let g = UniformGrid::new(0.0, span, 3001).unwrap();
        let w = SampledProfile::tabulate("theta", &g, Provenance::default(), |t| Ok(tr.eval(t)[1])).unwrap();
        let th = theta_from_w(&w, 1.0).unwrap();
        let kappa = j.value;
        let fi = FirstIntegral::new(0.0, 2.0, kappa, 0.0, 1.0).unwrap();
        let e: Vec<f64> = g
            .points()
            .iter()
            .zip(th.real_values().unwrap())
            .zip(w.real_values().unwrap())
            .map(|((_, &t), &wv)| fi.energy(t, wv * t))
            .collect();
        let spread = e.iter().cloned().fold(f64::MIN, f64::max) - e.iter().cloned().fold(f64::MAX, f64::min);
        assert!(spread < 1e-5 * e[0].abs(), "spread {spread}");
    }
}
