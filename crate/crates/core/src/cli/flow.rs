use clap::Args;

use super::output::{Cell, Table};
use super::{config::RunConfig, CliError};
use landau_bohm::flux::{pi_theta_closed, s_theta_closed, FluxContext};
use landau_bohm::{Error, UniformGrid};

#[derive(Debug, Args)]
pub struct FlowArgs {
    /// `Lambda = l^2 + phi^2`.
    #[arg(long)]
    pub lambda: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub e_pi: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub theta0: f64,
    /// Radius fixing the flux ratio `phi = beta r^2`.
    #[arg(long, default_value_t = 1.0)]
    pub r: f64,
    /// Additive constant of the action.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub s0: f64,
    /// `start:stop:count` in theta.
    #[arg(long, default_value = "0:3.14159265358979:200", allow_hyphen_values = true)]
    pub grid: UniformGrid,
}

pub fn run(args: &FlowArgs, cfg: &RunConfig) -> Result<Table, CliError> {
    let p = &cfg.params;
    let ctx = FluxContext::with_lambda(args.lambda, p.flux_ratio(args.r), args.r, p.hbar, args.e_pi, args.theta0)?;
    let delta = ctx.discriminant();
    if !(delta > 0.0) {
        return Err(Error::DiscriminantBranch { delta }.into());
    }
    let mut table = Table::new(vec!["theta", "pi_theta", "s_theta"]);
    for th in args.grid.points() {
        let row = match (pi_theta_closed(th, &ctx), s_theta_closed(th, &ctx, args.s0)) {
            (Ok(pi), Ok(s)) => vec![Cell::Num(th), Cell::Num(pi), Cell::Num(s)],
            (Err(Error::MomentumPole { .. }), _) => vec![Cell::Num(th), Cell::Empty, Cell::Empty],
            (Err(e), _) | (_, Err(e)) => return Err(e.into()),
        };
        table.push(row);
    }
    Ok(table)
}
