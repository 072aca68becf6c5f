use clap::{Args, ValueEnum};
use num_complex::Complex64;

use super::output::{Cell, Table};
use super::{config::RunConfig, CliError};
use landau_bohm::ermakov::{EPCoefficients, LinearPair, PinneyAmplitude};
use landau_bohm::regular::{
    axial_regularised, azimuthal_whittaker, damped_axial_profile, damped_radial_profile, radial_regularised,
    theta_local_branch, LocalBranchParams,
};
use landau_bohm::sectors::{axial_amplitude_trig, radial_basis_quantised, theta_amplitude_trig};
use landau_bohm::{QuantumNumbers, Result, UniformGrid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sector {
    R,
    Theta,
    Z,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchKind {
    Ep,
    Regularised,
    Local,
    Whittaker,
    Damped,
}

pub const VALID_PAIRS: &str = "r:{ep,regularised,damped}, theta:{ep,whittaker,local}, z:{ep,regularised,damped}";

#[derive(Debug, Args)]
pub struct AmplitudeArgs {
    #[arg(long, value_enum)]
    pub sector: Sector,
    #[arg(long, value_enum)]
    pub branch: BranchKind,
    /// `start:stop:count` in the sector coordinate.
    #[arg(long, allow_hyphen_values = true)]
    pub grid: UniformGrid,
    #[arg(long, default_value_t = 0)]
    pub nr: u32,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub l: i32,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub kz: f64,
    /// Flux ratio for the azimuthal branches (default `beta`, i.e. `r = 1`).
    #[arg(long, allow_negative_numbers = true)]
    pub phi: Option<f64>,
    /// Azimuthal current parameter of the local branch.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub kappa: f64,
    /// Prefactor of the local branch.
    #[arg(long, default_value_t = 1.0)]
    pub a_theta: f64,
    /// Sectorial current constant of the damped branches.
    #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
    pub current: f64,
    /// Pinney coefficient `A`.
    #[arg(long, default_value_t = 1.0)]
    pub ep_a: f64,
    /// Pinney coefficient `D`; `B` follows from the constraint.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub ep_d: f64,
    /// Ermakov constant `c`.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub ep_c: f64,
}

enum Samples {
    Real(Vec<f64>),
    Complex(Vec<Complex64>),
}

fn real(grid: &UniformGrid, f: impl Fn(f64) -> Result<f64>) -> Result<Samples> {
    grid.points().into_iter().map(f).collect::<Result<Vec<_>>>().map(Samples::Real)
}

fn pinney<P: LinearPair>(pair: P, args: &AmplitudeArgs) -> Result<PinneyAmplitude<P>> {
    let w = pair.wronskian()?;
    PinneyAmplitude::new(pair, EPCoefficients::from_ad(args.ep_a, args.ep_d, args.ep_c, w)?)
}

fn coefficients(args: &AmplitudeArgs, w: f64) -> Result<EPCoefficients> {
    EPCoefficients::from_ad(args.ep_a, args.ep_d, args.ep_c, w)
}

pub fn run(args: &AmplitudeArgs, cfg: &RunConfig) -> std::result::Result<Table, CliError> {
    let p = &cfg.params;
    let g = &args.grid;
    let phi = args.phi.unwrap_or_else(|| p.beta());
    let samples = match (args.sector, args.branch) {
        (Sector::R, BranchKind::Ep) => {
            let amp = pinney(radial_basis_quantised(args.nr, p)?, args)?;
            real(g, |r| amp.value(r))?
        }
        (Sector::R, BranchKind::Regularised) => {
            let rad = radial_regularised(&QuantumNumbers::new(args.nr, args.l, 0.0), p)?;
            real(g, |r| rad.value(r))?
        }
        (Sector::R, BranchKind::Damped) => real(g, |r| damped_radial_profile(r, args.current, p))?,
        (Sector::Theta, BranchKind::Ep) => {
            let om = args.l.unsigned_abs() as f64;
            let amp = theta_amplitude_trig(coefficients(args, om)?, om)?;
            real(g, |t| amp.value(t))?
        }
        (Sector::Theta, BranchKind::Whittaker) => {
            let (one, zero) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
            let vals = g
                .points()
                .into_iter()
                .map(|t| azimuthal_whittaker(t, args.l, phi, one, zero))
                .collect::<Result<Vec<_>>>()?;
            Samples::Complex(vals)
        }
        (Sector::Theta, BranchKind::Local) => {
            let lp = LocalBranchParams::new(args.a_theta, phi, args.kappa)?;
            real(g, |t| theta_local_branch(t, &lp))?
        }
        (Sector::Z, BranchKind::Ep) => {
            let amp = axial_amplitude_trig(coefficients(args, args.kz)?, args.kz)?;
            real(g, |z| amp.value(z))?
        }
        (Sector::Z, BranchKind::Regularised) => {
            let ax = axial_regularised(args.kz)?;
            real(g, |z| ax.value(z))?
        }
        (Sector::Z, BranchKind::Damped) => real(g, |z| damped_axial_profile(z, args.current, p))?,
        (s, b) => {
            return Err(CliError::Usage(format!(
                "branch '{}' is not defined for sector '{}'; valid pairs: {VALID_PAIRS}",
                b.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default(),
                s.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default(),
            )))
        }
    };
    let pts = g.points();
    let table = match samples {
        Samples::Real(v) => {
            let mut t = Table::new(vec!["coordinate", "value"]);
            for (x, y) in pts.into_iter().zip(v) {
                t.push(vec![Cell::Num(x), Cell::Num(y)]);
            }
            t
        }
        Samples::Complex(v) => {
            let mut t = Table::new(vec!["coordinate", "value", "value_im"]);
            for (x, y) in pts.into_iter().zip(v) {
                t.push(vec![Cell::Num(x), Cell::Num(y.re), Cell::Num(y.im)]);
            }
            t
        }
    };
    Ok(table)
}
