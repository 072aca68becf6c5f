use clap::Args;

use super::output::{Cell, Table};
use super::{config::RunConfig, CliError};
use landau_bohm::spectrum::{energy_cbr, energy_el, energy_qm, spectral_ordering_check, SpectrumModel};
use landau_bohm::QuantumNumbers;

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    /// Radial quantum numbers, `a:b` inclusive or a single value.
    #[arg(long, default_value = "0:2")]
    pub nr: String,
    /// Angular quantum numbers, `a:b` inclusive or a single value.
    #[arg(long, default_value = "0:2", allow_hyphen_values = true)]
    pub l: String,
    /// Comma-separated axial wave numbers.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub kz: String,
    /// qm, el, cbr or all.
    #[arg(long, default_value = "all")]
    pub model: String,
}

/// Inclusive integer range `a:b`, or a single integer.
pub fn parse_range(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Usage(format!("bad range '{s}': expected a:b with integers a <= b"));
    let int = |p: &str| p.trim().parse::<i64>().map_err(|_| bad());
    let (a, b) = match s.split_once(':') {
        Some((a, b)) => (int(a)?, int(b)?),
        None => {
            let v = int(s)?;
            (v, v)
        }
    };
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn parse_list(s: &str) -> Result<Vec<f64>, CliError> {
    let vals = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| CliError::Usage(format!("bad k_z value '{p}'")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if vals.is_empty() {
        return Err(CliError::Usage("empty k_z list".into()));
    }
    Ok(vals)
}

enum Selection {
    One(SpectrumModel),
    All,
}

fn parse_model(s: &str) -> Result<Selection, CliError> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(Selection::All);
    }
    s.parse::<SpectrumModel>()
        .map(Selection::One)
        .map_err(|_| CliError::Usage(format!("unknown model '{s}': expected qm, el, cbr or all")))
}

pub fn run(args: &SpectrumArgs, cfg: &RunConfig) -> Result<Table, CliError> {
    let (n0, n1) = parse_range(&args.nr)?;
    if n0 < 0 || n1 > u32::MAX as i64 {
        return Err(CliError::Usage(format!("n_r range '{}' must be non-negative", args.nr)));
    }
    let (l0, l1) = parse_range(&args.l)?;
    if l0 < i32::MIN as i64 || l1 > i32::MAX as i64 {
        return Err(CliError::Usage(format!("l range '{}' is out of bounds", args.l)));
    }
    let kz = parse_list(&args.kz)?;
    let selection = parse_model(&args.model)?;
    let p = &cfg.params;
    let mut table = match selection {
        Selection::One(_) => Table::new(vec!["n_r", "l", "k_z", "model", "energy"]),
        Selection::All => Table::new(vec!["n_r", "l", "k_z", "model", "energy", "ordering"]),
    };
    for n in n0..=n1 {
        for l in l0..=l1 {
            for &k in &kz {
                let qn = QuantumNumbers::new(n as u32, l as i32, k);
                let head = |m: SpectrumModel, e: f64| {
                    vec![Cell::Int(n), Cell::Int(l), Cell::Num(k), Cell::Text(m.label().into()), Cell::Num(e)]
                };
                match selection {
                    Selection::One(m) => table.push(head(m, m.energy(&qn, p))),
                    Selection::All => {
                        let report = spectral_ordering_check(std::iter::once(&qn), p);
                        let flag = if report.checked == 0 {
                            "n/a"
                        } else if report.holds() {
                            "ok"
                        } else {
                            "violated"
                        };
                        for (m, e) in [
                            (SpectrumModel::Qm, energy_qm(&qn, p)),
                            (SpectrumModel::El, energy_el(&qn, p)),
                            (SpectrumModel::Cbr, energy_cbr(&qn, p)),
                        ] {
                            let mut row = head(m, e);
                            row.push(Cell::Text(flag.into()));
                            table.push(row);
                        }
                    }
                }
            }
        }
    }
    Ok(table)
}
