use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::Deserialize;

use super::{Cli, CliError};
use landau_bohm::PhysParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    hbar: Option<f64>,
    mass: Option<f64>,
    charge: Option<f64>,
    field: Option<f64>,
    format: Option<Format>,
    tol: Option<f64>,
}

impl ConfigFile {
    fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))
    }
}

/// Settings after layering defaults, the config file and flags.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub params: PhysParams,
    pub format: Format,
    pub tol: Option<f64>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn resolve(cli: &Cli) -> Result<Self, CliError> {
        let file = match &cli.config {
            Some(p) => ConfigFile::load(p)?,
            None => ConfigFile::default(),
        };
        let d = PhysParams::default();
        let params = PhysParams::new(
            cli.hbar.or(file.hbar).unwrap_or(d.hbar),
            cli.mass.or(file.mass).unwrap_or(d.mass),
            cli.charge.or(file.charge).unwrap_or(d.charge),
            cli.field.or(file.field).unwrap_or(d.field),
        )?;
        let tol = cli.tol.or(file.tol);
        if let Some(t) = tol {
            if !(t > 0.0) {
                return Err(CliError::Usage(format!("--tol must be positive (got {t})")));
            }
        }
        Ok(Self { params, format: cli.format.or(file.format).unwrap_or_default(), tol, out: cli.out.clone() })
    }
}
