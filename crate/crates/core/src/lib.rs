//! Ermakov–Pinney amplitudes, Bohmian current branches and regularised
//! spectra for a charged particle in a uniform magnetic field, checked
//! against an independent numerical oracle.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod ermakov;
mod error;
pub mod flux;
pub mod jet;
pub mod oracle;
pub mod params;
pub mod profile;
pub mod regular;
pub mod sectors;
pub mod specfun;
pub mod spectrum;
pub mod states;
pub mod verify;

pub use error::{Error, Result};
pub use params::{PhysParams, QuantumNumbers};
pub use profile::{ProfileValues, Provenance, SampledProfile, UniformGrid};
