//! Independent numerical ground truth: adaptive IVP integration,
//! finite-difference residuals and endpoint-singular quadrature.

mod fd;
mod ivp;
mod quad;

pub use fd::{fd_residual, fd_residual_complex, ResidualReport};
pub use ivp::{integrate_ivp, IvpProblem, Trajectory};
pub use quad::{quad_singular, quad_singular_nodes, QuadNode};
