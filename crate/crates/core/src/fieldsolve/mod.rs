//! Static momentum-space field equations `□_p C^ν = 4π𝒥^ν`.
//!
//! For sources that depend on one momentum component the equations reduce
//! to `d²C/dp² = -4πρ`. Sheet sources then give piecewise-linear potentials
//! and piecewise-constant fields, available in closed form
//! ([`PiecewiseField1D`]) and from a tridiagonal solver
//! ([`poisson_solve_1d`]) for cross-validation.

mod coulomb;
mod current;
mod piecewise;
mod poisson;
mod source;

pub use crate::fourvec::FourVector;
pub use coulomb::{coulomb_flux_check, MIN_FLUX_SAMPLES};
pub use current::{
    conservation_check, conservation_check_density, plane_wave_residual, transverse_current, ConservationReport,
    CurrentDensity, SmoothedSource,
};
pub use piecewise::{solve_capacitor, solve_sheets, PiecewiseField1D};
pub use poisson::{
    deposit, laplacian_residual, poisson_solve_1d, BoundaryCondition, PoissonSolution, ResidualReport, MIN_NODES,
    SOURCE_SIGN,
};
pub use source::{MomentumSource1D, Sheet, SheetKind};
