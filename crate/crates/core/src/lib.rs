//! Momentum-space gauge fields and the non-commutative coordinates they induce.
//!
//! The crate is organised around five pieces:
//!
//! * [`phasegrid`]: momentum-representation states on a uniform grid, the
//!   spectral position operator `x = iħ ∂/∂p`, covariant positions
//!   `X = x - g C(p)`, commutators and the Born reciprocity map.
//! * [`gaugefield`]: a catalog of momentum gauge configurations `C_μ(p)`,
//!   gauge transformations, the field strength `G_μν` and the
//!   non-commutativity map `Θ_μν(p) = g G_μν(p)`.
//! * [`fieldsolve`]: static momentum-space field equations for sheet sources,
//!   a tridiagonal Poisson solver, the momentum Coulomb flux check and
//!   conserved-current helpers.
//! * [`landau`]: the harmonic oscillator gauged in both position and
//!   momentum, its effective parameters, Fock/grid Hamiltonians and spectra.
//! * [`cli`]: the `momgauge` command-line front end.
//!
//! Conventions: `ħ = c = 1` unless overridden, metric signature `(+,-,-,-)`,
//! and four-component arrays are indexed with `0` as the time-like slot.

// NaN has to fail tolerance checks, hence `!(x <= tol)`; index loops read
// closer to the formulas than iterator chains.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod cli;
pub mod error;
pub mod fieldsolve;
pub mod fourvec;
pub mod gaugefield;
pub mod landau;
pub mod phasegrid;

pub use error::{Error, Result};
pub use fourvec::FourVector;

/// Complex scalar used for all state amplitudes and matrix entries.
pub type C64 = num_complex::Complex64;
