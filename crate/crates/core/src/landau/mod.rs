//! The harmonic oscillator gauged in both position and momentum.
//!
//! With symmetric gauges `A = B×r/2` and `C = 𝓑×p/2` the Hamiltonian
//! `(p + eA)²/2m + mω²(x - gC)²/2` is a quadratic form in `(x, y, p_x, p_y)`.
//! Expanding it (the z-sector decouples and is dropped) gives an isotropic
//! oscillator with a lighter mass and a stiffer frequency plus an `L_z`
//! coupling `λ = -eB/2m + gmω²𝓑/2`:
//!
//! `H = K p²/2m + V mω² r²/2 + λ L_z`, `K = 1 + (gmω𝓑)²/4`, `V = 1 + (eB/mω)²/4`.
//!
//! Its levels are `ħω_eff(2n_r + |m| + 1) + ħλm` with `ω_eff = ω√(KV)`.
//!
//! Ladder operators follow `x = s(a + a†)`, `p = i t(a† - a)`, so that
//! `L_z = iħ(a₁a₂† - a₂a₁†)`.

mod analytic;
mod duality;
mod hamiltonian;
mod matrix;
mod params;
mod quadratic;
mod spectrum;

pub use analytic::{analytic_spectrum, contamination_threshold, level_energy, AnalyticLevel};
pub use duality::{reciprocity_duality_check, DualityReport};
pub use hamiltonian::{
    assemble_fock_hamiltonian, assemble_grid_hamiltonian, assemble_quadratic_fock, lz_fock, Basis, HamiltonianMatrix,
    Reference, MAX_GRID_POINTS, MIN_FOCK_NMAX,
};
pub use matrix::CMatrix;
pub use params::{effective_params, EffectiveParams, Mixing, OscillatorParams};
pub use quadratic::{QuadraticForm, PX, PY, X, Y};
pub use spectrum::{diagonalize, trusted_count, trusted_shells, SpectrumResult, HERMITICITY_TOL};
