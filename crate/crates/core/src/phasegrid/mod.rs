//! Momentum-representation phase space on a grid.
//!
//! States are sampled wavefunctions `ψ(p)`; positions act as
//! `x̂ = iħ ∂/∂p` through periodic Fourier differentiation, so every
//! identity here is meant to be checked on states localized well inside the
//! grid (three widths or more from the edges). Residuals are measured in
//! state norm.

mod grid;
mod noncomm;
mod operator;
mod reciprocity;
mod spectral;
mod state;

pub use grid::{MomentumGrid, MIN_POINTS};
pub use noncomm::{verify_noncommutativity, NoncommutativityReport, PairResidual};
pub use operator::{commutator_apply, covariant_position, momentum_operator, position_operator, LinearOperator};
pub use reciprocity::{parity, reciprocity_map, ReciprocityMap};
pub use spectral::SpectralDerivative;
pub use state::{gaussian_state, StateSample, StateVector};
