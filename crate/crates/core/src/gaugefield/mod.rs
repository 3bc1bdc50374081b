//! Momentum gauge potentials `C^μ(p)`, their field strength and the
//! non-commutativity map `Θ = g G`.
//!
//! Sign conventions (fixed once, used everywhere):
//!
//! * `G_μν = ∂C_μ/∂p_ν - ∂C_ν/∂p_μ` with both indices lowered by the
//!   `(+,-,-,-)` metric. For static potentials `G_0i` is the momentum
//!   electric field `ℰ^i`.
//! * `𝓑` is the curl of the spatial potential, which makes
//!   `G_ij = -ε_ijk 𝓑^k`. A symmetric-gauge field `𝓑 ẑ` therefore has
//!   `G_12 = -𝓑` and `[X_1, X_2] = -iħg𝓑`. Writing `Θ_ij = g ε_ijk 𝓑^k`
//!   instead would flip this sign; the curl/field-strength pairing above is
//!   the one the commutator actually produces.

mod config;
mod strength;
mod theta;
mod transform;

pub use config::{
    apply_gauge_transform, CustomGauge, GaugeConfigSpec, Jacobian, MomentumGaugeConfig, OrdinaryGaugeConfig,
};
pub use strength::{field_strength, field_strength_numeric, momentum_electric, momentum_magnetic, FieldStrengthSample};
pub use theta::{theta_map, Plateau, ThetaMap};
pub use transform::{GaugeTransform, Monomial, MAX_DEGREE};
