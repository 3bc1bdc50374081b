use super::config::{Jacobian, MomentumGaugeConfig};
use crate::error::Result;
use crate::fourvec::{FourVector, METRIC};
use serde::Serialize;

/// `G_μν` at one momentum, lower indices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FieldStrengthSample {
    pub p: FourVector,
    pub g: [[f64; 4]; 4],
}

impl FieldStrengthSample {
    /// `G_μν = ∂C_μ/∂p_ν - ∂C_ν/∂p_μ`, all indices lowered with the metric.
    ///
    /// Spatial entries reduce to `G_ij = ∂C^i/∂p^j - ∂C^j/∂p^i` and the
    /// mixed ones to `G_0i = -∂C⁰/∂p^i` for static potentials, i.e. the
    /// momentum electric field. Antisymmetry is exact: each pair is computed
    /// once and mirrored.
    pub fn from_jacobian(p: FourVector, j: &Jacobian) -> Self {
        let mut g = [[0.0; 4]; 4];
        for mu in 0..4 {
            for nu in mu + 1..4 {
                let v = METRIC[mu] * METRIC[nu] * (j[mu][nu] - j[nu][mu]);
                g[mu][nu] = v;
                g[nu][mu] = -v;
            }
        }
        FieldStrengthSample { p, g }
    }

    /// `𝓑^k = -½ ε_kij G_ij`, equivalently the curl of the spatial potential.
    pub fn magnetic(&self) -> [f64; 3] {
        let g = &self.g;
        [-g[2][3], -g[3][1], -g[1][2]]
    }

    /// `ℰ^i = G_0i`.
    pub fn electric(&self) -> [f64; 3] {
        [self.g[0][1], self.g[0][2], self.g[0][3]]
    }
}

pub fn field_strength(config: &MomentumGaugeConfig, p: &FourVector) -> Result<FieldStrengthSample> {
    Ok(FieldStrengthSample::from_jacobian(*p, &config.jacobian(p)?))
}

/// Same as [`field_strength`] but always by central differences.
pub fn field_strength_numeric(config: &MomentumGaugeConfig, p: &FourVector) -> Result<FieldStrengthSample> {
    Ok(FieldStrengthSample::from_jacobian(*p, &config.jacobian_numeric(p)?))
}

pub fn momentum_magnetic(config: &MomentumGaugeConfig, p: &FourVector) -> Result<[f64; 3]> {
    Ok(field_strength(config, p)?.magnetic())
}

pub fn momentum_electric(config: &MomentumGaugeConfig, p: &FourVector) -> Result<[f64; 3]> {
    Ok(field_strength(config, p)?.electric())
}
