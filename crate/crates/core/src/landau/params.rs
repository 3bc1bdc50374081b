use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Inputs of the doubly gauged oscillator
/// `H = (p + eA)²/2m + mω²(x - gC)²/2` with symmetric-gauge `A`, `C`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OscillatorParams {
    pub m: f64,
    #[serde(rename = "w")]
    pub omega: f64,
    pub e: f64,
    pub g: f64,
    /// Ordinary magnetic field along z.
    #[serde(rename = "B")]
    pub b: f64,
    /// Momentum magnetic field 𝓑 along z.
    #[serde(rename = "Bm")]
    pub bm: f64,
    pub hbar: f64,
}

impl Default for OscillatorParams {
    fn default() -> Self {
        OscillatorParams { m: 1.0, omega: 1.0, e: 0.0, g: 0.0, b: 0.0, bm: 0.0, hbar: 1.0 }
    }
}

impl OscillatorParams {
    /// `m = ω = ħ = e = g = 1` with `eB = a`, `g𝓑 = b`.
    pub fn unit(a: f64, b: f64) -> Self {
        OscillatorParams { e: 1.0, g: 1.0, b: a, bm: b, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("m", self.m), ("omega", self.omega), ("hbar", self.hbar)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::config(format!("{name} must be positive, got {v}")));
            }
        }
        for (name, v) in [("e", self.e), ("g", self.g), ("B", self.b), ("Bm", self.bm)] {
            if !v.is_finite() {
                return Err(Error::config(format!("{name} must be finite, got {v}")));
            }
        }
        Ok(())
    }
}

/// Rotation of `(B, 𝓑)` by the mixing angle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Mixing {
    pub b_eff: f64,
    pub b_nc: f64,
    pub cos_theta: f64,
    pub sin_theta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EffectiveParams {
    /// `e/2m`.
    pub g1: f64,
    /// `g m ω²/2`.
    pub g2: f64,
    /// `1 + (g m ω 𝓑)²/4`, the factor multiplying `p²/2m`.
    pub kinetic_factor: f64,
    /// `1 + (eB)²/(4m²ω²)`, the factor multiplying `mω²r²/2`.
    pub potential_factor: f64,
    pub m_eff: f64,
    pub omega_eff: f64,
    /// `λ = -g₁B + g₂𝓑`, the coefficient of `L_z`.
    pub lz_coupling: f64,
    /// `None` when `g₁ = g₂ = 0`: the mixing angle is undefined.
    pub mixing: Option<Mixing>,
}

/// Effective mass, frequency and mixed fields.
///
/// With `K`, `V` the kinetic and potential factors,
/// `m_eff = m/K`, `ω_eff = ω√(KV)`, and
/// `B_eff = (-g₁B + g₂𝓑)/√(g₁²+g₂²)`, `B_nc = (g₁𝓑 + g₂B)/√(g₁²+g₂²)`,
/// `cos θ = g₁/√(g₁²+g₂²)`. The cosine carries the sign of `e`; it lies in
/// `[0, 1]` for non-negative charge.
pub fn effective_params(params: &OscillatorParams) -> Result<EffectiveParams> {
    params.validate()?;
    let OscillatorParams { m, omega, e, g, b, bm, .. } = *params;
    let g1 = e / (2.0 * m);
    let g2 = g * m * omega * omega / 2.0;
    let s = g * m * omega * bm;
    let kinetic_factor = 1.0 + s * s / 4.0;
    let q = e * b / (m * omega);
    let potential_factor = 1.0 + q * q / 4.0;
    let norm = g1.hypot(g2);
    let mixing = (norm > 0.0).then(|| Mixing {
        b_eff: (-g1 * b + g2 * bm) / norm,
        b_nc: (g1 * bm + g2 * b) / norm,
        cos_theta: g1 / norm,
        sin_theta: g2 / norm,
    });
    Ok(EffectiveParams {
        g1,
        g2,
        kinetic_factor,
        potential_factor,
        m_eff: m / kinetic_factor,
        omega_eff: omega * (kinetic_factor * potential_factor).sqrt(),
        lz_coupling: -g1 * b + g2 * bm,
        mixing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_momentum_field_keeps_mass() {
        let p = OscillatorParams { e: 1.0, b: 3.0, g: 2.0, ..Default::default() };
        assert_eq!(effective_params(&p).unwrap().m_eff, 1.0);
    }

    #[test]
    fn halved_mass() {
        let p = OscillatorParams { g: 2.0, bm: 1.0, ..Default::default() };
        assert_eq!(effective_params(&p).unwrap().m_eff, 0.5);
    }

    #[test]
    fn doubled_potential_frequency() {
        let p = OscillatorParams { e: 2.0, b: 1.0, ..Default::default() };
        assert!((effective_params(&p).unwrap().omega_eff - 2f64.sqrt()).abs() <= 1e-15);
    }

    #[test]
    fn equal_couplings_mix_at_45_degrees() {
        // g1 = e/2 = 0.5, g2 = g/2 = 0.5 with m = ω = 1
        let p = OscillatorParams { e: 1.0, g: 1.0, b: 0.3, bm: -0.4, ..Default::default() };
        let mix = effective_params(&p).unwrap().mixing.unwrap();
        assert!((mix.cos_theta - 0.5f64.sqrt()).abs() <= 1e-15);
    }

    #[test]
    fn no_coupling_is_flagged() {
        let eff = effective_params(&OscillatorParams::default()).unwrap();
        assert!(eff.mixing.is_none());
        assert_eq!(eff.lz_coupling, 0.0);
    }

    #[test]
    fn invalid_mass_rejected() {
        let p = OscillatorParams { m: 0.0, ..Default::default() };
        assert!(effective_params(&p).is_err());
        let p = OscillatorParams { b: f64::NAN, ..Default::default() };
        assert!(p.validate().is_err());
    }
}
