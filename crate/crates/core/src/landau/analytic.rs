use super::params::{effective_params, OscillatorParams};
use crate::error::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AnalyticLevel {
    pub n_r: u32,
    pub m_z: i32,
    #[serde(rename = "E")]
    pub energy: f64,
}

/// `ħω_eff(2n_r + |m_z| + 1) + ħλ m_z` with `λ = -g₁B + g₂𝓑`.
pub fn level_energy(hbar: f64, omega_eff: f64, lambda: f64, n_r: u32, m_z: i32) -> f64 {
    hbar * (omega_eff * (2.0 * n_r as f64 + m_z.unsigned_abs() as f64 + 1.0) + lambda * m_z as f64)
}

/// Relative gap `ω_eff - |λ|` below which levels are treated as collapsed.
const COLLAPSE: f64 = 1e-12;

/// The lowest `count` levels, ascending in energy; exactly degenerate levels
/// are ordered by `(|m_z|, m_z, n_r)`.
///
/// `ω_eff ≥ |λ|` holds identically. When the two coincide, infinitely many
/// levels share each energy and the list is undefined; that case returns
/// [`Error::UnboundedSpectrum`].
pub fn analytic_spectrum(params: &OscillatorParams, count: usize) -> Result<Vec<AnalyticLevel>> {
    let eff = effective_params(params)?;
    let (w, lambda) = (eff.omega_eff, eff.lz_coupling);
    if w - lambda.abs() <= COLLAPSE * w {
        return Err(Error::UnboundedSpectrum { omega_eff: w, coupling: lambda.abs() });
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    // the lowest level is 1 quantum of ħω_eff; raise the ceiling until enough fit below it
    let mut ceiling = 2.0 * w;
    let mut levels = loop {
        let found = levels_below(w, lambda, ceiling);
        if found.len() >= count {
            break found;
        }
        ceiling *= 2.0;
    };
    for l in &mut levels {
        l.energy = level_energy(params.hbar, w, lambda, l.n_r, l.m_z);
    }
    levels.sort_by(|a, b| a.energy.total_cmp(&b.energy));
    // gather rounding-level ties, then order each cluster by quantum numbers
    let mut start = 0;
    while start < levels.len() {
        let tol = 1e-12 * levels[start].energy.abs().max(params.hbar * w);
        let mut end = start + 1;
        while end < levels.len() && levels[end].energy - levels[start].energy <= tol {
            end += 1;
        }
        levels[start..end].sort_by_key(|l| (l.m_z.unsigned_abs(), l.m_z, l.n_r));
        start = end;
    }
    levels.truncate(count);
    Ok(levels)
}

/// All `(n_r, m_z)` with `ω(2n_r + |m| + 1) + λm ≤ ceiling` (units of ħ).
fn levels_below(w: f64, lambda: f64, ceiling: f64) -> Vec<AnalyticLevel> {
    let mut out = Vec::new();
    let mut n_r = 0u32;
    while w * (2.0 * n_r as f64 + 1.0) <= ceiling {
        let base = w * (2.0 * n_r as f64 + 1.0);
        for sign in [1i32, -1] {
            let slope = w + sign as f64 * lambda;
            let mut k = if sign > 0 { 0 } else { 1 };
            while base + slope * k as f64 <= ceiling {
                out.push(AnalyticLevel { n_r, m_z: sign * k, energy: base + slope * k as f64 });
                k += 1;
            }
        }
        n_r += 1;
    }
    out
}

/// Energy above which a `(n_max+1)`-quanta truncation can contaminate the
/// spectrum: the lowest level of the first shell it cuts, `N = n_safe + 1`.
pub fn contamination_threshold(params: &OscillatorParams, n_safe: usize) -> Result<f64> {
    let eff = effective_params(params)?;
    let n = (n_safe + 1) as f64;
    Ok(params.hbar * (eff.omega_eff * (n + 1.0) - eff.lz_coupling.abs() * n))
}
