use super::grid::MomentumGrid;
use super::operator::{commutator_apply, covariant_position};
use super::state::StateVector;
use crate::error::{Error, Result};
use crate::gaugefield::{field_strength, MomentumGaugeConfig};
use crate::C64;
use serde::Serialize;
use std::sync::Arc;

/// Commutator check for one ordered pair of grid axes.
#[derive(Debug, Clone, Serialize)]
pub struct PairResidual {
    pub i: usize,
    pub j: usize,
    /// Slots of the four-momentum the two axes sample.
    pub components: [usize; 2],
    /// `max_ψ ‖[X_i, X_j]ψ - iħ g G_ij(p̂)ψ‖ / ‖ψ‖`.
    pub residual: f64,
    /// Mean over states of `⟨ψ|[X_i, X_j]|ψ⟩ / (iħ⟨ψ|ψ⟩)`.
    pub theta: f64,
    /// Largest deviation of a single state's Θ from the mean.
    pub theta_spread: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct NoncommutativityReport {
    pub g: f64,
    pub hbar: f64,
    pub states: usize,
    pub pairs: Vec<PairResidual>,
}

impl NoncommutativityReport {
    pub fn max_residual(&self) -> f64 {
        self.pairs.iter().map(|p| p.residual).fold(0.0, f64::max)
    }

    pub fn pair(&self, i: usize, j: usize) -> Option<&PairResidual> {
        self.pairs.iter().find(|p| p.i == i && p.j == j)
    }
}

/// Measures `[X_i, X_j] = iħ g G_ij` on the supplied states for every
/// ordered pair of distinct grid axes.
///
/// Θ is reported in the normalization `Θ = g G`, i.e. with `ħ` divided out.
pub fn verify_noncommutativity(
    grid: &Arc<MomentumGrid>,
    config: &MomentumGaugeConfig,
    g: f64,
    hbar: f64,
    states: &[StateVector],
) -> Result<NoncommutativityReport> {
    if states.is_empty() {
        return Err(Error::config("need at least one test state"));
    }
    let ops = (0..grid.dims()).map(|a| covariant_position(grid, a, config, g, hbar)).collect::<Result<Vec<_>>>()?;
    let strengths = (0..grid.len())
        .map(|k| field_strength(config, &grid.node_momentum(k)).map(|s| s.g))
        .collect::<Result<Vec<_>>>()?;

    let mut pairs = Vec::new();
    for i in 0..grid.dims() {
        for j in 0..grid.dims() {
            if i == j {
                continue;
            }
            let (ci, cj) = (grid.component(i), grid.component(j));
            let mut residual = 0.0f64;
            let mut thetas = Vec::with_capacity(states.len());
            for psi in states {
                let comm = commutator_apply(&ops[i], &ops[j], psi)?;
                let expected: Vec<C64> = psi
                    .amplitudes()
                    .iter()
                    .zip(&strengths)
                    .map(|(a, gmn)| C64::new(0.0, hbar * g * gmn[ci][cj]) * a)
                    .collect();
                let diff = comm.clone().sub(&StateVector::new(grid.clone(), expected)?)?;
                let norm = psi.norm();
                residual = residual.max(diff.norm() / norm);
                let ev = psi.inner(&comm)?;
                thetas.push((ev / C64::new(0.0, hbar * norm * norm)).re);
            }
            let theta = thetas.iter().sum::<f64>() / thetas.len() as f64;
            let theta_spread = thetas.iter().map(|t| (t - theta).abs()).fold(0.0, f64::max);
            pairs.push(PairResidual { i, j, components: [ci, cj], residual, theta, theta_spread });
        }
    }
    Ok(NoncommutativityReport { g, hbar, states: states.len(), pairs })
}
