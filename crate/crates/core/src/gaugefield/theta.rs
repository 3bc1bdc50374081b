use super::config::MomentumGaugeConfig;
use super::strength::field_strength;
use crate::error::Result;
use crate::fourvec::FourVector;
use crate::phasegrid::MomentumGrid;
use serde::Serialize;

/// A maximal run of nodes sharing one value of the tracked component.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Plateau {
    pub value: f64,
    pub first_node: usize,
    pub last_node: usize,
    pub p_first: f64,
    pub p_last: f64,
}

/// `Θ_μν(p) = g G_μν(p)` sampled on the nodes of a grid.
#[derive(Debug, Clone, Serialize)]
pub struct ThetaMap {
    pub g: f64,
    /// `(μ, ν)` of the entry used for plateau detection.
    pub component: (usize, usize),
    pub nodes: Vec<FourVector>,
    pub theta: Vec<[[f64; 4]; 4]>,
}

/// Samples `Θ = g G` at every grid node. Grid axes map onto momentum slots
/// via [`MomentumGrid::along`]; sheet variants want a 1D grid along `p_z`.
pub fn theta_map(config: &MomentumGaugeConfig, g: f64, grid: &MomentumGrid) -> Result<ThetaMap> {
    let mut nodes = Vec::with_capacity(grid.len());
    let mut theta = Vec::with_capacity(grid.len());
    for k in 0..grid.len() {
        let p = grid.node_momentum(k);
        let s = field_strength(config, &p)?;
        theta.push(s.g.map(|row| row.map(|v| g * v)));
        nodes.push(p);
    }
    let component = config.principal_component().unwrap_or_else(|| largest_entry(&theta));
    Ok(ThetaMap { g, component, nodes, theta })
}

fn largest_entry(theta: &[[[f64; 4]; 4]]) -> (usize, usize) {
    let mut best = ((0, 1), 0.0);
    for mu in 0..4 {
        for nu in mu + 1..4 {
            let m = theta.iter().map(|t| t[mu][nu].abs()).fold(0.0, f64::max);
            if m > best.1 {
                best = ((mu, nu), m);
            }
        }
    }
    best.0
}

impl ThetaMap {
    pub fn values(&self, mu: usize, nu: usize) -> Vec<f64> {
        self.theta.iter().map(|t| t[mu][nu]).collect()
    }

    /// Plateaus of the tracked component along momentum slot `slot`.
    ///
    /// Neighbouring samples belong to the same plateau when they agree to
    /// `1e-12` relative to the largest magnitude in the map. Sheet
    /// configurations give exactly constant runs, so the tolerance only
    /// absorbs rounding.
    pub fn plateaus(&self, slot: usize) -> Vec<Plateau> {
        let (mu, nu) = self.component;
        let vals = self.values(mu, nu);
        let scale = vals.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        let tol = 1e-12 * scale;
        let mut out: Vec<Plateau> = Vec::new();
        for (k, &v) in vals.iter().enumerate() {
            let p = self.nodes[k][slot];
            match out.last_mut() {
                Some(last) if (last.value - v).abs() <= tol => {
                    last.last_node = k;
                    last.p_last = p;
                }
                _ => out.push(Plateau { value: v, first_node: k, last_node: k, p_first: p, p_last: p }),
            }
        }
        out
    }

    /// Midpoints between consecutive plateaus; each true transition lies
    /// within half a cell of one of these.
    pub fn boundaries(&self, slot: usize) -> Vec<f64> {
        self.plateaus(slot).windows(2).map(|w| 0.5 * (w[0].p_last + w[1].p_first)).collect()
    }
}
