use super::piecewise::PiecewiseField1D;
use super::source::{MomentumSource1D, SheetKind};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Sign `s` in `d²C/dp² = s · 4π ρ`.
///
/// The static reduction of `□_p C = 4π𝒥` under `(+,-,-,-)` gives `s = -1`,
/// which is also the choice that reproduces outward-pointing plateaus
/// (`ℰ_z = +4πΣ` above the upper plate) for positive sheet strengths.
pub const SOURCE_SIGN: f64 = -1.0;

pub const MIN_NODES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum BoundaryCondition {
    /// Pin both ends to the exact superposed sheet potential.
    AnalyticFarField,
    Dirichlet {
        left: f64,
        right: f64,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct PoissonSolution {
    /// Nodes include both endpoints: `p_i = -L + i h`, `h = 2L/(n-1)`.
    pub nodes: Vec<f64>,
    pub spacing: f64,
    pub potential: Vec<f64>,
    /// `-dC/dp` by centered differences (one-sided at the ends).
    pub field: Vec<f64>,
    pub source_sign: f64,
}

/// Per-node source density after linear (cloud-in-cell) deposition.
///
/// A sheet at fractional position `t` between nodes `i` and `i+1` puts
/// `(1-t)q/h` on `i` and `t q/h` on `i+1`. This conserves both the total
/// charge and its first moment, so the discrete solution matches the exact
/// piecewise-linear potential at every node. A sheet sitting on a node
/// reduces to nearest-node deposition.
pub fn deposit(source: &MomentumSource1D, nodes: &[f64]) -> Result<Vec<f64>> {
    let n = nodes.len();
    if n < 4 {
        return Err(Error::config("need at least four nodes to deposit sheets"));
    }
    let h = nodes[1] - nodes[0];
    let (lo, hi) = (nodes[1], nodes[n - 2]);
    let mut rho = vec![0.0; n];
    for s in &source.sheets {
        if !(s.position >= lo && s.position <= hi) {
            return Err(Error::SheetOutsideGrid { position: s.position, lo, hi });
        }
        let x = (s.position - nodes[0]) / h;
        let i = (x.floor() as usize).min(n - 2);
        let t = x - i as f64;
        rho[i] += (1.0 - t) * s.strength / h;
        rho[i + 1] += t * s.strength / h;
    }
    Ok(rho)
}

fn nodes(n_nodes: usize, half_extent: f64) -> Result<(Vec<f64>, f64)> {
    if n_nodes < MIN_NODES {
        return Err(Error::config(format!("need at least {MIN_NODES} nodes, got {n_nodes}")));
    }
    if !(half_extent.is_finite() && half_extent > 0.0) {
        return Err(Error::config(format!("half extent must be positive, got {half_extent}")));
    }
    let h = 2.0 * half_extent / (n_nodes - 1) as f64;
    let mut p: Vec<f64> = (0..n_nodes).map(|i| -half_extent + i as f64 * h).collect();
    p[n_nodes - 1] = half_extent;
    Ok((p, h))
}

fn centered_field(potential: &[f64], h: f64) -> Vec<f64> {
    let n = potential.len();
    let mut f = vec![0.0; n];
    f[0] = -(potential[1] - potential[0]) / h;
    f[n - 1] = -(potential[n - 1] - potential[n - 2]) / h;
    for i in 1..n - 1 {
        f[i] = -(potential[i + 1] - potential[i - 1]) / (2.0 * h);
    }
    f
}

/// Second-order static solve of `d²C/dp² = s·4πρ` on `[-L, L]`.
///
/// The potential solved for is `C⁰` for charge sheets and `C^y` for
/// `y`-current sheets; the returned field is `ℰ` or `𝓑_x` respectively.
pub fn poisson_solve_1d(
    source: &MomentumSource1D,
    n_nodes: usize,
    half_extent: f64,
    bc: BoundaryCondition,
) -> Result<PoissonSolution> {
    source.validate()?;
    if source.uniform_kind()? == Some(SheetKind::CurrentAxial) {
        return Err(Error::config("axial current sheets have no static potential"));
    }
    let (p, h) = nodes(n_nodes, half_extent)?;
    let rho = deposit(source, &p)?;
    let (left, right) = match bc {
        BoundaryCondition::AnalyticFarField => {
            let exact = PiecewiseField1D::from_source(source)?;
            (exact.potential_at(p[0]), exact.potential_at(p[n_nodes - 1]))
        }
        BoundaryCondition::Dirichlet { left, right } => {
            if !(left.is_finite() && right.is_finite()) {
                return Err(Error::config("boundary values must be finite"));
            }
            (left, right)
        }
    };

    // Interior unknowns 1..n-1 with stencil (1, -2, 1): Thomas elimination.
    let m = n_nodes - 2;
    let mut rhs: Vec<f64> = (1..n_nodes - 1).map(|i| h * h * SOURCE_SIGN * 4.0 * PI * rho[i]).collect();
    rhs[0] -= left;
    rhs[m - 1] -= right;
    let mut c_prime = vec![0.0; m];
    let mut d_prime = vec![0.0; m];
    c_prime[0] = 1.0 / -2.0;
    d_prime[0] = rhs[0] / -2.0;
    for i in 1..m {
        let denom = -2.0 - c_prime[i - 1];
        c_prime[i] = 1.0 / denom;
        d_prime[i] = (rhs[i] - d_prime[i - 1]) / denom;
    }
    let mut phi = vec![0.0; n_nodes];
    phi[0] = left;
    phi[n_nodes - 1] = right;
    phi[m] = d_prime[m - 1];
    for i in (0..m - 1).rev() {
        phi[i + 1] = d_prime[i] - c_prime[i] * phi[i + 2];
    }
    let field = centered_field(&phi, h);
    Ok(PoissonSolution { nodes: p, spacing: h, potential: phi, field, source_sign: SOURCE_SIGN })
}

impl PoissonSolution {
    /// An exact piecewise solution sampled on the solver's node layout.
    pub fn sampled(exact: &PiecewiseField1D, n_nodes: usize, half_extent: f64) -> Result<Self> {
        let (p, h) = nodes(n_nodes, half_extent)?;
        let potential: Vec<f64> = p.iter().map(|&x| exact.potential_at(x)).collect();
        let field = centered_field(&potential, h);
        Ok(PoissonSolution { nodes: p, spacing: h, potential, field, source_sign: SOURCE_SIGN })
    }

    /// Largest `|field - exact|` over nodes at least `min_cells` cells away
    /// from every sheet and from both ends.
    pub fn max_field_deviation(&self, exact: &PiecewiseField1D, min_cells: usize) -> f64 {
        let n = self.nodes.len();
        let reach = min_cells as f64 * self.spacing * (1.0 - 1e-12);
        (min_cells..n.saturating_sub(min_cells))
            .filter(|&i| exact.breakpoints.iter().all(|b| (self.nodes[i] - b).abs() >= reach))
            .map(|i| (self.field[i] - exact.field_at(self.nodes[i])).abs())
            .fold(0.0, f64::max)
    }

    /// Field difference measured `cells` nodes either side of `position`.
    pub fn jump_across(&self, position: f64, cells: usize) -> f64 {
        let x = (position - self.nodes[0]) / self.spacing;
        let i = x.floor() as usize;
        let lo = i.saturating_sub(cells);
        let hi = (i + 1 + cells).min(self.nodes.len() - 1);
        self.field[hi] - self.field[lo]
    }
}

/// Residual of the discrete equation as solved.
#[derive(Debug, Clone, Serialize)]
pub struct ResidualReport {
    pub max_abs_residual: f64,
    pub rms_residual: f64,
    pub nodes: usize,
    /// `C_{i-1} - 2C_i + C_{i+1} - h² s 4π ρ_i` at each interior node.
    #[serde(skip)]
    pub residuals: Vec<f64>,
}

/// Residual of the tridiagonal system over interior nodes.
///
/// Reported undivided (scaled by `h²`), i.e. as the row residual of the
/// linear system that was solved. Dividing by `h²` would amplify the
/// rounding of `C` by `h⁻²` and hide solve quality behind grid resolution.
pub fn laplacian_residual(solution: &PoissonSolution, source: &MomentumSource1D) -> Result<ResidualReport> {
    let n = solution.nodes.len();
    if n < 4 || solution.potential.len() != n {
        return Err(Error::GridMismatch);
    }
    let rho = deposit(source, &solution.nodes)?;
    let h = solution.spacing;
    let phi = &solution.potential;
    let residuals: Vec<f64> = (1..n - 1)
        .map(|i| phi[i - 1] - 2.0 * phi[i] + phi[i + 1] - h * h * solution.source_sign * 4.0 * PI * rho[i])
        .collect();
    let max_abs_residual = residuals.iter().fold(0.0f64, |m, r| m.max(r.abs()));
    let rms_residual = (residuals.iter().map(|r| r * r).sum::<f64>() / residuals.len() as f64).sqrt();
    Ok(ResidualReport { max_abs_residual, rms_residual, nodes: n, residuals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldsolve::{solve_capacitor, Sheet};

    #[test]
    fn zero_source_linear_potential() {
        let src = MomentumSource1D::new(vec![]).unwrap();
        let bc = BoundaryCondition::Dirichlet { left: -1.0, right: 3.0 };
        let s = poisson_solve_1d(&src, 128, 2.0, bc).unwrap();
        for (p, phi) in s.nodes.iter().zip(&s.potential) {
            assert!((phi - (1.0 + p)).abs() < 1e-12);
        }
        let r = laplacian_residual(&s, &src).unwrap();
        assert!(r.max_abs_residual <= 1e-12);
    }

    #[test]
    fn capacitor_matches_piecewise() {
        let src = MomentumSource1D::capacitor(1.0, 1.0).unwrap();
        let s = poisson_solve_1d(&src, 512, 4.0, BoundaryCondition::AnalyticFarField).unwrap();
        let exact = solve_capacitor(1.0, 1.0).unwrap();
        assert!(s.max_field_deviation(&exact, 2) <= 1e-8);
        assert!(laplacian_residual(&s, &src).unwrap().max_abs_residual <= 1e-10);
    }

    #[test]
    fn sheet_at_boundary_rejected() {
        let src = MomentumSource1D::new(vec![Sheet { position: 4.0, strength: 1.0, kind: SheetKind::Charge }]).unwrap();
        assert!(matches!(
            poisson_solve_1d(&src, 128, 4.0, BoundaryCondition::AnalyticFarField),
            Err(Error::SheetOutsideGrid { .. })
        ));
        assert!(poisson_solve_1d(&src, 32, 8.0, BoundaryCondition::AnalyticFarField).is_err());
    }
}
