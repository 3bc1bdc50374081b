use super::params::{effective_params, OscillatorParams};
use crate::error::Result;
use serde::Serialize;

/// Phase-space slots of a [`QuadraticForm`].
pub const X: usize = 0;
pub const Y: usize = 1;
pub const PX: usize = 2;
pub const PY: usize = 3;

/// `H = Σ_ij Q_ij ξ_i ξ_j` on `ξ = (x, y, p_x, p_y)`, symmetric `Q`,
/// interpreted with symmetric (Weyl) ordering for non-commuting pairs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadraticForm {
    pub q: [[f64; 4]; 4],
}

impl QuadraticForm {
    pub fn zero() -> Self {
        QuadraticForm { q: [[0.0; 4]; 4] }
    }

    /// Adds `c · (v·ξ)²`.
    fn add_square(&mut self, c: f64, v: [f64; 4]) {
        for i in 0..4 {
            for j in 0..4 {
                self.q[i][j] += c * v[i] * v[j];
            }
        }
    }

    /// Adds `c · ξ_i ξ_j` (symmetrized).
    pub fn add_product(&mut self, c: f64, i: usize, j: usize) {
        self.q[i][j] += 0.5 * c;
        self.q[j][i] += 0.5 * c;
    }

    /// The Hamiltonian written as minimally coupled squares:
    /// `[(p_x + eBy/2)² + (p_y - eBx/2)²]/2m + mω²[(x + g𝓑p_y/2)² + (y - g𝓑p_x/2)²]/2`.
    ///
    /// Each square pairs commuting operators, so expanding it is free of
    /// ordering ambiguity.
    pub fn doubly_gauged(p: &OscillatorParams) -> Self {
        let (eb, gb) = (p.e * p.b / 2.0, p.g * p.bm / 2.0);
        let mut f = QuadraticForm::zero();
        let kin = 1.0 / (2.0 * p.m);
        let pot = p.m * p.omega * p.omega / 2.0;
        f.add_square(kin, [0.0, eb, 1.0, 0.0]);
        f.add_square(kin, [-eb, 0.0, 0.0, 1.0]);
        f.add_square(pot, [1.0, 0.0, 0.0, gb]);
        f.add_square(pot, [0.0, 1.0, -gb, 0.0]);
        f
    }

    /// `K p²/2m + V mω² r²/2 + λ L_z` from the effective parameters.
    pub fn closed_form(p: &OscillatorParams) -> Result<Self> {
        let eff = effective_params(p)?;
        let mut f = QuadraticForm::zero();
        let kin = eff.kinetic_factor / (2.0 * p.m);
        let pot = eff.potential_factor * p.m * p.omega * p.omega / 2.0;
        f.q[PX][PX] = kin;
        f.q[PY][PY] = kin;
        f.q[X][X] = pot;
        f.q[Y][Y] = pot;
        f.add_product(eff.lz_coupling, X, PY);
        f.add_product(-eff.lz_coupling, Y, PX);
        Ok(f)
    }

    /// `L_z = x p_y - y p_x`.
    pub fn angular_momentum() -> Self {
        let mut f = QuadraticForm::zero();
        f.add_product(1.0, X, PY);
        f.add_product(-1.0, Y, PX);
        f
    }

    pub fn max_abs_diff(&self, other: &QuadraticForm) -> f64 {
        self.q.iter().flatten().zip(other.q.iter().flatten()).fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_matches_closed_form() {
        let p = OscillatorParams { m: 1.7, omega: 0.6, e: -0.8, g: 1.3, b: 0.9, bm: -1.4, hbar: 1.0 };
        let a = QuadraticForm::doubly_gauged(&p);
        let b = QuadraticForm::closed_form(&p).unwrap();
        assert!(a.max_abs_diff(&b) <= 1e-12);
    }

    #[test]
    fn no_position_momentum_pairs_on_one_axis() {
        let p = OscillatorParams { e: 1.0, g: 1.0, b: 2.0, bm: 3.0, ..Default::default() };
        let f = QuadraticForm::doubly_gauged(&p);
        assert_eq!(f.q[X][PX], 0.0);
        assert_eq!(f.q[Y][PY], 0.0);
    }
}
