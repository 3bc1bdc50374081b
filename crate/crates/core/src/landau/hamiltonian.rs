use super::matrix::CMatrix;
use super::params::{effective_params, OscillatorParams};
use super::quadratic::{QuadraticForm, PX, PY, X, Y};
use crate::error::{Error, Result};
use crate::phasegrid::{MomentumGrid, SpectralDerivative};
use crate::C64;
use serde::{Deserialize, Serialize};

/// Smallest per-mode truncation accepted by [`assemble_fock_hamiltonian`].
pub const MIN_FOCK_NMAX: usize = 8;
/// Largest per-axis node count accepted by [`assemble_grid_hamiltonian`].
pub const MAX_GRID_POINTS: usize = 48;

/// Oscillator whose ladder operators span the Fock basis.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reference {
    /// The bare `(m, ω)`.
    #[default]
    Bare,
    /// `(m_eff, ω_eff)`, which makes the isotropic part diagonal.
    Effective,
    Explicit {
        m: f64,
        omega: f64,
    },
}

impl Reference {
    pub fn resolve(&self, params: &OscillatorParams) -> Result<(f64, f64)> {
        let (m, omega) = match *self {
            Reference::Bare => (params.m, params.omega),
            Reference::Effective => {
                let eff = effective_params(params)?;
                (eff.m_eff, eff.omega_eff)
            }
            Reference::Explicit { m, omega } => (m, omega),
        };
        if !(m.is_finite() && m > 0.0 && omega.is_finite() && omega > 0.0) {
            return Err(Error::config(format!("reference oscillator needs m, ω > 0, got ({m}, {omega})")));
        }
        Ok((m, omega))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Basis {
    /// Two modes, `n_max` quanta each; state `|n₁ n₂⟩` at index `n₁(n_max+1) + n₂`.
    Fock { n_max: usize, m_ref: f64, omega_ref: f64 },
    /// Flat node index of a 2D momentum grid.
    Grid { points: [usize; 2], half_extent: [f64; 2] },
    /// Anything else, e.g. a hand-built test matrix.
    Dense,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianMatrix {
    pub basis: Basis,
    pub matrix: CMatrix,
    pub params: Option<OscillatorParams>,
}

impl HamiltonianMatrix {
    pub fn dense(matrix: CMatrix) -> Self {
        HamiltonianMatrix { basis: Basis::Dense, matrix, params: None }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

/// Position and momentum of one axis, plus the size to keep after
/// forming products.
struct AxisOps {
    x: CMatrix,
    p: CMatrix,
    keep: usize,
}

impl AxisOps {
    fn square_terms(&self, qxx: f64, qpp: f64, qxp: f64) -> CMatrix {
        let mut s = self.x.matmul(&self.x).scaled(C64::new(qxx, 0.0));
        s.add_scaled(C64::new(qpp, 0.0), &self.p.matmul(&self.p));
        s.add_scaled(C64::new(qxp, 0.0), &self.x.matmul(&self.p));
        s.add_scaled(C64::new(qxp, 0.0), &self.p.matmul(&self.x));
        s.truncated(self.keep)
    }

    fn x(&self) -> CMatrix {
        self.x.truncated(self.keep)
    }

    fn p(&self) -> CMatrix {
        self.p.truncated(self.keep)
    }
}

/// `Σ Q_ij ξ_i ξ_j`, symmetrically ordered, on the product of two axes.
fn assemble_form(form: &QuadraticForm, a: &AxisOps, b: &AxisOps) -> CMatrix {
    let q = &form.q;
    let (ia, ib) = (CMatrix::identity(a.keep), CMatrix::identity(b.keep));
    let mut h = a.square_terms(q[X][X], q[PX][PX], q[X][PX]).kron(&ib);
    h.add_scaled(C64::new(1.0, 0.0), &ia.kron(&b.square_terms(q[Y][Y], q[PY][PY], q[Y][PY])));
    let ops_a = [(X, a.x()), (PX, a.p())];
    let ops_b = [(Y, b.x()), (PY, b.p())];
    for (i, oa) in &ops_a {
        for (j, ob) in &ops_b {
            let c = 2.0 * q[*i][*j];
            if c != 0.0 {
                h.add_scaled(C64::new(c, 0.0), &oa.kron(ob));
            }
        }
    }
    h
}

/// Ladder representation `x = s(a + a†)`, `p = i t(a† - a)` in a Fock space
/// of `size` levels, with `s = √(ħ/2mω)`, `t = √(ħmω/2)`.
fn ladder_axis(n_max: usize, m: f64, omega: f64, hbar: f64) -> AxisOps {
    // one spare level makes the truncated quadratic terms exact
    let size = n_max + 2;
    let s = (hbar / (2.0 * m * omega)).sqrt();
    let t = (hbar * m * omega / 2.0).sqrt();
    let mut x = CMatrix::zeros(size);
    let mut p = CMatrix::zeros(size);
    for n in 0..size - 1 {
        let r = ((n + 1) as f64).sqrt();
        // ⟨n|a|n+1⟩ = ⟨n+1|a†|n⟩ = √(n+1)
        x[(n, n + 1)] = C64::new(s * r, 0.0);
        x[(n + 1, n)] = C64::new(s * r, 0.0);
        p[(n, n + 1)] = C64::new(0.0, -t * r);
        p[(n + 1, n)] = C64::new(0.0, t * r);
    }
    AxisOps { x, p, keep: n_max + 1 }
}

fn check_nmax(n_max: usize, min: usize) -> Result<()> {
    if n_max < min {
        return Err(Error::config(format!("n_max must be at least {min}, got {n_max}")));
    }
    Ok(())
}

/// Any quadratic form in the truncated two-mode Fock basis of a reference
/// oscillator `(m_ref, ω_ref)`.
///
/// Products of same-mode operators are formed with one spare level and then
/// truncated, so every retained matrix element equals its exact value.
pub fn assemble_quadratic_fock(form: &QuadraticForm, n_max: usize, m_ref: f64, omega_ref: f64, hbar: f64) -> CMatrix {
    let axis = ladder_axis(n_max, m_ref, omega_ref, hbar);
    assemble_form(form, &axis, &axis)
}

/// The doubly gauged oscillator `K p²/2m + V mω² r²/2 + λ L_z` (the
/// z-sector dropped) in the truncated Fock basis of the reference oscillator.
pub fn assemble_fock_hamiltonian(
    params: &OscillatorParams,
    n_max: usize,
    reference: Reference,
) -> Result<HamiltonianMatrix> {
    check_nmax(n_max, MIN_FOCK_NMAX)?;
    let form = QuadraticForm::closed_form(params)?;
    let (m_ref, omega_ref) = reference.resolve(params)?;
    Ok(HamiltonianMatrix {
        basis: Basis::Fock { n_max, m_ref, omega_ref },
        matrix: assemble_quadratic_fock(&form, n_max, m_ref, omega_ref, params.hbar),
        params: Some(*params),
    })
}

/// `L_z = iħ(a₁a₂† - a₂a₁†)` in the truncated Fock basis (unit reference
/// oscillator; `L_z` does not depend on the reference).
pub fn lz_fock(n_max: usize, hbar: f64) -> Result<HamiltonianMatrix> {
    check_nmax(n_max, 2)?;
    if !(hbar.is_finite() && hbar > 0.0) {
        return Err(Error::config(format!("hbar must be positive, got {hbar}")));
    }
    Ok(HamiltonianMatrix {
        basis: Basis::Fock { n_max, m_ref: 1.0, omega_ref: 1.0 },
        matrix: assemble_quadratic_fock(&QuadraticForm::angular_momentum(), n_max, 1.0, 1.0, hbar),
        params: None,
    })
}

/// The doubly gauged oscillator on a 2D momentum grid: `p` acts by
/// multiplication and `x = iħ∂_p` by spectral differentiation.
pub fn assemble_grid_hamiltonian(grid: &MomentumGrid, params: &OscillatorParams) -> Result<HamiltonianMatrix> {
    if grid.dims() != 2 {
        return Err(Error::config("grid Hamiltonian needs a 2D grid"));
    }
    for a in 0..2 {
        if grid.points(a) > MAX_GRID_POINTS {
            return Err(Error::Budget(format!(
                "{} points on axis {a}, dense diagonalization allows at most {MAX_GRID_POINTS}",
                grid.points(a)
            )));
        }
    }
    let form = QuadraticForm::closed_form(params)?;
    let axis = |a: usize| {
        let d = SpectralDerivative::new(grid.points(a), grid.spacing(a));
        let x = CMatrix::from_real_rows(&d.matrix()).scaled(C64::new(0.0, params.hbar));
        AxisOps { x, p: CMatrix::diagonal(&grid.axis_coordinates(a)), keep: grid.points(a) }
    };
    let matrix = assemble_form(&form, &axis(0), &axis(1));
    Ok(HamiltonianMatrix {
        basis: Basis::Grid {
            points: [grid.points(0), grid.points(1)],
            half_extent: [grid.half_extent(0), grid.half_extent(1)],
        },
        matrix,
        params: Some(*params),
    })
}
