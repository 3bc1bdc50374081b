use super::grid::MomentumGrid;
use super::state::StateVector;
use crate::error::{Error, Result};
use crate::C64;
use rustfft::{Fft, FftPlanner};
use std::f64::consts::PI;
use std::sync::Arc;

/// Born reciprocity `x̂ → p̂, p̂ → -x̂` as a discrete quarter rotation of
/// phase space.
///
/// Along each axis the map is the centered unitary kernel
/// `R_jk = N^{-1/2} exp(+2πi u_j u_k / N)` with half-integer labels
/// `u_k = k - (N-1)/2`. It satisfies `R² = parity` and `R⁴ = 1` exactly on
/// any centered square grid. When the spacing also satisfies
/// `h² = 2πħ/N` (see [`MomentumGrid::self_dual`]) the kernel is
/// `exp(+i p p' / ħ)` and `R x̂ R⁻¹ ≈ p̂`, `R p̂ R⁻¹ ≈ -x̂` on well-localized
/// states; on other grids the same rotation acts with rescaled units.
///
/// The other sign convention (`p̂ → +x̂`) is `R` followed by parity.
#[derive(Clone)]
pub struct ReciprocityMap {
    grid: Arc<MomentumGrid>,
    n: usize,
    fft_inverse: Arc<dyn Fft<f64>>,
    fft_forward: Arc<dyn Fft<f64>>,
    /// `exp(-2πi c k / N)` for the centering shift `c = (N-1)/2`.
    shift: Vec<C64>,
    /// `exp(+2πi c² / N) / √N`.
    global: C64,
}

impl std::fmt::Debug for ReciprocityMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ReciprocityMap").field("grid", &self.grid).finish()
    }
}

pub fn reciprocity_map(grid: &Arc<MomentumGrid>) -> Result<ReciprocityMap> {
    if !grid.is_square() {
        return Err(Error::NonSquareGrid("axes differ in node count or extent".into()));
    }
    if !grid.is_centered() {
        return Err(Error::NonSquareGrid("nodes must be symmetric about p = 0".into()));
    }
    let n = grid.points(0);
    let c = (n as f64 - 1.0) / 2.0;
    let mut planner = FftPlanner::new();
    let shift = (0..n).map(|k| C64::from_polar(1.0, -2.0 * PI * c * k as f64 / n as f64)).collect();
    let global = C64::from_polar(1.0 / (n as f64).sqrt(), 2.0 * PI * c * c / n as f64);
    Ok(ReciprocityMap {
        grid: grid.clone(),
        n,
        fft_inverse: planner.plan_fft_inverse(n),
        fft_forward: planner.plan_fft_forward(n),
        shift,
        global,
    })
}

impl ReciprocityMap {
    pub fn grid(&self) -> &Arc<MomentumGrid> {
        &self.grid
    }

    pub fn apply(&self, psi: &StateVector) -> Result<StateVector> {
        self.transform(psi, false)
    }

    pub fn apply_inverse(&self, psi: &StateVector) -> Result<StateVector> {
        self.transform(psi, true)
    }

    fn line(&self, line: &mut [C64], inverse: bool) {
        let conj = |z: C64| if inverse { z.conj() } else { z };
        for (v, s) in line.iter_mut().zip(&self.shift) {
            *v *= conj(*s);
        }
        if inverse {
            self.fft_forward.process(line);
        } else {
            self.fft_inverse.process(line);
        }
        let g = conj(self.global);
        for (v, s) in line.iter_mut().zip(&self.shift) {
            *v *= conj(*s) * g;
        }
    }

    fn transform(&self, psi: &StateVector, inverse: bool) -> Result<StateVector> {
        if !(Arc::ptr_eq(&self.grid, psi.grid()) || *self.grid == **psi.grid()) {
            return Err(Error::GridMismatch);
        }
        let n = self.n;
        let mut data = psi.amplitudes().to_vec();
        if self.grid.dims() == 1 {
            self.line(&mut data, inverse);
        } else {
            for row in data.chunks_mut(n) {
                self.line(row, inverse);
            }
            let mut col = vec![C64::new(0.0, 0.0); n];
            for c in 0..n {
                for r in 0..n {
                    col[r] = data[r * n + c];
                }
                self.line(&mut col, inverse);
                for r in 0..n {
                    data[r * n + c] = col[r];
                }
            }
        }
        StateVector::new(psi.grid().clone(), data)
    }
}

/// `(Pψ)(p) = ψ(-p)` on a centered grid.
pub fn parity(psi: &StateVector) -> Result<StateVector> {
    let grid = psi.grid();
    if !grid.is_centered() {
        return Err(Error::config("parity needs a grid centered on p = 0"));
    }
    let n = grid.len();
    let amps = psi.amplitudes();
    let out = (0..n).map(|i| amps[n - 1 - i]).collect();
    StateVector::new(grid.clone(), out)
}
