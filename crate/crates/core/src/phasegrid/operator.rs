use super::grid::MomentumGrid;
use super::spectral::SpectralDerivative;
use super::state::StateVector;
use crate::error::{Error, Result};
use crate::gaugefield::MomentumGaugeConfig;
use crate::C64;
use std::sync::Arc;

/// Operator of the form `c·∂/∂p_axis + m(p)` acting on grid states.
///
/// This covers everything the phase-space layer needs: the position
/// operator (`c = iħ`, no multiplier), momentum (multiplication by the node
/// coordinate) and covariant positions (`iħ ∂ - g C_i(p)`).
#[derive(Debug, Clone)]
pub struct LinearOperator {
    grid: Arc<MomentumGrid>,
    derivative: Option<(usize, C64, Arc<SpectralDerivative>)>,
    multiplier: Option<Arc<Vec<C64>>>,
    hermitian: bool,
}

impl LinearOperator {
    pub fn grid(&self) -> &Arc<MomentumGrid> {
        &self.grid
    }

    /// Whether the operator is claimed to be Hermitian.
    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn multiplier(&self) -> Option<&[C64]> {
        self.multiplier.as_deref().map(|v| v.as_slice())
    }

    pub fn apply(&self, psi: &StateVector) -> Result<StateVector> {
        if !(Arc::ptr_eq(&self.grid, psi.grid()) || *self.grid == **psi.grid()) {
            return Err(Error::GridMismatch);
        }
        let amps = psi.amplitudes();
        let mut out = match &self.derivative {
            Some((axis, coeff, d)) => {
                let shape: Vec<usize> = (0..self.grid.dims()).map(|a| self.grid.points(a)).collect();
                let mut v = d.differentiate(amps, &shape, *axis);
                for c in &mut v {
                    *c *= coeff;
                }
                v
            }
            None => vec![C64::new(0.0, 0.0); amps.len()],
        };
        if let Some(m) = &self.multiplier {
            for ((o, a), f) in out.iter_mut().zip(amps).zip(m.iter()) {
                *o += f * a;
            }
        }
        StateVector::new(psi.grid().clone(), out)
    }

    /// Dense matrix, one column per grid node.
    pub fn to_dense(&self) -> Result<Vec<Vec<C64>>> {
        let n = self.grid.len();
        let mut m = vec![vec![C64::new(0.0, 0.0); n]; n];
        for j in 0..n {
            let mut e = StateVector::zeros(self.grid.clone());
            e.amplitudes_mut()[j] = C64::new(1.0, 0.0);
            let col = self.apply(&e)?;
            for (i, v) in col.amplitudes().iter().enumerate() {
                m[i][j] = *v;
            }
        }
        Ok(m)
    }
}

/// `x̂_axis = iħ ∂/∂p_axis` via periodic spectral differentiation.
pub fn position_operator(grid: &Arc<MomentumGrid>, axis: usize, hbar: f64) -> Result<LinearOperator> {
    grid.check_axis(axis)?;
    let d = SpectralDerivative::new(grid.points(axis), grid.spacing(axis));
    Ok(LinearOperator {
        grid: grid.clone(),
        derivative: Some((axis, C64::new(0.0, hbar), Arc::new(d))),
        multiplier: None,
        hermitian: true,
    })
}

/// `p̂_axis`: multiplication by the node coordinate.
pub fn momentum_operator(grid: &Arc<MomentumGrid>, axis: usize) -> Result<LinearOperator> {
    grid.check_axis(axis)?;
    let m = (0..grid.len()).map(|i| C64::new(grid.node(i)[axis], 0.0)).collect();
    Ok(LinearOperator { grid: grid.clone(), derivative: None, multiplier: Some(Arc::new(m)), hermitian: true })
}

/// `X̂_axis = x̂_axis - g·C(p)` where `C` is the config component in the
/// four-momentum slot this grid axis samples.
pub fn covariant_position(
    grid: &Arc<MomentumGrid>,
    axis: usize,
    config: &MomentumGaugeConfig,
    g: f64,
    hbar: f64,
) -> Result<LinearOperator> {
    let mut op = position_operator(grid, axis, hbar)?;
    let slot = grid.component(axis);
    let mut m = Vec::with_capacity(grid.len());
    for i in 0..grid.len() {
        let c = config.eval(&grid.node_momentum(i))?;
        m.push(C64::new(-g * c[slot], 0.0));
    }
    op.multiplier = Some(Arc::new(m));
    Ok(op)
}

/// `(AB - BA)ψ`.
pub fn commutator_apply(a: &LinearOperator, b: &LinearOperator, psi: &StateVector) -> Result<StateVector> {
    if !(Arc::ptr_eq(&a.grid, &b.grid) || *a.grid == *b.grid) {
        return Err(Error::GridMismatch);
    }
    let ab = a.apply(&b.apply(psi)?)?;
    let ba = b.apply(&a.apply(psi)?)?;
    ab.sub(&ba)
}
