use super::grid::MomentumGrid;
use crate::error::{Error, Result};
use crate::C64;
use serde::Serialize;
use std::sync::Arc;

/// Momentum-space wavefunction sampled on a grid.
#[derive(Debug, Clone)]
pub struct StateVector {
    grid: Arc<MomentumGrid>,
    amplitudes: Vec<C64>,
}

/// One node of a serialized state: axis coordinates and the amplitude.
#[derive(Debug, Clone, Serialize)]
pub struct StateSample {
    pub p: Vec<f64>,
    pub re: f64,
    pub im: f64,
}

impl StateVector {
    pub fn new(grid: Arc<MomentumGrid>, amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.len() != grid.len() {
            return Err(Error::config(format!(
                "state has {} amplitudes for a grid of {} nodes",
                amplitudes.len(),
                grid.len()
            )));
        }
        Ok(StateVector { grid, amplitudes })
    }

    pub fn zeros(grid: Arc<MomentumGrid>) -> Self {
        let n = grid.len();
        StateVector { grid, amplitudes: vec![C64::new(0.0, 0.0); n] }
    }

    /// Samples `f` at every node (coordinates along the grid axes).
    pub fn from_fn(grid: Arc<MomentumGrid>, f: impl Fn(&[f64]) -> C64) -> Self {
        let amplitudes = (0..grid.len()).map(|i| f(&grid.node(i))).collect();
        StateVector { grid, amplitudes }
    }

    pub fn grid(&self) -> &Arc<MomentumGrid> {
        &self.grid
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut [C64] {
        &mut self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<C64> {
        self.amplitudes
    }

    pub(crate) fn same_grid(&self, other: &StateVector) -> Result<()> {
        if Arc::ptr_eq(&self.grid, &other.grid) || *self.grid == *other.grid {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }

    /// `⟨self|other⟩` with the cell volume as quadrature weight.
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        self.same_grid(other)?;
        let s: C64 = self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum();
        Ok(s * self.grid.cell_volume())
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>() * self.grid.cell_volume()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn normalized(mut self) -> Result<Self> {
        let n = self.norm();
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::Numerical("cannot normalize a zero or non-finite state".into()));
        }
        for a in &mut self.amplitudes {
            *a /= n;
        }
        Ok(self)
    }

    pub fn scaled(mut self, s: C64) -> Self {
        for a in &mut self.amplitudes {
            *a *= s;
        }
        self
    }

    /// `self + s·other`.
    pub fn add_scaled(mut self, s: C64, other: &StateVector) -> Result<Self> {
        self.same_grid(other)?;
        for (a, b) in self.amplitudes.iter_mut().zip(&other.amplitudes) {
            *a += s * b;
        }
        Ok(self)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, other: &StateVector) -> Result<Self> {
        self.add_scaled(C64::new(-1.0, 0.0), other)
    }

    pub fn dump(&self) -> Vec<StateSample> {
        (0..self.grid.len())
            .map(|i| StateSample { p: self.grid.node(i), re: self.amplitudes[i].re, im: self.amplitudes[i].im })
            .collect()
    }
}

/// Normalized Gaussian `∝ exp(-|p - center|² / (2 width²))`.
///
/// The center must sit at least three widths from every boundary; the
/// periodic spectral derivative is only trustworthy for such states.
pub fn gaussian_state(grid: &Arc<MomentumGrid>, center: &[f64], width: f64) -> Result<StateVector> {
    if center.len() != grid.dims() {
        return Err(Error::config("center must have one coordinate per grid axis"));
    }
    if !(width.is_finite() && width > 0.0) {
        return Err(Error::config(format!("width must be positive, got {width}")));
    }
    for (a, &c) in center.iter().enumerate() {
        let lo = grid.coordinate(a, 0);
        let hi = grid.coordinate(a, grid.points(a) - 1);
        if c - 3.0 * width < lo || c + 3.0 * width > hi {
            return Err(Error::NotLocalized(format!(
                "center {c} with width {width} is within three widths of [{lo}, {hi}]"
            )));
        }
    }
    let s = 1.0 / (2.0 * width * width);
    StateVector::from_fn(grid.clone(), |p| {
        let r2: f64 = p.iter().zip(center).map(|(x, c)| (x - c) * (x - c)).sum();
        C64::new((-r2 * s).exp(), 0.0)
    })
    .normalized()
}
