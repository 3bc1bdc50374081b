//! Periodic Fourier differentiation along one grid axis.

use crate::C64;
use rustfft::{Fft, FftPlanner};
use std::f64::consts::PI;
use std::sync::Arc;

/// First-derivative operator on a periodic line of `n` samples with the
/// given spacing. The Nyquist mode of even-length lines is zeroed so the
/// derivative of real data stays real and the operator is skew-adjoint.
#[derive(Clone)]
pub struct SpectralDerivative {
    n: usize,
    wavenumbers: Vec<f64>,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl std::fmt::Debug for SpectralDerivative {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SpectralDerivative").field("n", &self.n).finish()
    }
}

impl SpectralDerivative {
    pub fn new(n: usize, spacing: f64) -> Self {
        let period = n as f64 * spacing;
        let wavenumbers = (0..n)
            .map(|j| {
                if 2 * j == n {
                    0.0
                } else if 2 * j < n {
                    2.0 * PI * j as f64 / period
                } else {
                    2.0 * PI * (j as f64 - n as f64) / period
                }
            })
            .collect();
        let mut planner = FftPlanner::new();
        SpectralDerivative {
            n,
            wavenumbers,
            forward: planner.plan_fft_forward(n),
            inverse: planner.plan_fft_inverse(n),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// In-place derivative of one contiguous line.
    pub fn differentiate_line(&self, line: &mut [C64]) {
        debug_assert_eq!(line.len(), self.n);
        self.forward.process(line);
        let norm = 1.0 / self.n as f64;
        for (c, &k) in line.iter_mut().zip(&self.wavenumbers) {
            *c = C64::new(0.0, k * norm) * *c;
        }
        self.inverse.process(line);
    }

    /// Derivative of a flattened row-major array along `axis`, where
    /// `shape` gives the node counts on each axis.
    pub fn differentiate(&self, data: &[C64], shape: &[usize], axis: usize) -> Vec<C64> {
        let mut out = data.to_vec();
        match (shape.len(), axis) {
            (1, _) | (2, 1) => {
                for line in out.chunks_mut(self.n) {
                    self.differentiate_line(line);
                }
            }
            _ => {
                let (rows, cols) = (shape[0], shape[1]);
                let mut line = vec![C64::new(0.0, 0.0); rows];
                for c in 0..cols {
                    for r in 0..rows {
                        line[r] = out[r * cols + c];
                    }
                    self.differentiate_line(&mut line);
                    for r in 0..rows {
                        out[r * cols + c] = line[r];
                    }
                }
            }
        }
        out
    }

    /// Dense real matrix of the operator (real and antisymmetric).
    pub fn matrix(&self) -> Vec<Vec<f64>> {
        let mut cols = Vec::with_capacity(self.n);
        for j in 0..self.n {
            let mut e = vec![C64::new(0.0, 0.0); self.n];
            e[j] = C64::new(1.0, 0.0);
            self.differentiate_line(&mut e);
            cols.push(e);
        }
        (0..self.n).map(|i| (0..self.n).map(|j| cols[j][i].re).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn differentiates_resolved_sine_exactly() {
        let n = 32;
        let l = 4.0;
        let h = 2.0 * l / n as f64;
        let d = SpectralDerivative::new(n, h);
        let k = 2.0 * PI * 3.0 / (2.0 * l);
        let mut f: Vec<C64> = (0..n).map(|j| C64::new((k * j as f64 * h).sin(), 0.0)).collect();
        d.differentiate_line(&mut f);
        for (j, v) in f.iter().enumerate() {
            assert!((v.re - k * (k * j as f64 * h).cos()).abs() < 1e-12);
            assert!(v.im.abs() < 1e-12);
        }
    }

    #[test]
    fn matrix_is_antisymmetric() {
        let m = SpectralDerivative::new(16, 0.5).matrix();
        for i in 0..16 {
            for j in 0..16 {
                assert!((m[i][j] + m[j][i]).abs() < 1e-12);
            }
        }
    }
}
