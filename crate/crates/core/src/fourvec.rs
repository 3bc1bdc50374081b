//! Four-vectors with the `(+,-,-,-)` metric.

use serde::{Deserialize, Serialize};
use std::ops::{Add, Index, Mul, Sub};

/// Component `0` is time-like (energy for momenta).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct FourVector(pub [f64; 4]);

pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

impl FourVector {
    pub const ZERO: FourVector = FourVector([0.0; 4]);

    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        FourVector([t, x, y, z])
    }

    /// Purely spatial vector with zero time component.
    pub fn spatial(v: [f64; 3]) -> Self {
        FourVector([0.0, v[0], v[1], v[2]])
    }

    pub fn components(&self) -> [f64; 4] {
        self.0
    }

    pub fn space(&self) -> [f64; 3] {
        [self.0[1], self.0[2], self.0[3]]
    }

    /// Minkowski product `a·b = a⁰b⁰ - a·b`.
    pub fn dot(&self, other: &FourVector) -> f64 {
        self.0.iter().zip(other.0.iter()).zip(METRIC.iter()).map(|((a, b), g)| g * a * b).sum()
    }

    pub fn square(&self) -> f64 {
        self.dot(self)
    }

    /// Euclidean length of the four components.
    pub fn euclidean_norm(&self) -> f64 {
        self.0.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn spatial_norm(&self) -> f64 {
        self.space().iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// Index-lowered components `x_μ = η_μν x^ν`.
    pub fn lowered(&self) -> [f64; 4] {
        let mut out = self.0;
        for (o, g) in out.iter_mut().zip(METRIC.iter()) {
            *o *= g;
        }
        out
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }
}

impl Index<usize> for FourVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, rhs: FourVector) -> FourVector {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0.iter()) {
            *o += r;
        }
        FourVector(out)
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, rhs: FourVector) -> FourVector {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0.iter()) {
            *o -= r;
        }
        FourVector(out)
    }
}

impl Mul<f64> for FourVector {
    type Output = FourVector;
    fn mul(self, s: f64) -> FourVector {
        FourVector(self.0.map(|c| c * s))
    }
}

impl From<[f64; 4]> for FourVector {
    fn from(v: [f64; 4]) -> Self {
        FourVector(v)
    }
}
