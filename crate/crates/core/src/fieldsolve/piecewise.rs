use super::source::{MomentumSource1D, Sheet, SheetKind};
use crate::error::{Error, Result};
use serde::Serialize;
use std::f64::consts::PI;

/// Piecewise-constant field and piecewise-linear potential along one axis.
///
/// Built by superposing single-sheet solutions `field = 2πq sign(p - p_k)`,
/// with potential `φ = -2π Σ q_k (|p - p_k| - |p_k|)`. The field is the
/// negative slope of the potential on every interval, the jump across a
/// sheet is `4πq`, and the potential vanishes at `p = 0` (and is even for
/// mirror-symmetric sources).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PiecewiseField1D {
    pub kind: SheetKind,
    pub breakpoints: Vec<f64>,
    /// One value per interval, `breakpoints.len() + 1` in total.
    pub field: Vec<f64>,
    /// Potential on interval `r` is `intercept[r] - field[r] · p`.
    pub intercept: Vec<f64>,
}

impl PiecewiseField1D {
    pub fn from_sheets(sheets: &[Sheet], kind: SheetKind) -> Result<Self> {
        if kind == SheetKind::CurrentAxial {
            return Err(Error::config("axial currents have no static sheet solution"));
        }
        let mut sorted: Vec<Sheet> = sheets.to_vec();
        if sorted.iter().any(|s| s.kind != kind) {
            return Err(Error::config("all sheets must share the requested kind"));
        }
        if sorted.iter().any(|s| !(s.position.is_finite() && s.strength.is_finite())) {
            return Err(Error::config("sheet positions and strengths must be finite"));
        }
        sorted.sort_by(|a, b| a.position.total_cmp(&b.position));
        let breakpoints: Vec<f64> = sorted.iter().map(|s| s.position).collect();
        let mut field = Vec::with_capacity(sorted.len() + 1);
        let mut intercept = Vec::with_capacity(sorted.len() + 1);
        for r in 0..=sorted.len() {
            let mut f = 0.0;
            let mut c = 0.0;
            for (k, s) in sorted.iter().enumerate() {
                let sign = if k < r { 1.0 } else { -1.0 };
                f += 2.0 * PI * s.strength * sign;
                c += 2.0 * PI * s.strength * (sign * s.position + s.position.abs());
            }
            field.push(f);
            intercept.push(c);
        }
        Ok(PiecewiseField1D { kind, breakpoints, field, intercept })
    }

    pub fn from_source(source: &MomentumSource1D) -> Result<Self> {
        let kind = source.uniform_kind()?.unwrap_or(SheetKind::Charge);
        Self::from_sheets(&source.sheets, kind)
    }

    /// Interval index; a point exactly on a sheet takes the side away from 0.
    fn interval(&self, p: f64) -> usize {
        let below = self.breakpoints.iter().filter(|&&b| b < p).count();
        let on = self.breakpoints.iter().filter(|&&b| b == p).count();
        if on > 0 && p > 0.0 {
            below + on
        } else {
            below
        }
    }

    pub fn field_at(&self, p: f64) -> f64 {
        self.field[self.interval(p)]
    }

    pub fn potential_at(&self, p: f64) -> f64 {
        let r = self.interval(p);
        self.intercept[r] - self.field[r] * p
    }

    /// Field jump across each breakpoint, left to right.
    pub fn jumps(&self) -> Vec<f64> {
        self.field.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

/// `ℰ_z` of two equal charge sheets `Σ` at `±p_a`: `±4πΣ` outside, 0 between.
pub fn solve_capacitor(sigma: f64, pa: f64) -> Result<PiecewiseField1D> {
    PiecewiseField1D::from_source(&MomentumSource1D::capacitor(sigma, pa)?)
}

/// `𝓑_x` of two equal `y`-current sheets `𝒥` at `±p_a`: `±4π𝒥` outside.
pub fn solve_sheets(j: f64, pa: f64) -> Result<PiecewiseField1D> {
    PiecewiseField1D::from_source(&MomentumSource1D::current_sheets(j, pa)?)
}
