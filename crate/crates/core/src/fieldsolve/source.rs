use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SheetKind {
    /// Sources the time-like potential `C⁰`.
    Charge,
    /// A `y`-directed current sheet; sources `C^y`.
    CurrentY,
    /// Current directed along the sheet normal. Not conserved; kept to
    /// exercise the conservation check.
    CurrentAxial,
}

/// A δ-function sheet `strength · δ(p_axis - position)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sheet {
    pub position: f64,
    pub strength: f64,
    pub kind: SheetKind,
}

/// Sheet sources along one momentum axis (slot 1..=3, default `p_z`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentumSource1D {
    pub sheets: Vec<Sheet>,
    #[serde(default = "default_axis")]
    pub axis: usize,
}

fn default_axis() -> usize {
    3
}

impl MomentumSource1D {
    pub fn new(sheets: Vec<Sheet>) -> Result<Self> {
        let s = MomentumSource1D { sheets, axis: 3 };
        s.validate()?;
        Ok(s)
    }

    /// Equal charge sheets `Σ` at `±p_a` (the momentum capacitor).
    pub fn capacitor(sigma: f64, pa: f64) -> Result<Self> {
        Self::pair(sigma, sigma, pa, SheetKind::Charge)
    }

    /// `+σ` at `-p_a` and `-σ` at `+p_a`: the ordinary parallel-plate layout.
    pub fn opposite_charges(sigma: f64, pa: f64) -> Result<Self> {
        Self::pair(sigma, -sigma, pa, SheetKind::Charge)
    }

    /// Equal `y`-current sheets `𝒥` at `±p_a`.
    pub fn current_sheets(j: f64, pa: f64) -> Result<Self> {
        Self::pair(j, j, pa, SheetKind::CurrentY)
    }

    fn pair(left: f64, right: f64, pa: f64, kind: SheetKind) -> Result<Self> {
        if !(pa.is_finite() && pa > 0.0) {
            return Err(Error::config(format!("p_a must be positive, got {pa}")));
        }
        Self::new(vec![Sheet { position: -pa, strength: left, kind }, Sheet { position: pa, strength: right, kind }])
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=3).contains(&self.axis) {
            return Err(Error::config(format!("source axis must be a spatial slot 1..=3, got {}", self.axis)));
        }
        for s in &self.sheets {
            if !(s.position.is_finite() && s.strength.is_finite()) {
                return Err(Error::config(format!("sheet {s:?} has a non-finite entry")));
            }
        }
        Ok(())
    }

    /// The single kind shared by every sheet; `None` for an empty source.
    pub fn uniform_kind(&self) -> Result<Option<SheetKind>> {
        let mut kinds = self.sheets.iter().map(|s| s.kind);
        let Some(first) = kinds.next() else { return Ok(None) };
        if kinds.all(|k| k == first) {
            Ok(Some(first))
        } else {
            Err(Error::config("sheets of different kinds source different potentials; solve them separately"))
        }
    }
}
