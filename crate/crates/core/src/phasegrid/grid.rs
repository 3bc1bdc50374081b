use crate::error::{Error, Result};
use crate::fourvec::FourVector;
use serde::Serialize;

/// Smallest number of nodes accepted on any axis.
pub const MIN_POINTS: usize = 8;

/// Uniform grid over a 1D or 2D slice of momentum space.
///
/// Node `k` on an axis sits at `-half_extent + k·spacing + offset`, with
/// `spacing = 2·half_extent / points`. The default offset of half a cell
/// places the nodes symmetrically about zero and keeps `p = 0` off the grid.
///
/// Each grid axis is attached to one slot of the four-momentum (1 = `p_x`,
/// 2 = `p_y`, 3 = `p_z`); by default axis `a` maps to slot `a + 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentumGrid {
    points: Vec<usize>,
    half_extent: Vec<f64>,
    offset: Vec<f64>,
    components: Vec<usize>,
}

impl MomentumGrid {
    /// Same node count and extent on every axis.
    pub fn new(dims: usize, points: usize, half_extent: f64, offset: Option<f64>) -> Result<Self> {
        if !(1..=2).contains(&dims) {
            return Err(Error::config(format!("grid dimension must be 1 or 2, got {dims}")));
        }
        let offsets = offset.map(|o| vec![o; dims]);
        Self::with_axes(&vec![points; dims], &vec![half_extent; dims], offsets.as_deref())
    }

    pub fn with_axes(points: &[usize], half_extent: &[f64], offset: Option<&[f64]>) -> Result<Self> {
        let dims = points.len();
        if !(1..=2).contains(&dims) || half_extent.len() != dims {
            return Err(Error::config("grid needs 1 or 2 axes with matching extents"));
        }
        for (&n, &l) in points.iter().zip(half_extent) {
            if n < MIN_POINTS {
                return Err(Error::config(format!("{n} points per axis, need at least {MIN_POINTS}")));
            }
            // an odd count puts the middle node of a half-cell-offset grid on p = 0
            if offset.is_none() && n % 2 == 1 {
                return Err(Error::config(format!("points per axis must be even, got {n}")));
            }
            if !(l.is_finite() && l > 0.0) {
                return Err(Error::config(format!("half extent must be positive, got {l}")));
            }
        }
        let offset = match offset {
            Some(o) => {
                if o.len() != dims || o.iter().any(|v| !v.is_finite()) {
                    return Err(Error::config("offset must be finite, one per axis"));
                }
                o.to_vec()
            }
            None => points.iter().zip(half_extent).map(|(&n, &l)| l / n as f64).collect(),
        };
        Ok(MomentumGrid {
            points: points.to_vec(),
            half_extent: half_extent.to_vec(),
            offset,
            components: (1..=dims).collect(),
        })
    }

    /// Square, centered grid whose spacing satisfies `h² = 2πħ / N`, so the
    /// discrete Fourier kernel maps the grid onto itself.
    pub fn self_dual(dims: usize, points: usize, hbar: f64) -> Result<Self> {
        let h = (2.0 * std::f64::consts::PI * hbar / points as f64).sqrt();
        Self::new(dims, points, 0.5 * h * points as f64, None)
    }

    /// Reassigns which four-momentum slot each axis samples.
    pub fn along(mut self, components: &[usize]) -> Result<Self> {
        if components.len() != self.dims() || components.iter().any(|c| !(1..=3).contains(c)) {
            return Err(Error::config("axis components must be spatial slots 1..=3, one per axis"));
        }
        if self.dims() == 2 && components[0] == components[1] {
            return Err(Error::config("grid axes must sample distinct components"));
        }
        self.components = components.to_vec();
        Ok(self)
    }

    pub fn dims(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self, axis: usize) -> usize {
        self.points[axis]
    }

    pub fn half_extent(&self, axis: usize) -> f64 {
        self.half_extent[axis]
    }

    pub fn offset(&self, axis: usize) -> f64 {
        self.offset[axis]
    }

    pub fn spacing(&self, axis: usize) -> f64 {
        2.0 * self.half_extent[axis] / self.points[axis] as f64
    }

    pub fn component(&self, axis: usize) -> usize {
        self.components[axis]
    }

    pub fn len(&self) -> usize {
        self.points.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn cell_volume(&self) -> f64 {
        (0..self.dims()).map(|a| self.spacing(a)).product()
    }

    pub fn coordinate(&self, axis: usize, k: usize) -> f64 {
        -self.half_extent[axis] + k as f64 * self.spacing(axis) + self.offset[axis]
    }

    pub fn axis_coordinates(&self, axis: usize) -> Vec<f64> {
        (0..self.points[axis]).map(|k| self.coordinate(axis, k)).collect()
    }

    pub fn check_axis(&self, axis: usize) -> Result<()> {
        if axis < self.dims() {
            Ok(())
        } else {
            Err(Error::AxisOutOfRange { axis, dims: self.dims() })
        }
    }

    /// Per-axis node indices of a flat (row-major, axis 0 slowest) index.
    pub fn unflatten(&self, index: usize) -> [usize; 2] {
        match self.dims() {
            1 => [index, 0],
            _ => [index / self.points[1], index % self.points[1]],
        }
    }

    /// Coordinates along the grid axes of a flat node index.
    pub fn node(&self, index: usize) -> Vec<f64> {
        let idx = self.unflatten(index);
        (0..self.dims()).map(|a| self.coordinate(a, idx[a])).collect()
    }

    /// The node embedded as a four-momentum (unsampled slots are zero).
    pub fn node_momentum(&self, index: usize) -> FourVector {
        let mut p = [0.0; 4];
        for (a, c) in self.node(index).into_iter().enumerate() {
            p[self.components[a]] = c;
        }
        FourVector(p)
    }

    /// Equal node count and extent on all axes.
    pub fn is_square(&self) -> bool {
        self.points.windows(2).all(|w| w[0] == w[1]) && self.half_extent.windows(2).all(|w| w[0] == w[1])
    }

    /// Nodes symmetric about zero (offset of half a cell on every axis).
    pub fn is_centered(&self) -> bool {
        (0..self.dims()).all(|a| (self.offset[a] - 0.5 * self.spacing(a)).abs() <= 1e-12 * self.spacing(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_layout_1d() {
        let g = MomentumGrid::new(1, 8, 4.0, None).unwrap();
        assert_eq!(g.len(), 8);
        assert_eq!(g.spacing(0), 1.0);
        assert_eq!(g.axis_coordinates(0), vec![-3.5, -2.5, -1.5, -0.5, 0.5, 1.5, 2.5, 3.5]);
        assert!(g.is_centered());
    }

    #[test]
    fn default_layout_2d() {
        let g = MomentumGrid::new(2, 16, 6.0, None).unwrap();
        assert_eq!(g.len(), 256);
        assert_eq!(g.spacing(0), 0.75);
        assert_eq!(g.cell_volume(), 0.5625);
        let p = g.node_momentum(17);
        assert_eq!(p.0, [0.0, g.coordinate(0, 1), g.coordinate(1, 1), 0.0]);
    }

    #[test]
    fn undersized_or_degenerate_grids_rejected() {
        assert!(matches!(MomentumGrid::new(1, 4, 4.0, None), Err(Error::Config(_))));
        assert!(matches!(MomentumGrid::new(1, 8, 0.0, None), Err(Error::Config(_))));
        assert!(matches!(MomentumGrid::new(1, 8, -1.0, None), Err(Error::Config(_))));
        assert!(matches!(MomentumGrid::new(3, 8, 1.0, None), Err(Error::Config(_))));
    }

    #[test]
    fn no_node_at_origin_by_default() {
        for n in [8, 16, 64, 34] {
            let g = MomentumGrid::new(1, n, 3.0, None).unwrap();
            assert!(g.axis_coordinates(0).iter().all(|&p| p.abs() > 1e-9), "n = {n}");
        }
        assert!(MomentumGrid::new(1, 33, 3.0, None).is_err());
    }

    #[test]
    fn custom_offset_shifts_nodes() {
        let g = MomentumGrid::new(1, 8, 4.0, Some(0.0)).unwrap();
        assert_eq!(g.coordinate(0, 4), 0.0);
        assert!(!g.is_centered());
    }

    #[test]
    fn axis_remapping() {
        let g = MomentumGrid::new(1, 8, 4.0, None).unwrap().along(&[3]).unwrap();
        assert_eq!(g.node_momentum(7).0, [0.0, 0.0, 0.0, 3.5]);
        assert!(MomentumGrid::new(2, 8, 4.0, None).unwrap().along(&[1, 1]).is_err());
    }

    #[test]
    fn self_dual_spacing() {
        let g = MomentumGrid::self_dual(1, 64, 1.0).unwrap();
        let h = g.spacing(0);
        assert!((h * h * 64.0 - 2.0 * std::f64::consts::PI).abs() < 1e-12);
    }
}
