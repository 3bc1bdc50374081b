use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter failed validation before any numerics ran.
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("axis {axis} out of range for a {dims}-dimensional grid")]
    AxisOutOfRange { axis: usize, dims: usize },

    /// A gauge configuration was evaluated on its singular set.
    #[error("singular evaluation at p = {0:?}")]
    Singular([f64; 4]),

    #[error("operands live on different grids")]
    GridMismatch,

    #[error("state is not localized away from the grid boundary: {0}")]
    NotLocalized(String),

    #[error("grid is not square: {0}")]
    NonSquareGrid(String),

    #[error("momentum coupling g must be nonzero")]
    ZeroCoupling,

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("size budget exceeded: {0}")]
    Budget(String),

    /// Projector onto the complement of a null (or zero) four-vector.
    #[error("transverse projector undefined for a null vector")]
    NullVector,

    #[error("sheet at p = {position} lies outside the solver interior [{lo}, {hi}]")]
    SheetOutsideGrid { position: f64, lo: f64, hi: f64 },

    #[error("spectrum is unbounded below (ω_eff = {omega_eff}, |L_z coupling| = {coupling})")]
    UnboundedSpectrum { omega_eff: f64, coupling: f64 },

    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
