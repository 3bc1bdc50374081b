use super::output::{check_finite, check_positive, to_json};
use super::{Failure, Outcome};
use crate::gaugefield::{GaugeConfigSpec, MomentumGaugeConfig};
use crate::phasegrid::{gaussian_state, verify_noncommutativity, MomentumGrid, PairResidual, StateVector};
use clap::Args;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;

#[derive(Debug, Clone, Args)]
pub struct NcCheckArgs {
    /// Gauge configuration JSON; defaults to the symmetric gauge with 𝓑 = 1.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Momentum coupling g.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub g: f64,
    /// Nodes per grid axis.
    #[arg(long, default_value_t = 64)]
    pub n: usize,
    /// Half-width of the grid in momentum units.
    #[arg(long, default_value_t = 8.0)]
    pub extent: f64,
    /// Four-momentum slots sampled by the two grid axes.
    #[arg(long, value_delimiter = ',', default_values_t = [1usize, 2])]
    pub axes: Vec<usize>,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
    /// Seed for the Gaussian test states.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 5)]
    pub states: usize,
    /// Exit 3 if any commutator residual exceeds --bound.
    #[arg(long)]
    pub assert: bool,
    #[arg(long, default_value_t = 1e-6)]
    pub bound: f64,
}

#[derive(Serialize)]
struct GridInfo {
    dims: usize,
    points: Vec<usize>,
    half_extent: Vec<f64>,
    spacing: Vec<f64>,
    offset: Vec<f64>,
    components: Vec<usize>,
}

#[derive(Serialize)]
struct StateInfo {
    center: Vec<f64>,
    width: f64,
}

#[derive(Serialize)]
struct NcCheckOutput {
    config: Option<GaugeConfigSpec>,
    g: f64,
    hbar: f64,
    seed: u64,
    grid: GridInfo,
    states: Vec<StateInfo>,
    /// `theta_ij` for each ordered slot pair `i < j`.
    theta: BTreeMap<String, f64>,
    pairs: Vec<PairResidual>,
    max_residual: f64,
    bound: f64,
}

/// Drawn states with their `(center, width)`.
type DrawnStates = (Vec<StateVector>, Vec<(Vec<f64>, f64)>);

/// Test states: Gaussians of width 0.6 to 0.8 centred within 1.5 of the
/// origin, drawn from a ChaCha8 stream.
pub fn test_states(grid: &Arc<MomentumGrid>, count: usize, seed: u64) -> crate::Result<DrawnStates> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut states = Vec::with_capacity(count);
    let mut info = Vec::with_capacity(count);
    for _ in 0..count {
        let center: Vec<f64> = (0..grid.dims()).map(|_| rng.gen_range(-1.5..=1.5)).collect();
        let width = rng.gen_range(0.6..=0.8);
        states.push(gaussian_state(grid, &center, width)?);
        info.push((center, width));
    }
    Ok((states, info))
}

pub fn run(args: &NcCheckArgs) -> Result<Outcome, Failure> {
    check_finite("g", args.g)?;
    check_positive("extent", args.extent)?;
    check_positive("hbar", args.hbar)?;
    check_positive("bound", args.bound)?;
    if args.states == 0 {
        return Err(Failure::invalid("--states must be at least 1"));
    }
    let config = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::invalid(format!("reading {}: {e}", path.display())))?;
            MomentumGaugeConfig::from_json(&text)?
        }
        None => MomentumGaugeConfig::SymmetricGauge2D { b: 1.0 },
    };
    config.validate()?;
    let grid = Arc::new(MomentumGrid::new(args.axes.len(), args.n, args.extent, None)?.along(&args.axes)?);
    let (states, info) = test_states(&grid, args.states, args.seed)?;
    let report = verify_noncommutativity(&grid, &config, args.g, args.hbar, &states)?;

    let theta = report
        .pairs
        .iter()
        .filter(|p| p.components[0] < p.components[1])
        .map(|p| (format!("theta_{}{}", p.components[0], p.components[1]), p.theta))
        .collect();
    let dims = grid.dims();
    let out = NcCheckOutput {
        config: config.to_spec(),
        g: args.g,
        hbar: args.hbar,
        seed: args.seed,
        grid: GridInfo {
            dims,
            points: (0..dims).map(|a| grid.points(a)).collect(),
            half_extent: (0..dims).map(|a| grid.half_extent(a)).collect(),
            spacing: (0..dims).map(|a| grid.spacing(a)).collect(),
            offset: (0..dims).map(|a| grid.offset(a)).collect(),
            components: (0..dims).map(|a| grid.component(a)).collect(),
        },
        states: info.into_iter().map(|(center, width)| StateInfo { center, width }).collect(),
        theta,
        max_residual: report.max_residual(),
        pairs: report.pairs,
        bound: args.bound,
    };
    let assertion = (args.assert && !(out.max_residual <= args.bound))
        .then(|| format!("commutator residual {:e} exceeds bound {:e}", out.max_residual, args.bound));
    Ok(Outcome { json: to_json("nc-check", &out)?, assertion })
}
