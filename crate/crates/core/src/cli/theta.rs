use super::output::{check_finite, check_positive, to_json, write_csv};
use super::{Failure, Outcome};
use crate::gaugefield::{theta_map, MomentumGaugeConfig, Plateau};
use crate::phasegrid::MomentumGrid;
use clap::{Args, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Charge sheets Σ at ±p_a; tracks Θ_03.
    Capacitor,
    /// y-current sheets 𝒥 at ±p_a; tracks Θ_23.
    Sheets,
}

#[derive(Debug, Clone, Args)]
pub struct ThetaMapArgs {
    #[arg(long, value_enum)]
    pub variant: Variant,
    /// Sheet charge density Σ (capacitor).
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub sigma: f64,
    /// Sheet current density 𝒥 (sheets).
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub j: f64,
    /// Sheet position p_a.
    #[arg(long, default_value_t = 1.0)]
    pub pa: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub g: f64,
    /// Number of p_z samples (even).
    #[arg(long, default_value_t = 512)]
    pub samples: usize,
    /// Half-width of the sampled p_z range; defaults to 4 p_a.
    #[arg(long)]
    pub extent: Option<f64>,
    /// Write (p_z, Θ) rows here.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Serialize)]
struct ThetaOutput {
    variant: Variant,
    strength: f64,
    pa: f64,
    g: f64,
    samples: usize,
    extent: f64,
    spacing: f64,
    component: [usize; 2],
    plateaus: Vec<Plateau>,
    boundaries: Vec<f64>,
}

pub fn run(args: &ThetaMapArgs) -> Result<Outcome, Failure> {
    check_finite("g", args.g)?;
    check_positive("pa", args.pa)?;
    let (config, strength) = match args.variant {
        Variant::Capacitor => (MomentumGaugeConfig::CapacitorStack { sigma: args.sigma, pa: args.pa }, args.sigma),
        Variant::Sheets => (MomentumGaugeConfig::CurrentSheets { j: args.j, pa: args.pa }, args.j),
    };
    config.validate()?;
    let extent = args.extent.unwrap_or(4.0 * args.pa);
    check_positive("extent", extent)?;
    let grid = MomentumGrid::new(1, args.samples, extent, None)?.along(&[3])?;
    let map = theta_map(&config, args.g, &grid)?;
    let (mu, nu) = map.component;
    if let Some(path) = &args.csv {
        let values = map.values(mu, nu);
        let rows = map.nodes.iter().zip(values).map(|(p, v)| vec![p[3], v]);
        write_csv(path, &["p_z", &format!("theta_{mu}{nu}")], rows)?;
    }
    let out = ThetaOutput {
        variant: args.variant,
        strength,
        pa: args.pa,
        g: args.g,
        samples: args.samples,
        extent,
        spacing: grid.spacing(0),
        component: [mu, nu],
        plateaus: map.plateaus(3),
        boundaries: map.boundaries(3),
    };
    Ok(Outcome { json: to_json("theta-map", &out)?, assertion: None })
}
