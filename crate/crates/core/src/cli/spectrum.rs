use super::output::{check_positive, to_json};
use super::{Failure, Outcome};
use crate::landau::{
    analytic_spectrum, assemble_fock_hamiltonian, assemble_grid_hamiltonian, diagonalize, effective_params,
    AnalyticLevel, Basis, EffectiveParams, OscillatorParams, Reference, MAX_GRID_POINTS,
};
use crate::phasegrid::MomentumGrid;
use clap::{Args, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use std::path::PathBuf;

/// Lowest grid-basis levels compared with the Fock basis.
const GRID_LEVELS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReferenceArg {
    Bare,
    Effective,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[arg(long, default_value_t = 1.0)]
    pub m: f64,
    /// Oscillator frequency ω.
    #[arg(long, default_value_t = 1.0)]
    pub w: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub e: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub g: f64,
    /// Ordinary magnetic field B along z.
    #[arg(long = "B", default_value_t = 0.0, allow_negative_numbers = true)]
    pub b: f64,
    /// Momentum magnetic field 𝓑 along z.
    #[arg(long = "Bm", default_value_t = 0.0, allow_negative_numbers = true)]
    pub bm: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
    /// Quanta per mode in the Fock truncation.
    #[arg(long, default_value_t = 40)]
    pub nmax: usize,
    /// Oscillator whose ladder operators define the Fock basis.
    #[arg(long, value_enum, default_value_t = ReferenceArg::Bare)]
    pub reference: ReferenceArg,
    /// Also diagonalize on a 2D momentum grid and compare the lowest levels.
    #[arg(long)]
    pub grid_cross_check: bool,
    #[arg(long, default_value_t = 32)]
    pub grid_points: usize,
    /// Grid half-width; defaults to 8/√(m_eff ω_eff) in units of √ħ.
    #[arg(long)]
    pub grid_extent: Option<f64>,
    /// Exit 3 unless trusted levels match the closed form to --tol.
    #[arg(long)]
    pub assert: bool,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// File holding a JSON array of parameter objects (keys m, w, e, g, B, Bm, hbar); runs
    /// each in parallel and reports them in input order.
    #[arg(long)]
    pub sweep: Option<PathBuf>,
}

#[derive(Serialize)]
pub struct GridCheck {
    points: usize,
    half_extent: f64,
    lowest: Vec<f64>,
    max_discrepancy_vs_fock: f64,
}

#[derive(Serialize)]
pub struct SpectrumReport {
    params: OscillatorParams,
    effective: EffectiveParams,
    basis: Basis,
    dimension: usize,
    eigenvalues: Vec<f64>,
    trusted_count: usize,
    analytic: Vec<AnalyticLevel>,
    /// Largest `|numerical - closed form|` over the trusted levels.
    max_trusted_discrepancy: f64,
    /// The same over the lowest quarter of the spectrum, trusted or not.
    quarter_count: usize,
    max_quarter_discrepancy: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    grid: Option<GridCheck>,
}

#[derive(Serialize)]
struct SweepOutput {
    sweep: Vec<SpectrumReport>,
}

fn max_diff(a: &[f64], b: &[AnalyticLevel]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, l)| m.max((x - l.energy).abs()))
}

pub fn compute(params: &OscillatorParams, args: &SpectrumArgs) -> Result<SpectrumReport, Failure> {
    params.validate()?;
    let effective = effective_params(params)?;
    let reference = match args.reference {
        ReferenceArg::Bare => Reference::Bare,
        ReferenceArg::Effective => Reference::Effective,
    };
    let h = assemble_fock_hamiltonian(params, args.nmax, reference)?;
    let spec = diagonalize(&h)?;
    let quarter_count = spec.eigenvalues.len() / 4;
    let analytic = analytic_spectrum(params, quarter_count)?;
    let trusted = spec.trusted_count;
    let grid = if args.grid_cross_check {
        if args.grid_points > MAX_GRID_POINTS {
            return Err(Failure::invalid(format!("--grid-points may be at most {MAX_GRID_POINTS}")));
        }
        let half_extent = match args.grid_extent {
            Some(l) => {
                check_positive("grid-extent", l)?;
                l
            }
            None => 8.0 * (params.hbar / (effective.m_eff * effective.omega_eff)).sqrt(),
        };
        let g = MomentumGrid::new(2, args.grid_points, half_extent, None)?;
        let gs = diagonalize(&assemble_grid_hamiltonian(&g, params)?)?;
        let lowest: Vec<f64> = gs.eigenvalues.iter().take(GRID_LEVELS).copied().collect();
        let max_discrepancy_vs_fock =
            lowest.iter().zip(&spec.eigenvalues).fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        Some(GridCheck { points: args.grid_points, half_extent, lowest, max_discrepancy_vs_fock })
    } else {
        None
    };
    Ok(SpectrumReport {
        params: *params,
        effective,
        basis: spec.basis.clone(),
        dimension: h.dim(),
        max_trusted_discrepancy: max_diff(&spec.eigenvalues[..trusted], &analytic[..trusted]),
        max_quarter_discrepancy: max_diff(&spec.eigenvalues[..quarter_count], &analytic),
        quarter_count,
        trusted_count: trusted,
        analytic: analytic[..trusted].to_vec(),
        eigenvalues: spec.eigenvalues,
        grid,
    })
}

fn check_report(r: &SpectrumReport, tol: f64) -> Option<String> {
    if r.trusted_count == 0 {
        return Some("no level survives the truncation trust policy; raise --nmax".into());
    }
    (!(r.max_trusted_discrepancy <= tol))
        .then(|| format!("trusted discrepancy {:e} exceeds tolerance {:e}", r.max_trusted_discrepancy, tol))
}

pub fn run(args: &SpectrumArgs) -> Result<Outcome, Failure> {
    check_positive("tol", args.tol)?;
    if let Some(path) = &args.sweep {
        let text =
            std::fs::read_to_string(path).map_err(|e| Failure::invalid(format!("reading {}: {e}", path.display())))?;
        let draws: Vec<OscillatorParams> =
            serde_json::from_str(&text).map_err(|e| Failure::invalid(format!("sweep file: {e}")))?;
        let reports = draws.par_iter().map(|p| compute(p, args)).collect::<Result<Vec<_>, _>>()?;
        let assertion = if args.assert {
            reports
                .iter()
                .enumerate()
                .find_map(|(i, r)| check_report(r, args.tol).map(|m| format!("sweep entry {i}: {m}")))
        } else {
            None
        };
        return Ok(Outcome { json: to_json("spectrum", &SweepOutput { sweep: reports })?, assertion });
    }
    let params =
        OscillatorParams { m: args.m, omega: args.w, e: args.e, g: args.g, b: args.b, bm: args.bm, hbar: args.hbar };
    let report = compute(&params, args)?;
    let assertion = if args.assert { check_report(&report, args.tol) } else { None };
    Ok(Outcome { json: to_json("spectrum", &report)?, assertion })
}
