use super::output::{check_finite, check_positive, to_json, write_csv};
use super::{Failure, Outcome};
use crate::fieldsolve::{
    laplacian_residual, poisson_solve_1d, BoundaryCondition, MomentumSource1D, PiecewiseField1D, ResidualReport, Sheet,
    SheetKind,
};
use clap::{Args, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// Equal charge sheets at ±p_a.
    Capacitor,
    /// +σ at -p_a, -σ at +p_a.
    Opposite,
    /// Equal y-current sheets at ±p_a.
    Sheets,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Charge,
    CurrentY,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BcArg {
    /// Pin the ends to the exact superposed sheet potential.
    Analytic,
    /// Pin the ends to --left and --right.
    Dirichlet,
}

#[derive(Debug, Clone, Args)]
pub struct SolveFieldArgs {
    /// A sheet as POSITION:STRENGTH; repeat for several.
    #[arg(long = "sheet", value_name = "POS:STRENGTH", allow_hyphen_values = true)]
    pub sheets: Vec<String>,
    #[arg(long, value_enum, conflicts_with = "sheets")]
    pub preset: Option<Preset>,
    /// Strength of the preset sheets.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub strength: f64,
    #[arg(long, default_value_t = 1.0)]
    pub pa: f64,
    /// Kind of the --sheet sources.
    #[arg(long, value_enum, default_value_t = KindArg::Charge)]
    pub kind: KindArg,
    #[arg(long, default_value_t = 512)]
    pub nodes: usize,
    /// Half-width of the solve interval; defaults to 4 × the largest |position| (at least 4).
    #[arg(long)]
    pub extent: Option<f64>,
    #[arg(long, value_enum, default_value_t = BcArg::Analytic)]
    pub bc: BcArg,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub left: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub right: f64,
    /// Write (p, potential, field) rows here.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Exit 3 if the linear-solve residual exceeds --bound.
    #[arg(long)]
    pub assert: bool,
    #[arg(long, default_value_t = 1e-10)]
    pub bound: f64,
}

#[derive(Serialize)]
struct AnalyticComparison {
    /// `max |field - exact|` at nodes two or more cells from every sheet;
    /// absent for Dirichlet ends, which add a uniform field.
    max_field_deviation: Option<f64>,
    plateaus: Vec<f64>,
}

#[derive(Serialize)]
struct SolveFieldOutput {
    source: MomentumSource1D,
    nodes: usize,
    extent: f64,
    spacing: f64,
    boundary: BoundaryCondition,
    residual: ResidualReport,
    analytic: AnalyticComparison,
    residual_bound: f64,
}

fn parse_sheet(text: &str, kind: SheetKind) -> Result<Sheet, Failure> {
    let bad = || Failure::invalid(format!("--sheet expects POSITION:STRENGTH, got {text:?}"));
    let (pos, strength) = text.split_once(':').ok_or_else(bad)?;
    let position: f64 = pos.trim().parse().map_err(|_| bad())?;
    let strength: f64 = strength.trim().parse().map_err(|_| bad())?;
    Ok(Sheet { position, strength, kind })
}

fn build_source(args: &SolveFieldArgs) -> Result<MomentumSource1D, Failure> {
    let source = match args.preset {
        Some(Preset::Capacitor) => MomentumSource1D::capacitor(args.strength, args.pa)?,
        Some(Preset::Opposite) => MomentumSource1D::opposite_charges(args.strength, args.pa)?,
        Some(Preset::Sheets) => MomentumSource1D::current_sheets(args.strength, args.pa)?,
        None => {
            let kind = match args.kind {
                KindArg::Charge => SheetKind::Charge,
                KindArg::CurrentY => SheetKind::CurrentY,
            };
            let sheets = args.sheets.iter().map(|s| parse_sheet(s, kind)).collect::<Result<Vec<_>, _>>()?;
            MomentumSource1D::new(sheets)?
        }
    };
    Ok(source)
}

pub fn run(args: &SolveFieldArgs) -> Result<Outcome, Failure> {
    check_positive("bound", args.bound)?;
    check_finite("left", args.left)?;
    check_finite("right", args.right)?;
    let source = build_source(args)?;
    let reach = source.sheets.iter().fold(0.0f64, |m, s| m.max(s.position.abs()));
    let extent = args.extent.unwrap_or((4.0 * reach).max(4.0));
    check_positive("extent", extent)?;
    let boundary = match args.bc {
        BcArg::Analytic => BoundaryCondition::AnalyticFarField,
        BcArg::Dirichlet => BoundaryCondition::Dirichlet { left: args.left, right: args.right },
    };
    let solution = poisson_solve_1d(&source, args.nodes, extent, boundary)?;
    let residual = laplacian_residual(&solution, &source)?;
    let exact = PiecewiseField1D::from_source(&source)?;
    if let Some(path) = &args.csv {
        let rows = (0..solution.nodes.len()).map(|i| vec![solution.nodes[i], solution.potential[i], solution.field[i]]);
        write_csv(path, &["p", "potential", "field"], rows)?;
    }
    let analytic = AnalyticComparison {
        max_field_deviation: match boundary {
            BoundaryCondition::AnalyticFarField => Some(solution.max_field_deviation(&exact, 2)),
            BoundaryCondition::Dirichlet { .. } => None,
        },
        plateaus: exact.field.clone(),
    };
    let assertion = (args.assert && !(residual.max_abs_residual <= args.bound))
        .then(|| format!("residual {:e} exceeds bound {:e}", residual.max_abs_residual, args.bound));
    let out = SolveFieldOutput {
        source,
        nodes: args.nodes,
        extent,
        spacing: solution.spacing,
        boundary,
        residual,
        analytic,
        residual_bound: args.bound,
    };
    Ok(Outcome { json: to_json("solve-field", &out)?, assertion })
}
