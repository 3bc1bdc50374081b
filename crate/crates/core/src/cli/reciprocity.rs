use super::output::{check_finite, check_positive, to_json};
use super::{Failure, Outcome};
use crate::landau::reciprocity_duality_check;
use clap::Args;
use serde::Serialize;

#[derive(Debug, Clone, Args)]
pub struct ReciprocityArgs {
    /// eB of the original Hamiltonian.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub a: f64,
    /// g𝓑 of the original Hamiltonian.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub b: f64,
    #[arg(long, default_value_t = 40)]
    pub nmax: usize,
    /// Exit 3 if the trusted levels differ by more than --tol.
    #[arg(long)]
    pub assert: bool,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

#[derive(Serialize)]
struct ReciprocityOutput {
    a: f64,
    b: f64,
    dual: [f64; 2],
    n_max: usize,
    compared: usize,
    max_discrepancy: f64,
    trusted_levels: Vec<f64>,
}

pub fn run(args: &ReciprocityArgs) -> Result<Outcome, Failure> {
    check_finite("a", args.a)?;
    check_finite("b", args.b)?;
    check_positive("tol", args.tol)?;
    let r = reciprocity_duality_check(args.a, args.b, args.nmax)?;
    let out = ReciprocityOutput {
        a: args.a,
        b: args.b,
        dual: [-args.b, -args.a],
        n_max: args.nmax,
        compared: r.compared,
        max_discrepancy: r.max_discrepancy,
        trusted_levels: r.original.eigenvalues[..r.compared].to_vec(),
    };
    let assertion = if !args.assert {
        None
    } else if r.compared == 0 {
        Some("no trusted levels to compare; raise --nmax".into())
    } else {
        (!(r.max_discrepancy <= args.tol))
            .then(|| format!("duality discrepancy {:e} exceeds tolerance {:e}", r.max_discrepancy, args.tol))
    };
    Ok(Outcome { json: to_json("reciprocity", &out)?, assertion })
}
