use super::hamiltonian::{assemble_fock_hamiltonian, Reference};
use super::params::OscillatorParams;
use super::spectrum::{diagonalize, SpectrumResult};
use crate::error::Result;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DualityReport {
    pub a: f64,
    pub b: f64,
    pub n_max: usize,
    /// Levels compared: the smaller of the two trusted counts.
    pub compared: usize,
    pub max_discrepancy: f64,
    pub original: SpectrumResult,
    pub dual: SpectrumResult,
}

/// Compares the spectra of `H(eB = a, g𝓑 = b)` and `H(eB = -b, g𝓑 = -a)` at
/// `m = ω = ħ = e = g = 1`.
///
/// Exchanging `x → p`, `p → -x` maps one Hamiltonian onto the other. Both
/// are assembled in the bare Fock basis, where the exchange is a relabeling
/// of phases, so the truncated spectra agree level by level.
pub fn reciprocity_duality_check(a: f64, b: f64, n_max: usize) -> Result<DualityReport> {
    let original = diagonalize(&assemble_fock_hamiltonian(&OscillatorParams::unit(a, b), n_max, Reference::Bare)?)?;
    let dual = diagonalize(&assemble_fock_hamiltonian(&OscillatorParams::unit(-b, -a), n_max, Reference::Bare)?)?;
    let compared = original.trusted_count.min(dual.trusted_count);
    let max_discrepancy = original.eigenvalues[..compared]
        .iter()
        .zip(&dual.eigenvalues[..compared])
        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    Ok(DualityReport { a, b, n_max, compared, max_discrepancy, original, dual })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_pair_is_exact() {
        let r = reciprocity_duality_check(0.0, 0.0, 8).unwrap();
        assert_eq!(r.max_discrepancy, 0.0);
        assert!(r.compared > 0);
    }

    #[test]
    fn mixed_pair_agrees() {
        let r = reciprocity_duality_check(0.7, 0.3, 12).unwrap();
        assert!(r.max_discrepancy <= 1e-10, "{}", r.max_discrepancy);
    }
}
