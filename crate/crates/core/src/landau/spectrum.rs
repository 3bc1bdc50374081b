use super::analytic::{analytic_spectrum, contamination_threshold};
use super::hamiltonian::{Basis, HamiltonianMatrix};
use super::matrix::CMatrix;
use super::params::effective_params;
use crate::error::{Error, Result};
use crate::C64;
use faer::diag::Diag;
use faer::dyn_stack::{MemBuffer, MemStack};
use faer::linalg::evd::{self, ComputeEigenvectors};
use faer::{Mat, Par};
use serde::Serialize;

/// Largest relative hermiticity defect [`diagonalize`] accepts.
pub const HERMITICITY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumResult {
    pub eigenvalues: Vec<f64>,
    pub basis: Basis,
    /// Leading eigenvalues unaffected by truncation.
    pub trusted_count: usize,
}

impl SpectrumResult {
    pub fn trusted(&self) -> &[f64] {
        &self.eigenvalues[..self.trusted_count]
    }
}

/// All eigenvalues of a Hermitian matrix, ascending.
///
/// The matrix is split into the blocks connected by its nonzero entries
/// (rotationally symmetric Hamiltonians decouple by parity, for instance) and
/// each block goes through a dense sequential Hermitian eigensolver, so the
/// output is deterministic.
pub fn diagonalize(h: &HamiltonianMatrix) -> Result<SpectrumResult> {
    let m = &h.matrix;
    let defect = m.hermiticity_residual();
    if defect > HERMITICITY_TOL || defect.is_nan() {
        return Err(Error::NotHermitian(defect));
    }
    if m.data().iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
        return Err(Error::Numerical("matrix has non-finite entries".into()));
    }
    let mut eigenvalues = Vec::with_capacity(m.dim());
    for block in connected_blocks(m) {
        eigenvalues.extend(block_eigenvalues(m, &block)?);
    }
    eigenvalues.sort_by(f64::total_cmp);
    let trusted_count = trusted_count(h)?;
    Ok(SpectrumResult { eigenvalues, basis: h.basis.clone(), trusted_count })
}

/// Truncation trust policy.
///
/// Grid basis: an eighth of the dimension. Fock basis: at most a quarter of
/// the dimension, further capped for physical Hamiltonians at the number of
/// exact levels lying below the energy where the truncation first cuts a
/// shell (see [`trusted_shells`]).
pub fn trusted_count(h: &HamiltonianMatrix) -> Result<usize> {
    let dim = h.dim();
    match (&h.basis, &h.params) {
        (Basis::Grid { .. }, _) => Ok(dim / 8),
        (Basis::Fock { n_max, m_ref, omega_ref }, Some(p)) => {
            let quarter = dim / 4;
            let eff = effective_params(p)?;
            if eff.omega_eff - eff.lz_coupling.abs() <= 1e-12 * eff.omega_eff {
                return Ok(0);
            }
            let Some(n_safe) = trusted_shells(*n_max, *m_ref, *omega_ref, eff.m_eff, eff.omega_eff) else {
                return Ok(0);
            };
            let cut = contamination_threshold(p, n_safe)?;
            let levels = analytic_spectrum(p, quarter)?;
            let tol = 1e-9 * cut.abs().max(1.0);
            Ok(levels.iter().take_while(|l| l.energy < cut - tol).count())
        }
        _ => Ok(dim / 4),
    }
}

/// Highest oscillator shell a `n_max`-quanta Fock truncation reproduces
/// exactly, or `None` when not even the lowest one is safe.
///
/// In the effective basis the isotropic part is diagonal and `L_z` only mixes
/// states within a shell, so every shell up to `n_max` is exact. Any other
/// reference squeezes each eigenstate across neighbouring shells; the tail
/// decays like `r^k` in the number `k` of quanta above the shell, with
/// `r = |1 - s²|/(1 + s²)` and `s²` the ratio of oscillator lengths. Shells
/// are trusted while `r^k` stays below `1e-13` in the remaining headroom.
pub fn trusted_shells(n_max: usize, m_ref: f64, omega_ref: f64, m_eff: f64, omega_eff: f64) -> Option<usize> {
    let s2 = (m_ref * omega_ref) / (m_eff * omega_eff);
    let r = (1.0 - s2).abs() / (1.0 + s2);
    if r <= 1e-14 {
        return Some(n_max);
    }
    // headroom k with r^k ≤ 1e-13
    let k = (13.0 * std::f64::consts::LN_10 / -r.ln()).ceil() as usize;
    n_max.checked_sub(k)
}

/// Groups basis indices connected through nonzero off-diagonal entries.
fn connected_blocks(m: &CMatrix) -> Vec<Vec<usize>> {
    let n = m.dim();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if m[(i, j)] != C64::new(0.0, 0.0) || m[(j, i)] != C64::new(0.0, 0.0) {
                let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = root(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[slot[r]].push(i);
    }
    blocks
}

fn block_eigenvalues(m: &CMatrix, idx: &[usize]) -> Result<Vec<f64>> {
    let n = idx.len();
    if n == 1 {
        return Ok(vec![m[(idx[0], idx[0])].re]);
    }
    // symmetrize so that the lower triangle the solver reads is exact
    let a = Mat::<C64>::from_fn(n, n, |i, j| 0.5 * (m[(idx[i], idx[j])] + m[(idx[j], idx[i])].conj()));
    let mut s = Diag::<C64>::zeros(n);
    let par = Par::Seq;
    let req = evd::self_adjoint_evd_scratch::<C64>(n, ComputeEigenvectors::No, par, Default::default());
    let mut buf = MemBuffer::new(req);
    evd::self_adjoint_evd(a.as_ref(), s.as_mut(), None, par, MemStack::new(&mut buf), Default::default())
        .map_err(|e| Error::Numerical(format!("eigensolver failed: {e:?}")))?;
    Ok((0..n).map(|i| s[i].re).collect())
}
