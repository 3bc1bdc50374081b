//! C ABI for `momgauge`.
//!
//! Every fallible function returns an [`MgStatus`]. On failure a message is
//! kept per thread and can be copied out with [`mg_last_error_message`].
//! Objects cross the boundary as opaque handles created by `mg_*_new` style
//! constructors and released by the matching `mg_*_free`; freeing NULL is a
//! no-op. Panics never unwind into C: they are caught and reported as
//! [`MgStatus::Panic`].
#![allow(clippy::missing_safety_doc)]

use momgauge::fieldsolve::{
    coulomb_flux_check, laplacian_residual, poisson_solve_1d, BoundaryCondition, MomentumSource1D, Sheet, SheetKind,
};
use momgauge::gaugefield::{field_strength, MomentumGaugeConfig};
use momgauge::landau::{
    analytic_spectrum, assemble_fock_hamiltonian, diagonalize, effective_params, reciprocity_duality_check,
    OscillatorParams, Reference, SpectrumResult,
};
use momgauge::phasegrid::{gaussian_state, verify_noncommutativity, MomentumGrid};
use momgauge::{Error, FourVector};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// A gauge potential was evaluated on its singular set.
    Singular = 3,
    /// Eigensolver or other numerical failure.
    Numerical = 4,
    /// The Hamiltonian has no ground state.
    UnboundedSpectrum = 5,
    /// An output buffer is too small; the required size was still written.
    BufferTooSmall = 6,
    Panic = 7,
}

/// Fock basis of the truncated Hamiltonian.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MgReference {
    /// Ladder operators of the bare `(m, ω)` oscillator.
    Bare = 0,
    /// Ladder operators of `(m_eff, ω_eff)`.
    Effective = 1,
}

/// Oscillator inputs; `b` is the ordinary field, `bm` the momentum field.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MgParams {
    pub m: f64,
    pub omega: f64,
    pub e: f64,
    pub g: f64,
    pub b: f64,
    pub bm: f64,
    pub hbar: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MgEffective {
    pub g1: f64,
    pub g2: f64,
    pub kinetic_factor: f64,
    pub potential_factor: f64,
    pub m_eff: f64,
    pub omega_eff: f64,
    pub lz_coupling: f64,
    /// Zero when both couplings vanish; the four fields below are then NaN.
    pub has_mixing: i32,
    pub b_eff: f64,
    pub b_nc: f64,
    pub cos_theta: f64,
    pub sin_theta: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MgLevel {
    pub n_r: u32,
    pub m_z: i32,
    pub energy: f64,
}

/// Opaque: a momentum grid.
pub struct MgGrid(Arc<MomentumGrid>);

/// Opaque: a momentum gauge configuration.
pub struct MgGaugeConfig(MomentumGaugeConfig);

/// Opaque: the eigenvalues of a Fock-basis Hamiltonian.
pub struct MgSpectrum(SpectrumResult);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).unwrap_or_default());
}

fn status_of(e: &Error) -> MgStatus {
    match e {
        Error::Singular(_) => MgStatus::Singular,
        Error::NotHermitian(_) | Error::Numerical(_) => MgStatus::Numerical,
        Error::UnboundedSpectrum { .. } => MgStatus::UnboundedSpectrum,
        _ => MgStatus::InvalidArgument,
    }
}

struct Failure(MgStatus, String);

type Outcome = Result<(), Failure>;

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(MgStatus::NullPointer, format!("{what} is NULL"))
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(MgStatus::InvalidArgument, msg.into())
}

/// Runs `f`, records any failure and converts panics.
fn guard(f: impl FnOnce() -> Outcome) -> MgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            MgStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            MgStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(p: *mut T, value: T, what: &str) -> Outcome {
    if p.is_null() {
        return Err(null(what));
    }
    p.write(value);
    Ok(())
}

/// Copies `values` into `out[..cap]` and the full length into `*len`.
unsafe fn copy_out<T: Copy>(values: &[T], out: *mut T, cap: usize, len: *mut usize) -> Outcome {
    write(len, values.len(), "len")?;
    if values.len() > cap {
        return Err(Failure(MgStatus::BufferTooSmall, format!("need {} entries, buffer holds {cap}", values.len())));
    }
    if !values.is_empty() {
        if out.is_null() {
            return Err(null("out"));
        }
        std::ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
    }
    Ok(())
}

unsafe fn slice<'a, T>(p: *const T, n: usize, what: &str) -> Result<&'a [T], Failure> {
    if n == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, n))
}

impl From<MgParams> for OscillatorParams {
    fn from(p: MgParams) -> Self {
        OscillatorParams { m: p.m, omega: p.omega, e: p.e, g: p.g, b: p.b, bm: p.bm, hbar: p.hbar }
    }
}

// ---------------------------------------------------------------- errors

/// Copies the calling thread's last error message (NUL-terminated, possibly
/// truncated) into `buf` and returns the full message length without the NUL.
/// The message is empty after a successful call.
#[no_mangle]
pub unsafe extern "C" fn mg_last_error_message(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let bytes = e.as_bytes();
        if !buf.is_null() && cap > 0 {
            let n = bytes.len().min(cap - 1);
            std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

/// Static NUL-terminated version string.
#[no_mangle]
pub extern "C" fn mg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

// ---------------------------------------------------------------- oscillator

/// `m = ω = ħ = 1`, no fields.
#[no_mangle]
pub extern "C" fn mg_params_default() -> MgParams {
    let p = OscillatorParams::default();
    MgParams { m: p.m, omega: p.omega, e: p.e, g: p.g, b: p.b, bm: p.bm, hbar: p.hbar }
}

#[no_mangle]
pub unsafe extern "C" fn mg_effective_params(params: *const MgParams, out: *mut MgEffective) -> MgStatus {
    guard(|| {
        let p = *deref(params, "params")?;
        let eff = effective_params(&p.into())?;
        let mix = eff.mixing;
        let pick = |f: fn(&momgauge::landau::Mixing) -> f64| mix.as_ref().map_or(f64::NAN, f);
        write(
            out,
            MgEffective {
                g1: eff.g1,
                g2: eff.g2,
                kinetic_factor: eff.kinetic_factor,
                potential_factor: eff.potential_factor,
                m_eff: eff.m_eff,
                omega_eff: eff.omega_eff,
                lz_coupling: eff.lz_coupling,
                has_mixing: i32::from(mix.is_some()),
                b_eff: pick(|m| m.b_eff),
                b_nc: pick(|m| m.b_nc),
                cos_theta: pick(|m| m.cos_theta),
                sin_theta: pick(|m| m.sin_theta),
            },
            "out",
        )
    })
}

/// The lowest `count` closed-form levels, ascending.
#[no_mangle]
pub unsafe extern "C" fn mg_analytic_levels(params: *const MgParams, count: usize, out: *mut MgLevel) -> MgStatus {
    guard(|| {
        let p = *deref(params, "params")?;
        let levels = analytic_spectrum(&p.into(), count)?;
        let out = if count == 0 {
            &mut [][..]
        } else {
            if out.is_null() {
                return Err(null("out"));
            }
            std::slice::from_raw_parts_mut(out, count)
        };
        for (o, l) in out.iter_mut().zip(&levels) {
            *o = MgLevel { n_r: l.n_r, m_z: l.m_z, energy: l.energy };
        }
        Ok(())
    })
}

/// Assembles and diagonalizes the Hamiltonian with `n_max` quanta per mode.
#[no_mangle]
pub unsafe extern "C" fn mg_spectrum_fock(
    params: *const MgParams,
    n_max: usize,
    reference: MgReference,
    out: *mut *mut MgSpectrum,
) -> MgStatus {
    guard(|| {
        let p = *deref(params, "params")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let reference = match reference {
            MgReference::Bare => Reference::Bare,
            MgReference::Effective => Reference::Effective,
        };
        let s = diagonalize(&assemble_fock_hamiltonian(&p.into(), n_max, reference)?)?;
        out.write(Box::into_raw(Box::new(MgSpectrum(s))));
        Ok(())
    })
}

/// Number of eigenvalues (the basis dimension); 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn mg_spectrum_len(spectrum: *const MgSpectrum) -> usize {
    spectrum.as_ref().map_or(0, |s| s.0.eigenvalues.len())
}

/// Leading eigenvalues unaffected by truncation; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn mg_spectrum_trusted_count(spectrum: *const MgSpectrum) -> usize {
    spectrum.as_ref().map_or(0, |s| s.0.trusted_count)
}

/// Copies all eigenvalues, ascending. `*len` receives the count even when
/// the buffer is too small.
#[no_mangle]
pub unsafe extern "C" fn mg_spectrum_eigenvalues(
    spectrum: *const MgSpectrum,
    out: *mut f64,
    cap: usize,
    len: *mut usize,
) -> MgStatus {
    guard(|| copy_out(&deref(spectrum, "spectrum")?.0.eigenvalues, out, cap, len))
}

#[no_mangle]
pub unsafe extern "C" fn mg_spectrum_free(spectrum: *mut MgSpectrum) {
    if !spectrum.is_null() {
        drop(Box::from_raw(spectrum));
    }
}

/// Trusted-level discrepancy between `H(eB = a, g𝓑 = b)` and
/// `H(eB = -b, g𝓑 = -a)`.
#[no_mangle]
pub unsafe extern "C" fn mg_reciprocity_check(
    a: f64,
    b: f64,
    n_max: usize,
    compared: *mut usize,
    max_discrepancy: *mut f64,
) -> MgStatus {
    guard(|| {
        if compared.is_null() || max_discrepancy.is_null() {
            return Err(null("output"));
        }
        let r = reciprocity_duality_check(a, b, n_max)?;
        compared.write(r.compared);
        max_discrepancy.write(r.max_discrepancy);
        Ok(())
    })
}

// ---------------------------------------------------------------- gauge fields

/// Parses `{"variant": ..., "params": {...}}`.
#[no_mangle]
pub unsafe extern "C" fn mg_gauge_config_from_json(json: *const c_char, out: *mut *mut MgGaugeConfig) -> MgStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(json).to_str().map_err(|_| invalid("json is not UTF-8"))?;
        let config = MomentumGaugeConfig::from_json(text)?;
        out.write(Box::into_raw(Box::new(MgGaugeConfig(config))));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn mg_gauge_config_free(config: *mut MgGaugeConfig) {
    if !config.is_null() {
        drop(Box::from_raw(config));
    }
}

/// `G_μν(p)` with lower indices, row-major into `out[16]`.
#[no_mangle]
pub unsafe extern "C" fn mg_field_strength(config: *const MgGaugeConfig, p: *const f64, out: *mut f64) -> MgStatus {
    guard(|| {
        let c = deref(config, "config")?;
        let p = slice(p, 4, "p")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let s = field_strength(&c.0, &FourVector([p[0], p[1], p[2], p[3]]))?;
        let flat: Vec<f64> = s.g.iter().flatten().copied().collect();
        std::ptr::copy_nonoverlapping(flat.as_ptr(), out, 16);
        Ok(())
    })
}

// ---------------------------------------------------------------- grids

/// Square grid with `points` nodes per axis on `[-half_extent, half_extent]`.
#[no_mangle]
pub unsafe extern "C" fn mg_grid_new(dims: usize, points: usize, half_extent: f64, out: *mut *mut MgGrid) -> MgStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let grid = MomentumGrid::new(dims, points, half_extent, None)?;
        out.write(Box::into_raw(Box::new(MgGrid(Arc::new(grid)))));
        Ok(())
    })
}

/// Total node count; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn mg_grid_len(grid: *const MgGrid) -> usize {
    grid.as_ref().map_or(0, |g| g.0.len())
}

#[no_mangle]
pub unsafe extern "C" fn mg_grid_free(grid: *mut MgGrid) {
    if !grid.is_null() {
        drop(Box::from_raw(grid));
    }
}

/// Checks `[X_i, X_j] = iħgG_ij` on Gaussian states. `centers` holds
/// `n_states × dims` coordinates and `widths` one width per state. Writes
/// the largest relative residual and, when `theta` is not NULL, the mean
/// `Θ_ij` of every ordered axis pair into `theta[i * dims + j]`
/// (`dims × dims` entries, zero diagonal).
#[no_mangle]
pub unsafe extern "C" fn mg_noncommutativity(
    grid: *const MgGrid,
    config: *const MgGaugeConfig,
    g: f64,
    hbar: f64,
    centers: *const f64,
    widths: *const f64,
    n_states: usize,
    max_residual: *mut f64,
    theta: *mut f64,
) -> MgStatus {
    guard(|| {
        let grid = &deref(grid, "grid")?.0;
        let config = &deref(config, "config")?.0;
        let dims = grid.dims();
        let centers = slice(centers, n_states * dims, "centers")?;
        let widths = slice(widths, n_states, "widths")?;
        if max_residual.is_null() {
            return Err(null("max_residual"));
        }
        let states = widths
            .iter()
            .enumerate()
            .map(|(k, &w)| gaussian_state(grid, &centers[k * dims..(k + 1) * dims], w))
            .collect::<Result<Vec<_>, _>>()?;
        let report = verify_noncommutativity(grid, config, g, hbar, &states)?;
        max_residual.write(report.max_residual());
        if !theta.is_null() {
            let out = std::slice::from_raw_parts_mut(theta, dims * dims);
            out.fill(0.0);
            for pair in &report.pairs {
                out[pair.i * dims + pair.j] = pair.theta;
            }
        }
        Ok(())
    })
}

// ---------------------------------------------------------------- field equations

/// Outward flux of the momentum Coulomb field through `|p| = radius`.
#[no_mangle]
pub unsafe extern "C" fn mg_coulomb_flux(gc: f64, radius: f64, n_samples: usize, out: *mut f64) -> MgStatus {
    guard(|| write(out, coulomb_flux_check(gc, radius, n_samples)?, "out"))
}

/// Sheet kinds accepted by [`mg_solve_sheets`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MgSheetKind {
    Charge = 0,
    CurrentY = 1,
}

/// Solves the static field equation for `n_sheets` sheets of one kind on
/// `nodes` points spanning `[-half_extent, half_extent]`, with the ends
/// pinned to the exact far-field potential. `potential` and `field` receive
/// `nodes` values each (either may be NULL); `residual` the largest row
/// residual of the linear solve.
#[no_mangle]
pub unsafe extern "C" fn mg_solve_sheets(
    positions: *const f64,
    strengths: *const f64,
    n_sheets: usize,
    kind: MgSheetKind,
    nodes: usize,
    half_extent: f64,
    potential: *mut f64,
    field: *mut f64,
    residual: *mut f64,
) -> MgStatus {
    guard(|| {
        let positions = slice(positions, n_sheets, "positions")?;
        let strengths = slice(strengths, n_sheets, "strengths")?;
        let kind = match kind {
            MgSheetKind::Charge => SheetKind::Charge,
            MgSheetKind::CurrentY => SheetKind::CurrentY,
        };
        let sheets = positions.iter().zip(strengths).map(|(&position, &strength)| Sheet { position, strength, kind });
        let source = MomentumSource1D::new(sheets.collect())?;
        let sol = poisson_solve_1d(&source, nodes, half_extent, BoundaryCondition::AnalyticFarField)?;
        let r = laplacian_residual(&sol, &source)?;
        if !potential.is_null() {
            std::ptr::copy_nonoverlapping(sol.potential.as_ptr(), potential, nodes);
        }
        if !field.is_null() {
            std::ptr::copy_nonoverlapping(sol.field.as_ptr(), field, nodes);
        }
        write(residual, r.max_abs_residual, "residual")
    })
}
