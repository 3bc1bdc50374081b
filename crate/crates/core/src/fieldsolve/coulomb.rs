use crate::error::{Error, Result};
use crate::fourvec::FourVector;
use crate::gaugefield::MomentumGaugeConfig;
use std::f64::consts::PI;

pub const MIN_FLUX_SAMPLES: usize = 10_000;

/// Outward flux of `-∇_p C⁰` through the sphere `|p| = radius` for
/// `C⁰ = g_c/|p|`; Gauss's law puts it at `4π g_c` for any radius.
///
/// The gradient is taken numerically from the potential itself (central
/// differences, step `1e-4 · radius`) and integrated with the midpoint rule
/// in `(cos θ, φ)` on at least `n_samples` points.
pub fn coulomb_flux_check(gc: f64, radius: f64, n_samples: usize) -> Result<f64> {
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::config(format!("radius must be positive, got {radius}")));
    }
    if n_samples < MIN_FLUX_SAMPLES {
        return Err(Error::config(format!("need at least {MIN_FLUX_SAMPLES} samples, got {n_samples}")));
    }
    let config = MomentumGaugeConfig::CoulombMomentum { gc };
    config.validate()?;
    let n_theta = ((n_samples as f64 / 2.0).sqrt().ceil() as usize).max(1);
    let n_phi = 2 * n_theta;
    let du = 2.0 / n_theta as f64;
    let dphi = 2.0 * PI / n_phi as f64;
    let h = 1e-4 * radius;
    let mut flux = 0.0;
    for a in 0..n_theta {
        let u = -1.0 + (a as f64 + 0.5) * du;
        let s = (1.0 - u * u).sqrt();
        for b in 0..n_phi {
            let phi = (b as f64 + 0.5) * dphi;
            let n = [s * phi.cos(), s * phi.sin(), u];
            let mut field_n = 0.0;
            for k in 0..3 {
                let mut up = [0.0, radius * n[0], radius * n[1], radius * n[2]];
                let mut dn = up;
                up[k + 1] += h;
                dn[k + 1] -= h;
                let grad = (config.eval(&FourVector(up))?[0] - config.eval(&FourVector(dn))?[0]) / (2.0 * h);
                field_n -= grad * n[k];
            }
            flux += field_n * radius * radius * du * dphi;
        }
    }
    Ok(flux)
}
