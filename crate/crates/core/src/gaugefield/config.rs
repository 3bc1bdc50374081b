use super::transform::GaugeTransform;
use crate::error::{Error, Result};
use crate::fourvec::FourVector;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

/// `J[μ][ν] = ∂C^μ/∂p^ν`.
pub type Jacobian = [[f64; 4]; 4];

type ComponentFn = dyn Fn(&FourVector) -> Result<[f64; 4]> + Send + Sync;
type JacobianFn = dyn Fn(&FourVector) -> Result<Jacobian> + Send + Sync;

/// User-supplied `C^μ(p)`, optionally with a closed-form Jacobian.
///
/// Without a Jacobian, derivatives fall back to central differences.
#[derive(Clone)]
pub struct CustomGauge {
    label: String,
    components: Arc<ComponentFn>,
    jacobian: Option<Arc<JacobianFn>>,
    spec: Option<GaugeConfigSpec>,
    principal: Option<(usize, usize)>,
}

impl CustomGauge {
    pub fn new(
        label: impl Into<String>,
        components: impl Fn(&FourVector) -> Result<[f64; 4]> + Send + Sync + 'static,
    ) -> Self {
        CustomGauge {
            label: label.into(),
            components: Arc::new(components),
            jacobian: None,
            spec: None,
            principal: None,
        }
    }

    pub fn with_jacobian(mut self, jacobian: impl Fn(&FourVector) -> Result<Jacobian> + Send + Sync + 'static) -> Self {
        self.jacobian = Some(Arc::new(jacobian));
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn has_jacobian(&self) -> bool {
        self.jacobian.is_some()
    }
}

impl fmt::Debug for CustomGauge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomGauge").field("label", &self.label).field("jacobian", &self.jacobian.is_some()).finish()
    }
}

/// Momentum gauge potentials `C^μ(p)`.
///
/// Components are stored contravariantly and used as-is in the covariant
/// position `X_i = x_i - g C^i(p)`; slot 0 is time-like.
#[derive(Debug, Clone)]
pub enum MomentumGaugeConfig {
    /// `C^i = ½ ε_ijk 𝓑_j p_k`.
    ConstantMagnetic {
        b: [f64; 3],
    },
    /// `C⁰ = -ℰ·p`, spatial components zero.
    ConstantElectric {
        e: [f64; 3],
    },
    /// `C¹ = -½𝓑 p_y`, `C² = ½𝓑 p_x`.
    SymmetricGauge2D {
        b: f64,
    },
    /// Two equal charge sheets at `p_z = ±p_a`:
    /// `C⁰ = -4πΣ (|p_z| - p_a)₊`, so `ℰ_z = ±4πΣ` outside and 0 between.
    CapacitorStack {
        sigma: f64,
        pa: f64,
    },
    /// Two equal `y`-current sheets at `p_z = ±p_a`:
    /// `C^y = -4π𝒥 (|p_z| - p_a)₊`, so `𝓑_x = ±4π𝒥` outside and 0 between.
    CurrentSheets {
        j: f64,
        pa: f64,
    },
    /// `C⁰ = g_c/|p|`, singular at the origin.
    CoulombMomentum {
        gc: f64,
    },
    Custom(CustomGauge),
}

/// Serializable description of a configuration, `{"variant": …, "params": {…}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", content = "params", rename_all = "snake_case", deny_unknown_fields)]
pub enum GaugeConfigSpec {
    ConstantMagnetic {
        b: [f64; 3],
    },
    ConstantElectric {
        e: [f64; 3],
    },
    #[serde(rename = "symmetric_gauge_2d")]
    SymmetricGauge2D {
        b: f64,
    },
    CapacitorStack {
        sigma: f64,
        pa: f64,
    },
    CurrentSheets {
        j: f64,
        pa: f64,
    },
    CoulombMomentum {
        gc: f64,
    },
    /// A cataloged base configuration after the gauge transform `η` at coupling `g`.
    GaugeTransformed {
        base: Box<GaugeConfigSpec>,
        eta: GaugeTransform,
        g: f64,
    },
}

fn finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::config(format!("{name} must be finite, got {v}")))
    }
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::config(format!("{name} must be positive, got {v}")))
    }
}

// Outer-plateau convention: the kink points themselves belong to the outside.
fn ramp(pz: f64, pa: f64) -> (f64, f64) {
    if pz >= pa {
        (pz - pa, 1.0)
    } else if pz <= -pa {
        (-pz - pa, -1.0)
    } else {
        (0.0, 0.0)
    }
}

impl MomentumGaugeConfig {
    pub fn validate(&self) -> Result<()> {
        use MomentumGaugeConfig::*;
        match self {
            ConstantMagnetic { b } => b.iter().try_for_each(|&v| finite("B", v)),
            ConstantElectric { e } => e.iter().try_for_each(|&v| finite("E", v)),
            SymmetricGauge2D { b } => finite("B", *b),
            CapacitorStack { sigma, pa } => finite("sigma", *sigma).and(positive("p_a", *pa)),
            CurrentSheets { j, pa } => finite("j", *j).and(positive("p_a", *pa)),
            CoulombMomentum { gc } => finite("g_c", *gc),
            Custom(_) => Ok(()),
        }
    }

    pub fn name(&self) -> &str {
        use MomentumGaugeConfig::*;
        match self {
            ConstantMagnetic { .. } => "constant_magnetic",
            ConstantElectric { .. } => "constant_electric",
            SymmetricGauge2D { .. } => "symmetric_gauge_2d",
            CapacitorStack { .. } => "capacitor_stack",
            CurrentSheets { .. } => "current_sheets",
            CoulombMomentum { .. } => "coulomb_momentum",
            Custom(c) => c.label(),
        }
    }

    /// `C^μ(p)`.
    pub fn eval(&self, p: &FourVector) -> Result<[f64; 4]> {
        use MomentumGaugeConfig::*;
        if !p.is_finite() {
            return Err(Error::config(format!("momentum {:?} is not finite", p.0)));
        }
        let [_, px, py, pz] = p.0;
        Ok(match self {
            ConstantMagnetic { b } => {
                let [bx, by, bz] = *b;
                [0.0, 0.5 * (by * pz - bz * py), 0.5 * (bz * px - bx * pz), 0.5 * (bx * py - by * px)]
            }
            ConstantElectric { e } => [-(e[0] * px + e[1] * py + e[2] * pz), 0.0, 0.0, 0.0],
            SymmetricGauge2D { b } => [0.0, -0.5 * b * py, 0.5 * b * px, 0.0],
            CapacitorStack { sigma, pa } => [-4.0 * PI * sigma * ramp(pz, *pa).0, 0.0, 0.0, 0.0],
            CurrentSheets { j, pa } => [0.0, 0.0, -4.0 * PI * j * ramp(pz, *pa).0, 0.0],
            CoulombMomentum { gc } => {
                let r = p.spatial_norm();
                if r == 0.0 {
                    return Err(Error::Singular(p.0));
                }
                [gc / r, 0.0, 0.0, 0.0]
            }
            Custom(c) => (c.components)(p)?,
        })
    }

    /// Closed-form `∂C^μ/∂p^ν` where available, central differences otherwise.
    pub fn jacobian(&self, p: &FourVector) -> Result<Jacobian> {
        use MomentumGaugeConfig::*;
        // Evaluating first surfaces singular points and non-finite input.
        self.eval(p)?;
        let [_, px, py, pz] = p.0;
        let mut j = [[0.0; 4]; 4];
        match self {
            ConstantMagnetic { b } => {
                let [bx, by, bz] = *b;
                j[1][3] = 0.5 * by;
                j[1][2] = -0.5 * bz;
                j[2][1] = 0.5 * bz;
                j[2][3] = -0.5 * bx;
                j[3][2] = 0.5 * bx;
                j[3][1] = -0.5 * by;
            }
            ConstantElectric { e } => {
                j[0][1] = -e[0];
                j[0][2] = -e[1];
                j[0][3] = -e[2];
            }
            SymmetricGauge2D { b } => {
                j[1][2] = -0.5 * b;
                j[2][1] = 0.5 * b;
            }
            CapacitorStack { sigma, pa } => j[0][3] = -4.0 * PI * sigma * ramp(pz, *pa).1,
            CurrentSheets { j: cur, pa } => j[2][3] = -4.0 * PI * cur * ramp(pz, *pa).1,
            CoulombMomentum { gc } => {
                let r = p.spatial_norm();
                let r3 = r * r * r;
                j[0][1] = -gc * px / r3;
                j[0][2] = -gc * py / r3;
                j[0][3] = -gc * pz / r3;
            }
            Custom(c) => match &c.jacobian {
                Some(f) => return f(p),
                None => return self.jacobian_numeric(p),
            },
        }
        Ok(j)
    }

    /// Central differences with step `1e-5 · max(1, |p|)`.
    pub fn jacobian_numeric(&self, p: &FourVector) -> Result<Jacobian> {
        let h = 1e-5 * p.euclidean_norm().max(1.0);
        let mut j = [[0.0; 4]; 4];
        for nu in 0..4 {
            let mut up = p.0;
            let mut dn = p.0;
            up[nu] += h;
            dn[nu] -= h;
            let cu = self.eval(&FourVector(up))?;
            let cd = self.eval(&FourVector(dn))?;
            for mu in 0..4 {
                j[mu][nu] = (cu[mu] - cd[mu]) / (2.0 * h);
            }
        }
        Ok(j)
    }

    /// The `(μ, ν)` entry of `G` that carries the physics of this variant.
    pub fn principal_component(&self) -> Option<(usize, usize)> {
        use MomentumGaugeConfig::*;
        let argmax = |v: &[f64; 3]| (0..3).fold(0, |best, k| if v[k].abs() > v[best].abs() { k } else { best });
        match self {
            ConstantMagnetic { b } => Some([(2, 3), (1, 3), (1, 2)][argmax(b)]),
            ConstantElectric { e } => Some((0, argmax(e) + 1)),
            SymmetricGauge2D { .. } => Some((1, 2)),
            CapacitorStack { .. } => Some((0, 3)),
            CurrentSheets { .. } => Some((2, 3)),
            CoulombMomentum { .. } => None,
            Custom(c) => c.principal,
        }
    }

    /// Serializable form; `None` for closures that did not come from a spec.
    pub fn to_spec(&self) -> Option<GaugeConfigSpec> {
        use MomentumGaugeConfig::*;
        Some(match self {
            ConstantMagnetic { b } => GaugeConfigSpec::ConstantMagnetic { b: *b },
            ConstantElectric { e } => GaugeConfigSpec::ConstantElectric { e: *e },
            SymmetricGauge2D { b } => GaugeConfigSpec::SymmetricGauge2D { b: *b },
            CapacitorStack { sigma, pa } => GaugeConfigSpec::CapacitorStack { sigma: *sigma, pa: *pa },
            CurrentSheets { j, pa } => GaugeConfigSpec::CurrentSheets { j: *j, pa: *pa },
            CoulombMomentum { gc } => GaugeConfigSpec::CoulombMomentum { gc: *gc },
            Custom(c) => return c.spec.clone(),
        })
    }

    pub fn from_spec(spec: &GaugeConfigSpec) -> Result<Self> {
        use MomentumGaugeConfig as M;
        let cfg = match spec {
            GaugeConfigSpec::ConstantMagnetic { b } => M::ConstantMagnetic { b: *b },
            GaugeConfigSpec::ConstantElectric { e } => M::ConstantElectric { e: *e },
            GaugeConfigSpec::SymmetricGauge2D { b } => M::SymmetricGauge2D { b: *b },
            GaugeConfigSpec::CapacitorStack { sigma, pa } => M::CapacitorStack { sigma: *sigma, pa: *pa },
            GaugeConfigSpec::CurrentSheets { j, pa } => M::CurrentSheets { j: *j, pa: *pa },
            GaugeConfigSpec::CoulombMomentum { gc } => M::CoulombMomentum { gc: *gc },
            GaugeConfigSpec::GaugeTransformed { base, eta, g } => {
                return apply_gauge_transform(&M::from_spec(base)?, eta, *g);
            }
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: GaugeConfigSpec =
            serde_json::from_str(text).map_err(|e| Error::config(format!("gauge config: {e}")))?;
        MomentumGaugeConfig::from_spec(&spec)
    }
}

/// `C'^μ = C^μ + (1/g) ∂η/∂p^μ` with `η` independent of `p⁰`, so `C⁰` is
/// untouched. The result carries the closed-form Jacobian
/// `J' = J + Hess(η)/g`.
pub fn apply_gauge_transform(
    config: &MomentumGaugeConfig,
    eta: &GaugeTransform,
    g: f64,
) -> Result<MomentumGaugeConfig> {
    if g == 0.0 {
        return Err(Error::ZeroCoupling);
    }
    if !g.is_finite() {
        return Err(Error::config(format!("coupling g must be finite, got {g}")));
    }
    config.validate()?;
    if eta.terms().is_empty() {
        return Ok(config.clone());
    }
    let spec =
        config.to_spec().map(|base| GaugeConfigSpec::GaugeTransformed { base: Box::new(base), eta: eta.clone(), g });
    let principal = config.principal_component();
    let label = format!("{}+gauge", config.name());

    let (base, e) = (config.clone(), eta.clone());
    let components = move |p: &FourVector| {
        let mut c = base.eval(p)?;
        let grad = e.gradient(p.space());
        for k in 0..3 {
            c[k + 1] += grad[k] / g;
        }
        Ok(c)
    };
    let (base, e) = (config.clone(), eta.clone());
    let jacobian = move |p: &FourVector| {
        let mut j = base.jacobian(p)?;
        let h = e.hessian(p.space());
        for a in 0..3 {
            for b in 0..3 {
                j[a + 1][b + 1] += h[a][b] / g;
            }
        }
        Ok(j)
    };
    let mut custom = CustomGauge::new(label, components).with_jacobian(jacobian);
    custom.spec = spec;
    custom.principal = principal;
    Ok(MomentumGaugeConfig::Custom(custom))
}

/// Ordinary position-space potentials `A^μ(x)` for the oscillator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", content = "params", rename_all = "snake_case")]
pub enum OrdinaryGaugeConfig {
    /// `A¹ = -½B y`, `A² = ½B x`.
    #[serde(rename = "symmetric_gauge_2d")]
    SymmetricGauge2D {
        b: f64,
    },
    Zero,
}

impl OrdinaryGaugeConfig {
    pub fn eval(&self, x: &FourVector) -> [f64; 4] {
        match *self {
            OrdinaryGaugeConfig::SymmetricGauge2D { b } => [0.0, -0.5 * b * x[2], 0.5 * b * x[1], 0.0],
            OrdinaryGaugeConfig::Zero => [0.0; 4],
        }
    }

    /// `B_z = ∂_x A_y - ∂_y A_x`.
    pub fn magnetic(&self) -> f64 {
        match *self {
            OrdinaryGaugeConfig::SymmetricGauge2D { b } => b,
            OrdinaryGaugeConfig::Zero => 0.0,
        }
    }
}
