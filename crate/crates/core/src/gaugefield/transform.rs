use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Highest total degree accepted for a gauge function.
pub const MAX_DEGREE: u32 = 4;

/// `coeff · p_x^a p_y^b p_z^c` with `powers = [a, b, c]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Monomial {
    pub coeff: f64,
    pub powers: [u32; 3],
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.powers.iter().sum()
    }
}

/// Momentum-space gauge function `η(p)`: a real polynomial in the spatial
/// momentum components, independent of `p⁰`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Monomial>", into = "Vec<Monomial>")]
pub struct GaugeTransform {
    terms: Vec<Monomial>,
}

impl TryFrom<Vec<Monomial>> for GaugeTransform {
    type Error = Error;

    fn try_from(terms: Vec<Monomial>) -> Result<Self> {
        GaugeTransform::new(terms)
    }
}

impl From<GaugeTransform> for Vec<Monomial> {
    fn from(t: GaugeTransform) -> Self {
        t.terms
    }
}

// x^n and its first two derivatives, without powi(-1) surprises at x = 0.
fn pow(x: f64, n: u32) -> f64 {
    if n == 0 {
        1.0
    } else {
        x.powi(n as i32)
    }
}

fn dpow(x: f64, n: u32) -> f64 {
    if n == 0 {
        0.0
    } else {
        n as f64 * pow(x, n - 1)
    }
}

fn d2pow(x: f64, n: u32) -> f64 {
    if n < 2 {
        0.0
    } else {
        (n * (n - 1)) as f64 * pow(x, n - 2)
    }
}

impl GaugeTransform {
    pub fn new(terms: Vec<Monomial>) -> Result<Self> {
        for t in &terms {
            if !t.coeff.is_finite() {
                return Err(Error::config(format!("gauge function coefficient {} is not finite", t.coeff)));
            }
            if t.degree() > MAX_DEGREE {
                return Err(Error::config(format!(
                    "gauge function term of degree {} exceeds {MAX_DEGREE}",
                    t.degree()
                )));
            }
        }
        Ok(GaugeTransform { terms })
    }

    pub fn zero() -> Self {
        GaugeTransform::default()
    }

    /// `η = α p_axis` for `axis` in 0..3 (x, y, z).
    pub fn linear(axis: usize, alpha: f64) -> Result<Self> {
        let mut powers = [0; 3];
        *powers.get_mut(axis).ok_or(Error::AxisOutOfRange { axis, dims: 3 })? = 1;
        GaugeTransform::new(vec![Monomial { coeff: alpha, powers }])
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.coeff == 0.0)
    }

    pub fn value(&self, p: [f64; 3]) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coeff * pow(p[0], t.powers[0]) * pow(p[1], t.powers[1]) * pow(p[2], t.powers[2]))
            .sum()
    }

    pub fn gradient(&self, p: [f64; 3]) -> [f64; 3] {
        let mut g = [0.0; 3];
        for t in &self.terms {
            let f = [0, 1, 2].map(|a| pow(p[a], t.powers[a]));
            let d = [0, 1, 2].map(|a| dpow(p[a], t.powers[a]));
            g[0] += t.coeff * d[0] * f[1] * f[2];
            g[1] += t.coeff * f[0] * d[1] * f[2];
            g[2] += t.coeff * f[0] * f[1] * d[2];
        }
        g
    }

    /// Symmetric by construction: each off-diagonal entry is computed once.
    pub fn hessian(&self, p: [f64; 3]) -> [[f64; 3]; 3] {
        let mut h = [[0.0; 3]; 3];
        for t in &self.terms {
            let f = [0, 1, 2].map(|a| pow(p[a], t.powers[a]));
            let d = [0, 1, 2].map(|a| dpow(p[a], t.powers[a]));
            let d2 = [0, 1, 2].map(|a| d2pow(p[a], t.powers[a]));
            h[0][0] += t.coeff * d2[0] * f[1] * f[2];
            h[1][1] += t.coeff * f[0] * d2[1] * f[2];
            h[2][2] += t.coeff * f[0] * f[1] * d2[2];
            h[0][1] += t.coeff * d[0] * d[1] * f[2];
            h[0][2] += t.coeff * d[0] * f[1] * d[2];
            h[1][2] += t.coeff * f[0] * d[1] * d[2];
        }
        h[1][0] = h[0][1];
        h[2][0] = h[0][2];
        h[2][1] = h[1][2];
        h
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> GaugeTransform {
        GaugeTransform::new(vec![
            Monomial { coeff: 0.5, powers: [1, 1, 0] },
            Monomial { coeff: -1.25, powers: [0, 2, 2] },
            Monomial { coeff: 2.0, powers: [3, 0, 1] },
            Monomial { coeff: 0.75, powers: [0, 0, 0] },
        ])
        .unwrap()
    }

    #[test]
    fn rejects_degree_five() {
        let t = vec![Monomial { coeff: 1.0, powers: [2, 2, 1] }];
        assert!(GaugeTransform::new(t).is_err());
    }

    #[test]
    fn gradient_and_hessian_match_differences() {
        let eta = sample();
        let p = [0.3, -1.1, 0.7];
        let h = 1e-5;
        let g = eta.gradient(p);
        let hs = eta.hessian(p);
        for a in 0..3 {
            let mut up = p;
            let mut dn = p;
            up[a] += h;
            dn[a] -= h;
            let fd = (eta.value(up) - eta.value(dn)) / (2.0 * h);
            assert!((fd - g[a]).abs() < 1e-8);
            let gu = eta.gradient(up);
            let gd = eta.gradient(dn);
            for b in 0..3 {
                assert!(((gu[b] - gd[b]) / (2.0 * h) - hs[a][b]).abs() < 1e-7);
            }
        }
    }

    #[test]
    fn serializes_as_term_list() {
        let eta = GaugeTransform::linear(0, 2.0).unwrap();
        let s = serde_json::to_string(&eta).unwrap();
        assert_eq!(s, r#"[{"coeff":2.0,"powers":[1,0,0]}]"#);
        let back: GaugeTransform = serde_json::from_str(&s).unwrap();
        assert_eq!(back, eta);
        assert!(serde_json::from_str::<GaugeTransform>(r#"[{"coeff":1.0,"powers":[5,0,0]}]"#).is_err());
    }
}
