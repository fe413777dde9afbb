//! Slater-orbital specialisations: each variant splits the squared distance
//! |x₁ − x₂|² into a "C" part kept inside the Macdonald function and a "B"
//! part expanded in powers.

use std::collections::BTreeMap;

use super::yukawa::{theorem1_eval, Branch, YukawaFormParams};
use crate::error::{Error, Result};
use crate::series::{SeriesAccumulator, SeriesEvaluation, TruncationPolicy};
use crate::specfun::{binomial, cos_power_to_legendre, legendre_p};
use crate::theorems::yukawa::theorem1_term;
use crate::Complex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CorollaryVariant {
    /// C = x₂², B = x₁² − 2x₁x₂ cos θ.
    C1,
    /// C = x₁², B = x₂² − 2x₁x₂ cos θ.
    C2,
    /// C = −2x₁x₂ cos θ, B = x₁² + x₂².
    C3,
    /// C = x₁² + x₂², B = −2x₁x₂ cos θ.
    C4,
    /// C = (z₁ − z₂)², B = x₁² + y₁².
    C5,
    /// C = x₁² + y₁², B = (z₁ − z₂)².
    C6,
}

impl CorollaryVariant {
    pub const ALL: [CorollaryVariant; 6] = [Self::C1, Self::C2, Self::C3, Self::C4, Self::C5, Self::C6];

    pub fn is_spherical(self) -> bool {
        matches!(self, Self::C1 | Self::C2 | Self::C3 | Self::C4)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coordinates {
    /// Radii of the two points and the cosine of the angle between them.
    Spherical { x1: f64, x2: f64, cos_theta: f64 },
    /// First point (x₁, y₁, z₁); second point on the z axis at z₂.
    Cartesian { x1: f64, y1: f64, z1: f64, z2: f64 },
}

impl Coordinates {
    /// |x₁ − x₂|.
    pub fn separation(&self) -> f64 {
        match *self {
            Self::Spherical { x1, x2, cos_theta } => (x1 * x1 + x2 * x2 - 2.0 * x1 * x2 * cos_theta).max(0.0).sqrt(),
            Self::Cartesian { x1, y1, z1, z2 } => (x1 * x1 + y1 * y1 + (z1 - z2).powi(2)).sqrt(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorollaryConfig {
    pub variant: CorollaryVariant,
    /// Orbital exponent η.
    pub eta: f64,
    pub coords: Coordinates,
    /// Momentum scale, 1 for the plain Slater orbital.
    pub k: f64,
    pub branch: Branch,
}

impl CorollaryConfig {
    pub fn spherical(variant: CorollaryVariant, eta: f64, x1: f64, x2: f64, cos_theta: f64) -> Self {
        Self {
            variant,
            eta,
            coords: Coordinates::Spherical { x1, x2, cos_theta },
            k: 1.0,
            branch: Branch::Principal,
        }
    }

    pub fn cartesian(variant: CorollaryVariant, eta: f64, x1: f64, y1: f64, z1: f64, z2: f64) -> Self {
        Self {
            variant,
            eta,
            coords: Coordinates::Cartesian { x1, y1, z1, z2 },
            k: 1.0,
            branch: Branch::Principal,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eta > 0.0) || !self.eta.is_finite() {
            return Err(Error::Invalid(format!("eta must be positive, got {}", self.eta)));
        }
        match (self.variant.is_spherical(), self.coords) {
            (true, Coordinates::Spherical { x1, x2, cos_theta }) => {
                if !(x1 > 0.0 && x2 > 0.0) || !(cos_theta.abs() <= 1.0) {
                    return Err(Error::Invalid(format!(
                        "spherical coordinates need x1, x2 > 0 and |cos theta| <= 1, got ({x1}, {x2}, {cos_theta})"
                    )));
                }
            }
            (false, Coordinates::Cartesian { x1, y1, z1, z2 }) => {
                if !(x1 * x1 + y1 * y1 > 0.0) || !z1.is_finite() || !z2.is_finite() {
                    return Err(Error::Invalid("Cartesian coordinates need x1^2 + y1^2 > 0".into()));
                }
            }
            _ => {
                return Err(Error::Invalid(format!(
                    "variant {:?} does not take these coordinates",
                    self.variant
                )))
            }
        }
        Ok(())
    }
}

/// The (B, C) substitution of each variant, with x₂ → η.
pub fn corollary_to_params(cfg: &CorollaryConfig) -> Result<YukawaFormParams> {
    cfg.validate()?;
    let (b, c) = match (cfg.variant, cfg.coords) {
        (v, Coordinates::Spherical { x1, x2, cos_theta }) => {
            let cross = 2.0 * x1 * x2 * cos_theta;
            match v {
                CorollaryVariant::C1 => (x1 * x1 - cross, x2 * x2),
                CorollaryVariant::C2 => (x2 * x2 - cross, x1 * x1),
                CorollaryVariant::C3 => (x1 * x1 + x2 * x2, -cross),
                CorollaryVariant::C4 => (-cross, x1 * x1 + x2 * x2),
                _ => unreachable!("validated above"),
            }
        }
        (v, Coordinates::Cartesian { x1, y1, z1, z2 }) => {
            let axial = (z1 - z2).powi(2);
            let radial = x1 * x1 + y1 * y1;
            match v {
                CorollaryVariant::C5 => (radial, axial),
                CorollaryVariant::C6 => (axial, radial),
                _ => unreachable!("validated above"),
            }
        }
    };
    if c == 0.0 {
        return Err(Error::Pole {
            op: "corollary_to_params",
            detail: format!("variant {:?} gives C = 0 at this point", cfg.variant),
        });
    }
    let mut p = YukawaFormParams::real(b, c, cfg.eta, cfg.k).with_branch(cfg.branch);
    if cfg.k > 1.0 {
        p = p.allowing_k_above_one();
    }
    Ok(p)
}

/// e^{−η|x₁−x₂|}/|x₁−x₂| evaluated directly (k = 1).
pub fn slater_direct(cfg: &CorollaryConfig) -> Result<f64> {
    cfg.validate()?;
    let r = cfg.coords.separation();
    if r == 0.0 {
        return Err(Error::Pole {
            op: "slater_direct",
            detail: "coincident points".into(),
        });
    }
    Ok((-cfg.eta * r).exp() / r)
}

pub fn corollary_eval(cfg: &CorollaryConfig, policy: &TruncationPolicy) -> Result<SeriesEvaluation> {
    theorem1_eval(&corollary_to_params(cfg)?, policy)
}

/// Radial coefficients of term n of the first variant as a finite Legendre
/// series: term_n = Σ_m coeff[m] P_m(cos θ).
///
/// (x₁² − 2x₁x₂u)ⁿ = Σ_j C(n,j) x₁^{2(n−j)} (−2x₁x₂)^j u^j and each u^j is
/// a finite Legendre sum, so no second infinite series appears.
pub fn corollary1_legendre_coefficients(n: usize, cfg: &CorollaryConfig) -> Result<BTreeMap<usize, Complex>> {
    let (x1, x2) = match (cfg.variant, cfg.coords) {
        (CorollaryVariant::C1, Coordinates::Spherical { x1, x2, .. }) => (x1, x2),
        _ => {
            return Err(Error::Invalid(
                "the Legendre form applies to variant C1 in spherical coordinates".into(),
            ))
        }
    };
    cfg.validate()?;
    // Radial part of term n with B set to 1: the B-power is re-expanded below.
    let unit_b = YukawaFormParams::real(1.0, x2 * x2, cfg.eta, cfg.k).allowing_k_above_one();
    let radial = theorem1_term(n, &unit_b)?;
    let mut out = BTreeMap::new();
    for j in 0..=n {
        let weight = binomial(n, j)? * x1.powi(2 * (n - j) as i32) * (-2.0 * x1 * x2).powi(j as i32);
        for (m, c) in cos_power_to_legendre(j)?.coeffs {
            *out.entry(m).or_insert(Complex::new(0.0, 0.0)) += radial * (weight * c);
        }
    }
    Ok(out)
}

/// The first variant summed as an outer n-series of finite Legendre sums.
pub fn corollary1_legendre_eval(cfg: &CorollaryConfig, policy: &TruncationPolicy) -> Result<SeriesEvaluation> {
    let u = match (cfg.variant, cfg.coords) {
        (CorollaryVariant::C1, Coordinates::Spherical { cos_theta, .. }) => cos_theta,
        _ => {
            return Err(Error::Invalid(
                "the Legendre form applies to variant C1 in spherical coordinates".into(),
            ))
        }
    };
    let p = corollary_to_params(cfg)?;
    policy.validate()?;
    let mut acc = SeriesAccumulator::new(*policy);
    for n in 0.. {
        let coeffs = corollary1_legendre_coefficients(n, cfg)?;
        let mut term = Complex::new(0.0, 0.0);
        for (m, c) in coeffs {
            term += c * legendre_p(m, u)?;
        }
        let stop = acc.push(term);
        if p.bk2() == 0.0 {
            acc.mark_exact();
            break;
        }
        if stop {
            break;
        }
    }
    Ok(acc.finish())
}
