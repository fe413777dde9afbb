//! Overlap-type amplitudes S₁ built from two Slater orbitals and a plane wave.

mod angular;
mod cheshire;
mod closed;
mod spherical;

pub use angular::{theorem2_angular, theorem2_angular_oracle};
pub use cheshire::{
    cheshire_series, s1_general_term_gamma, s1_n0_erf_closed, s1_series_eval, s1_series_n_term, s1_tau_oracle,
};
pub use closed::{
    corollary6_n0_closed, corollary6_n0_oracle, s1_coulomb_closed, s1_equal_eta_closed, s1_two_slater_closed,
    s1_two_slater_oracle,
};
pub use spherical::{theorem3_series, theorem4_series, DoubleSeries, SeriesBlock, SeriesIndexBounds};

use crate::error::{Error, Result};

/// Exponents, separation, momentum and the phase k·x₂ of one amplitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlaterPair {
    pub eta1: f64,
    pub eta2: f64,
    pub x2: f64,
    pub k: f64,
    pub k_dot_x2: f64,
}

impl SlaterPair {
    pub fn new(eta1: f64, eta2: f64, x2: f64, k: f64, k_dot_x2: f64) -> Result<Self> {
        let p = Self {
            eta1,
            eta2,
            x2,
            k,
            k_dot_x2,
        };
        p.validate()?;
        Ok(p)
    }

    /// k parallel to x₂, so k·x₂ = k x₂.
    pub fn collinear(eta1: f64, eta2: f64, x2: f64, k: f64) -> Self {
        Self {
            eta1,
            eta2,
            x2,
            k,
            k_dot_x2: k * x2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.eta1, self.eta2, self.x2, self.k, self.k_dot_x2];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::Invalid("SlaterPair fields must be finite".into()));
        }
        if !(self.eta1 > 0.0 && self.eta2 > 0.0 && self.x2 > 0.0) {
            return Err(Error::Invalid(format!(
                "eta1, eta2, x2 must be positive, got ({}, {}, {})",
                self.eta1, self.eta2, self.x2
            )));
        }
        if self.k < 0.0 {
            return Err(Error::Invalid(format!("k must be non-negative, got {}", self.k)));
        }
        // Small slack so that collinear() round-trips through validation.
        if self.k_dot_x2.abs() > self.k * self.x2 * (1.0 + 1e-12) {
            return Err(Error::Invalid(format!(
                "|k.x2| = {} exceeds k*x2 = {}",
                self.k_dot_x2.abs(),
                self.k * self.x2
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phase_bound() {
        assert!(SlaterPair::new(1.0, 1.0, 2.0, 0.5, 1.0).is_ok());
        assert!(SlaterPair::new(1.0, 1.0, 2.0, 0.5, -1.01).is_err());
        assert!(SlaterPair::new(1.0, 0.0, 2.0, 0.5, 0.0).is_err());
        assert!(SlaterPair::collinear(0.82, 0.66, 0.36, 0.19).validate().is_ok());
    }
}
