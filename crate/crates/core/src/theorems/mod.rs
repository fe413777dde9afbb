//! One-range addition theorems for Yukawa-form functions, their Slater
//! specialisations, and the two-range baseline.

mod corollary;
mod two_range;
mod yukawa;

pub use corollary::{
    corollary1_legendre_coefficients, corollary1_legendre_eval, corollary_eval, corollary_to_params, slater_direct,
    Coordinates, CorollaryConfig, CorollaryVariant,
};
pub use two_range::{two_range_mos_eval, TwoRangeEvaluation};
pub use yukawa::{
    theorem1_eval, theorem1_term, theorem5_eval, theorem5_term, theorem6_eval, theorem6_term, yukawa_exponential,
    yukawa_form, yukawa_power_form, Branch, YukawaFormParams,
};
