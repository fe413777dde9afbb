//! Parameter points shared by the criterion benches.

use slater_core::amplitudes::SlaterPair;
use slater_core::theorems::YukawaFormParams;

pub fn yukawa_point() -> YukawaFormParams {
    YukawaFormParams::real(0.13, 0.11, 0.17, 0.23)
}

pub fn slater_point() -> SlaterPair {
    SlaterPair::collinear(0.82, 0.66, 0.36, 0.19)
}
