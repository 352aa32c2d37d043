//! Special functions: `ln Gamma`, `J_nu` for real order, and the zeros of `J_nu`.

mod bessel;
mod gamma;
mod zeros;

pub use bessel::{
    bessel_j, bessel_j_asymptotic, bessel_j_derivative, bessel_j_series, leading_asymptotic,
    series_switch_point, BesselEval, BesselMethod,
};
pub use gamma::ln_gamma;
pub use zeros::{
    bessel_zero, compare_zero_approximations, mcmahon_estimate, ZeroApproxMode, ZeroComparison,
};
