//! Bound states of the twin attractive delta planes at `z = ±z0`.
//!
//! With `xi = (z0 / hbar) sqrt(2 M |E|)` and `c = z0 M lambda / hbar^2`, the
//! symmetric state solves `F(xi) = xi / (1 + exp(-2 xi)) = c` and the
//! antisymmetric one `G(xi) = xi / (1 - exp(-2 xi)) = c`. `F` maps `[0, inf)`
//! onto itself, so the ground state always exists; `G` starts at `1/2`, so
//! the excited state needs `c > 1/2`, i.e. `2 M z0 lambda > hbar^2`.

use crate::error::{Error, Result};
use crate::model::{coupling_strength_parameter, validate, EnergyLevel, PhysicalParams};
use crate::rootfind::{refine_with_derivative, Tolerances};

/// Width of the band above `c = 1/2` treated as "no excited state".
pub const EXISTENCE_GUARD: f64 = 1e-12;

/// Below this `xi`, `G` is evaluated from its Taylor expansion.
const G_SERIES_CUTOFF: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub level: EnergyLevel,
    /// Energy of the z-motion, in the units carried by the parameters. Negative.
    pub energy: f64,
    /// Dimensionless root `xi = (z0 / hbar) sqrt(2 M |energy|)`.
    pub xi: f64,
    /// `H = |energy| hbar^2 / (M lambda^2)`: in `(1/2, 2)` for the ground
    /// state, `(0, 1/2)` for the excited one.
    pub h_factor: f64,
}

/// `F(xi) = xi / (1 + exp(-2 xi))`.
pub fn f_profile(xi: f64) -> f64 {
    xi / (1.0 + libm::exp(-2.0 * xi))
}

/// `G(xi) = xi / (1 - exp(-2 xi))`, continued by `G(0) = 1/2`.
pub fn g_profile(xi: f64) -> f64 {
    if xi < G_SERIES_CUTOFF {
        0.5 + 0.5 * xi + xi * xi / 6.0
    } else {
        xi / -libm::expm1(-2.0 * xi)
    }
}

fn f_slope(xi: f64) -> f64 {
    let e = libm::exp(-2.0 * xi);
    let d = 1.0 + e;
    (d + 2.0 * xi * e) / (d * d)
}

fn g_slope(xi: f64) -> f64 {
    if xi < 1e-3 {
        return 0.5 + xi / 3.0 - 2.0 * xi * xi * xi / 45.0;
    }
    let e = libm::exp(-2.0 * xi);
    let d = -libm::expm1(-2.0 * xi);
    (d - 2.0 * xi * e) / (d * d)
}

fn inversion_tolerances(scale: f64) -> Tolerances {
    Tolerances {
        abs_x: 4.0 * f64::EPSILON * scale,
        abs_f: 4.0 * f64::EPSILON * scale,
        max_iter: 200,
    }
}

/// Root of `F(xi) = c`. From `xi / 2 <= F(xi) < xi` it lies in `[c, 2c]`.
fn invert_f(c: f64) -> Result<f64> {
    let seed = c * (1.0 + libm::exp(-2.0 * c));
    let r = refine_with_derivative(
        |xi| f_profile(xi) - c,
        f_slope,
        seed.clamp(c, 2.0 * c),
        (c, 2.0 * c),
        &inversion_tolerances(c),
    )?;
    Ok(r.root)
}

/// Root of `G(xi) = c` for `c > 1/2`. From `xi < G(xi) <= xi + 1/2` it lies
/// in `[max(eps, c - 1/2), c]`.
fn invert_g(c: f64) -> Result<f64> {
    let excess = c - 0.5;
    let lo = excess.max(1e-300);
    let seed = if excess < 0.1 {
        // G(xi) = 1/2 + xi/2 + O(xi^2) near threshold.
        2.0 * excess
    } else {
        c * -libm::expm1(-2.0 * c)
    };
    let r = refine_with_derivative(
        |xi| g_profile(xi) - c,
        g_slope,
        seed.clamp(lo, c),
        (lo, c),
        &inversion_tolerances(c),
    )?;
    Ok(r.root)
}

fn bound_state(params: &PhysicalParams, level: EnergyLevel, xi: f64) -> BoundState {
    let momentum = params.hbar * xi / params.half_separation;
    let energy = -momentum * momentum / (2.0 * params.mass);
    BoundState {
        level,
        energy,
        xi,
        h_factor: -energy / params.binding_scale(),
    }
}

/// True when `2 M z0 lambda > hbar^2` (outside the guard band).
pub fn excited_state_exists(params: &PhysicalParams) -> bool {
    coupling_strength_parameter(params) > 0.5 + EXISTENCE_GUARD
}

/// The symmetric bound state. Exists for every valid parameter set.
pub fn ground_state(params: &PhysicalParams) -> Result<BoundState> {
    let params = validate(*params)?;
    let xi = invert_f(coupling_strength_parameter(&params))?;
    Ok(bound_state(&params, EnergyLevel::Ground, xi))
}

/// The antisymmetric bound state, or `None` when `2 M z0 lambda <= hbar^2`.
pub fn excited_state(params: &PhysicalParams) -> Result<Option<BoundState>> {
    let params = validate(*params)?;
    if !excited_state_exists(&params) {
        return Ok(None);
    }
    let xi = invert_g(coupling_strength_parameter(&params))?;
    Ok(Some(bound_state(&params, EnergyLevel::Excited, xi)))
}

/// The bound state at `level`, with absence of the excited state as an error.
pub fn bound_state_at(params: &PhysicalParams, level: EnergyLevel) -> Result<BoundState> {
    match level {
        EnergyLevel::Ground => ground_state(params),
        EnergyLevel::Excited => excited_state(params)?.ok_or(Error::ExcitedStateAbsent {
            strength: coupling_strength_parameter(params),
        }),
    }
}

/// `E_excited - E_ground`, or `None` when there is no excited state.
///
/// Uses `xi_0 - xi_1 = c (exp(-2 xi_0) + exp(-2 xi_1))`, which follows from
/// the two defining equations and stays resolvable after the energies
/// themselves have merged in floating point.
pub fn level_splitting(params: &PhysicalParams) -> Result<Option<f64>> {
    let ground = ground_state(params)?;
    let Some(excited) = excited_state(params)? else {
        return Ok(None);
    };
    let c = coupling_strength_parameter(params);
    let dxi = c * (libm::exp(-2.0 * ground.xi) + libm::exp(-2.0 * excited.xi));
    let scale = params.hbar * params.hbar
        / (2.0 * params.mass * params.half_separation * params.half_separation);
    Ok(Some(scale * dxi * (ground.xi + excited.xi)))
}

/// Closed-form limits of the z-energy as `z0 -> 0+` and `z0 -> inf`, in that order.
pub fn analytic_limits(params: &PhysicalParams, level: EnergyLevel) -> (f64, f64) {
    let scale = params.binding_scale();
    match level {
        EnergyLevel::Ground => (-2.0 * scale, -0.5 * scale),
        EnergyLevel::Excited => (0.0, -0.5 * scale),
    }
}
