//! Positive zeros of `J_nu` and their closed-form approximations.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::rootfind::{refine_with_derivative, Tolerances};
use crate::specfun::bessel::{bessel_j, bessel_j_derivative};

/// How a Bessel zero is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZeroApproxMode {
    /// Numerically located zero.
    Exact,
    /// `alpha_nu + m pi`, with `alpha_nu` the exact first zero.
    PaperLowOrder,
    /// `pi (nu / 2 + m + 3/4)`.
    PaperHighOrder,
}

impl ZeroApproxMode {
    pub const ALL: [ZeroApproxMode; 3] = [
        ZeroApproxMode::Exact,
        ZeroApproxMode::PaperLowOrder,
        ZeroApproxMode::PaperHighOrder,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ZeroApproxMode::Exact => "exact",
            ZeroApproxMode::PaperLowOrder => "paper-low-order",
            ZeroApproxMode::PaperHighOrder => "paper-high-order",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.as_str() == s)
    }
}

/// Scan step when walking along `J_nu` looking for sign changes. Adjacent
/// zeros of `J_nu` (`nu >= 0`) are more than `pi / 8` apart.
const SCAN_STEP: f64 = PI / 8.0;

/// `pi (nu / 2 + m + 3/4)`: leading McMahon term for the `(m+1)`-th zero.
pub fn mcmahon_estimate(nu: f64, m: u32) -> f64 {
    PI * (0.5 * nu + f64::from(m) + 0.75)
}

/// The `(m+1)`-th positive zero of `J_nu`, exactly or by one of the
/// closed-form approximations.
pub fn bessel_zero(nu: f64, m: u32, mode: ZeroApproxMode) -> Result<f64> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(Error::Domain {
            what: "nu must be finite and >= 0",
            value: nu,
        });
    }
    match mode {
        ZeroApproxMode::Exact => exact_zero(nu, m),
        ZeroApproxMode::PaperLowOrder => Ok(exact_zero(nu, 0)? + f64::from(m) * PI),
        ZeroApproxMode::PaperHighOrder => Ok(mcmahon_estimate(nu, m)),
    }
}

fn j(nu: f64, q: f64) -> f64 {
    // Inputs are validated by the caller; NaN makes the root finder bail out.
    bessel_j(nu, q).map_or(f64::NAN, |e| e.value)
}

/// Walks upward from a point below the first zero, counting sign changes,
/// then polishes the `(m+1)`-th with safeguarded Newton.
fn exact_zero(nu: f64, m: u32) -> Result<f64> {
    // j_{nu,1} > sqrt(nu (nu + 2)), so J_nu > 0 on (0, start].
    let start = libm::sqrt(nu * (nu + 2.0));
    // Zeros beyond nu = 1/2 sit below McMahon's leading term; below it they
    // exceed it by less than 0.06.
    let limit = mcmahon_estimate(nu, m) + 2.0 * PI;

    let mut lo = start;
    let mut f_lo = j(nu, lo);
    if f_lo == 0.0 {
        // Only reachable for nu > 0 at q = 0, i.e. nu * (nu + 2) underflowed.
        lo = SCAN_STEP * 1e-3;
        f_lo = j(nu, lo);
    }
    let mut found = 0u32;
    while lo < limit {
        let hi = lo + SCAN_STEP;
        let f_hi = j(nu, hi);
        if f_hi.is_nan() {
            return Err(Error::ZeroNotBracketed { nu, m });
        }
        let crossed = f_hi == 0.0 || f_lo.is_sign_negative() != f_hi.is_sign_negative();
        if crossed {
            if found == m {
                return polish(nu, lo, hi, f_lo, f_hi);
            }
            found += 1;
        }
        lo = hi;
        // A zero at the grid point counts once: carry the sign it leads into.
        f_lo = if f_hi == 0.0 { -f_lo } else { f_hi };
    }
    Err(Error::ZeroNotBracketed { nu, m })
}

fn polish(nu: f64, lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Result<f64> {
    if f_hi == 0.0 {
        return Ok(hi);
    }
    let seed = lo - f_lo * (hi - lo) / (f_hi - f_lo);
    let seed = if seed > lo && seed < hi {
        seed
    } else {
        0.5 * (lo + hi)
    };
    let tol = Tolerances {
        abs_x: 4.0 * f64::EPSILON * hi,
        abs_f: 1e-13,
        max_iter: 200,
    };
    let result = refine_with_derivative(
        |q| j(nu, q),
        |q| bessel_j_derivative(nu, q).unwrap_or(f64::NAN),
        seed,
        (lo, hi),
        &tol,
    )?;
    Ok(result.root)
}

/// One row of the audit comparing `pi (nu/2 + m + 3/4)` with the exact zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroComparison {
    pub nu: f64,
    pub m: u32,
    pub exact: f64,
    pub paper: f64,
    /// `|paper - exact| / exact`.
    pub rel_error: f64,
}

/// Audits the high-order closed form on the grid `nu = 0, step, 2 step, ...
/// <= nu_max` and `m = 0..=m_max`, ordered by `(nu, m)`.
pub fn compare_zero_approximations(
    nu_max: f64,
    nu_step: f64,
    m_max: u32,
) -> Result<Vec<ZeroComparison>> {
    if !(nu_max >= 0.0) || !nu_max.is_finite() {
        return Err(Error::Domain {
            what: "nu_max must be finite and >= 0",
            value: nu_max,
        });
    }
    if !(nu_step > 0.0) || !nu_step.is_finite() {
        return Err(Error::Domain {
            what: "nu_step must be positive",
            value: nu_step,
        });
    }
    let steps = libm::floor(nu_max / nu_step + 1e-9) as u32;
    let mut rows = Vec::with_capacity((steps as usize + 1) * (m_max as usize + 1));
    for i in 0..=steps {
        let nu = f64::from(i) * nu_step;
        for m in 0..=m_max {
            let exact = bessel_zero(nu, m, ZeroApproxMode::Exact)?;
            let paper = mcmahon_estimate(nu, m);
            rows.push(ZeroComparison {
                nu,
                m,
                exact,
                paper,
                rel_error: (paper - exact).abs() / exact,
            });
        }
    }
    Ok(rows)
}
