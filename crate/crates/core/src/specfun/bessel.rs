//! Bessel functions of the first kind `J_nu(q)` for real order `nu >= 0`.
//!
//! Small and moderate arguments use the ascending power series; large
//! arguments use Hankel's asymptotic expansion, whose leading term is
//! `sqrt(2 / (pi q)) cos(q - pi nu / 2 - pi / 4)`.

use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::error::{Error, Result};
use crate::specfun::gamma::ln_gamma_unchecked;

/// Which branch produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselMethod {
    Series,
    Asymptotic,
}

impl BesselMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            BesselMethod::Series => "series",
            BesselMethod::Asymptotic => "asymptotic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselEval {
    pub value: f64,
    pub method: BesselMethod,
    /// Power-series terms summed; zero on the asymptotic branch.
    pub term_count: u32,
}

const SERIES_REL_TOL: f64 = 1e-16;
const SERIES_MAX_TERMS: u32 = 500;
const HANKEL_MAX_TERMS: u32 = 200;

/// Largest argument handled by the power series for order `nu`.
pub fn series_switch_point(nu: f64) -> f64 {
    (nu + 8.0).max(12.0)
}

fn check_order(nu: f64) -> Result<()> {
    if nu >= 0.0 && nu.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "Bessel order must be finite and >= 0",
            value: nu,
        })
    }
}

fn check_argument(q: f64) -> Result<()> {
    if q >= 0.0 && q.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "Bessel argument must be finite and >= 0",
            value: q,
        })
    }
}

/// `J_nu(q)`, choosing the branch by [`series_switch_point`].
pub fn bessel_j(nu: f64, q: f64) -> Result<BesselEval> {
    check_order(nu)?;
    check_argument(q)?;
    if q <= series_switch_point(nu) {
        series(nu, q)
    } else {
        Ok(BesselEval {
            value: hankel(nu, q),
            method: BesselMethod::Asymptotic,
            term_count: 0,
        })
    }
}

/// Power series regardless of the argument size.
pub fn bessel_j_series(nu: f64, q: f64) -> Result<BesselEval> {
    check_order(nu)?;
    check_argument(q)?;
    series(nu, q)
}

/// Hankel expansion regardless of the argument size. Requires `q > 0`.
pub fn bessel_j_asymptotic(nu: f64, q: f64) -> Result<BesselEval> {
    check_order(nu)?;
    check_argument(q)?;
    if q == 0.0 {
        return Err(Error::Domain {
            what: "asymptotic expansion requires q > 0",
            value: q,
        });
    }
    Ok(BesselEval {
        value: hankel(nu, q),
        method: BesselMethod::Asymptotic,
        term_count: 0,
    })
}

/// `dJ_nu/dq = (nu / q) J_nu(q) - J_{nu+1}(q)`, for `q > 0`.
pub fn bessel_j_derivative(nu: f64, q: f64) -> Result<f64> {
    check_order(nu)?;
    if !(q > 0.0) || !q.is_finite() {
        return Err(Error::Domain {
            what: "Bessel derivative requires q > 0",
            value: q,
        });
    }
    let j = bessel_j(nu, q)?.value;
    let j_next = bessel_j(nu + 1.0, q)?.value;
    Ok(nu / q * j - j_next)
}

fn series(nu: f64, q: f64) -> Result<BesselEval> {
    if q == 0.0 {
        let value = if nu == 0.0 { 1.0 } else { 0.0 };
        return Ok(BesselEval {
            value,
            method: BesselMethod::Series,
            term_count: 1,
        });
    }
    let half = 0.5 * q;
    // Leading term (q/2)^nu / Gamma(nu + 1), taken through logs so that
    // neither factor overflows on its own.
    let log_lead = nu * libm::log(half) - ln_gamma_unchecked(nu + 1.0);
    let mut term = libm::exp(log_lead);
    if !term.is_finite() {
        return Err(Error::Overflow { nu, q });
    }
    let ratio = -half * half;
    let mut sum = term;
    let mut count = 1;
    while count < SERIES_MAX_TERMS {
        let j = f64::from(count);
        term *= ratio / (j * (j + nu));
        if !term.is_finite() {
            return Err(Error::Overflow { nu, q });
        }
        sum += term;
        count += 1;
        if term.abs() <= SERIES_REL_TOL * sum.abs() || term == 0.0 {
            break;
        }
    }
    Ok(BesselEval {
        value: sum,
        method: BesselMethod::Series,
        term_count: count,
    })
}

/// Hankel's expansion `sqrt(2/(pi q)) (P cos chi - Q sin chi)`, summed until
/// the terms stop shrinking.
fn hankel(nu: f64, q: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut qs = 0.0;
    let mut term = 1.0_f64;
    for k in 1..=HANKEL_MAX_TERMS {
        let odd = f64::from(2 * k - 1);
        let next = term * (mu - odd * odd) / (f64::from(k) * 8.0 * q);
        // Past the point mu < (2k-1)^2 the series is divergent once terms grow.
        if odd * odd > mu && next.abs() >= term.abs() {
            break;
        }
        term = next;
        match k % 4 {
            1 => qs += term,
            2 => p -= term,
            3 => qs -= term,
            _ => p += term,
        }
        if term == 0.0 || term.abs() <= 1e-17 * (p.abs() + qs.abs()) {
            break;
        }
    }
    let chi = q - (0.5 * nu * PI + FRAC_PI_4);
    let amplitude = libm::sqrt(2.0 / (PI * q));
    amplitude * (p * libm::cos(chi) - qs * libm::sin(chi))
}

/// Leading asymptotic form only. Kept for the cross-checks against the
/// closed form of `J_{1/2}` and for the amplitude envelope.
pub fn leading_asymptotic(nu: f64, q: f64) -> f64 {
    libm::sqrt(2.0 / (PI * q)) * libm::cos(q - nu * FRAC_PI_2 - FRAC_PI_4)
}
