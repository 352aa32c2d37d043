//! Logarithm of the gamma function for positive arguments.

use crate::error::{Error, Result};

// Lanczos approximation, g = 7, nine coefficients.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

// Taylor coefficients of ln Gamma(1 + e): -gamma, then (-1)^k zeta(k) / k.
const AROUND_ONE: [f64; 30] = [
    -0.577215664901532861,
    0.822467033424113218,
    -0.400685634386531428,
    0.270580808427784548,
    -0.207385551028673985,
    0.16955717699740819,
    -0.144049896768846118,
    0.125509669524743042,
    -0.11133426586956469,
    0.100099457512781809,
    -0.0909540171458290422,
    0.083353840546109004,
    -0.0769325164113521915,
    0.0714329462953613361,
    -0.066668705882420468,
    0.0625009551412130407,
    -0.0588239786586845823,
    0.0555557676274036111,
    -0.0526316793796166607,
    0.0500000476981016936,
    -0.047619070330142228,
    0.0454545562932046694,
    -0.0434782660530402594,
    0.0416666691503412105,
    -0.0400000011921401406,
    0.0384615390346751857,
    -0.0370370373129893255,
    0.035714285847333358,
    -0.0344827586849193008,
    0.0333333333643775811,
];

// Taylor coefficients of ln Gamma(2 + e): 1 - gamma, then (-1)^k (zeta(k) - 1) / k.
const AROUND_TWO: [f64; 30] = [
    0.422784335098467139,
    0.322467033424113218,
    -0.0673523010531980951,
    0.0205808084277845479,
    -0.00738555102867398527,
    0.00289051033074152329,
    -0.00119275391170326098,
    0.000509669524743042422,
    -0.00022315475845357938,
    0.0000994575127818085337,
    -0.0000449262367381331417,
    0.0000205072127756706916,
    -9.4394882752683959e-6,
    4.3748667899074878e-6,
    -2.03921575380136624e-6,
    9.55141213040741983e-7,
    -4.49246919876456604e-7,
    2.12071848055546659e-7,
    -1.00432248239680996e-7,
    4.76981016936398057e-8,
    -2.27110946089431649e-8,
    1.08386592148969541e-8,
    -5.18347504197004666e-9,
    2.48367454380247832e-9,
    -1.19214014058609121e-9,
    5.73136724167886201e-10,
    -2.75952288512423315e-10,
    1.33047643742444895e-10,
    -6.42296456383810002e-11,
    3.10442477473222728e-11,
];

/// Radius around 1 and 2 inside which the Taylor expansions replace Lanczos,
/// keeping the relative error small next to the zeros of `ln Gamma`.
const TAYLOR_RADIUS: f64 = 0.25;

fn taylor(coeffs: &[f64; 30], e: f64) -> f64 {
    // Coefficients multiply e^1 .. e^30.
    coeffs.iter().rev().fold(0.0, |acc, &c| (acc + c) * e)
}

fn lanczos(x: f64) -> f64 {
    let x = x - 1.0;
    let series = LANCZOS[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS[0], |acc, (i, &c)| acc + c / (x + (i + 1) as f64));
    let t = x + LANCZOS_G + 0.5;
    HALF_LN_TWO_PI + (x + 0.5) * libm::log(t) - t + libm::log(series)
}

/// `ln Gamma(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            what: "ln_gamma requires a positive finite argument",
            value: x,
        });
    }
    Ok(ln_gamma_unchecked(x))
}

pub(crate) fn ln_gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        // Gamma(x) = Gamma(x + 1) / x
        return ln_gamma_unchecked(x + 1.0) - libm::log(x);
    }
    if x == 1.0 || x == 2.0 {
        return 0.0;
    }
    if (x - 1.0).abs() < TAYLOR_RADIUS {
        return taylor(&AROUND_ONE, x - 1.0);
    }
    if (x - 2.0).abs() < TAYLOR_RADIUS {
        return taylor(&AROUND_TWO, x - 2.0);
    }
    lanczos(x)
}
