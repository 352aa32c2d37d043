//! Scalar root finding on a sign-changing bracket.
//!
//! [`solve_bracketed`] needs only function values and mixes false-position
//! steps with bisection; [`refine_with_derivative`] runs Newton's method
//! inside a guard bracket and falls back to bisection whenever a Newton
//! iterate leaves the bracket or fails to lower the residual.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Stopping rules shared by both solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Bracket width (or Newton step) at which the abscissa counts as converged.
    pub abs_x: f64,
    /// Residual `|f(x)|` at which the abscissa counts as converged.
    pub abs_f: f64,
    pub max_iter: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            abs_x: 1e-12,
            abs_f: 1e-10,
            max_iter: 200,
        }
    }
}

impl Tolerances {
    pub fn new(abs_x: f64, abs_f: f64, max_iter: usize) -> Result<Self> {
        if !(abs_x > 0.0) {
            return Err(Error::Domain {
                what: "abs_x must be positive",
                value: abs_x,
            });
        }
        if !(abs_f > 0.0) {
            return Err(Error::Domain {
                what: "abs_f must be positive",
                value: abs_f,
            });
        }
        if max_iter == 0 {
            return Err(Error::Domain {
                what: "max_iter must be at least 1",
                value: 0.0,
            });
        }
        Ok(Tolerances {
            abs_x,
            abs_f,
            max_iter,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    pub root: f64,
    /// `|f(root)|`.
    pub residual: f64,
    pub iterations: usize,
    /// Final enclosing interval; always contains `root`.
    pub bracket: (f64, f64),
}

/// Current sign-changing interval together with the function values at its ends.
#[derive(Debug, Clone, Copy)]
struct Bracket {
    a: f64,
    fa: f64,
    b: f64,
    fb: f64,
}

impl Bracket {
    fn width(&self) -> f64 {
        self.b - self.a
    }

    /// Replaces whichever end has the same sign as `fx`.
    fn insert(&mut self, x: f64, fx: f64) {
        if same_sign(fx, self.fa) {
            self.a = x;
            self.fa = fx;
        } else {
            self.b = x;
            self.fb = fx;
        }
    }

    fn best(&self) -> (f64, f64) {
        if self.fa.abs() <= self.fb.abs() {
            (self.a, self.fa.abs())
        } else {
            (self.b, self.fb.abs())
        }
    }

    /// True once no representable point lies strictly inside.
    fn exhausted(&self) -> bool {
        let mid = midpoint(self.a, self.b);
        mid <= self.a || mid >= self.b
    }
}

fn same_sign(x: f64, y: f64) -> bool {
    x.is_sign_negative() == y.is_sign_negative()
}

fn midpoint(a: f64, b: f64) -> f64 {
    a + 0.5 * (b - a)
}

fn eval<F: FnMut(f64) -> f64>(f: &mut F, x: f64) -> Result<f64> {
    let fx = f(x);
    if fx.is_finite() {
        Ok(fx)
    } else {
        Err(Error::Domain {
            what: "function value is not finite",
            value: x,
        })
    }
}

/// Sets up the bracket, or returns early when an end point is an exact root.
fn open_bracket<F: FnMut(f64) -> f64>(
    f: &mut F,
    lo: f64,
    hi: f64,
) -> Result<core::result::Result<Bracket, RootResult>> {
    if !(lo.is_finite() && hi.is_finite()) || !(lo < hi) {
        return Err(Error::Domain {
            what: "bracket must satisfy lo < hi with finite ends",
            value: hi - lo,
        });
    }
    let fa = eval(f, lo)?;
    let fb = eval(f, hi)?;
    for (x, fx) in [(lo, fa), (hi, fb)] {
        if fx == 0.0 {
            return Ok(Err(RootResult {
                root: x,
                residual: 0.0,
                iterations: 0,
                bracket: (lo, hi),
            }));
        }
    }
    if same_sign(fa, fb) {
        return Err(Error::NoSignChange { lo, hi });
    }
    Ok(Ok(Bracket {
        a: lo,
        fa,
        b: hi,
        fb,
    }))
}

fn finish(bracket: &Bracket, iterations: usize) -> RootResult {
    let (root, residual) = bracket.best();
    RootResult {
        root,
        residual,
        iterations,
        bracket: (bracket.a, bracket.b),
    }
}

/// Finds a root of `f` on `[lo, hi]` without derivatives.
///
/// Each iteration tries a false-position point; whenever the previous step
/// failed to halve the bracket, a bisection step is forced instead, so the
/// width at least halves over any two consecutive iterations.
pub fn solve_bracketed<F>(f: F, lo: f64, hi: f64, tol: &Tolerances) -> Result<RootResult>
where
    F: FnMut(f64) -> f64,
{
    solve_bracketed_observed(f, lo, hi, tol, |_, _| {})
}

/// Like [`solve_bracketed`] but also returns the bracket after every iteration.
pub fn solve_bracketed_traced<F>(
    f: F,
    lo: f64,
    hi: f64,
    tol: &Tolerances,
) -> Result<(RootResult, Vec<(f64, f64)>)>
where
    F: FnMut(f64) -> f64,
{
    let mut trace = Vec::new();
    let result = solve_bracketed_observed(f, lo, hi, tol, |a, b| trace.push((a, b)))?;
    Ok((result, trace))
}

fn solve_bracketed_observed<F, O>(
    mut f: F,
    lo: f64,
    hi: f64,
    tol: &Tolerances,
    mut observe: O,
) -> Result<RootResult>
where
    F: FnMut(f64) -> f64,
    O: FnMut(f64, f64),
{
    let mut br = match open_bracket(&mut f, lo, hi)? {
        Ok(br) => br,
        Err(done) => return Ok(done),
    };
    observe(br.a, br.b);
    let mut force_bisection = false;

    for iter in 1..=tol.max_iter {
        if br.exhausted() {
            return Ok(finish(&br, iter - 1));
        }
        let width = br.width();
        let mid = midpoint(br.a, br.b);
        let x = if force_bisection {
            mid
        } else {
            let secant = br.b - br.fb * (br.b - br.a) / (br.fb - br.fa);
            if secant > br.a && secant < br.b {
                secant
            } else {
                mid
            }
        };
        let fx = eval(&mut f, x)?;
        if fx == 0.0 {
            observe(x, x);
            return Ok(RootResult {
                root: x,
                residual: 0.0,
                iterations: iter,
                bracket: (x, x),
            });
        }
        br.insert(x, fx);
        observe(br.a, br.b);
        force_bisection = br.width() > 0.5 * width;

        let (_, residual) = br.best();
        if residual <= tol.abs_f || br.width() <= tol.abs_x {
            return Ok(finish(&br, iter));
        }
    }
    Err(Error::MaxIterations {
        iterations: tol.max_iter,
    })
}

/// Newton iteration from `seed`, safeguarded by the sign-changing `guard`.
///
/// A Newton iterate is kept only if it falls strictly inside the current
/// bracket and lowers `|f|`; otherwise the step is replaced by bisection of
/// the bracket. Converges once a Newton step is below `abs_x` with the
/// residual below `abs_f`, or once the bracket itself is narrower than
/// `abs_x`.
pub fn refine_with_derivative<F, D>(
    mut f: F,
    mut df: D,
    seed: f64,
    guard: (f64, f64),
    tol: &Tolerances,
) -> Result<RootResult>
where
    F: FnMut(f64) -> f64,
    D: FnMut(f64) -> f64,
{
    let mut br = match open_bracket(&mut f, guard.0, guard.1)? {
        Ok(br) => br,
        Err(done) => return Ok(done),
    };
    if !(seed >= br.a && seed <= br.b) {
        return Err(Error::Domain {
            what: "seed must lie inside the guard bracket",
            value: seed,
        });
    }

    let (mut x, mut fx) = if seed == br.a {
        (br.a, br.fa)
    } else if seed == br.b {
        (br.b, br.fb)
    } else {
        let fs = eval(&mut f, seed)?;
        if fs == 0.0 {
            return Ok(RootResult {
                root: seed,
                residual: 0.0,
                iterations: 0,
                bracket: (seed, seed),
            });
        }
        br.insert(seed, fs);
        (seed, fs)
    };

    for iter in 1..=tol.max_iter {
        let slope = df(x);
        let step = fx / slope;
        if step.is_finite() && step.abs() <= tol.abs_x && fx.abs() <= tol.abs_f {
            return Ok(RootResult {
                root: x,
                residual: fx.abs(),
                iterations: iter - 1,
                bracket: (br.a, br.b),
            });
        }

        let newton = x - step;
        let mut accepted = false;
        if newton.is_finite() && newton > br.a && newton < br.b {
            let fnew = eval(&mut f, newton)?;
            if fnew == 0.0 {
                return Ok(RootResult {
                    root: newton,
                    residual: 0.0,
                    iterations: iter,
                    bracket: (newton, newton),
                });
            }
            br.insert(newton, fnew);
            if fnew.abs() < fx.abs() {
                x = newton;
                fx = fnew;
                accepted = true;
            }
        }

        if !accepted {
            if br.exhausted() {
                return Ok(finish(&br, iter));
            }
            let mid = midpoint(br.a, br.b);
            let fmid = eval(&mut f, mid)?;
            if fmid == 0.0 {
                return Ok(RootResult {
                    root: mid,
                    residual: 0.0,
                    iterations: iter,
                    bracket: (mid, mid),
                });
            }
            br.insert(mid, fmid);
            x = mid;
            fx = fmid;
        }

        if br.width() <= tol.abs_x {
            return Ok(finish(&br, iter));
        }
    }
    Err(Error::MaxIterations {
        iterations: tol.max_iter,
    })
}
