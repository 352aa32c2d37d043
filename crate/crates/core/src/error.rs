use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A physical parameter violated its invariant, e.g. "mass must be positive".
    InvalidParameter {
        field: &'static str,
        requirement: &'static str,
    },
    /// An argument lies outside the domain of a function.
    Domain { what: &'static str, value: f64 },
    /// The end points of a bracket do not straddle a root.
    NoSignChange { lo: f64, hi: f64 },
    /// An iterative method did not converge.
    MaxIterations { iterations: usize },
    /// A power-series term left the floating point range before the sum converged.
    Overflow { nu: f64, q: f64 },
    /// The zero scan failed to enclose the requested Bessel zero.
    ZeroNotBracketed { nu: f64, m: u32 },
    /// The antisymmetric z-state was requested where `2 M z0 lambda <= hbar^2`.
    ExcitedStateAbsent { strength: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter { field, requirement } => {
                write!(f, "{field} must be {requirement}")
            }
            Error::Domain { what, value } => write!(f, "{what} (got {value})"),
            Error::NoSignChange { lo, hi } => {
                write!(f, "no sign change on [{lo}, {hi}]")
            }
            Error::MaxIterations { iterations } => {
                write!(
                    f,
                    "max iterations ({iterations}) reached without convergence"
                )
            }
            Error::Overflow { nu, q } => {
                write!(f, "series term overflow evaluating J_{nu}({q})")
            }
            Error::ZeroNotBracketed { nu, m } => {
                write!(f, "zero not bracketed: J_{nu}, index {m}")
            }
            Error::ExcitedStateAbsent { strength } => write!(
                f,
                "excited state does not exist (z0 M lambda / hbar^2 = {strength} <= 1/2)"
            ),
        }
    }
}

impl core::error::Error for Error {}
