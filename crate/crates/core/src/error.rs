use core::fmt;

/// Errors produced by the analysis core.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Arity above the supported cap.
    ArityTooLarge { arity: usize, max: usize },
    /// Two inputs disagree on the number of variables.
    ArityMismatch { expected: usize, found: usize },
    /// Assignment index `index` is not below `2^n`.
    IndexOutOfRange { index: u64, len: u64 },
    /// Variable index outside `0..n`.
    VariableOutOfRange { variable: usize, arity: usize },
    /// Output vector length is not `2^n`.
    TableLength { expected: usize, found: usize },
    /// A mean with `|mu| >= 1` (or not finite).
    InvalidMean { variable: usize, mu: f64 },
    /// Inverse transform produced a value away from `+-1`.
    NotBoolean { index: u64, value: f64 },
    /// A sign was requested for a zero quantity.
    AmbiguousSign,
    /// Probability outside `[0, 1]`.
    ProbabilityOutOfRange(f64),
    /// Coefficient pair outside the domain of the spectral MI formula.
    InfeasibleSpectrum { f0: f64, f1: f64, mu: f64 },
    /// Restrictive/canalized pair not admissible for this `f0`.
    InfeasiblePair { f0: f64, mu: f64 },
    /// Exhaustive enumeration refused above `max` variables.
    EnumerationTooLarge { arity: usize, max: usize },
    /// Product-measure class values closer than the merge guard allows.
    ClassCollision { left: f64, right: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ArityTooLarge { arity, max } => {
                write!(f, "arity {arity} exceeds the supported maximum of {max}")
            }
            Error::ArityMismatch { expected, found } => {
                write!(f, "arity mismatch: expected {expected}, found {found}")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "assignment index {index} out of range 0..{len}")
            }
            Error::VariableOutOfRange { variable, arity } => {
                write!(f, "variable {variable} out of range for arity {arity}")
            }
            Error::TableLength { expected, found } => {
                write!(f, "truth table has {found} entries, expected {expected}")
            }
            Error::InvalidMean { variable, mu } => {
                write!(
                    f,
                    "mean of variable {variable} must satisfy |mu| < 1, got {mu}"
                )
            }
            Error::NotBoolean { index, value } => {
                write!(
                    f,
                    "reconstructed value {value} at assignment {index} is not +-1"
                )
            }
            Error::AmbiguousSign => write!(f, "sign of zero is ambiguous"),
            Error::ProbabilityOutOfRange(p) => write!(f, "probability {p} outside [0, 1]"),
            Error::InfeasibleSpectrum { f0, f1, mu } => write!(
                f,
                "coefficients f0={f0}, f1={f1} are infeasible under mu={mu}"
            ),
            Error::InfeasiblePair { f0, mu } => {
                write!(f, "canalizing pair infeasible for f0={f0}, mu={mu}")
            }
            Error::EnumerationTooLarge { arity, max } => write!(
                f,
                "exhaustive enumeration over {arity} variables refused (max {max})"
            ),
            Error::ClassCollision { left, right } => write!(
                f,
                "coefficient classes {left} and {right} too close to separate"
            ),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
