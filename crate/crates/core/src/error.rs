//! Error type shared by all modules.

use std::fmt;

/// Errors raised by the exact moment-problem machinery.
///
/// Unsolvability of a moment problem is *not* an error; it is reported
/// through [`crate::solver::SolutionReport`]. Errors signal contract
/// violations: malformed input, an improper rational function where a proper
/// one is required, and so on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Denominator polynomial is identically zero.
    ZeroDenominator,
    /// A proper rational function (deg num <= deg den, or strictly less) was
    /// required.
    ImproperFunction { num_deg: isize, den_deg: isize },
    /// The expansion has a nonzero constant term, so it is not the expansion
    /// of a function vanishing at infinity.
    NonzeroConstantTerm,
    /// Truncated expansion operands must have equal length.
    LengthMismatch { left: usize, right: usize },
    /// The sequence has no usable leading structure (zero through the
    /// required index, or the claimed first-nonzero position is wrong).
    NotNormalizable,
    /// Every leading principal minor of the Hankel matrix vanishes, so there
    /// is no Schur step to take.
    NoNormalIndex,
    /// Index out of range (e.g. resolvent step count past the chain length).
    IndexOutOfRange { index: usize, len: usize },
    /// The report does not carry a parametrization.
    NotParametrized,
    /// The linear fractional transform has an identically vanishing
    /// denominator for this parameter.
    DegenerateTransform,
    /// A moment sequence for a problem instance must be nonempty.
    EmptySequence,
    /// Malformed textual input (rational or polynomial).
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "denominator polynomial is zero"),
            Error::ImproperFunction { num_deg, den_deg } => write!(
                f,
                "rational function is not proper enough: deg num = {num_deg}, deg den = {den_deg}"
            ),
            Error::NonzeroConstantTerm => {
                write!(f, "expansion has a nonzero constant term at infinity")
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "expansion length mismatch: {left} vs {right}")
            }
            Error::NotNormalizable => write!(f, "sequence has no usable leading coefficient"),
            Error::NoNormalIndex => write!(f, "Hankel matrix has no normal index"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range (length {len})")
            }
            Error::NotParametrized => write!(f, "report carries no parametrization"),
            Error::DegenerateTransform => {
                write!(f, "linear fractional transform degenerates for this parameter")
            }
            Error::EmptySequence => write!(f, "moment sequence is empty"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
