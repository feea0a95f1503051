//! Error type shared by all evaluators.

/// Errors raised by construction, series summation and asymptotic assembly.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Parameter outside the supported domain (sigma, mu, n, precision).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Gamma evaluated at a nonpositive integer.
    #[error("gamma pole at {0}")]
    Pole(String),

    /// Exponent range of the working precision exceeded.
    #[error("overflow: {0}")]
    Overflow(String),

    /// Input outside the domain of the operation (e.g. z = 0, x = 0).
    #[error("domain error: {0}")]
    Domain(String),

    /// Cancellation consumed the working precision; retry with more digits.
    #[error("precision exhausted: cancellation of about {cancelled} digits at {digits} working digits")]
    PrecisionExhausted { cancelled: u32, digits: u32 },

    /// Configuration sits exactly on a Stokes line; not handled.
    #[error("Stokes line configuration: {0}")]
    StokesLine(String),

    /// Series failed to converge within the term cap.
    #[error("term cap of {0} terms exceeded")]
    TermCap(usize),

    /// Reference table data missing or malformed.
    #[error("table data: {0}")]
    TableData(String),
}

impl Error {
    /// True for errors of numerical origin (as opposed to usage errors).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Pole(_)
                | Error::Overflow(_)
                | Error::PrecisionExhausted { .. }
                | Error::StokesLine(_)
                | Error::TermCap(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
