use thiserror::Error;

/// Errors raised by the space, series and quadrature routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter set violates its invariants (e.g. `alpha <= -1`, `nu <= 0`).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An argument lies outside the domain of the operation (e.g. `|z| >= R`).
    #[error("domain error: {0}")]
    Domain(String),

    /// A `(p+1, p)` hypergeometric series was requested at `|x| >= 1`.
    #[error("series diverges: |x| = {modulus} >= 1")]
    Divergent { modulus: f64 },

    /// The series engine hit its term limit before the stopping rule fired.
    #[error("series not converged after {terms} terms (last term {last_term:e}, partial sum {partial_sum:e})")]
    NotConverged {
        terms: usize,
        last_term: f64,
        partial_sum: f64,
    },

    /// A linear-scale result exceeds the double-precision exponent range.
    #[error("overflow: natural log of magnitude is {ln_magnitude}")]
    Overflow { ln_magnitude: f64 },
}

impl Error {
    /// Numerical failures as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NotConverged { .. } | Error::Overflow { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
