use thiserror::Error;

/// Errors raised by state validation and the numeric operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite entry (NaN or infinity) in input")]
    NonFinite,

    #[error("matrix is not Hermitian: max |m - m†| = {deviation:.3e} exceeds {tolerance:.0e}")]
    NonHermitian { deviation: f64, tolerance: f64 },

    #[error("trace is not 1: |tr - 1| = {deviation:.3e} exceeds {tolerance:.0e}")]
    NonUnitTrace { deviation: f64, tolerance: f64 },

    #[error("matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:.3e}")]
    NotPositiveSemidefinite { min_eigenvalue: f64 },

    #[error("ket is not normalized: ||<ψ|ψ>| - 1| = {deviation:.3e} exceeds {tolerance:.0e}")]
    NotNormalized { deviation: f64, tolerance: f64 },

    #[error("basis kets are not orthogonal: |<k1|k2>| = {deviation:.3e} exceeds {tolerance:.0e}")]
    NotOrthogonal { deviation: f64, tolerance: f64 },

    #[error("{name} = {value} outside domain {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("numerical domain violation: {what} = {value:.3e} is below the round-off window")]
    NumericalDomain { what: &'static str, value: f64 },

    #[error(
        "ensemble weight {weight:.3e} below cutoff {cutoff:.0e}: state is a basis projector, \
             discrimination and coherence are both trivially zero"
    )]
    DegenerateWeight { weight: f64, cutoff: f64 },

    #[error("ensemble weights must be nonnegative and sum to 1: |sum - 1| = {deviation:.3e}")]
    BadWeights { deviation: f64 },

    #[error("incompatibility vector must be descending within [1/2, 1], got ({0}, {1}, {2})")]
    NotDescendingIncompatibility(f64, f64, f64),
}

pub type Result<T> = std::result::Result<T, Error>;
