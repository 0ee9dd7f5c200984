//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
#[non_exhaustive]
pub enum Error {
    /// A matrix handed to a Hermitian-only routine is not Hermitian.
    #[error("entry ({row},{col}) breaks Hermitian symmetry by {deviation:.3e} (limit {limit:.1e})")]
    NotHermitian {
        row: usize,
        col: usize,
        deviation: f64,
        limit: f64,
    },

    /// A matrix required to be positive semidefinite has a genuinely
    /// negative eigenvalue (below the clamp floor).
    #[error("not positive semidefinite: eigenvalue {eigenvalue:.6e} is below -{floor:.1e}")]
    NotPositiveSemidefinite { eigenvalue: f64, floor: f64 },

    /// A matrix has the wrong size for the requested operation.
    #[error("expected a {expected}x{expected} matrix, got {actual}x{actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// `exp(s*M)` would overflow. Thermal callers should use the
    /// exponent-shifted Gibbs path in `thermal`, which subtracts the extreme
    /// eigenvalue before exponentiating.
    #[error(
        "scaled eigenvalue exponent {exponent:.3e} exceeds {limit}; exponentiation would \
         overflow — shift against the extreme eigenvalue first (see thermal::gibbs_state_numeric)"
    )]
    ExponentOverflow { exponent: f64, limit: f64 },

    /// Exchange coupling must be nonzero.
    #[error("coupling j must be nonzero")]
    ZeroCoupling,

    /// A model parameter is NaN or infinite.
    #[error("parameter `{name}` must be finite, got {value}")]
    NonFiniteParameter { name: &'static str, value: f64 },

    /// Anisotropy outside the model's stated domain.
    #[error(
        "anisotropy delta = {value} lies outside [0, 1]; use the `*_with_delta_override` \
         constructor to explore outside the stated domain"
    )]
    AnisotropyOutOfRange { value: f64 },

    /// Temperature below the closed-form stability floor.
    #[error("temperature {t:.3e} is below the stability floor {floor:.1e}")]
    TemperatureTooLow { t: f64, floor: f64 },

    /// A matrix expected to reduce to X form has off-pattern weight.
    #[error(
        "state is not X-form after the Hadamard reduction: off-pattern entry ({row},{col}) \
         has magnitude {leak:.3e} (limit {limit:.1e})"
    )]
    NotXForm {
        row: usize,
        col: usize,
        leak: f64,
        limit: f64,
    },

    /// One 2x2 block of an X state has (numerically) vanished, so the
    /// closed-form eigenvalue denominators are unusable.
    #[error(
        "{block} block of the X state is rank deficient (2*sqrt(d) + t = {denominator:.3e} \
         below {floor:.1e}); evaluate through the W-matrix route instead"
    )]
    RankDeficientBlock {
        block: &'static str,
        denominator: f64,
        floor: f64,
    },

    /// An X state violating positivity/normalization was supplied.
    #[error("invalid X state: {reason}")]
    InvalidXState { reason: String },

    /// A density matrix violating its invariants was supplied.
    #[error("invalid density matrix: {reason}")]
    InvalidDensityMatrix { reason: String },

    /// Local observables are parameterized by unit Bloch vectors.
    #[error("Bloch vector has norm {norm}, expected 1 within {limit:.1e}")]
    BlochNotUnit { norm: f64, limit: f64 },
}
