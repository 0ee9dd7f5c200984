//! Numerical tolerances and floors used across the crate.
//!
//! Everything here is an absolute tolerance unless noted. The values are
//! deliberate: loosening them hides real defects, tightening them trips on
//! ordinary f64 rounding.

/// Maximum allowed |M[i][j] - conj(M[j][i])| before a matrix is rejected as
/// non-Hermitian.
pub const HERMITICITY: f64 = 1e-12;

/// Eigenvalues of a nominal-PSD matrix may undershoot zero by at most this
/// much; anything in [-PSD_FLOOR, 0) is clamped to 0, anything below errors.
pub const PSD_FLOOR: f64 = 1e-10;

/// `matrix_sqrt_psd(M)^2` must reproduce `M` entrywise within this.
pub const SQRT_RECONSTRUCTION: f64 = 1e-9;

/// Relative rank cutoff for PSD square roots. Eigenvalues below this times
/// the largest eigenvalue sit inside the noise the input matrix's own
/// rounding produces (a few units of machine epsilon); pushing them through
/// a square root would amplify noise of size e into errors of size sqrt(e),
/// so they are treated as exact zeros instead. Mirrors the rank tolerance
/// a pseudoinverse uses (dimension times machine epsilon).
pub const SQRT_RANK_CUTOFF: f64 = 1e-15;

/// `exp(x)` overflows f64 near x = 709.78; refuse scaled exponents above
/// this round limit.
pub const EXP_OVERFLOW_LIMIT: f64 = 700.0;

/// Two energy levels closer than this are reported as degenerate.
pub const DEGENERACY_GAP: f64 = 1e-9;

/// A ground-state eigenvector is flagged maximally entangled when its
/// one-qubit reduction is this close to the maximally mixed state.
pub const MAX_ENTANGLEMENT: f64 = 1e-10;

/// Off-pattern leakage allowed when extracting an X state from a 4x4 matrix.
pub const X_PATTERN_LEAKAGE: f64 = 1e-10;

/// Closed-form X-state eigenvalues divide by 2*sqrt(d) + t per block; below
/// this floor the block is treated as rank deficient and the caller is
/// directed to the W-matrix route.
pub const RANK_DEFICIENCY_FLOOR: f64 = 1e-9;

/// Closed thermal evaluation is supported down to this temperature
/// (beta up to 1e6); below it the Gibbs weights are pure ground state
/// anyway and callers should use the ground-state projector.
pub const TEMPERATURE_FLOOR: f64 = 1e-6;

/// Unit-norm checks (Bloch vectors, state vectors).
pub const UNIT_NORM: f64 = 1e-12;

/// Allowed trace deviation for density matrices.
pub const TRACE_DEVIATION: f64 = 1e-12;

/// Components smaller than this are treated as zero when fixing the global
/// phase of an eigenvector (first component above the cutoff is rotated to
/// the positive real axis).
pub const EIGENVECTOR_SIGN_CUTOFF: f64 = 1e-9;

/// The W matrix is real symmetric; imaginary residue beyond this indicates
/// a broken input.
pub const W_IMAGINARY_RESIDUE: f64 = 1e-10;

/// Brute-force refinement stops early once the best direction moves the
/// value by less than this.
pub const BRUTE_REFINE_TOLERANCE: f64 = 1e-7;
