//! Local quantum uncertainty (LQU) of two-qubit Heisenberg XY thermal states
//! with a Dzyaloshinskii-Moriya (DM) coupling along either the z or the x
//! axis.
//!
//! The crate is organized bottom-up:
//!
//! * [`linalg`] — dense 2x2/4x4 complex matrices, Hermitian
//!   eigendecomposition, PSD square roots, Kronecker products.
//! * [`models`] — the two spin Hamiltonians, their closed-form spectra, and
//!   ground-state selection.
//! * [`thermal`] — Gibbs states, partition functions, the closed-form thermal
//!   density matrices, and the Hadamard reduction that brings the x-axis
//!   model into X form.
//! * [`lqu`] — Fano-Bloch coefficients, the closed-form LQU of X states, and
//!   the independent W-matrix and brute-force minimization routes used to
//!   cross-check it.
//!
//! All public entry points are pure functions over plain-old-data inputs, so
//! callers are free to evaluate parameter grids concurrently.

#![forbid(unsafe_code)]

pub mod error;
pub mod linalg;
pub mod lqu;
pub mod models;
pub mod thermal;
pub mod tol;

pub use num_complex::Complex64;

pub use error::{Error, Result};
pub use linalg::{
    hermitian_eigendecomposition, kron, matrix_exp_scaled, matrix_sqrt_psd, ComplexMatrix,
    EigenDecomposition,
};
pub use lqu::{
    fano_bloch, lqu_bruteforce, lqu_closed, lqu_w, omega_eigenvalues, skew_information,
    thermal_lqu, variance_observable, w_matrix, Branch, FanoBloch, LocalObservable, LquResult,
    Method, OmegaTriple, ThermalLqu,
};
pub use models::{
    ground_state, hamiltonian_x, hamiltonian_z, spectrum_x, spectrum_z, GroundStateReport, Level,
    LevelLabel, ModelParams, Spectrum, XModelParams, ZModelParams,
};
pub use thermal::{
    gibbs_state_numeric, hadamard_x_form, partition_x, partition_z, phase_normalize_x,
    thermal_state_x_closed, thermal_state_z_closed, DensityMatrix4, Partition, Temperature,
    XState,
};
