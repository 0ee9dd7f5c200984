//! Local quantum uncertainty (LQU) of two-qubit states.
//!
//! The LQU of a bipartite state, with the optimization taken over spin-1/2
//! observables on the first qubit, is
//!
//! ```text
//! U(rho) = min over unit n of  I(rho, (n . sigma) ⊗ 1)
//!        = 1 - lambda_max(W),
//! ```
//!
//! where `I(rho, K) = -1/2 Tr([sqrt(rho), K]^2)` is the Wigner–Yanase skew
//! information and `W` is the 3x3 real symmetric matrix with entries
//! `W_lk = Tr{ sqrt(rho) (sigma_l ⊗ 1) sqrt(rho) (sigma_k ⊗ 1) }`.
//!
//! Three independent evaluation routes are provided and cross-validated by
//! the test suite:
//!
//! * [`lqu_closed`] — closed form for X states, using only populations and
//!   coherence moduli; falls back to the W-matrix route when a block of the
//!   state is too close to singular for the closed form's denominators.
//! * [`lqu_w`] — assemble `W` from a matrix square root and diagonalize it;
//!   works for every two-qubit state.
//! * [`lqu_bruteforce`] — direct minimization of the skew information over
//!   the Bloch sphere; slowest, and independent of both formulas above.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eigendecomposition, kron, matrix_sqrt_psd, paulis, ComplexMatrix,
};
use crate::models::ModelParams;
use crate::thermal::{
    hadamard_x_form, partition_x, partition_z, thermal_state_x_closed, thermal_state_z_closed,
    DensityMatrix4, Partition, Temperature, XState,
};
use crate::tol;

/// Coarse Bloch-sphere samples used by [`lqu_bruteforce`] callers that do not
/// want to tune the grid.
pub const DEFAULT_BRUTE_GRID: usize = 4096;

/// Pattern-search refinement iterations paired with [`DEFAULT_BRUTE_GRID`].
pub const DEFAULT_BRUTE_REFINE_ITERS: usize = 60;

/// Correlation-matrix components of an X state that the closed form consumes:
/// `r11`, `r22`, `r33` are the diagonal two-body correlations
/// `Tr(rho sigma_l ⊗ sigma_l)` and `r03`, `r30` the local z components
/// `Tr(rho 1 ⊗ sigma_z)`, `Tr(rho sigma_z ⊗ 1)`. Coherence phases never enter:
/// the components are those of the phase-normalized representative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FanoBloch {
    pub r11: f64,
    pub r22: f64,
    pub r33: f64,
    pub r03: f64,
    pub r30: f64,
}

/// Diagonal entries of `W` for an X state, with the block invariants they
/// were assembled from (`t` = block trace, `d` = block determinant; block 1
/// is the outer corner pair, block 2 the inner pair).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaTriple {
    pub omega1: f64,
    pub omega2: f64,
    pub omega3: f64,
    pub t1: f64,
    pub t2: f64,
    pub d1: f64,
    pub d2: f64,
}

/// Which of the two candidate W entries attains the maximum (`omega2` never
/// exceeds `omega1` for an X state, so it is never the winner).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Omega1,
    Omega3,
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Branch::Omega1 => "omega1",
            Branch::Omega3 => "omega3",
        })
    }
}

/// Which evaluation route produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Closed,
    WMatrix,
    BruteForce,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Closed => "closed",
            Method::WMatrix => "w-matrix",
            Method::BruteForce => "brute-force",
        })
    }
}

/// An LQU evaluation. The invariant `value = 1 - max(omega1, omega3)` holds
/// on every route. For the closed route the omegas carry the X-state block
/// labels; for the generic routes `omega1` is the largest and `omega3` the
/// smallest eigenvalue of `W`, and `branch` is then always `Omega1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LquResult {
    pub value: f64,
    pub omega1: f64,
    pub omega3: f64,
    pub branch: Branch,
    pub method: Method,
}

/// LQU of a thermal state together with the partition function it came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalLqu {
    pub lqu: LquResult,
    pub partition: Partition,
}

/// A spin observable `(n . sigma) ⊗ 1` on the first qubit, `n` a unit Bloch
/// vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalObservable {
    n: [f64; 3],
}

impl LocalObservable {
    /// Build from a Bloch vector, which must be unit length to within
    /// [`tol::UNIT_NORM`].
    pub fn new(n: [f64; 3]) -> Result<Self> {
        for c in n {
            if !c.is_finite() {
                return Err(Error::NonFiniteParameter {
                    name: "bloch component",
                    value: c,
                });
            }
        }
        let norm = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        if (norm - 1.0).abs() > tol::UNIT_NORM {
            return Err(Error::BlochNotUnit {
                norm,
                limit: tol::UNIT_NORM,
            });
        }
        Ok(LocalObservable { n })
    }

    /// Build from spherical angles; always unit length.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        LocalObservable {
            n: bloch_from_angles(theta, phi),
        }
    }

    pub fn direction(&self) -> [f64; 3] {
        self.n
    }

    /// The 4x4 matrix `(n . sigma) ⊗ 1`.
    pub fn matrix(&self) -> ComplexMatrix {
        local_observable_matrix(self.n)
    }
}

fn bloch_from_angles(theta: f64, phi: f64) -> [f64; 3] {
    [
        theta.sin() * phi.cos(),
        theta.sin() * phi.sin(),
        theta.cos(),
    ]
}

/// `(n . sigma) ⊗ 1` assembled entry by entry (no unit-norm requirement).
fn local_observable_matrix(n: [f64; 3]) -> ComplexMatrix {
    let up = Complex64::new(n[0], -n[1]);
    let dn = Complex64::new(n[0], n[1]);
    let z = Complex64::new(n[2], 0.0);
    let mut m = ComplexMatrix::zeros(4);
    m.set(0, 0, z);
    m.set(1, 1, z);
    m.set(2, 2, -z);
    m.set(3, 3, -z);
    m.set(0, 2, up);
    m.set(1, 3, up);
    m.set(2, 0, dn);
    m.set(3, 1, dn);
    m
}

/// Correlation components of an X state (phases stripped; see [`FanoBloch`]).
pub fn fano_bloch(x: &XState) -> FanoBloch {
    let a = x.r14().norm();
    let b = x.r23().norm();
    FanoBloch {
        r11: 2.0 * (b + a),
        r22: 2.0 * (b - a),
        r33: 1.0 - 2.0 * (x.p22() + x.p33()),
        r03: 1.0 - 2.0 * (x.p22() + x.p44()),
        r30: 1.0 - 2.0 * (x.p33() + x.p44()),
    }
}

/// The three diagonal entries of `W` for an X state, in closed form.
///
/// Both 2x2 blocks of the state enter through `D = 2 sqrt(det) + tr`; when
/// either block is singular to within [`tol::RANK_DEFICIENCY_FLOOR`] the
/// denominators lose all precision, and the function reports
/// [`Error::RankDeficientBlock`] so the caller can switch to the W-matrix
/// route ([`lqu_w`]), which has no such denominators.
pub fn omega_eigenvalues(x: &XState) -> Result<OmegaTriple> {
    let r = fano_bloch(x);
    let a = x.r14().norm();
    let b = x.r23().norm();

    let t1 = x.p11() + x.p44();
    let t2 = x.p22() + x.p33();
    // Determinants are nonnegative for a positive state; rounding may leave
    // a tiny negative residue, which the square root must not see.
    let d1 = (x.p11() * x.p44() - a * a).max(0.0);
    let d2 = (x.p22() * x.p33() - b * b).max(0.0);
    let cap1 = 2.0 * d1.sqrt() + t1;
    let cap2 = 2.0 * d2.sqrt() + t2;

    if cap1 < tol::RANK_DEFICIENCY_FLOOR {
        return Err(Error::RankDeficientBlock {
            block: "outer corner pair",
            denominator: cap1,
            floor: tol::RANK_DEFICIENCY_FLOOR,
        });
    }
    if cap2 < tol::RANK_DEFICIENCY_FLOOR {
        return Err(Error::RankDeficientBlock {
            block: "inner pair",
            denominator: cap2,
            floor: tol::RANK_DEFICIENCY_FLOOR,
        });
    }

    let s = (cap1 * cap2).sqrt();
    let sq = |v: f64| v * v;
    let omega1 = s + (sq(r.r03) + sq(r.r11) - sq(r.r22) - sq(r.r30)) / (4.0 * s);
    let omega2 = s + (sq(r.r03) - sq(r.r11) + sq(r.r22) - sq(r.r30)) / (4.0 * s);
    let omega3 = 0.5 * (2.0 * (d1.sqrt() + d2.sqrt()) + 1.0)
        + 0.125
            * ((sq(r.r03 + r.r30) - sq(r.r22 - r.r11)) / cap1
                + (sq(r.r03 - r.r30) - sq(r.r11 + r.r22)) / cap2);

    Ok(OmegaTriple {
        omega1,
        omega2,
        omega3,
        t1,
        t2,
        d1,
        d2,
    })
}

fn result_from_pair(omega1: f64, omega3: f64, method: Method) -> LquResult {
    let (max, branch) = if omega1 >= omega3 {
        (omega1, Branch::Omega1)
    } else {
        (omega3, Branch::Omega3)
    };
    LquResult {
        value: 1.0 - max,
        omega1,
        omega3,
        branch,
        method,
    }
}

/// LQU of an X state via the closed form.
///
/// When a block of the state is rank deficient (pure-state limits), the
/// closed form is ill-conditioned and this falls back to diagonalizing `W`
/// directly; the result then carries `Method::WMatrix` and the [`lqu_w`]
/// eigenvalue conventions. The fallback must use eigenvalues, not the W
/// diagonal: a complex coherence phase rotates `W` in the x-y plane, so its
/// diagonal entries mix the two candidate maxima.
pub fn lqu_closed(x: &XState) -> Result<LquResult> {
    match omega_eigenvalues(x) {
        Ok(o) => Ok(result_from_pair(o.omega1, o.omega3, Method::Closed)),
        Err(Error::RankDeficientBlock { .. }) => lqu_w(&x.to_density_matrix()),
        Err(e) => Err(e),
    }
}

/// Wigner–Yanase skew information `I(rho, K) = -1/2 Tr([sqrt(rho), K]^2)`
/// of a Hermitian observable `K` in the state `rho`.
pub fn skew_information(rho: &DensityMatrix4, observable: &ComplexMatrix) -> Result<f64> {
    if observable.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            actual: observable.dim(),
        });
    }
    observable.require_hermitian()?;
    let s = matrix_sqrt_psd(rho.matrix())?;
    let commutator = s.mul(observable).sub(&observable.mul(&s));
    // For Hermitian s and K the commutator C is anti-Hermitian, so
    // -Tr(C^2) = Tr(C C†) is real and nonnegative.
    Ok(-0.5 * commutator.mul(&commutator).trace().re)
}

/// Variance `Tr(rho K^2) - Tr(rho K)^2` of a Hermitian observable. Upper
/// bound of the skew information, with equality on pure states.
pub fn variance_observable(rho: &DensityMatrix4, observable: &ComplexMatrix) -> Result<f64> {
    if observable.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            actual: observable.dim(),
        });
    }
    observable.require_hermitian()?;
    let rk = rho.matrix().mul(observable);
    let first = rk.mul(observable).trace().re;
    let mean = rk.trace().re;
    Ok(first - mean * mean)
}

/// The 3x3 matrix `W_lk = Tr{ sqrt(rho) (sigma_l ⊗ 1) sqrt(rho) (sigma_k ⊗ 1) }`.
///
/// Real symmetric for any state; the imaginary residue of each trace is
/// checked against [`tol::W_IMAGINARY_RESIDUE`] and the matrix is
/// symmetrized before being returned.
pub fn w_matrix(rho: &DensityMatrix4) -> Result<[[f64; 3]; 3]> {
    let s = matrix_sqrt_psd(rho.matrix())?;
    let id = ComplexMatrix::identity(2);
    let products: Vec<ComplexMatrix> = paulis()
        .iter()
        .map(|p| s.mul(&kron(p, &id).expect("2x2 inputs")))
        .collect();

    let mut w = [[0.0; 3]; 3];
    for l in 0..3 {
        for k in l..3 {
            let mut tr = Complex64::new(0.0, 0.0);
            for i in 0..4 {
                for j in 0..4 {
                    tr += products[l].get(i, j) * products[k].get(j, i);
                }
            }
            if tr.im.abs() > tol::W_IMAGINARY_RESIDUE {
                return Err(Error::InvalidDensityMatrix {
                    reason: format!(
                        "uncertainty matrix entry ({l},{k}) has imaginary residue {:e}",
                        tr.im
                    ),
                });
            }
            w[l][k] = tr.re;
            w[k][l] = tr.re;
        }
    }
    Ok(w)
}

/// LQU of an arbitrary two-qubit state by diagonalizing `W`.
///
/// `omega1` and `omega3` in the result are the largest and smallest
/// eigenvalues of `W` (for X states these coincide with the closed-form
/// entries up to ordering), and `branch` is always `Omega1`.
pub fn lqu_w(rho: &DensityMatrix4) -> Result<LquResult> {
    let w = w_matrix(rho)?;
    let mut m = ComplexMatrix::zeros(3);
    for l in 0..3 {
        for k in 0..3 {
            m.set(l, k, Complex64::new(w[l][k], 0.0));
        }
    }
    let eig = hermitian_eigendecomposition(&m)?;
    let ev = eig.eigenvalues();
    Ok(result_from_pair(ev[2], ev[0], Method::WMatrix))
}

/// `1 - n^T W n` evaluated without forming `W`: the skew information of
/// `(n . sigma) ⊗ 1`, using a precomputed `sqrt(rho)`.
fn skew_from_sqrt(s: &ComplexMatrix, n: [f64; 3]) -> f64 {
    let k = local_observable_matrix(n);
    let m = s.mul(&k);
    let mut tr = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            let a = m.get(i, j);
            let b = m.get(j, i);
            tr += a.re * b.re - a.im * b.im;
        }
    }
    1.0 - tr
}

/// Pattern search on the sphere from a starting point, minimizing `eval`.
fn compass_refine(
    eval: impl Fn([f64; 3]) -> f64,
    start: [f64; 3],
    step0: f64,
    iters: usize,
) -> f64 {
    let mut theta = start[2].clamp(-1.0, 1.0).acos();
    let mut phi = start[1].atan2(start[0]);
    let mut best = eval(bloch_from_angles(theta, phi));
    let mut step = step0;
    for _ in 0..iters {
        let candidates = [
            (theta + step, phi),
            (theta - step, phi),
            (theta, phi + step),
            (theta, phi - step),
        ];
        let mut improved = false;
        for (t, p) in candidates {
            let v = eval(bloch_from_angles(t, p));
            if v < best {
                best = v;
                theta = t;
                phi = p;
                improved = true;
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    best
}

/// LQU by direct minimization of the skew information over the Bloch sphere,
/// with no recourse to the closed form or to `W`'s eigenvalues.
///
/// A Fibonacci lattice of `coarse_points` seeds a compass pattern search of
/// `refine_iters` iterations run from the best coarse sample; the same sweep
/// also maximizes the skew information, which pins down the smallest W
/// eigenvalue, reported as `omega3`. Accuracy with the defaults is much
/// tighter than [`tol::BRUTE_REFINE_TOLERANCE`]; the objective is a quadratic
/// form on the sphere, so the only stationary points are eigenvectors and the
/// best lattice cell always contains the true optimum's basin.
pub fn lqu_bruteforce(
    rho: &DensityMatrix4,
    coarse_points: usize,
    refine_iters: usize,
) -> Result<LquResult> {
    if coarse_points < 2 {
        return Err(Error::InvalidDensityMatrix {
            reason: format!("brute-force grid needs at least 2 points, got {coarse_points}"),
        });
    }
    let s = matrix_sqrt_psd(rho.matrix())?;

    let golden_angle = std::f64::consts::PI * (3.0 - 5.0_f64.sqrt());
    let mut min_val = f64::INFINITY;
    let mut max_val = f64::NEG_INFINITY;
    let mut min_n = [0.0, 0.0, 1.0];
    let mut max_n = [0.0, 0.0, 1.0];
    for i in 0..coarse_points {
        let z = 1.0 - (2.0 * i as f64 + 1.0) / coarse_points as f64;
        let r = (1.0 - z * z).max(0.0).sqrt();
        let phi = golden_angle * i as f64;
        let n = [r * phi.cos(), r * phi.sin(), z];
        let v = skew_from_sqrt(&s, n);
        if v < min_val {
            min_val = v;
            min_n = n;
        }
        if v > max_val {
            max_val = v;
            max_n = n;
        }
    }

    let step0 = std::f64::consts::PI / (coarse_points as f64).sqrt();
    let value = compass_refine(|n| skew_from_sqrt(&s, n), min_n, step0, refine_iters);
    let ceiling = -compass_refine(|n| -skew_from_sqrt(&s, n), max_n, step0, refine_iters);

    Ok(LquResult {
        value,
        omega1: 1.0 - value,
        omega3: 1.0 - ceiling,
        branch: Branch::Omega1,
        method: Method::BruteForce,
    })
}

/// LQU and partition function of the thermal state of either model at a
/// given temperature, through the closed-form pipeline.
///
/// The x-axis model's thermal state is not an X state in the computational
/// basis; it is first rotated by Hadamard ⊗ Hadamard, which changes neither
/// the LQU (the rotation is a local unitary) nor the partition function.
pub fn thermal_lqu(params: &ModelParams, temp: Temperature) -> Result<ThermalLqu> {
    let (x, partition) = match params {
        ModelParams::Z(p) => (thermal_state_z_closed(p, temp), partition_z(p, temp)),
        ModelParams::X(p) => {
            let rho = thermal_state_x_closed(p, temp);
            (hadamard_x_form(&rho)?, partition_x(p, temp))
        }
    };
    Ok(ThermalLqu {
        lqu: lqu_closed(&x)?,
        partition,
    })
}
