//! Dense complex linear algebra for the small matrices this crate needs
//! (2x2 and 4x4): Hermitian eigendecomposition, PSD square roots, scaled
//! matrix exponentials, Kronecker products, and the Pauli/Hadamard gates.
//!
//! The eigensolver is a cyclic Jacobi iteration working directly in complex
//! arithmetic. For matrices this small it converges in a handful of sweeps
//! and is accurate to machine precision, which matters more here than speed.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Zero matrix of the given dimension.
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix {
            dim,
            entries: vec![ZERO; dim * dim],
        }
    }

    /// Identity matrix of the given dimension.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, ONE);
        }
        m
    }

    /// Build from nested row arrays.
    pub fn from_rows<const N: usize>(rows: [[Complex64; N]; N]) -> Self {
        let mut m = Self::zeros(N);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Build from nested real row arrays.
    pub fn from_real_rows<const N: usize>(rows: [[f64; N]; N]) -> Self {
        let mut m = Self::zeros(N);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, Complex64::new(v, 0.0));
            }
        }
        m
    }

    /// Diagonal matrix from real values.
    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &v) in diag.iter().enumerate() {
            m.set(i, i, Complex64::new(v, 0.0));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.entries[i * self.dim + j] = v;
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(i, j, self.get(j, i).conj());
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Matrix product `self * rhs`. Panics on dimension mismatch; all call
    /// sites in this crate multiply same-sized squares.
    pub fn mul(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix product dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(rhs.entries.iter()) {
            *a += *b;
        }
        out
    }

    pub fn sub(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(rhs.entries.iter()) {
            *a -= *b;
        }
        out
    }

    pub fn scale(&self, s: f64) -> ComplexMatrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a *= s;
        }
        out
    }

    pub fn scale_complex(&self, s: Complex64) -> ComplexMatrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a *= s;
        }
        out
    }

    /// Largest entrywise |self - rhs|.
    pub fn max_abs_diff(&self, rhs: &ComplexMatrix) -> f64 {
        assert_eq!(self.dim, rhs.dim);
        self.entries
            .iter()
            .zip(rhs.entries.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    /// Worst Hermitian-symmetry violation and the entry pair it occurs at.
    pub fn hermiticity_violation(&self) -> (f64, (usize, usize)) {
        let mut worst = 0.0;
        let mut at = (0, 0);
        for i in 0..self.dim {
            for j in i..self.dim {
                let dev = (self.get(i, j) - self.get(j, i).conj()).norm();
                if dev > worst {
                    worst = dev;
                    at = (i, j);
                }
            }
        }
        (worst, at)
    }

    /// Error unless the matrix is Hermitian within [`tol::HERMITICITY`].
    pub fn require_hermitian(&self) -> Result<()> {
        let (dev, (i, j)) = self.hermiticity_violation();
        if dev > tol::HERMITICITY {
            return Err(Error::NotHermitian {
                row: i,
                col: j,
                deviation: dev,
                limit: tol::HERMITICITY,
            });
        }
        Ok(())
    }

    /// `(M + M^dagger) / 2` — kills sub-tolerance asymmetry before iterating.
    pub fn hermitian_part(&self) -> ComplexMatrix {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = (self.get(i, j) + self.get(j, i).conj()) * 0.5;
                out.set(i, j, v);
            }
        }
        out
    }
}

/// Pauli x.
pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_rows([[ZERO, ONE], [ONE, ZERO]])
}

/// Pauli y.
pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::from_rows([
        [ZERO, Complex64::new(0.0, -1.0)],
        [Complex64::new(0.0, 1.0), ZERO],
    ])
}

/// Pauli z.
pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_rows([[ONE, ZERO], [ZERO, -ONE]])
}

/// The three Pauli matrices in x, y, z order.
pub fn paulis() -> [ComplexMatrix; 3] {
    [pauli_x(), pauli_y(), pauli_z()]
}

/// Single-qubit Hadamard gate.
pub fn hadamard() -> ComplexMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    ComplexMatrix::from_real_rows([[h, h], [h, -h]])
}

/// Kronecker product of two 2x2 matrices (qubit A ⊗ qubit B ordering).
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    for m in [a, b] {
        if m.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                actual: m.dim(),
            });
        }
    }
    let mut out = ComplexMatrix::zeros(4);
    for i in 0..2 {
        for j in 0..2 {
            let aij = a.get(i, j);
            for k in 0..2 {
                for l in 0..2 {
                    out.set(2 * i + k, 2 * j + l, aij * b.get(k, l));
                }
            }
        }
    }
    Ok(out)
}

/// Result of a Hermitian eigendecomposition: ascending real eigenvalues and
/// the matching orthonormal eigenvectors (stored as columns).
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    eigenvalues: Vec<f64>,
    vectors: ComplexMatrix,
}

impl EigenDecomposition {
    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Eigenvector for the k-th (ascending) eigenvalue.
    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        (0..self.vectors.dim()).map(|i| self.vectors.get(i, k)).collect()
    }

    /// The unitary whose columns are the eigenvectors.
    pub fn vectors(&self) -> &ComplexMatrix {
        &self.vectors
    }

    /// `V diag(f(lambda)) V^dagger`.
    pub fn assemble(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.vectors.dim();
        let mut out = ComplexMatrix::zeros(n);
        for k in 0..n {
            let w = f(self.eigenvalues[k]);
            if w == 0.0 {
                continue;
            }
            for i in 0..n {
                let vik = self.vectors.get(i, k);
                for j in 0..n {
                    let v = out.get(i, j) + vik * self.vectors.get(j, k).conj() * w;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Reconstruct the original matrix.
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.assemble(|x| x)
    }
}

const MAX_JACOBI_SWEEPS: usize = 60;

/// Eigendecomposition of a Hermitian matrix via cyclic Jacobi rotations.
///
/// Validates hermiticity (within [`tol::HERMITICITY`], naming the offending
/// entry pair on failure), then iterates plane rotations until the
/// off-diagonal mass is at machine-epsilon level. Output is deterministic:
/// eigenvalues ascend, and each eigenvector's first component above
/// [`tol::EIGENVECTOR_SIGN_CUTOFF`] is rotated onto the positive real axis.
pub fn hermitian_eigendecomposition(m: &ComplexMatrix) -> Result<EigenDecomposition> {
    m.require_hermitian()?;
    let n = m.dim();
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);

    // Converge the off-diagonal mass all the way to roundoff: eigenvalues
    // near zero are later fed through square roots, which amplify any
    // leftover off-diagonal residue r to sqrt(r).
    let scale = a.max_abs();
    let threshold = scale * f64::EPSILON;

    for _sweep in 0..MAX_JACOBI_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a.get(p, q).norm());
            }
        }
        if off <= threshold {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q, threshold);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let values: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    order.sort_by(|&i, &j| values[i].partial_cmp(&values[j]).unwrap().then(i.cmp(&j)));

    let mut eigenvalues = Vec::with_capacity(n);
    let mut vectors = ComplexMatrix::zeros(n);
    for (col, &k) in order.iter().enumerate() {
        eigenvalues.push(values[k]);
        // Global phase: first non-negligible component becomes real positive.
        let mut phase = ONE;
        for i in 0..n {
            let c = v.get(i, k);
            if c.norm() > tol::EIGENVECTOR_SIGN_CUTOFF {
                phase = c.conj() / c.norm();
                break;
            }
        }
        for i in 0..n {
            vectors.set(i, col, v.get(i, k) * phase);
        }
    }

    Ok(EigenDecomposition {
        eigenvalues,
        vectors,
    })
}

/// One Jacobi rotation zeroing a[p][q] (p < q), accumulating into `v`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize, threshold: f64) {
    let apq = a.get(p, q);
    let h = apq.norm();
    if h <= threshold.max(f64::MIN_POSITIVE) {
        // Below noise: zero it outright and move on.
        a.set(p, q, ZERO);
        a.set(q, p, ZERO);
        return;
    }
    let u = apq / h; // unit phase of the pivot entry
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;
    let tau = (aqq - app) / (2.0 * h);
    // Smaller root of t^2 - 2 tau t - 1 = 0 keeps the rotation angle <= pi/4.
    let t = if tau.abs() > 1e150 {
        -1.0 / (2.0 * tau)
    } else {
        -tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let su = u * s;
    let su_conj = u.conj() * s;

    let n = a.dim();
    // A <- A * V, where V differs from identity in the (p,q) plane.
    for k in 0..n {
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, akp * c + akq * su_conj);
        a.set(k, q, akq * (u.conj() * c) - akp * s);
    }
    // A <- V^dagger * A.
    for k in 0..n {
        let apk = a.get(p, k);
        let aqk = a.get(q, k);
        a.set(p, k, apk * c + aqk * su);
        a.set(q, k, aqk * (u * c) - apk * s);
    }
    // The rotation annihilates the pivot analytically; pin it to zero and
    // keep the diagonal exactly real.
    a.set(p, q, ZERO);
    a.set(q, p, ZERO);
    let dp = a.get(p, p);
    let dq = a.get(q, q);
    a.set(p, p, Complex64::new(dp.re, 0.0));
    a.set(q, q, Complex64::new(dq.re, 0.0));

    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, vkp * c + vkq * su_conj);
        v.set(k, q, vkq * (u.conj() * c) - vkp * s);
    }
}

/// Square root of a positive semidefinite Hermitian matrix.
///
/// Eigenvalues in [-PSD_FLOOR, 0) are clamped to zero; anything lower is an
/// error. Eigenvalues below [`tol::SQRT_RANK_CUTOFF`] times the largest are
/// also mapped to zero: they are indistinguishable from rank deficiency at
/// working precision, and `sqrt` would amplify that noise from e to sqrt(e).
/// The result is Hermitian PSD with `S*S ~ M` within
/// [`tol::SQRT_RECONSTRUCTION`].
pub fn matrix_sqrt_psd(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let eig = hermitian_eigendecomposition(m)?;
    if let Some(&lo) = eig
        .eigenvalues()
        .iter()
        .find(|&&l| l < -tol::PSD_FLOOR)
    {
        return Err(Error::NotPositiveSemidefinite {
            eigenvalue: lo,
            floor: tol::PSD_FLOOR,
        });
    }
    let top = eig.eigenvalues().last().copied().unwrap_or(0.0);
    let cut = top.max(0.0) * tol::SQRT_RANK_CUTOFF;
    Ok(eig
        .assemble(|l| if l <= cut { 0.0 } else { l.sqrt() })
        .hermitian_part())
}

/// `exp(s * M)` for Hermitian `M` via eigendecomposition.
///
/// Errors with [`Error::ExponentOverflow`] when any `s * lambda` exceeds
/// [`tol::EXP_OVERFLOW_LIMIT`]; thermal callers should use the
/// exponent-shifted Gibbs path instead of pushing through this routine.
pub fn matrix_exp_scaled(m: &ComplexMatrix, s: f64) -> Result<ComplexMatrix> {
    let eig = hermitian_eigendecomposition(m)?;
    let worst = eig
        .eigenvalues()
        .iter()
        .map(|&l| s * l)
        .fold(f64::NEG_INFINITY, f64::max);
    if worst > tol::EXP_OVERFLOW_LIMIT {
        return Err(Error::ExponentOverflow {
            exponent: worst,
            limit: tol::EXP_OVERFLOW_LIMIT,
        });
    }
    Ok(eig.assemble(|l| (s * l).exp()).hermitian_part())
}
