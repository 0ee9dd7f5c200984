//! Thermal (Gibbs) states of the two models, in closed form and numerically.
//!
//! Every thermal quantity here is evaluated with exponent shifting: Boltzmann
//! weights are computed relative to the lowest energy, so `beta` up to 1e6
//! never overflows and the populations stay exact ratios. The partition
//! function is always reported together with its logarithm; past f64
//! overflow the value saturates to `+inf` while the log stays finite.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hadamard, hermitian_eigendecomposition, kron, ComplexMatrix};
use crate::models::{XModelParams, ZModelParams};
use crate::tol;

/// Absolute temperature, validated against the closed-form stability floor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Temperature(f64);

impl Temperature {
    pub fn new(t: f64) -> Result<Self> {
        if !t.is_finite() {
            return Err(Error::NonFiniteParameter {
                name: "temperature",
                value: t,
            });
        }
        if t < tol::TEMPERATURE_FLOOR {
            return Err(Error::TemperatureTooLow {
                t,
                floor: tol::TEMPERATURE_FLOOR,
            });
        }
        Ok(Temperature(t))
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    pub fn beta(&self) -> f64 {
        1.0 / self.0
    }
}

/// Partition function with its logarithm. `value` may be `+inf` when the
/// true value exceeds f64 range; `log` is always finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Partition {
    pub value: f64,
    pub log: f64,
}

/// Boltzmann weights relative to the lowest energy: `w[i] = exp(-beta *
/// (e[i] - min))`, their sum, and the partition function they imply.
fn shifted_weights(energies: [f64; 4], beta: f64) -> ([f64; 4], f64, Partition) {
    let min = energies.iter().copied().fold(f64::INFINITY, f64::min);
    let w = energies.map(|e| (-beta * (e - min)).exp());
    let sum: f64 = w.iter().sum();
    let log = -beta * min + sum.ln();
    let partition = Partition {
        value: log.exp(),
        log,
    };
    (w, sum, partition)
}

/// A two-qubit X state: populations on the diagonal, coherences on the
/// anti-diagonal corners (1,4) and inner pair (2,3), everything else zero.
///
/// Invariants are enforced at construction: populations nonnegative and
/// summing to one, coherences bounded by the geometric means of their
/// populations (all within crate tolerances), so downstream consumers can
/// rely on positivity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState {
    p11: f64,
    p22: f64,
    p33: f64,
    p44: f64,
    r14: Complex64,
    r23: Complex64,
}

impl XState {
    pub fn new(
        p11: f64,
        p22: f64,
        p33: f64,
        p44: f64,
        r14: Complex64,
        r23: Complex64,
    ) -> Result<Self> {
        let ps = [p11, p22, p33, p44];
        for (k, &p) in ps.iter().enumerate() {
            if !p.is_finite() || p < -tol::TRACE_DEVIATION {
                return Err(Error::InvalidXState {
                    reason: format!("population {} is {p:e}", k + 1),
                });
            }
        }
        let sum: f64 = ps.iter().sum();
        if (sum - 1.0).abs() > tol::TRACE_DEVIATION {
            return Err(Error::InvalidXState {
                reason: format!("populations sum to {sum} instead of 1"),
            });
        }
        if r14.norm() > (p11.max(0.0) * p44.max(0.0)).sqrt() + tol::TRACE_DEVIATION {
            return Err(Error::InvalidXState {
                reason: format!(
                    "|r14| = {} exceeds sqrt(p11 p44) = {}",
                    r14.norm(),
                    (p11 * p44).sqrt()
                ),
            });
        }
        if r23.norm() > (p22.max(0.0) * p33.max(0.0)).sqrt() + tol::TRACE_DEVIATION {
            return Err(Error::InvalidXState {
                reason: format!(
                    "|r23| = {} exceeds sqrt(p22 p33) = {}",
                    r23.norm(),
                    (p22 * p33).sqrt()
                ),
            });
        }
        // Sub-tolerance negative populations are rounding; clamp them.
        Ok(XState {
            p11: p11.max(0.0),
            p22: p22.max(0.0),
            p33: p33.max(0.0),
            p44: p44.max(0.0),
            r14,
            r23,
        })
    }

    pub fn p11(&self) -> f64 {
        self.p11
    }
    pub fn p22(&self) -> f64 {
        self.p22
    }
    pub fn p33(&self) -> f64 {
        self.p33
    }
    pub fn p44(&self) -> f64 {
        self.p44
    }
    pub fn r14(&self) -> Complex64 {
        self.r14
    }
    pub fn r23(&self) -> Complex64 {
        self.r23
    }

    /// Expand into the full 4x4 density matrix.
    pub fn to_density_matrix(&self) -> DensityMatrix4 {
        let mut m = ComplexMatrix::zeros(4);
        m.set(0, 0, Complex64::new(self.p11, 0.0));
        m.set(1, 1, Complex64::new(self.p22, 0.0));
        m.set(2, 2, Complex64::new(self.p33, 0.0));
        m.set(3, 3, Complex64::new(self.p44, 0.0));
        m.set(0, 3, self.r14);
        m.set(3, 0, self.r14.conj());
        m.set(1, 2, self.r23);
        m.set(2, 1, self.r23.conj());
        DensityMatrix4::new(m).expect("a validated X state is a valid density matrix")
    }
}

/// Replace both coherences by their moduli. The local-unitary freedom of an
/// X state allows this, and every closed-form quantity downstream consumes
/// moduli only, so this is the canonical representative.
pub fn phase_normalize_x(x: &XState) -> XState {
    XState {
        r14: Complex64::new(x.r14.norm(), 0.0),
        r23: Complex64::new(x.r23.norm(), 0.0),
        ..*x
    }
}

/// General two-qubit density matrix: Hermitian, unit trace, PSD (eigenvalues
/// above `-tol::PSD_FLOOR`), enforced at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix4 {
    m: ComplexMatrix,
}

impl DensityMatrix4 {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        if m.dim() != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                actual: m.dim(),
            });
        }
        m.require_hermitian()?;
        let trace = m.trace();
        if (trace.re - 1.0).abs() > tol::TRACE_DEVIATION || trace.im.abs() > tol::TRACE_DEVIATION {
            return Err(Error::InvalidDensityMatrix {
                reason: format!("trace is {trace} instead of 1"),
            });
        }
        let eig = hermitian_eigendecomposition(&m)?;
        let lowest = eig.eigenvalues()[0];
        if lowest < -tol::PSD_FLOOR {
            return Err(Error::InvalidDensityMatrix {
                reason: format!("eigenvalue {lowest:e} below -{:e}", tol::PSD_FLOOR),
            });
        }
        Ok(DensityMatrix4 { m })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.m.get(i, j)
    }
}

/// Gibbs state `exp(-beta H) / Z` of an arbitrary Hermitian 4x4 Hamiltonian,
/// assembled from the eigendecomposition with shifted weights. Never
/// overflows for any temperature above the floor.
pub fn gibbs_state_numeric(h: &ComplexMatrix, temp: Temperature) -> Result<DensityMatrix4> {
    if h.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            actual: h.dim(),
        });
    }
    let eig = hermitian_eigendecomposition(h)?;
    let energies: [f64; 4] = [
        eig.eigenvalues()[0],
        eig.eigenvalues()[1],
        eig.eigenvalues()[2],
        eig.eigenvalues()[3],
    ];
    let (_, sum, _) = shifted_weights(energies, temp.beta());
    let beta = temp.beta();
    let ground = energies[0];
    let rho = eig
        .assemble(|e| (-beta * (e - ground)).exp() / sum)
        .hermitian_part();
    DensityMatrix4::new(rho)
}

fn z_energies(p: &ZModelParams) -> [f64; 4] {
    let e = p.j() * (p.delta() - 1.0);
    let o = p.omega();
    [e, -e, o, -o]
}

fn x_energies(p: &XModelParams) -> [f64; 4] {
    let o = p.omega1();
    [
        p.j() * (1.0 + p.delta()),
        p.j() * (1.0 - p.delta()),
        -p.j() + o,
        -p.j() - o,
    ]
}

/// Partition function of the z-axis model,
/// `Z = 2 cosh(beta J (delta-1)) + 2 cosh(beta omega)`.
pub fn partition_z(p: &ZModelParams, temp: Temperature) -> Partition {
    shifted_weights(z_energies(p), temp.beta()).2
}

/// Partition function of the x-axis model,
/// `Z' = 2 exp(-beta J) cosh(beta delta J) + 2 exp(beta J) cosh(beta omega1)`.
pub fn partition_x(p: &XModelParams, temp: Temperature) -> Partition {
    shifted_weights(x_energies(p), temp.beta()).2
}

/// Closed-form thermal state of the z-axis model. Always an X state:
/// corner populations `cosh(beta J (delta-1)) / Z` with real coherence
/// `sinh(beta J (delta-1)) / Z`, inner populations `cosh(beta omega) / Z`
/// with coherence `-exp(i theta) sinh(beta omega) / Z`.
pub fn thermal_state_z_closed(p: &ZModelParams, temp: Temperature) -> XState {
    let (w, sum, _) = shifted_weights(z_energies(p), temp.beta());
    let corner_pop = (w[0] + w[1]) / (2.0 * sum);
    let inner_pop = (w[2] + w[3]) / (2.0 * sum);
    let r14 = Complex64::new((w[1] - w[0]) / (2.0 * sum), 0.0);
    let r23 = Complex64::from_polar(1.0, p.theta()) * ((w[2] - w[3]) / (2.0 * sum));
    XState::new(corner_pop, inner_pop, inner_pop, corner_pop, r14, r23)
        .expect("thermal weights always form a valid X state")
}

/// Closed-form thermal state of the x-axis model (centrosymmetric, not X).
///
/// Populations and coherences are assembled from the shifted Boltzmann
/// weights of the four levels; the `delta J / omega1` and `dx / omega1`
/// ratios are well defined (set to zero) when omega1 vanishes, because the
/// accompanying `sinh` factor vanishes with it.
pub fn thermal_state_x_closed(p: &XModelParams, temp: Temperature) -> DensityMatrix4 {
    let (w, sum, _) = shifted_weights(x_energies(p), temp.beta());
    let omega1 = p.omega1();
    let (ratio_dj, ratio_dx) = if omega1 > 0.0 {
        (p.delta() * p.j() / omega1, p.dx() / omega1)
    } else {
        (0.0, 0.0)
    };
    // exp(beta J) cosh/sinh(beta omega1) relative to the weight shift.
    let ch = (w[2] + w[3]) / 2.0;
    let sh = (w[3] - w[2]) / 2.0;

    let a = (ch - ratio_dj * sh + w[1]) / (2.0 * sum);
    let b = (w[1] - (ch - ratio_dj * sh)) / (2.0 * sum);
    let cc = (ch + ratio_dj * sh + w[0]) / (2.0 * sum);
    let d = (w[0] - (ch + ratio_dj * sh)) / (2.0 * sum);
    let mu = Complex64::new(0.0, -ratio_dx * sh / sum);
    let nu = -mu;

    let ac = Complex64::new(a, 0.0);
    let bc = Complex64::new(b, 0.0);
    let ccx = Complex64::new(cc, 0.0);
    let dc = Complex64::new(d, 0.0);

    let mut m = ComplexMatrix::zeros(4);
    let rows = [
        [ac, mu, nu, bc],
        [nu, ccx, dc, mu],
        [mu, dc, ccx, nu],
        [bc, nu, mu, ac],
    ];
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            m.set(i, j, v);
        }
    }
    DensityMatrix4::new(m).expect("closed-form x thermal state is a valid density matrix")
}

/// Conjugate by Hadamard ⊗ Hadamard and extract the resulting X state.
///
/// The x-axis thermal state is centrosymmetric and lands exactly on the X
/// pattern; any other input is accepted as long as its off-pattern leakage
/// stays below [`tol::X_PATTERN_LEAKAGE`], otherwise the worst entry is
/// reported in the error.
pub fn hadamard_x_form(rho: &DensityMatrix4) -> Result<XState> {
    let hh = kron(&hadamard(), &hadamard()).expect("2x2 inputs");
    let m = hh.mul(rho.matrix()).mul(&hh);

    let on_pattern = |i: usize, j: usize| i == j || i + j == 3;
    let mut leak = 0.0;
    let mut at = (0, 0);
    for i in 0..4 {
        for j in 0..4 {
            let magnitude = if on_pattern(i, j) {
                // Diagonal entries must also be real.
                if i == j {
                    m.get(i, j).im.abs()
                } else {
                    0.0
                }
            } else {
                m.get(i, j).norm()
            };
            if magnitude > leak {
                leak = magnitude;
                at = (i, j);
            }
        }
    }
    if leak > tol::X_PATTERN_LEAKAGE {
        return Err(Error::NotXForm {
            row: at.0,
            col: at.1,
            leak,
            limit: tol::X_PATTERN_LEAKAGE,
        });
    }

    XState::new(
        m.get(0, 0).re,
        m.get(1, 1).re,
        m.get(2, 2).re,
        m.get(3, 3).re,
        // Hermitian average of the two anti-diagonal partners.
        (m.get(0, 3) + m.get(3, 0).conj()) * 0.5,
        (m.get(1, 2) + m.get(2, 1).conj()) * 0.5,
    )
}
