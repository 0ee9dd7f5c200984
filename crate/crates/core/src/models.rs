//! The two spin models: a two-qubit Heisenberg XY exchange with a
//! Dzyaloshinskii-Moriya (DM) coupling along the z axis or along the x axis.
//!
//! Both Hamiltonians act on the standard two-qubit product basis
//! {|00>, |01>, |10>, |11>}. Energies and eigenvectors are available in
//! closed form; `spectrum_*` returns them in a fixed labelled order (not
//! sorted by energy — ground-state selection is done numerically by
//! [`ground_state`], which never trusts an inequality on the parameters).

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigendecomposition, ComplexMatrix};
use crate::tol;

fn require_finite(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFiniteParameter { name, value })
    }
}

fn validate_common(j: f64, delta: f64, dm: f64, check_delta: bool) -> Result<()> {
    require_finite("j", j)?;
    require_finite("delta", delta)?;
    require_finite("dm", dm)?;
    if j == 0.0 {
        return Err(Error::ZeroCoupling);
    }
    if check_delta && !(0.0..=1.0).contains(&delta) {
        return Err(Error::AnisotropyOutOfRange { value: delta });
    }
    Ok(())
}

/// Parameters of the z-axis DM model:
/// `H = J (sx sx + delta * sy sy) + dz (sx sy - sy sx)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZModelParams {
    j: f64,
    delta: f64,
    dz: f64,
}

impl ZModelParams {
    /// Validated constructor: j nonzero, delta in [0, 1], everything finite.
    pub fn new(j: f64, delta: f64, dz: f64) -> Result<Self> {
        validate_common(j, delta, dz, true)?;
        Ok(ZModelParams { j, delta, dz })
    }

    /// Like [`ZModelParams::new`] but without the delta-range check, for
    /// exploring outside the stated anisotropy domain.
    pub fn new_with_delta_override(j: f64, delta: f64, dz: f64) -> Result<Self> {
        validate_common(j, delta, dz, false)?;
        Ok(ZModelParams { j, delta, dz })
    }

    pub fn j(&self) -> f64 {
        self.j
    }
    pub fn delta(&self) -> f64 {
        self.delta
    }
    pub fn dz(&self) -> f64 {
        self.dz
    }

    /// Gap scale of the inner block: `sqrt(4 dz^2 + (delta+1)^2 j^2)`.
    pub fn omega(&self) -> f64 {
        (4.0 * self.dz * self.dz + (self.delta + 1.0).powi(2) * self.j * self.j).sqrt()
    }

    /// Coherence phase of the inner block, quadrant-aware.
    pub fn theta(&self) -> f64 {
        (2.0 * self.dz).atan2(self.j * (self.delta + 1.0))
    }
}

/// Parameters of the x-axis DM model:
/// `H = J (sx sx + delta * sy sy) + dx (sy sz - sz sy)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XModelParams {
    j: f64,
    delta: f64,
    dx: f64,
}

impl XModelParams {
    pub fn new(j: f64, delta: f64, dx: f64) -> Result<Self> {
        validate_common(j, delta, dx, true)?;
        Ok(XModelParams { j, delta, dx })
    }

    /// Like [`XModelParams::new`] but without the delta-range check.
    pub fn new_with_delta_override(j: f64, delta: f64, dx: f64) -> Result<Self> {
        validate_common(j, delta, dx, false)?;
        Ok(XModelParams { j, delta, dx })
    }

    pub fn j(&self) -> f64 {
        self.j
    }
    pub fn delta(&self) -> f64 {
        self.delta
    }
    pub fn dx(&self) -> f64 {
        self.dx
    }

    /// Mixing-block gap scale: `sqrt(4 dx^2 + delta^2 j^2)`.
    pub fn omega1(&self) -> f64 {
        (4.0 * self.dx * self.dx + self.delta * self.delta * self.j * self.j).sqrt()
    }

    /// Eigenvector amplitude ratios `(omega1 -+ delta j) / dx`.
    /// `None` when dx = 0 (the mixing block degenerates to Bell states).
    pub fn zetas(&self) -> Option<(f64, f64)> {
        if self.dx == 0.0 {
            None
        } else {
            let o = self.omega1();
            let dj = self.delta * self.j;
            Some(((o - dj) / self.dx, (o + dj) / self.dx))
        }
    }
}

/// Either model, tagged; the thermal pipeline dispatches on this.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelParams {
    Z(ZModelParams),
    X(XModelParams),
}

impl ModelParams {
    pub fn j(&self) -> f64 {
        match self {
            ModelParams::Z(p) => p.j(),
            ModelParams::X(p) => p.j(),
        }
    }
    pub fn delta(&self) -> f64 {
        match self {
            ModelParams::Z(p) => p.delta(),
            ModelParams::X(p) => p.delta(),
        }
    }
    /// The DM coupling strength, whichever axis it points along.
    pub fn dm(&self) -> f64 {
        match self {
            ModelParams::Z(p) => p.dz(),
            ModelParams::X(p) => p.dx(),
        }
    }
}

/// Fixed labels for the four levels, following the conventional ordering of
/// each model's closed-form spectrum (corner doublet first for the z model;
/// see `spectrum_z` / `spectrum_x` for the energy attached to each label).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelLabel {
    Phi1,
    Phi2,
    Phi3,
    Phi4,
}

impl LevelLabel {
    pub const ALL: [LevelLabel; 4] = [
        LevelLabel::Phi1,
        LevelLabel::Phi2,
        LevelLabel::Phi3,
        LevelLabel::Phi4,
    ];
}

impl fmt::Display for LevelLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LevelLabel::Phi1 => "phi1",
            LevelLabel::Phi2 => "phi2",
            LevelLabel::Phi3 => "phi3",
            LevelLabel::Phi4 => "phi4",
        };
        f.write_str(s)
    }
}

/// One energy level: label, energy, unit eigenvector in the product basis.
#[derive(Debug, Clone)]
pub struct Level {
    pub label: LevelLabel,
    pub energy: f64,
    pub vector: [Complex64; 4],
}

/// The four levels of one model at fixed parameters, in label order.
#[derive(Debug, Clone)]
pub struct Spectrum {
    levels: [Level; 4],
}

impl Spectrum {
    pub fn levels(&self) -> &[Level; 4] {
        &self.levels
    }

    pub fn level(&self, label: LevelLabel) -> &Level {
        self.levels
            .iter()
            .find(|l| l.label == label)
            .expect("all four labels are always present")
    }

    /// Energies in label order.
    pub fn energies(&self) -> [f64; 4] {
        [
            self.levels[0].energy,
            self.levels[1].energy,
            self.levels[2].energy,
            self.levels[3].energy,
        ]
    }
}

/// Ground-state report produced by [`ground_state`].
#[derive(Debug, Clone, PartialEq)]
pub struct GroundStateReport {
    pub ground_label: LevelLabel,
    pub ground_energy: f64,
    /// True when the next level sits within [`tol::DEGENERACY_GAP`].
    pub degenerate: bool,
    /// True when the ground eigenvector's one-qubit reduction is maximally
    /// mixed within [`tol::MAX_ENTANGLEMENT`].
    pub maximally_entangled: bool,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// 4x4 matrix of the z-axis DM Hamiltonian.
pub fn hamiltonian_z(p: &ZModelParams) -> ComplexMatrix {
    let corner = p.j() * (1.0 - p.delta());
    let inner = p.j() * (p.delta() + 1.0);
    let dm = 2.0 * p.dz();
    ComplexMatrix::from_rows([
        [c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(corner, 0.0)],
        [c(0.0, 0.0), c(0.0, 0.0), c(inner, dm), c(0.0, 0.0)],
        [c(0.0, 0.0), c(inner, -dm), c(0.0, 0.0), c(0.0, 0.0)],
        [c(corner, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
    ])
}

/// 4x4 matrix of the x-axis DM Hamiltonian.
pub fn hamiltonian_x(p: &XModelParams) -> ComplexMatrix {
    let corner = p.j() * (1.0 - p.delta());
    let inner = p.j() * (p.delta() + 1.0);
    let d = p.dx();
    ComplexMatrix::from_rows([
        [c(0.0, 0.0), c(0.0, d), c(0.0, -d), c(corner, 0.0)],
        [c(0.0, -d), c(0.0, 0.0), c(inner, 0.0), c(0.0, d)],
        [c(0.0, d), c(inner, 0.0), c(0.0, 0.0), c(0.0, -d)],
        [c(corner, 0.0), c(0.0, -d), c(0.0, d), c(0.0, 0.0)],
    ])
}

/// Closed-form spectrum of the z-axis model.
///
/// Label order: phi1/phi2 are the corner (|00>, |11>) doublet with energies
/// `+-J(delta-1)`; phi3/phi4 are the inner (|01>, |10>) doublet with
/// energies `+-omega` and a relative phase `exp(i theta)`.
pub fn spectrum_z(p: &ZModelParams) -> Spectrum {
    let s = FRAC_1_SQRT_2;
    let e_corner = p.j() * (p.delta() - 1.0);
    let omega = p.omega();
    let phase = Complex64::from_polar(1.0, p.theta());

    let phi1 = [c(-s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)];
    let phi2 = [c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)];
    let phi3 = [c(0.0, 0.0), phase * s, c(s, 0.0), c(0.0, 0.0)];
    let phi4 = [c(0.0, 0.0), -phase * s, c(s, 0.0), c(0.0, 0.0)];

    Spectrum {
        levels: [
            Level {
                label: LevelLabel::Phi1,
                energy: e_corner,
                vector: phi1,
            },
            Level {
                label: LevelLabel::Phi2,
                energy: -e_corner,
                vector: phi2,
            },
            Level {
                label: LevelLabel::Phi3,
                energy: omega,
                vector: phi3,
            },
            Level {
                label: LevelLabel::Phi4,
                energy: -omega,
                vector: phi4,
            },
        ],
    }
}

/// Closed-form spectrum of the x-axis model.
///
/// Label order: phi1 = (|01>+|10>)/sqrt2 at `J(1+delta)`, phi2 =
/// (|00>+|11>)/sqrt2 at `J(1-delta)`, phi3/phi4 mix all four basis states at
/// `-J +- omega1`. At dx = 0 the mixing amplitudes degenerate, so phi3/phi4
/// fall back to numerically computed eigenvectors matched to the analytic
/// energies.
pub fn spectrum_x(p: &XModelParams) -> Spectrum {
    let s = FRAC_1_SQRT_2;
    let omega1 = p.omega1();
    let e = [
        p.j() * (1.0 + p.delta()),
        p.j() * (1.0 - p.delta()),
        -p.j() + omega1,
        -p.j() - omega1,
    ];

    let phi1 = [c(0.0, 0.0), c(s, 0.0), c(s, 0.0), c(0.0, 0.0)];
    let phi2 = [c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)];

    let (phi3, phi4) = match p.zetas() {
        Some((z1, z2)) => (mixing_vector(z1, 1.0), mixing_vector(z2, -1.0)),
        None => numeric_mixing_vectors(p, e[2], e[3]),
    };

    Spectrum {
        levels: [
            Level {
                label: LevelLabel::Phi1,
                energy: e[0],
                vector: phi1,
            },
            Level {
                label: LevelLabel::Phi2,
                energy: e[1],
                vector: phi2,
            },
            Level {
                label: LevelLabel::Phi3,
                energy: e[2],
                vector: phi3,
            },
            Level {
                label: LevelLabel::Phi4,
                energy: e[3],
                vector: phi4,
            },
        ],
    }
}

/// `(-2, i*sign*zeta, -i*sign*zeta, 2) / sqrt(2 (zeta^2 + 4))`, normalized
/// numerically to absorb rounding in the closed-form amplitudes.
fn mixing_vector(zeta: f64, sign: f64) -> [Complex64; 4] {
    let mut v = [
        c(-2.0, 0.0),
        c(0.0, sign * zeta),
        c(0.0, -sign * zeta),
        c(2.0, 0.0),
    ];
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in v.iter_mut() {
        *z /= norm;
    }
    v
}

/// Numeric eigenvectors for the two mixing levels when dx = 0, matched to
/// the analytic energies (closest unused eigenvalue wins; ties resolve in
/// ascending order, which is deterministic).
fn numeric_mixing_vectors(
    p: &XModelParams,
    e3: f64,
    e4: f64,
) -> ([Complex64; 4], [Complex64; 4]) {
    let eig = hermitian_eigendecomposition(&hamiltonian_x(p))
        .expect("model Hamiltonians are Hermitian by construction");
    let mut used = [false; 4];
    let mut pick = |target: f64| -> [Complex64; 4] {
        let mut best = usize::MAX;
        let mut best_gap = f64::INFINITY;
        for k in 0..4 {
            if used[k] {
                continue;
            }
            let gap = (eig.eigenvalues()[k] - target).abs();
            if gap < best_gap {
                best_gap = gap;
                best = k;
            }
        }
        used[best] = true;
        let v = eig.eigenvector(best);
        [v[0], v[1], v[2], v[3]]
    };
    let phi3 = pick(e3);
    let phi4 = pick(e4);
    (phi3, phi4)
}

/// Partial trace over the second qubit of a pure state |v><v|.
fn reduced_qubit_a(v: &[Complex64; 4]) -> [[Complex64; 2]; 2] {
    let mut r = [[Complex64::new(0.0, 0.0); 2]; 2];
    for a in 0..2 {
        for b in 0..2 {
            // rho_A[a][b] = sum_k v[2a+k] conj(v[2b+k])
            r[a][b] = v[2 * a] * v[2 * b].conj() + v[2 * a + 1] * v[2 * b + 1].conj();
        }
    }
    r
}

/// Select the ground state by direct numeric comparison of the four level
/// energies. No parameter inequality is consulted: the energies themselves
/// decide, with ties broken toward the lower label for determinism.
pub fn ground_state(s: &Spectrum) -> GroundStateReport {
    let mut ground = 0usize;
    for k in 1..4 {
        if s.levels[k].energy < s.levels[ground].energy {
            ground = k;
        }
    }
    let g = &s.levels[ground];

    let mut runner_up = f64::INFINITY;
    for (k, level) in s.levels.iter().enumerate() {
        if k != ground {
            runner_up = runner_up.min(level.energy);
        }
    }
    let degenerate = runner_up - g.energy < tol::DEGENERACY_GAP;

    let r = reduced_qubit_a(&g.vector);
    let half = 0.5;
    let deviation = [
        (r[0][0] - c(half, 0.0)).norm(),
        (r[1][1] - c(half, 0.0)).norm(),
        r[0][1].norm(),
        r[1][0].norm(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    let maximally_entangled = deviation <= tol::MAX_ENTANGLEMENT;

    GroundStateReport {
        ground_label: g.label,
        ground_energy: g.energy,
        degenerate,
        maximally_entangled,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian_eigendecomposition;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn matvec(m: &ComplexMatrix, v: &[Complex64; 4]) -> [Complex64; 4] {
        let mut out = [Complex64::new(0.0, 0.0); 4];
        for i in 0..4 {
            for j in 0..4 {
                out[i] += m.get(i, j) * v[j];
            }
        }
        out
    }

    fn residual(m: &ComplexMatrix, energy: f64, v: &[Complex64; 4]) -> f64 {
        let hv = matvec(m, v);
        (0..4)
            .map(|i| (hv[i] - v[i] * energy).norm())
            .fold(0.0, f64::max)
    }

    #[test]
    fn hamiltonian_z_entries_at_simple_parameters() {
        // j=1, delta=1, dz=0: pure inner exchange of strength 2.
        let h = hamiltonian_z(&ZModelParams::new(1.0, 1.0, 0.0).unwrap());
        assert_eq!(h.get(1, 2).re, 2.0);
        assert_eq!(h.get(2, 1).re, 2.0);
        assert_eq!(h.get(0, 3).re, 0.0);
        assert_eq!(h.get(0, 0).re, 0.0);

        // j=1, delta=0.5, dz=1: corners 0.5, inner 1.5 +- 2i.
        let h = hamiltonian_z(&ZModelParams::new(1.0, 0.5, 1.0).unwrap());
        assert_eq!(h.get(0, 3).re, 0.5);
        assert_eq!(h.get(1, 2), Complex64::new(1.5, 2.0));
        assert_eq!(h.get(2, 1), Complex64::new(1.5, -2.0));
        assert!(h.require_hermitian().is_ok());
    }

    #[test]
    fn hamiltonian_z_matches_pauli_assembly() {
        use crate::linalg::{kron, paulis};
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let p = ZModelParams::new(
                rng.gen_range(-2.0..2.0_f64).max(0.01),
                rng.gen_range(0.0..1.0),
                rng.gen_range(-2.0..2.0),
            )
            .unwrap();
            let [sx, sy, sz] = paulis();
            let _ = sz;
            let xx = kron(&sx, &sx).unwrap();
            let yy = kron(&sy, &sy).unwrap();
            let xy = kron(&sx, &sy).unwrap();
            let yx = kron(&sy, &sx).unwrap();
            let built = xx
                .scale(p.j())
                .add(&yy.scale(p.j() * p.delta()))
                .add(&xy.sub(&yx).scale(p.dz()));
            assert!(hamiltonian_z(&p).max_abs_diff(&built) < 1e-13);
        }
    }

    #[test]
    fn hamiltonian_x_entries_at_simple_parameters() {
        // j=1, delta=0, dx=1: corners 1, inner 1, +-i DM pattern.
        let h = hamiltonian_x(&XModelParams::new(1.0, 0.0, 1.0).unwrap());
        assert_eq!(h.get(0, 3).re, 1.0);
        assert_eq!(h.get(1, 2).re, 1.0);
        assert_eq!(h.get(0, 1), Complex64::new(0.0, 1.0));
        assert_eq!(h.get(0, 2), Complex64::new(0.0, -1.0));
        assert_eq!(h.get(3, 2), Complex64::new(0.0, 1.0));
        assert!(h.require_hermitian().is_ok());
    }

    #[test]
    fn hamiltonian_x_matches_pauli_assembly() {
        use crate::linalg::{kron, paulis};
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..50 {
            let p = XModelParams::new(
                rng.gen_range(0.05..2.0),
                rng.gen_range(0.0..1.0),
                rng.gen_range(-2.0..2.0),
            )
            .unwrap();
            let [sx, sy, sz] = paulis();
            let xx = kron(&sx, &sx).unwrap();
            let yy = kron(&sy, &sy).unwrap();
            let yz = kron(&sy, &sz).unwrap();
            let zy = kron(&sz, &sy).unwrap();
            let built = xx
                .scale(p.j())
                .add(&yy.scale(p.j() * p.delta()))
                .add(&yz.sub(&zy).scale(p.dx()));
            assert!(hamiltonian_x(&p).max_abs_diff(&built) < 1e-13);
        }
    }

    #[test]
    fn z_spectrum_reproduces_known_eigenvalues() {
        // omega = sqrt(4 + 2.25) = 2.5 exactly.
        let p = ZModelParams::new(1.0, 0.5, 1.0).unwrap();
        let s = spectrum_z(&p);
        assert_eq!(s.energies(), [-0.5, 0.5, 2.5, -2.5]);

        let p = ZModelParams::new(1.0, 0.5, 0.0).unwrap();
        let s = spectrum_z(&p);
        assert_eq!(s.energies(), [-0.5, 0.5, 1.5, -1.5]);

        // delta = 1 collapses the corner doublet to zero energy.
        let p = ZModelParams::new(1.0, 1.0, 1.0).unwrap();
        let s = spectrum_z(&p);
        assert_eq!(s.energies()[0], 0.0);
        assert_eq!(s.energies()[1], 0.0);
        assert!((s.energies()[2] - (8.0f64).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn z_spectrum_eigenvectors_satisfy_eigen_equation() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..500 {
            let p = ZModelParams::new(
                loop {
                    let j = rng.gen_range(-2.0..2.0);
                    if j != 0.0 {
                        break j;
                    }
                },
                rng.gen_range(0.0..1.0),
                rng.gen_range(-2.0..2.0),
            )
            .unwrap();
            let h = hamiltonian_z(&p);
            let s = spectrum_z(&p);
            for level in s.levels() {
                assert!(
                    residual(&h, level.energy, &level.vector) < 1e-10,
                    "eigen residual too large for {:?}",
                    level.label
                );
                let norm: f64 = level.vector.iter().map(|z| z.norm_sqr()).sum();
                assert!((norm - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn z_spectrum_matches_numeric_diagonalization() {
        let mut rng = ChaCha8Rng::seed_from_u64(18);
        for _ in 0..500 {
            let p = ZModelParams::new(
                rng.gen_range(0.05..2.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 },
                rng.gen_range(0.0..1.0),
                rng.gen_range(-2.0..2.0),
            )
            .unwrap();
            let numeric = hermitian_eigendecomposition(&hamiltonian_z(&p)).unwrap();
            let mut closed = spectrum_z(&p).energies();
            closed.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (a, b) in closed.iter().zip(numeric.eigenvalues()) {
                assert!((a - b).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn x_spectrum_reproduces_known_eigenvalues() {
        let p = XModelParams::new(1.0, 0.5, 1.0).unwrap();
        let o = p.omega1();
        assert!((o - 4.25f64.sqrt()).abs() < 1e-15);
        let s = spectrum_x(&p);
        assert_eq!(s.energies(), [1.5, 0.5, -1.0 + o, -1.0 - o]);
    }

    #[test]
    fn x_spectrum_eigenvectors_satisfy_eigen_equation() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..500 {
            let p = XModelParams::new(
                rng.gen_range(0.05..2.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 },
                rng.gen_range(0.0..1.0),
                rng.gen_range(-2.0..2.0),
            )
            .unwrap();
            let h = hamiltonian_x(&p);
            let s = spectrum_x(&p);
            for level in s.levels() {
                assert!(
                    residual(&h, level.energy, &level.vector) < 1e-10,
                    "eigen residual too large for {:?} at {:?}",
                    level.label,
                    p
                );
            }
        }
    }

    #[test]
    fn x_spectrum_handles_zero_dm_coupling() {
        for (j, delta) in [(1.0, 0.5), (-1.0, 0.5), (1.0, 1.0), (2.0, 0.0)] {
            let p = XModelParams::new(j, delta, 0.0).unwrap();
            assert!(p.zetas().is_none());
            let h = hamiltonian_x(&p);
            let s = spectrum_x(&p);
            for level in s.levels() {
                assert!(
                    residual(&h, level.energy, &level.vector) < 1e-10,
                    "dx=0 residual for {:?} (j={j}, delta={delta})",
                    level.label
                );
            }
        }
    }

    #[test]
    fn x_spectrum_matches_numeric_diagonalization() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        for _ in 0..500 {
            let p = XModelParams::new(
                rng.gen_range(0.05..2.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 },
                rng.gen_range(0.0..1.0),
                rng.gen_range(-2.0..2.0),
            )
            .unwrap();
            let numeric = hermitian_eigendecomposition(&hamiltonian_x(&p)).unwrap();
            let mut closed = spectrum_x(&p).energies();
            closed.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (a, b) in closed.iter().zip(numeric.eigenvalues()) {
                assert!((a - b).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn ground_state_antiferromagnetic_z_is_always_the_inner_level() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            let p = ZModelParams::new(
                rng.gen_range(0.05..2.0),
                rng.gen_range(0.0..1.0),
                rng.gen_range(-2.0..2.0),
            )
            .unwrap();
            let report = ground_state(&spectrum_z(&p));
            assert_eq!(report.ground_label, LevelLabel::Phi4);
            assert!((report.ground_energy + p.omega()).abs() < 1e-12);
            assert!(report.maximally_entangled);
        }
    }

    #[test]
    fn ground_state_ferromagnetic_z_picked_by_comparison() {
        // j = -5, delta = 0, dz = 0.1: -omega ~ -5.004 undercuts the corner
        // level at -5, so the inner level still wins.
        let p = ZModelParams::new(-5.0, 0.0, 0.1).unwrap();
        let report = ground_state(&spectrum_z(&p));
        assert_eq!(report.ground_label, LevelLabel::Phi4);
        assert!((report.ground_energy + p.omega()).abs() < 1e-12);
        // Numeric oracle agrees.
        let numeric = hermitian_eigendecomposition(&hamiltonian_z(&p)).unwrap();
        assert!((report.ground_energy - numeric.eigenvalues()[0]).abs() < 1e-12);
    }

    #[test]
    fn ground_state_ferromagnetic_x_picked_by_comparison() {
        // j = -1, delta = 0.5, dx = 1: candidates are j(1+delta) = -1.5,
        // j(1-delta) = -0.5 and -j-omega1 ~ -1.0616; phi1 wins.
        let p = XModelParams::new(-1.0, 0.5, 1.0).unwrap();
        let report = ground_state(&spectrum_x(&p));
        assert_eq!(report.ground_label, LevelLabel::Phi1);
        assert!((report.ground_energy + 1.5).abs() < 1e-12);
        let numeric = hermitian_eigendecomposition(&hamiltonian_x(&p)).unwrap();
        assert!((report.ground_energy - numeric.eigenvalues()[0]).abs() < 1e-12);
    }

    #[test]
    fn ground_state_antiferromagnetic_x_is_always_phi4() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..200 {
            let p = XModelParams::new(
                rng.gen_range(0.05..2.0),
                rng.gen_range(0.0..1.0),
                rng.gen_range(-2.0..2.0),
            )
            .unwrap();
            let report = ground_state(&spectrum_x(&p));
            assert_eq!(report.ground_label, LevelLabel::Phi4);
            assert!((report.ground_energy - (-p.j() - p.omega1())).abs() < 1e-12);
        }
    }

    #[test]
    fn ground_state_flags_degeneracy() {
        // delta = 0, dz = 0: omega = |j|, inner and corner levels coincide.
        let p = ZModelParams::new(1.0, 0.0, 0.0).unwrap();
        let report = ground_state(&spectrum_z(&p));
        assert!(report.degenerate);

        let p = ZModelParams::new(1.0, 0.5, 1.0).unwrap();
        let report = ground_state(&spectrum_z(&p));
        assert!(!report.degenerate);
    }

    #[test]
    fn spectra_are_traceless() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..100 {
            let j = rng.gen_range(0.05..2.0);
            let delta = rng.gen_range(0.0..1.0);
            let d = rng.gen_range(-2.0..2.0);
            let sz = spectrum_z(&ZModelParams::new(j, delta, d).unwrap());
            assert!(sz.energies().iter().sum::<f64>().abs() < 1e-12);
            let sx = spectrum_x(&XModelParams::new(j, delta, d).unwrap());
            assert!(sx.energies().iter().sum::<f64>().abs() < 1e-12);
        }
    }

    #[test]
    fn parameter_validation_rejects_bad_inputs() {
        assert!(matches!(
            ZModelParams::new(0.0, 0.5, 1.0),
            Err(Error::ZeroCoupling)
        ));
        assert!(matches!(
            ZModelParams::new(1.0, 1.5, 1.0),
            Err(Error::AnisotropyOutOfRange { .. })
        ));
        assert!(ZModelParams::new_with_delta_override(1.0, 1.5, 1.0).is_ok());
        assert!(matches!(
            XModelParams::new(1.0, f64::NAN, 1.0),
            Err(Error::NonFiniteParameter { name: "delta", .. })
        ));
        assert!(XModelParams::new(1.0, 0.0, 0.0).is_ok());
    }

    #[test]
    fn theta_is_quadrant_aware() {
        let p = ZModelParams::new(1.0, 0.5, 1.0).unwrap();
        assert!((p.theta() - (4.0f64 / 3.0).atan()).abs() < 1e-15);
        // Negative coupling flips the real part of the inner entry.
        let p = ZModelParams::new(-1.0, 0.5, 1.0).unwrap();
        assert!(p.theta() > std::f64::consts::FRAC_PI_2);
    }
}
