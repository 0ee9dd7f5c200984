//! Named dataset presets. Each preset fixes a family of sweeps (one per
//! curve) and concatenates their rows into a single table; the `dm`, `j`,
//! or `t` column distinguishes the curves.
//!
//! Temperature axes are sampled uniformly in log10(T); `dm` and `j` axes are
//! linear. The zero-centred `dm` axis uses an odd point count so that
//! `dm = 0` itself is on the grid; the `j` axis uses an even count so the
//! invalid point `j = 0` is never sampled.

use std::fmt;
use std::str::FromStr;

use crate::error::CliError;
use crate::sweep::{run_sweep, Spacing, SweepAxis, SweepConfig, SweepModel, SweepRow};

/// DM couplings giving one curve each on the temperature presets.
pub const CURVE_DM_VALUES: [f64; 4] = [0.5, 1.0, 2.0, 3.0];
/// Exchange couplings giving one curve each on the coupling presets.
pub const CURVE_J_VALUES: [f64; 3] = [0.5, 1.0, 2.0];
/// Temperatures giving one curve each on the dm- and j-axis presets.
pub const CURVE_T_VALUES: [f64; 3] = [1.0, 2.0, 3.0];

const TEMP_GRID_POINTS: usize = 100;
const DM_GRID_POINTS: usize = 201;
const J_GRID_POINTS: usize = 200;
const COMPARE_GRID_POINTS: usize = 200;

/// The available dataset presets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigurePreset {
    /// z model, LQU vs T (log10 grid), one curve per DM coupling.
    Fig1a,
    /// z model, LQU vs T (log10 grid), one curve per exchange coupling.
    Fig1b,
    /// z model, LQU vs DM coupling in [-6, 6], one curve per temperature.
    Fig3,
    /// x model, LQU vs T (log10 grid), one curve per DM coupling.
    Fig4a,
    /// x model, LQU vs T (log10 grid), one curve per exchange coupling.
    Fig4b,
    /// x model, LQU vs exchange coupling in [-4, 4], one curve per temperature.
    Fig6,
    /// Both models at DM coupling 2, LQU vs T (log10 grid), interleaved rows.
    Fig7,
}

impl FigurePreset {
    pub const ALL: [FigurePreset; 7] = [
        FigurePreset::Fig1a,
        FigurePreset::Fig1b,
        FigurePreset::Fig3,
        FigurePreset::Fig4a,
        FigurePreset::Fig4b,
        FigurePreset::Fig6,
        FigurePreset::Fig7,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FigurePreset::Fig1a => "fig1a",
            FigurePreset::Fig1b => "fig1b",
            FigurePreset::Fig3 => "fig3",
            FigurePreset::Fig4a => "fig4a",
            FigurePreset::Fig4b => "fig4b",
            FigurePreset::Fig6 => "fig6",
            FigurePreset::Fig7 => "fig7",
        }
    }

    /// Output filename for the preset in a given format extension.
    pub fn filename(&self, extension: &str) -> String {
        format!("{}.{extension}", self.name())
    }

    /// One line describing the dataset, printed when the preset runs.
    pub fn describe(&self) -> String {
        let grids = |what: &str| {
            format!("{what}; temperature grid is uniform in log10(T)")
        };
        match self {
            FigurePreset::Fig1a => grids("z model, LQU vs T in [0.2, 50], curves dm = 0.5, 1, 2, 3 (j = 1, delta = 0.5)"),
            FigurePreset::Fig1b => grids("z model, LQU vs T in [0.2, 50], curves j = 0.5, 1, 2 (dm = 1, delta = 0.5)"),
            FigurePreset::Fig3 => "z model, LQU vs dm in [-6, 6], curves t = 1, 2, 3 (j = 1, delta = 0.5)".into(),
            FigurePreset::Fig4a => grids("x model, LQU vs T in [0.2, 50], curves dm = 0.5, 1, 2, 3 (j = 1, delta = 0.5)"),
            FigurePreset::Fig4b => grids("x model, LQU vs T in [0.2, 50], curves j = 0.5, 1, 2 (dm = 1, delta = 0.5)"),
            FigurePreset::Fig6 => "x model, LQU vs j in [-4, 4], curves t = 1, 2, 3 (dm = 1, delta = 0.5)".into(),
            FigurePreset::Fig7 => grids("both models, LQU vs T in [0.2, 200] at dm = 2 (j = 1, delta = 0.5)"),
        }
    }

    /// The sweep configurations behind the preset, one per curve, in the
    /// order their rows appear in the output.
    pub fn configs(&self) -> Vec<SweepConfig> {
        let base = SweepConfig {
            model: SweepModel::Z,
            j: 1.0,
            delta: 0.5,
            dm: 1.0,
            temp: 1.0,
            axis: SweepAxis::Temperature,
            min: 0.2,
            max: 50.0,
            steps: TEMP_GRID_POINTS,
            spacing: Spacing::Log10,
        };
        let temp_curves_over_dm = |model: SweepModel| {
            CURVE_DM_VALUES
                .iter()
                .map(|&dm| SweepConfig { model, dm, ..base.clone() })
                .collect::<Vec<_>>()
        };
        let temp_curves_over_j = |model: SweepModel| {
            CURVE_J_VALUES
                .iter()
                .map(|&j| SweepConfig { model, j, ..base.clone() })
                .collect::<Vec<_>>()
        };
        match self {
            FigurePreset::Fig1a => temp_curves_over_dm(SweepModel::Z),
            FigurePreset::Fig1b => temp_curves_over_j(SweepModel::Z),
            FigurePreset::Fig4a => temp_curves_over_dm(SweepModel::X),
            FigurePreset::Fig4b => temp_curves_over_j(SweepModel::X),
            FigurePreset::Fig3 => CURVE_T_VALUES
                .iter()
                .map(|&temp| SweepConfig {
                    temp,
                    axis: SweepAxis::Dm,
                    min: -6.0,
                    max: 6.0,
                    steps: DM_GRID_POINTS,
                    spacing: Spacing::Linear,
                    ..base.clone()
                })
                .collect(),
            FigurePreset::Fig6 => CURVE_T_VALUES
                .iter()
                .map(|&temp| SweepConfig {
                    model: SweepModel::X,
                    temp,
                    axis: SweepAxis::J,
                    min: -4.0,
                    max: 4.0,
                    steps: J_GRID_POINTS,
                    spacing: Spacing::Linear,
                    ..base.clone()
                })
                .collect(),
            FigurePreset::Fig7 => vec![SweepConfig {
                model: SweepModel::Both,
                dm: 2.0,
                max: 200.0,
                steps: COMPARE_GRID_POINTS,
                ..base.clone()
            }],
        }
    }

    /// Run every curve of the preset and concatenate the rows.
    pub fn run(&self) -> Result<Vec<SweepRow>, CliError> {
        let mut rows = Vec::new();
        for cfg in self.configs() {
            rows.extend(run_sweep(&cfg)?);
        }
        Ok(rows)
    }
}

impl FromStr for FigurePreset {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        FigurePreset::ALL
            .iter()
            .find(|p| p.name() == s)
            .copied()
            .ok_or_else(|| {
                let names: Vec<&str> = FigurePreset::ALL.iter().map(|p| p.name()).collect();
                CliError::validation(format!(
                    "unknown preset `{s}` (available: {})",
                    names.join(", ")
                ))
            })
    }
}

impl fmt::Display for FigurePreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
