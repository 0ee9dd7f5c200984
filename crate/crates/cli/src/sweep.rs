//! Parameter sweeps: a validated grid over one axis, evaluated in parallel,
//! emitted as ordered rows.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use lqu_core::{
    thermal_lqu, Branch, Method, ModelParams, Temperature, XModelParams, ZModelParams,
};

use crate::error::CliError;

/// Which model(s) a sweep runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepModel {
    Z,
    X,
    Both,
}

impl SweepModel {
    /// Canonical tag written to the `model` output column.
    pub fn tags(&self) -> &'static [&'static str] {
        match self {
            SweepModel::Z => &["z-dm"],
            SweepModel::X => &["x-dm"],
            SweepModel::Both => &["z-dm", "x-dm"],
        }
    }
}

impl FromStr for SweepModel {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "z-dm" | "z" => Ok(SweepModel::Z),
            "x-dm" | "x" => Ok(SweepModel::X),
            "both" => Ok(SweepModel::Both),
            other => Err(CliError::validation(format!(
                "unknown model `{other}` (expected z-dm, x-dm, or both)"
            ))),
        }
    }
}

impl fmt::Display for SweepModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepModel::Z => "z-dm",
            SweepModel::X => "x-dm",
            SweepModel::Both => "both",
        })
    }
}

/// The quantity the grid runs over; the other parameters stay fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    Temperature,
    Dm,
    J,
}

impl FromStr for SweepAxis {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "temperature" | "t" | "temp" => Ok(SweepAxis::Temperature),
            "dm" => Ok(SweepAxis::Dm),
            "j" => Ok(SweepAxis::J),
            other => Err(CliError::validation(format!(
                "unknown sweep axis `{other}` (expected temperature, dm, or j)"
            ))),
        }
    }
}

impl fmt::Display for SweepAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepAxis::Temperature => "temperature",
            SweepAxis::Dm => "dm",
            SweepAxis::J => "j",
        })
    }
}

/// Grid-point spacing along the sweep axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log10,
}

impl FromStr for Spacing {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "linear" => Ok(Spacing::Linear),
            "log10" | "log" => Ok(Spacing::Log10),
            other => Err(CliError::validation(format!(
                "unknown spacing `{other}` (expected linear or log10)"
            ))),
        }
    }
}

impl fmt::Display for Spacing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Spacing::Linear => "linear",
            Spacing::Log10 => "log10",
        })
    }
}

/// A fully resolved sweep: fixed parameters, one axis, and its grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub model: SweepModel,
    pub j: f64,
    pub delta: f64,
    pub dm: f64,
    pub temp: f64,
    pub axis: SweepAxis,
    pub min: f64,
    pub max: f64,
    pub steps: usize,
    pub spacing: Spacing,
}

impl SweepConfig {
    /// Enforce the grid invariants; fixed-parameter problems (a zero
    /// coupling, say) are deliberately left to per-row failure handling so a
    /// sweep crossing a bad point still emits its good rows.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.steps < 2 {
            return Err(CliError::validation(format!(
                "steps must be at least 2, got {}",
                self.steps
            )));
        }
        if !(self.min.is_finite() && self.max.is_finite()) {
            return Err(CliError::validation("axis range must be finite".into()));
        }
        if self.min >= self.max {
            return Err(CliError::validation(format!(
                "axis range needs min < max, got [{}, {}]",
                self.min, self.max
            )));
        }
        if self.spacing == Spacing::Log10 && self.min <= 0.0 {
            return Err(CliError::validation(format!(
                "log10 spacing requires min > 0, got {}",
                self.min
            )));
        }
        for (name, v) in [
            ("j", self.j),
            ("delta", self.delta),
            ("dm", self.dm),
            ("temp", self.temp),
        ] {
            if !v.is_finite() {
                return Err(CliError::validation(format!("{name} must be finite, got {v}")));
            }
        }
        Ok(())
    }

    /// The grid points, endpoints exact.
    pub fn grid(&self) -> Vec<f64> {
        grid(self.min, self.max, self.steps, self.spacing)
    }
}

/// `steps` points from `min` to `max` inclusive, linearly spaced either
/// directly or in log10. Both endpoints are set exactly so re-running a
/// sweep is bit-identical and axis extremes land where asked.
pub fn grid(min: f64, max: f64, steps: usize, spacing: Spacing) -> Vec<f64> {
    let n = steps.max(2);
    let mut points = Vec::with_capacity(n);
    match spacing {
        Spacing::Linear => {
            let span = max - min;
            for k in 0..n {
                points.push(min + span * k as f64 / (n - 1) as f64);
            }
        }
        Spacing::Log10 => {
            let (lo, hi) = (min.log10(), max.log10());
            let span = hi - lo;
            for k in 0..n {
                points.push(10f64.powf(lo + span * k as f64 / (n - 1) as f64));
            }
        }
    }
    points[0] = min;
    points[n - 1] = max;
    points
}

/// One evaluated grid point. `lqu` is clamped to the unit interval (the
/// closed form can round a hair outside it); a row whose evaluation failed
/// carries NaN numerics, `branch = "-"` and `method = "failed"`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub model: String,
    pub j: f64,
    pub delta: f64,
    pub dm: f64,
    pub t: f64,
    pub lqu: f64,
    pub omega1: f64,
    pub omega3: f64,
    pub log_partition: f64,
    pub branch: String,
    pub method: String,
}

/// Tag for the method column of a row that could not be evaluated.
pub const FAILED_METHOD: &str = "failed";

fn branch_tag(b: Branch) -> &'static str {
    match b {
        Branch::Omega1 => "omega1",
        Branch::Omega3 => "omega3",
    }
}

fn method_tag(m: Method) -> &'static str {
    match m {
        Method::Closed => "closed",
        Method::WMatrix => "w-matrix",
        Method::BruteForce => "brute-force",
    }
}

/// Evaluate one (model, j, delta, dm, t) point into a row, mapping any
/// evaluation error to a failed row rather than aborting the sweep.
fn evaluate_point(tag: &str, j: f64, delta: f64, dm: f64, t: f64) -> SweepRow {
    let outcome = (|| {
        let params = match tag {
            "z-dm" => ModelParams::Z(ZModelParams::new(j, delta, dm)?),
            _ => ModelParams::X(XModelParams::new(j, delta, dm)?),
        };
        let temp = Temperature::new(t)?;
        thermal_lqu(&params, temp)
    })();
    match outcome {
        Ok(out) => SweepRow {
            model: tag.to_string(),
            j,
            delta,
            dm,
            t,
            lqu: out.lqu.value.clamp(0.0, 1.0),
            omega1: out.lqu.omega1,
            omega3: out.lqu.omega3,
            log_partition: out.partition.log,
            branch: branch_tag(out.lqu.branch).to_string(),
            method: method_tag(out.lqu.method).to_string(),
        },
        Err(_) => SweepRow {
            model: tag.to_string(),
            j,
            delta,
            dm,
            t,
            lqu: f64::NAN,
            omega1: f64::NAN,
            omega3: f64::NAN,
            log_partition: f64::NAN,
            branch: "-".to_string(),
            method: FAILED_METHOD.to_string(),
        },
    }
}

/// Run a sweep: grid points evaluated in parallel, rows returned in grid
/// order. With `model = both`, each grid point contributes a z-dm row
/// immediately followed by an x-dm row.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRow>, CliError> {
    cfg.validate()?;
    let points = cfg.grid();
    let tags = cfg.model.tags();
    let rows: Vec<SweepRow> = points
        .par_iter()
        .map(|&value| {
            let (j, dm, t) = match cfg.axis {
                SweepAxis::Temperature => (cfg.j, cfg.dm, value),
                SweepAxis::Dm => (cfg.j, value, cfg.temp),
                SweepAxis::J => (value, cfg.dm, cfg.temp),
            };
            tags.iter()
                .map(|tag| evaluate_point(tag, j, cfg.delta, dm, t))
                .collect::<Vec<_>>()
        })
        .flatten()
        .collect();
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base_config() -> SweepConfig {
        SweepConfig {
            model: SweepModel::Z,
            j: 1.0,
            delta: 0.5,
            dm: 1.0,
            temp: 1.0,
            axis: SweepAxis::Temperature,
            min: 1.0,
            max: 2.0,
            steps: 2,
            spacing: Spacing::Linear,
        }
    }

    #[test]
    fn grid_endpoints_are_exact_for_both_spacings() {
        let g = grid(0.2, 50.0, 100, Spacing::Log10);
        assert_eq!(g.len(), 100);
        assert_eq!(g[0], 0.2);
        assert_eq!(g[99], 50.0);
        let ratios: Vec<f64> = g.windows(2).map(|w| w[1] / w[0]).collect();
        for r in &ratios[1..ratios.len() - 1] {
            assert!((r - ratios[1]).abs() < 1e-9, "log grid has uniform ratio");
        }

        let g = grid(-6.0, 6.0, 201, Spacing::Linear);
        assert_eq!(g[0], -6.0);
        assert_eq!(g[200], 6.0);
        assert_eq!(g[100], 0.0, "odd linear grid centred on zero hits it");
    }

    #[test]
    fn two_step_temperature_sweep_decays() {
        let rows = run_sweep(&base_config()).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].t, 1.0);
        assert_eq!(rows[1].t, 2.0);
        assert!(rows[0].lqu >= rows[1].lqu, "hotter point has no more LQU");
        assert!(rows.iter().all(|r| r.method != FAILED_METHOD));
    }

    #[test]
    fn dm_sweep_is_symmetric_in_sign() {
        let cfg = SweepConfig {
            axis: SweepAxis::Dm,
            min: -2.0,
            max: 2.0,
            steps: 2,
            ..base_config()
        };
        let rows = run_sweep(&cfg).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].dm, -2.0);
        assert_eq!(rows[1].dm, 2.0);
        assert!((rows[0].lqu - rows[1].lqu).abs() < 1e-14);
    }

    #[test]
    fn both_model_sweep_interleaves_tags() {
        let cfg = SweepConfig {
            model: SweepModel::Both,
            steps: 3,
            ..base_config()
        };
        let rows = run_sweep(&cfg).unwrap();
        assert_eq!(rows.len(), 6);
        for (k, row) in rows.iter().enumerate() {
            let want = if k % 2 == 0 { "z-dm" } else { "x-dm" };
            assert_eq!(row.model, want);
        }
        assert_eq!(rows[0].t, rows[1].t, "adjacent rows share the grid point");
    }

    #[test]
    fn j_axis_sweep_marks_the_zero_coupling_row_failed_and_continues() {
        let cfg = SweepConfig {
            axis: SweepAxis::J,
            min: -1.0,
            max: 1.0,
            steps: 3,
            ..base_config()
        };
        let rows = run_sweep(&cfg).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[1].j, 0.0);
        assert_eq!(rows[1].method, FAILED_METHOD);
        assert_eq!(rows[1].branch, "-");
        assert!(rows[1].lqu.is_nan());
        assert!(rows[0].method != FAILED_METHOD);
        assert!(rows[2].method != FAILED_METHOD);
        assert!((rows[0].lqu - rows[2].lqu).abs() < 1e-12, "J sign symmetry");
    }

    #[test]
    fn config_validation_rejects_bad_grids() {
        let bad_steps = SweepConfig { steps: 1, ..base_config() };
        assert!(bad_steps.validate().is_err());
        let bad_range = SweepConfig { min: 2.0, max: 1.0, ..base_config() };
        assert!(bad_range.validate().is_err());
        let bad_log = SweepConfig {
            spacing: Spacing::Log10,
            min: -1.0,
            max: 1.0,
            ..base_config()
        };
        assert!(bad_log.validate().is_err());
        let bad_fixed = SweepConfig { dm: f64::NAN, ..base_config() };
        assert!(bad_fixed.validate().is_err());
    }

    #[test]
    fn parsers_accept_documented_names() {
        assert_eq!("z-dm".parse::<SweepModel>().unwrap(), SweepModel::Z);
        assert_eq!("x".parse::<SweepModel>().unwrap(), SweepModel::X);
        assert_eq!("both".parse::<SweepModel>().unwrap(), SweepModel::Both);
        assert!("y".parse::<SweepModel>().is_err());
        assert_eq!("temperature".parse::<SweepAxis>().unwrap(), SweepAxis::Temperature);
        assert_eq!("dm".parse::<SweepAxis>().unwrap(), SweepAxis::Dm);
        assert!("k".parse::<SweepAxis>().is_err());
        assert_eq!("log10".parse::<Spacing>().unwrap(), Spacing::Log10);
        assert!("cubic".parse::<Spacing>().is_err());
    }

    #[test]
    fn rows_preserve_grid_order_under_parallel_evaluation() {
        let cfg = SweepConfig {
            steps: 64,
            min: 0.2,
            max: 50.0,
            spacing: Spacing::Log10,
            ..base_config()
        };
        let rows = run_sweep(&cfg).unwrap();
        let grid = cfg.grid();
        for (row, want) in rows.iter().zip(grid.iter()) {
            assert_eq!(row.t, *want);
        }
    }
}
