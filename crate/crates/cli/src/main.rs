//! `lqu` — spectra, thermal states, and local quantum uncertainty of the
//! two-qubit Heisenberg XY chain with a Dzyaloshinskii–Moriya coupling
//! along z or x.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use lqu_cli::emit::{emit, format_float, DataFormat};
use lqu_cli::error::CliError;
use lqu_cli::figures::FigurePreset;
use lqu_cli::sweep::{run_sweep, Spacing, SweepAxis, SweepConfig, SweepModel};
use lqu_cli::FileConfig;

use lqu_core::{
    ground_state, lqu_bruteforce, lqu_w, partition_x, partition_z, spectrum_x, spectrum_z,
    thermal_state_x_closed, thermal_state_z_closed, LquResult, ModelParams, Partition,
    Temperature, XModelParams, ZModelParams,
};

const DEFAULT_J: f64 = 1.0;
const DEFAULT_DELTA: f64 = 0.5;
const DEFAULT_DM: f64 = 1.0;
const DEFAULT_TEMP: f64 = 1.0;
const DEFAULT_MIN: f64 = 0.2;
const DEFAULT_MAX: f64 = 50.0;
const DEFAULT_STEPS: usize = 200;

#[derive(Parser)]
#[command(
    name = "lqu",
    version,
    about = "Local quantum uncertainty of two-qubit Heisenberg XY thermal states with DM coupling",
    after_help = "Exit codes: 0 success, 1 validation error, 2 i/o error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Parameters shared by all verbs. Every field is optional here; values are
/// resolved as flag > config file > default.
#[derive(Args, Clone, Default)]
struct CommonArgs {
    /// Config file with `key = value` lines (same keys as the flags)
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Model: z-dm, x-dm (sweep also accepts: both) [default: z-dm]
    #[arg(long)]
    model: Option<String>,
    /// Exchange coupling J (nonzero) [default: 1]
    #[arg(long, allow_hyphen_values = true)]
    j: Option<f64>,
    /// Anisotropy, 0 <= delta <= 1 [default: 0.5]
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<f64>,
    /// DM coupling strength along the model's axis [default: 1]
    #[arg(long, allow_hyphen_values = true)]
    dm: Option<f64>,
    /// Temperature (k_B = 1) [default: 1]
    #[arg(long, allow_hyphen_values = true)]
    temp: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the closed-form energy levels, eigenvectors, and ground state
    Spectrum {
        #[command(flatten)]
        common: CommonArgs,
        /// Output format: text or json [default: text]
        #[arg(long)]
        format: Option<String>,
    },
    /// Print the thermal (Gibbs) density matrix and partition function
    State {
        #[command(flatten)]
        common: CommonArgs,
        /// Output format: text or json [default: text]
        #[arg(long)]
        format: Option<String>,
    },
    /// Evaluate the local quantum uncertainty at one parameter point
    Lqu {
        #[command(flatten)]
        common: CommonArgs,
        /// Evaluation route: closed, w-matrix, or brute-force [default: closed]
        #[arg(long)]
        method: Option<String>,
        /// Output format: text or json [default: text]
        #[arg(long)]
        format: Option<String>,
    },
    /// Sweep one axis (temperature, dm, or j) and emit a row per grid point
    Sweep {
        #[command(flatten)]
        common: CommonArgs,
        /// Sweep axis: temperature, dm, or j [default: temperature]
        #[arg(long)]
        axis: Option<String>,
        /// Axis lower end [default: 0.2]
        #[arg(long, allow_hyphen_values = true)]
        min: Option<f64>,
        /// Axis upper end [default: 50]
        #[arg(long, allow_hyphen_values = true)]
        max: Option<f64>,
        /// Number of grid points (>= 2) [default: 200]
        #[arg(long)]
        steps: Option<usize>,
        /// Grid spacing: linear or log10 [default: linear]
        #[arg(long)]
        spacing: Option<String>,
        /// Output format: csv or json [default: csv]
        #[arg(long)]
        format: Option<String>,
        /// Output file [default: stdout]
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Emit the data behind a named figure preset
    Figure {
        /// Preset name (fig1a, fig1b, fig3, fig4a, fig4b, fig6, fig7)
        #[arg(long)]
        preset: String,
        /// Output format: csv or json [default: csv]
        #[arg(long)]
        format: Option<String>,
        /// Directory for the emitted file, created if missing [default: current directory]
        #[arg(long, value_name = "DIR")]
        out_dir: Option<PathBuf>,
    },
}

/// Fully resolved single-point parameters.
struct Resolved {
    model: SweepModel,
    j: f64,
    delta: f64,
    dm: f64,
    temp: f64,
    file: FileConfig,
}

fn resolve_common(common: &CommonArgs) -> Result<Resolved, CliError> {
    let file = match &common.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let model = match (&common.model, file.model) {
        (Some(s), _) => s.parse()?,
        (None, Some(m)) => m,
        (None, None) => SweepModel::Z,
    };
    Ok(Resolved {
        model,
        j: common.j.or(file.j).unwrap_or(DEFAULT_J),
        delta: common.delta.or(file.delta).unwrap_or(DEFAULT_DELTA),
        dm: common.dm.or(file.dm).unwrap_or(DEFAULT_DM),
        temp: common.temp.or(file.temp).unwrap_or(DEFAULT_TEMP),
        file,
    })
}

/// Single model (z or x) for the point verbs, which cannot take `both`.
fn single_model(r: &Resolved) -> Result<ModelParams, CliError> {
    match r.model {
        SweepModel::Z => Ok(ModelParams::Z(ZModelParams::new(r.j, r.delta, r.dm)?)),
        SweepModel::X => Ok(ModelParams::X(XModelParams::new(r.j, r.delta, r.dm)?)),
        SweepModel::Both => Err(CliError::validation(
            "this command needs a single model: z-dm or x-dm".into(),
        )),
    }
}

/// Resolve a point verb's `--format`; returns true for json output.
fn wants_json(format: &Option<String>) -> Result<bool, CliError> {
    match format.as_deref() {
        None | Some("text") => Ok(false),
        Some("json") => Ok(true),
        Some(other) => Err(CliError::validation(format!(
            "unknown format `{other}` (expected text or json)"
        ))),
    }
}

fn complex_cell(v: lqu_core::Complex64) -> String {
    format!("{:+.6e}{:+.6e}i", v.re, v.im)
}

/// Print a complete report to stdout. A consumer that closes the pipe early
/// (`lqu … | head`) surfaces as `CliError::OutputClosed`, which `main` turns
/// into a quiet success instead of a panic or an error report.
fn print_report(text: &str) -> Result<(), CliError> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())
        .and_then(|()| out.flush())
        .map_err(CliError::from_stdout_write)
}

fn run_spectrum(common: &CommonArgs, format: &Option<String>) -> Result<(), CliError> {
    let r = resolve_common(common)?;
    let params = single_model(&r)?;
    let spectrum = match &params {
        ModelParams::Z(p) => spectrum_z(p),
        ModelParams::X(p) => spectrum_x(p),
    };
    let report = ground_state(&spectrum);
    let text = if wants_json(format)? {
        let levels: Vec<_> = spectrum
            .levels()
            .iter()
            .map(|l| {
                json!({
                    "label": l.label.to_string(),
                    "energy": l.energy,
                    "vector": l.vector.iter().map(|c| vec![c.re, c.im]).collect::<Vec<_>>(),
                })
            })
            .collect();
        let doc = json!({
            "model": r.model.to_string(),
            "j": r.j,
            "delta": r.delta,
            "dm": r.dm,
            "levels": levels,
            "ground": {
                "label": report.ground_label.to_string(),
                "energy": report.ground_energy,
                "degenerate": report.degenerate,
                "maximally_entangled": report.maximally_entangled,
            },
        });
        format!("{}\n", serde_json::to_string_pretty(&doc).expect("plain data"))
    } else {
        let mut s = format!(
            "spectrum of the {} model at j = {}, delta = {}, dm = {}\n",
            r.model, r.j, r.delta, r.dm
        );
        for l in spectrum.levels() {
            let comps: Vec<String> = l.vector.iter().map(|c| complex_cell(*c)).collect();
            s.push_str(&format!(
                "  {}: energy = {}  vector = [{}]\n",
                l.label,
                format_float(l.energy),
                comps.join(", ")
            ));
        }
        s.push_str(&format!(
            "ground state: {} (energy = {}, degenerate = {}, maximally entangled = {})\n",
            report.ground_label,
            format_float(report.ground_energy),
            report.degenerate,
            report.maximally_entangled
        ));
        s
    };
    print_report(&text)
}

fn run_state(common: &CommonArgs, format: &Option<String>) -> Result<(), CliError> {
    let r = resolve_common(common)?;
    let params = single_model(&r)?;
    let temp = Temperature::new(r.temp)?;
    let (rho, partition) = match &params {
        ModelParams::Z(p) => (
            thermal_state_z_closed(p, temp).to_density_matrix(),
            partition_z(p, temp),
        ),
        ModelParams::X(p) => (thermal_state_x_closed(p, temp), partition_x(p, temp)),
    };
    let text = if wants_json(format)? {
        let entries: Vec<Vec<Vec<f64>>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        let c = rho.entry(i, j);
                        vec![c.re, c.im]
                    })
                    .collect()
            })
            .collect();
        let doc = json!({
            "model": r.model.to_string(),
            "j": r.j,
            "delta": r.delta,
            "dm": r.dm,
            "t": r.temp,
            "matrix": entries,
            "partition": partition.value,
            "log_partition": partition.log,
        });
        format!("{}\n", serde_json::to_string_pretty(&doc).expect("plain data"))
    } else {
        let mut s = format!(
            "thermal state of the {} model at j = {}, delta = {}, dm = {}, t = {}\n",
            r.model, r.j, r.delta, r.dm, r.temp
        );
        for i in 0..4 {
            let cells: Vec<String> = (0..4).map(|j| complex_cell(rho.entry(i, j))).collect();
            s.push_str(&format!("  [{}]\n", cells.join(", ")));
        }
        s.push_str(&format!(
            "partition = {}  log_partition = {}\n",
            format_float(partition.value),
            format_float(partition.log)
        ));
        s
    };
    print_report(&text)
}

fn point_lqu(params: &ModelParams, temp: Temperature, method: &str) -> Result<(LquResult, Partition), CliError> {
    let partition = match params {
        ModelParams::Z(p) => partition_z(p, temp),
        ModelParams::X(p) => partition_x(p, temp),
    };
    let result = match method {
        "closed" => lqu_core::thermal_lqu(params, temp)?.lqu,
        "w-matrix" | "w" => {
            let rho = match params {
                ModelParams::Z(p) => thermal_state_z_closed(p, temp).to_density_matrix(),
                ModelParams::X(p) => thermal_state_x_closed(p, temp),
            };
            lqu_w(&rho)?
        }
        "brute-force" | "brute" => {
            let rho = match params {
                ModelParams::Z(p) => thermal_state_z_closed(p, temp).to_density_matrix(),
                ModelParams::X(p) => thermal_state_x_closed(p, temp),
            };
            lqu_bruteforce(
                &rho,
                lqu_core::lqu::DEFAULT_BRUTE_GRID,
                lqu_core::lqu::DEFAULT_BRUTE_REFINE_ITERS,
            )?
        }
        other => {
            return Err(CliError::validation(format!(
                "unknown method `{other}` (expected closed, w-matrix, or brute-force)"
            )))
        }
    };
    Ok((result, partition))
}

fn run_lqu(
    common: &CommonArgs,
    method: &Option<String>,
    format: &Option<String>,
) -> Result<(), CliError> {
    let r = resolve_common(common)?;
    let params = single_model(&r)?;
    let temp = Temperature::new(r.temp)?;
    let method = method.as_deref().unwrap_or("closed");
    let (result, partition) = point_lqu(&params, temp, method)?;
    let text = if wants_json(format)? {
        let doc = json!({
            "model": r.model.to_string(),
            "j": r.j,
            "delta": r.delta,
            "dm": r.dm,
            "t": r.temp,
            "lqu": result.value,
            "omega1": result.omega1,
            "omega3": result.omega3,
            "branch": result.branch.to_string(),
            "method": result.method.to_string(),
            "log_partition": partition.log,
        });
        format!("{}\n", serde_json::to_string_pretty(&doc).expect("plain data"))
    } else {
        let mut s = format!(
            "lqu of the {} model at j = {}, delta = {}, dm = {}, t = {}\n",
            r.model, r.j, r.delta, r.dm, r.temp
        );
        s.push_str(&format!("  lqu           = {}\n", format_float(result.value)));
        s.push_str(&format!("  omega1        = {}\n", format_float(result.omega1)));
        s.push_str(&format!("  omega3        = {}\n", format_float(result.omega3)));
        s.push_str(&format!("  branch        = {}\n", result.branch));
        s.push_str(&format!("  method        = {}\n", result.method));
        s.push_str(&format!("  log_partition = {}\n", format_float(partition.log)));
        s
    };
    print_report(&text)
}

#[allow(clippy::too_many_arguments)]
fn run_sweep_cmd(
    common: &CommonArgs,
    axis: &Option<String>,
    min: Option<f64>,
    max: Option<f64>,
    steps: Option<usize>,
    spacing: &Option<String>,
    format: &Option<String>,
    out: &Option<PathBuf>,
) -> Result<(), CliError> {
    let r = resolve_common(common)?;
    let axis = match (axis, r.file.axis) {
        (Some(s), _) => s.parse::<SweepAxis>()?,
        (None, Some(a)) => a,
        (None, None) => SweepAxis::Temperature,
    };
    let spacing = match (spacing, r.file.spacing) {
        (Some(s), _) => s.parse::<Spacing>()?,
        (None, Some(sp)) => sp,
        (None, None) => Spacing::Linear,
    };
    let format = match (format, r.file.format) {
        (Some(s), _) => s.parse::<DataFormat>()?,
        (None, Some(f)) => f,
        (None, None) => DataFormat::Csv,
    };
    let out = out
        .clone()
        .or_else(|| r.file.out.as_ref().map(PathBuf::from));
    let cfg = SweepConfig {
        model: r.model,
        j: r.j,
        delta: r.delta,
        dm: r.dm,
        temp: r.temp,
        axis,
        min: min.or(r.file.min).unwrap_or(DEFAULT_MIN),
        max: max.or(r.file.max).unwrap_or(DEFAULT_MAX),
        steps: steps.or(r.file.steps).unwrap_or(DEFAULT_STEPS),
        spacing,
    };
    let rows = run_sweep(&cfg)?;
    emit(&rows, format, out.as_deref())
}

fn run_figure(
    preset: &str,
    format: &Option<String>,
    out_dir: &Option<PathBuf>,
) -> Result<(), CliError> {
    let preset: FigurePreset = preset.parse()?;
    let format = match format.as_deref() {
        None => DataFormat::Csv,
        Some(s) => s.parse::<DataFormat>()?,
    };
    let rows = preset.run()?;
    let dir = out_dir.clone().unwrap_or_else(|| PathBuf::from("."));
    std::fs::create_dir_all(&dir)
        .map_err(|e| CliError::io(format!("cannot create {}: {e}", dir.display())))?;
    let path = dir.join(preset.filename(format.extension()));
    emit(&rows, format, Some(&path))?;
    eprintln!("{}: {}", preset.name(), preset.describe());
    eprintln!("wrote {} rows to {}", rows.len(), path.display());
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Spectrum { common, format } => run_spectrum(common, format),
        Command::State { common, format } => run_state(common, format),
        Command::Lqu {
            common,
            method,
            format,
        } => run_lqu(common, method, format),
        Command::Sweep {
            common,
            axis,
            min,
            max,
            steps,
            spacing,
            format,
            out,
        } => run_sweep_cmd(common, axis, *min, *max, *steps, spacing, format, out),
        Command::Figure {
            preset,
            format,
            out_dir,
        } => run_figure(preset, format, out_dir),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; anything else is a
            // usage problem and exits 1 (clap's own default would be 2,
            // which this tool reserves for i/o failures).
            let code: u8 = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        // The consumer closed stdout after taking what it wanted (piping
        // into `head` does this); nothing went wrong, so say nothing.
        Err(CliError::OutputClosed) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
