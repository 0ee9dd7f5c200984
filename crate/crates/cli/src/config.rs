//! Optional key-value configuration file: the same keys as the CLI flags,
//! one `key = value` pair per line, `#` comments. Flags always win over the
//! file; the file wins over built-in defaults.

use std::collections::BTreeMap;
use std::path::Path;

use crate::emit::DataFormat;
use crate::error::CliError;
use crate::sweep::{Spacing, SweepAxis, SweepModel};

/// Keys accepted in a config file, mirroring the flags.
pub const KNOWN_KEYS: [&str; 12] = [
    "model", "j", "delta", "dm", "temp", "axis", "min", "max", "steps", "spacing", "format",
    "out",
];

/// Parsed config file contents; every field optional.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FileConfig {
    pub model: Option<SweepModel>,
    pub j: Option<f64>,
    pub delta: Option<f64>,
    pub dm: Option<f64>,
    pub temp: Option<f64>,
    pub axis: Option<SweepAxis>,
    pub min: Option<f64>,
    pub max: Option<f64>,
    pub steps: Option<usize>,
    pub spacing: Option<Spacing>,
    pub format: Option<DataFormat>,
    pub out: Option<String>,
}

impl FileConfig {
    /// Read and parse a config file. A missing or unreadable file is an I/O
    /// error; bad syntax or unknown keys are validation errors.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::io(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Validation(msg) => {
                CliError::validation(format!("{}: {msg}", path.display()))
            }
            other => other,
        })
    }

    /// Parse config text.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut seen: BTreeMap<&str, &str> = BTreeMap::new();
        let mut cfg = FileConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::validation(format!(
                    "line {}: expected `key = value`, got `{line}`",
                    lineno + 1
                ))
            })?;
            let key = key.trim();
            let value = value.trim();
            if value.is_empty() {
                return Err(CliError::validation(format!(
                    "line {}: key `{key}` has no value",
                    lineno + 1
                )));
            }
            if let Some(first) = seen.get(key) {
                return Err(CliError::validation(format!(
                    "line {}: key `{key}` already set to `{first}`",
                    lineno + 1
                )));
            }

            let parse_f64 = |what: &str, v: &str| -> Result<f64, CliError> {
                v.parse().map_err(|_| {
                    CliError::validation(format!(
                        "line {}: `{what}` needs a number, got `{v}`",
                        lineno + 1
                    ))
                })
            };

            match key {
                "model" => cfg.model = Some(value.parse()?),
                "j" => cfg.j = Some(parse_f64("j", value)?),
                "delta" => cfg.delta = Some(parse_f64("delta", value)?),
                "dm" => cfg.dm = Some(parse_f64("dm", value)?),
                "temp" => cfg.temp = Some(parse_f64("temp", value)?),
                "axis" => cfg.axis = Some(value.parse()?),
                "min" => cfg.min = Some(parse_f64("min", value)?),
                "max" => cfg.max = Some(parse_f64("max", value)?),
                "steps" => {
                    cfg.steps = Some(value.parse().map_err(|_| {
                        CliError::validation(format!(
                            "line {}: `steps` needs a positive integer, got `{value}`",
                            lineno + 1
                        ))
                    })?)
                }
                "spacing" => cfg.spacing = Some(value.parse()?),
                "format" => cfg.format = Some(value.parse()?),
                "out" => cfg.out = Some(value.to_string()),
                other => {
                    return Err(CliError::validation(format!(
                        "line {}: unknown key `{other}` (known keys: {})",
                        lineno + 1,
                        KNOWN_KEYS.join(", ")
                    )))
                }
            }
            // Record the raw spelling for duplicate reporting. Safe: `key`
            // borrows from `text`, which outlives the map.
            let key_in_text = key;
            seen.insert(key_in_text, value);
        }
        Ok(cfg)
    }
}
