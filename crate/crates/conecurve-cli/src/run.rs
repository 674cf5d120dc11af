//! The three commands behind the binary: evaluate, assess, figure.
//!
//! Exit-code contract: 0 on success, 2 for usage/configuration problems,
//! 3 when the requested domain is empty (every sample inadmissible, or
//! every formula DomainEmpty). Discrepant verdicts are results, not
//! failures.

use crate::config::{ConfigError, RunConfig};
use crate::figure::{figure, FigureError, Panel};
use conecurve::assess::{assess, default_sweep, Verdict};
use conecurve::frame::frames_on_grid;
use conecurve::io::{write_curve_csv, write_frame_csv, write_partner_csv};
use conecurve::report::{render_report, ReportFormat};
use conecurve::smarandache::{partner_trajectory, SmarandacheKind, SmarandacheSpec};
use std::fs;
use std::path::Path;

/// Failure classes mapped to process exit codes by `main`.
#[derive(Debug)]
pub enum CliError {
    /// Exit 2.
    Config(String),
    /// Exit 3.
    EmptyDomain(String),
    /// Exit 1.
    Other(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) | CliError::EmptyDomain(m) | CliError::Other(m) => {
                write!(f, "{m}")
            }
        }
    }
}

impl std::error::Error for CliError {}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Config(e.0)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::EmptyDomain(_) => 3,
            CliError::Other(_) => 1,
        }
    }
}

fn write_out(dir: &Path, name: &str, bytes: &[u8]) -> Result<(), CliError> {
    fs::create_dir_all(dir)
        .map_err(|e| CliError::Other(format!("cannot create {}: {e}", dir.display())))?;
    let path = dir.join(name);
    fs::write(&path, bytes)
        .map_err(|e| CliError::Other(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}

fn default_eval_specs() -> Vec<SmarandacheSpec> {
    SmarandacheKind::ALL
        .iter()
        .map(|&k| SmarandacheSpec::new(k, 1.0, 1.0, 1.0).expect("unit constants"))
        .collect()
}

/// `eval`: write curve, frame and partner trajectories as CSV.
pub fn cmd_eval(config: &RunConfig) -> Result<(), CliError> {
    config.validate()?;
    let source = config.source()?;
    let grid = config.effective_grid(&source);
    let jets = source
        .jets_on_grid(grid.lo, grid.hi, grid.n)
        .map_err(|e| CliError::Config(e.to_string()))?;

    let mut buf = Vec::new();
    write_curve_csv(&mut buf, &jets).map_err(|e| CliError::Other(e.to_string()))?;
    write_out(&config.out, "curve.csv", &buf)?;

    let frames = frames_on_grid(&jets, &config.tolerances)
        .map_err(|e| CliError::Other(e.to_string()))?;
    let mut buf = Vec::new();
    write_frame_csv(&mut buf, &frames).map_err(|e| CliError::Other(e.to_string()))?;
    write_out(&config.out, "frame.csv", &buf)?;

    let specs = config.resolved_specs(default_eval_specs())?;
    let mut empty: Vec<String> = Vec::new();
    for spec in &specs {
        let tr = partner_trajectory(
            spec,
            &source,
            grid.lo,
            grid.hi,
            grid.n,
            &config.tolerances,
        )
        .map_err(|e| CliError::Other(e.to_string()))?;
        let mut buf = Vec::new();
        write_partner_csv(&mut buf, &tr.samples).map_err(|e| CliError::Other(e.to_string()))?;
        write_out(&config.out, &format!("partner_{}.csv", spec.kind.token()), &buf)?;
        if tr.samples.is_empty() {
            empty.push(spec.label());
        }
    }
    if !empty.is_empty() {
        return Err(CliError::EmptyDomain(format!(
            "no admissible sample on the whole grid for: {}",
            empty.join(", ")
        )));
    }
    Ok(())
}

/// `assess`: run the audit and write report.json + report.md.
pub fn cmd_assess(config: &RunConfig) -> Result<(), CliError> {
    config.validate()?;
    let source = config.source()?;
    let grid = config.effective_grid(&source);
    let specs = config.resolved_specs(default_sweep())?;
    let report = assess(&source, &specs, &grid, &config.tolerances)
        .map_err(|e| CliError::Other(e.to_string()))?;
    write_out(
        &config.out,
        "report.json",
        render_report(&report, ReportFormat::Json).as_bytes(),
    )?;
    write_out(
        &config.out,
        "report.md",
        render_report(&report, ReportFormat::Markdown).as_bytes(),
    )?;
    if !report.verdicts.is_empty()
        && report
            .verdicts
            .iter()
            .all(|v| v.verdict == Verdict::DomainEmpty)
    {
        return Err(CliError::EmptyDomain(
            "every registered formula had an empty admissible domain".to_string(),
        ));
    }
    Ok(())
}

/// `figure`: emit one panel, or all ten when none is named.
pub fn cmd_figure(panel: Option<Panel>, config: &RunConfig) -> Result<(), CliError> {
    config.validate()?;
    let panels: Vec<Panel> = match panel {
        Some(p) => vec![p],
        None => Panel::ALL.to_vec(),
    };
    for p in panels {
        let files = figure(p, config).map_err(|e| match e {
            FigureError::EmptyDomain(m) => CliError::EmptyDomain(m),
            FigureError::Eval(m) => CliError::Other(m),
        })?;
        for f in files {
            write_out(&config.out, &f.name, f.bytes.as_bytes())?;
        }
    }
    Ok(())
}
