use clap::{Args, Parser, Subcommand};
use conecurve_cli::config::{
    apply_tol_overrides, parse_kind, parse_range, RunConfig, SpecConfig,
};
use conecurve_cli::figure::Panel;
use conecurve_cli::run::{cmd_assess, cmd_eval, cmd_figure, CliError};
use std::path::PathBuf;
use std::process::ExitCode;

/// Null-cone curve geometry: frames, partner curves, formula audits and
/// figure data.
#[derive(Parser)]
#[command(name = "conecurve", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate curve, frame and partner trajectories to CSV files.
    Eval(CommonArgs),
    /// Audit the registered closed forms against the oracle and write
    /// report.json / report.md.
    Assess(CommonArgs),
    /// Emit figure panels (A-J) as SVG, plus OBJ meshes for surfaces.
    Figure(FigureArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// JSON config file; flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Curve selector: example1, f:NAME (sinh, exp, cubic) or csv:PATH.
    #[arg(long)]
    curve: Option<String>,
    /// Evaluation range LO:HI.
    #[arg(long, allow_hyphen_values = true)]
    range: Option<String>,
    /// Number of grid points.
    #[arg(long)]
    n: Option<usize>,
    /// Construction kinds to evaluate (repeatable): xa, xy, ay, xay.
    #[arg(long = "kind")]
    kinds: Vec<String>,
    /// Constant b for the listed kinds.
    #[arg(long)]
    b: Option<f64>,
    /// Constant c for the listed kinds.
    #[arg(long)]
    c: Option<f64>,
    /// Constant c* (xay only).
    #[arg(long)]
    cstar: Option<f64>,
    /// Tolerance overrides NAME=V (repeatable); names: cone, speed, frame,
    /// frame_fd, admissible, confirm, rel_floor, quad, min_samples.
    #[arg(long = "tol")]
    tols: Vec<String>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Projection for SVG output: iso or xy.
    #[arg(long)]
    projection: Option<String>,
}

#[derive(Args)]
struct FigureArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Panel letter A-J; omitted means all ten.
    #[arg(long)]
    panel: Option<String>,
}

fn build_config(args: &CommonArgs) -> Result<RunConfig, CliError> {
    let mut cfg = match &args.config {
        Some(path) => RunConfig::from_file(path)?,
        None => RunConfig::default(),
    };
    if let Some(curve) = &args.curve {
        cfg.curve = curve.clone();
    }
    if let Some(range) = &args.range {
        cfg.range = parse_range(range)?;
    }
    if let Some(n) = args.n {
        cfg.n = n;
    }
    if !args.kinds.is_empty() {
        let b = args.b.unwrap_or(1.0);
        let c = args.c.unwrap_or(1.0);
        let cstar = args.cstar.unwrap_or(1.0);
        cfg.specs = args
            .kinds
            .iter()
            .map(|k| {
                Ok(SpecConfig {
                    kind: parse_kind(k)?,
                    b,
                    c,
                    cstar,
                })
            })
            .collect::<Result<_, CliError>>()?;
    } else if args.b.is_some() || args.c.is_some() || args.cstar.is_some() {
        // constants without kinds apply to every configured spec
        for spec in &mut cfg.specs {
            if let Some(b) = args.b {
                spec.b = b;
            }
            if let Some(c) = args.c {
                spec.c = c;
            }
            if let Some(cstar) = args.cstar {
                spec.cstar = cstar;
            }
        }
    }
    apply_tol_overrides(&mut cfg.tolerances, &args.tols)?;
    if let Some(out) = &args.out {
        cfg.out = out.clone();
    }
    if let Some(p) = &args.projection {
        cfg.projection = match p.as_str() {
            "iso" => conecurve_cli::config::Projection::Iso,
            "xy" => conecurve_cli::config::Projection::Xy,
            other => {
                return Err(CliError::Config(format!(
                    "unknown projection `{other}` (expected iso or xy)"
                )))
            }
        };
    }
    Ok(cfg)
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Eval(args) => cmd_eval(&build_config(&args)?),
        Command::Assess(args) => cmd_assess(&build_config(&args)?),
        Command::Figure(args) => {
            let panel = match &args.panel {
                Some(p) => Some(Panel::from_letter(p).ok_or_else(|| {
                    CliError::Config(format!("unknown panel `{p}` (expected A-J)"))
                })?),
                None => None,
            };
            cmd_figure(panel, &build_config(&args.common)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
