//! Run configuration: JSON config file mirrored by command-line flags,
//! flags winning.

use conecurve::assess::GridSpec;
use conecurve::curve::CurveSource;
use conecurve::io::read_curve_csv;
use conecurve::smarandache::{SmarandacheKind, SmarandacheSpec};
use conecurve::tol::TolerancePolicy;
use serde::{Deserialize, Serialize};
use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

/// Errors that map to exit code 2 (usage/config).
#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ConfigError {}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Projection {
    Iso,
    Xy,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeshConfig {
    #[serde(default = "default_mesh_ns")]
    pub n_s: usize,
    #[serde(default = "default_mesh_ntheta")]
    pub n_theta: usize,
}

fn default_mesh_ns() -> usize {
    201
}
fn default_mesh_ntheta() -> usize {
    64
}

impl Default for MeshConfig {
    fn default() -> Self {
        Self {
            n_s: 201,
            n_theta: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpecConfig {
    pub kind: SmarandacheKind,
    #[serde(default = "one")]
    pub b: f64,
    #[serde(default = "one")]
    pub c: f64,
    #[serde(default = "one")]
    pub cstar: f64,
}

fn one() -> f64 {
    1.0
}

/// Full run configuration. JSON files carry the same shape with every
/// field optional.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub curve: String,
    pub range: Range,
    pub n: usize,
    /// Empty means "the command's default spec set".
    pub specs: Vec<SpecConfig>,
    pub tolerances: TolerancePolicy,
    pub out: PathBuf,
    pub projection: Projection,
    pub mesh: MeshConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            curve: "example1".to_string(),
            range: Range { lo: -2.0, hi: 2.0 },
            n: 401,
            specs: Vec::new(),
            tolerances: TolerancePolicy::default(),
            out: PathBuf::from("out"),
            projection: Projection::Iso,
            mesh: MeshConfig::default(),
        }
    }
}

/// The JSON file form: every field optional, overlaid on the defaults.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartialConfig {
    curve: Option<String>,
    range: Option<Range>,
    n: Option<usize>,
    specs: Option<Vec<SpecConfig>>,
    tolerances: Option<TolerancePolicy>,
    out: Option<PathBuf>,
    projection: Option<Projection>,
    mesh: Option<MeshConfig>,
}

impl RunConfig {
    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let file = File::open(path)
            .map_err(|e| ConfigError(format!("cannot open config {}: {e}", path.display())))?;
        let partial: PartialConfig = serde_json::from_reader(BufReader::new(file))
            .map_err(|e| ConfigError(format!("bad config {}: {e}", path.display())))?;
        let mut cfg = RunConfig::default();
        cfg.apply(partial);
        Ok(cfg)
    }

    fn apply(&mut self, p: PartialConfig) {
        if let Some(v) = p.curve {
            self.curve = v;
        }
        if let Some(v) = p.range {
            self.range = v;
        }
        if let Some(v) = p.n {
            self.n = v;
        }
        if let Some(v) = p.specs {
            self.specs = v;
        }
        if let Some(v) = p.tolerances {
            self.tolerances = v;
        }
        if let Some(v) = p.out {
            self.out = v;
        }
        if let Some(v) = p.projection {
            self.projection = v;
        }
        if let Some(v) = p.mesh {
            self.mesh = v;
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        // negated form also rejects NaN bounds
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(self.range.lo < self.range.hi) {
            return Err(ConfigError(format!(
                "range lo must be below hi, got {}:{}",
                self.range.lo, self.range.hi
            )));
        }
        if self.n < 2 {
            return Err(ConfigError(format!("n must be at least 2, got {}", self.n)));
        }
        if self.mesh.n_s < 2 || self.mesh.n_theta < 1 {
            return Err(ConfigError(format!(
                "mesh needs n_s >= 2 and n_theta >= 1, got {}x{}",
                self.mesh.n_s, self.mesh.n_theta
            )));
        }
        Ok(())
    }

    pub fn grid(&self) -> GridSpec {
        GridSpec {
            lo: self.range.lo,
            hi: self.range.hi,
            n: self.n,
        }
    }

    /// Resolve the curve selector to a source. For `csv:` curves the
    /// file's own grid replaces the configured range.
    pub fn source(&self) -> Result<CurveSource, ConfigError> {
        if self.curve == "example1" {
            Ok(CurveSource::example1())
        } else if let Some(name) = self.curve.strip_prefix("f:") {
            CurveSource::generating(name).map_err(|e| ConfigError(e.to_string()))
        } else if let Some(path) = self.curve.strip_prefix("csv:") {
            let file = File::open(path)
                .map_err(|e| ConfigError(format!("cannot open curve file {path}: {e}")))?;
            let sampled = read_curve_csv(BufReader::new(file))
                .map_err(|e| ConfigError(format!("{path}: {e}")))?;
            Ok(CurveSource::Sampled(sampled))
        } else {
            Err(ConfigError(format!(
                "unknown curve selector `{}` (expected example1, f:NAME or csv:PATH)",
                self.curve
            )))
        }
    }

    /// The effective evaluation grid: a csv curve brings its own.
    pub fn effective_grid(&self, source: &CurveSource) -> GridSpec {
        match source {
            CurveSource::Sampled(sc) => GridSpec {
                lo: sc.s_at(0),
                hi: sc.s_at(sc.len() - 1),
                n: sc.len(),
            },
            _ => self.grid(),
        }
    }

    pub fn resolved_specs(&self, defaults: Vec<SmarandacheSpec>) -> Result<Vec<SmarandacheSpec>, ConfigError> {
        if self.specs.is_empty() {
            return Ok(defaults);
        }
        self.specs
            .iter()
            .map(|s| {
                SmarandacheSpec::new(s.kind, s.b, s.c, s.cstar)
                    .map_err(|e| ConfigError(e.to_string()))
            })
            .collect()
    }
}

/// Parse `LO:HI`.
pub fn parse_range(s: &str) -> Result<Range, ConfigError> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| ConfigError(format!("range must be LO:HI, got `{s}`")))?;
    let lo: f64 = lo
        .trim()
        .parse()
        .map_err(|_| ConfigError(format!("bad range lower bound `{lo}`")))?;
    let hi: f64 = hi
        .trim()
        .parse()
        .map_err(|_| ConfigError(format!("bad range upper bound `{hi}`")))?;
    Ok(Range { lo, hi })
}

/// Parse `NAME=V` tolerance overrides onto a policy.
pub fn apply_tol_overrides(
    tol: &mut TolerancePolicy,
    overrides: &[String],
) -> Result<(), ConfigError> {
    for item in overrides {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| ConfigError(format!("tolerance override must be NAME=V, got `{item}`")))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| ConfigError(format!("bad tolerance value in `{item}`")))?;
        tol.set(name.trim(), value).map_err(ConfigError)?;
    }
    Ok(())
}

/// Parse a kind token.
pub fn parse_kind(t: &str) -> Result<SmarandacheKind, ConfigError> {
    SmarandacheKind::from_token(t)
        .ok_or_else(|| ConfigError(format!("unknown kind `{t}` (expected xa, xy, ay or xay)")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        let r = parse_range("-2:2").unwrap();
        assert_eq!((r.lo, r.hi), (-2.0, 2.0));
        assert!(parse_range("nope").is_err());
        assert!(parse_range("1:x").is_err());
    }

    #[test]
    fn tol_overrides() {
        let mut t = TolerancePolicy::default();
        apply_tol_overrides(&mut t, &["cone=1e-8".to_string()]).unwrap();
        assert_eq!(t.cone, 1e-8);
        assert!(apply_tol_overrides(&mut t, &["bogus=1".to_string()]).is_err());
    }

    #[test]
    fn partial_config_overlays_defaults() {
        let dir = std::env::temp_dir().join("conecurve-config-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cfg.json");
        std::fs::write(&path, r#"{"n": 11, "projection": "xy"}"#).unwrap();
        let cfg = RunConfig::from_file(&path).unwrap();
        assert_eq!(cfg.n, 11);
        assert_eq!(cfg.projection, Projection::Xy);
        assert_eq!(cfg.curve, "example1");
    }

    #[test]
    fn unknown_config_keys_rejected() {
        let dir = std::env::temp_dir().join("conecurve-config-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.json");
        std::fs::write(&path, r#"{"grid": 3}"#).unwrap();
        assert!(RunConfig::from_file(&path).is_err());
    }
}
