//! The ten figure panels: the base curve, its four partner curves, and the
//! five corresponding surfaces of revolution.
//!
//! Curve panels are projected polylines; partner polylines are broken at
//! admissibility boundaries rather than bridged. Surface panels emit a
//! triangulated OBJ mesh plus a wireframe SVG preview. All outputs are
//! deterministic functions of the configuration.

use crate::config::RunConfig;
use crate::obj::{revolution_mesh, wireframe};
use crate::svg::{polyline_svg, project, projection_desc};
use conecurve::curve::CurveSource;
use conecurve::lorentz::LorentzVector;
use conecurve::smarandache::{partner_trajectory, SmarandacheKind, SmarandacheSpec};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Panel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    J,
}

impl Panel {
    pub const ALL: [Panel; 10] = [
        Panel::A,
        Panel::B,
        Panel::C,
        Panel::D,
        Panel::E,
        Panel::F,
        Panel::G,
        Panel::H,
        Panel::I,
        Panel::J,
    ];

    pub fn from_letter(s: &str) -> Option<Panel> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Some(Panel::A),
            "B" => Some(Panel::B),
            "C" => Some(Panel::C),
            "D" => Some(Panel::D),
            "E" => Some(Panel::E),
            "F" => Some(Panel::F),
            "G" => Some(Panel::G),
            "H" => Some(Panel::H),
            "I" => Some(Panel::I),
            "J" => Some(Panel::J),
            _ => None,
        }
    }

    pub fn letter(&self) -> char {
        match self {
            Panel::A => 'A',
            Panel::B => 'B',
            Panel::C => 'C',
            Panel::D => 'D',
            Panel::E => 'E',
            Panel::F => 'F',
            Panel::G => 'G',
            Panel::H => 'H',
            Panel::I => 'I',
            Panel::J => 'J',
        }
    }

    /// The partner kind drawn by this panel; None for the base curve.
    pub fn kind(&self) -> Option<SmarandacheKind> {
        match self {
            Panel::A | Panel::B => None,
            Panel::C | Panel::D => Some(SmarandacheKind::XAlpha),
            Panel::E | Panel::F => Some(SmarandacheKind::XY),
            Panel::G | Panel::H => Some(SmarandacheKind::AlphaY),
            Panel::I | Panel::J => Some(SmarandacheKind::XAlphaY),
        }
    }

    pub fn is_surface(&self) -> bool {
        matches!(self, Panel::B | Panel::D | Panel::F | Panel::H | Panel::J)
    }
}

impl fmt::Display for Panel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// One produced file.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureFile {
    pub name: String,
    pub bytes: String,
}

#[derive(Debug)]
pub enum FigureError {
    /// No admissible sample anywhere on the grid (exit code 3 territory).
    EmptyDomain(String),
    Eval(String),
}

impl fmt::Display for FigureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FigureError::EmptyDomain(m) => write!(f, "empty domain: {m}"),
            FigureError::Eval(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for FigureError {}

fn spec_for(config: &RunConfig, kind: SmarandacheKind) -> Result<SmarandacheSpec, FigureError> {
    // figure constants default to 1; an explicit spec of the right kind wins
    let found = config.specs.iter().find(|s| s.kind == kind);
    let (b, c, cstar) = match found {
        Some(s) => (s.b, s.c, s.cstar),
        None => (1.0, 1.0, 1.0),
    };
    SmarandacheSpec::new(kind, b, c, cstar).map_err(|e| FigureError::Eval(e.to_string()))
}

/// Admissibility-split point segments for a panel's generating curve.
fn panel_segments(
    panel: Panel,
    config: &RunConfig,
    source: &CurveSource,
    n: usize,
) -> Result<Vec<Vec<LorentzVector>>, FigureError> {
    let grid = config.effective_grid(source);
    match panel.kind() {
        None => {
            let jets = source
                .jets_on_grid(grid.lo, grid.hi, n)
                .map_err(|e| FigureError::Eval(e.to_string()))?;
            Ok(vec![jets.iter().map(|j| j.p).collect()])
        }
        Some(kind) => {
            let spec = spec_for(config, kind)?;
            let tr = partner_trajectory(&spec, source, grid.lo, grid.hi, n, &config.tolerances)
                .map_err(|e| FigureError::Eval(e.to_string()))?;
            if tr.samples.is_empty() {
                return Err(FigureError::EmptyDomain(format!(
                    "partner {} has no admissible sample on [{}, {}]",
                    spec.label(),
                    grid.lo,
                    grid.hi
                )));
            }
            Ok(tr
                .segments
                .iter()
                .map(|&(a, b)| tr.samples[a..b].iter().map(|p| p.gamma).collect())
                .collect())
        }
    }
}

fn panel_desc(panel: Panel, config: &RunConfig, source: &CurveSource) -> String {
    let grid = config.effective_grid(source);
    let spec_note = match panel.kind() {
        Some(kind) => {
            let spec = spec_for(config, kind).expect("validated");
            format!(" spec={}", spec.label())
        }
        None => String::new(),
    };
    format!(
        "panel={} curve={} range=[{},{}] n={}{} projection=({})",
        panel.letter(),
        source.descriptor(),
        grid.lo,
        grid.hi,
        grid.n,
        spec_note,
        projection_desc(config.projection)
    )
}

/// Produce the files for one panel.
pub fn figure(panel: Panel, config: &RunConfig) -> Result<Vec<FigureFile>, FigureError> {
    let source = config
        .source()
        .map_err(|e| FigureError::Eval(e.to_string()))?;
    let grid = config.effective_grid(&source);
    if panel.is_surface() {
        // sampled curves only provide jets on their own grid
        let n_profile = if source.is_exact() {
            config.mesh.n_s
        } else {
            grid.n
        };
        let segments = panel_segments(panel, config, &source, n_profile)?;
        // one mesh per admissible segment, concatenated into a single file
        let mut obj_text = String::new();
        let mut preview: Vec<Vec<(f64, f64)>> = Vec::new();
        let n_theta = config.mesh.n_theta;
        let mut base = 0usize;
        for profile in &segments {
            let mesh = revolution_mesh(profile, n_theta);
            for v in &mesh.vertices {
                obj_text.push_str(&format!("v {} {} {}\n", v.x1, v.x2, v.x3));
            }
            for f in &mesh.faces {
                obj_text.push_str(&format!(
                    "f {} {} {}\n",
                    base + f[0] + 1,
                    base + f[1] + 1,
                    base + f[2] + 1
                ));
            }
            base += mesh.vertices.len();
            let ring_stride = (profile.len() / 20).max(1);
            let sector_stride = (n_theta / 8).max(1);
            for line in wireframe(profile, n_theta, ring_stride, sector_stride) {
                preview.push(
                    line.iter()
                        .map(|p| project(config.projection, p))
                        .collect(),
                );
            }
        }
        let desc = panel_desc(panel, config, &source);
        Ok(vec![
            FigureFile {
                name: format!("panel_{}.obj", panel.letter()),
                bytes: obj_text,
            },
            FigureFile {
                name: format!("panel_{}.svg", panel.letter()),
                bytes: polyline_svg(&desc, &preview),
            },
        ])
    } else {
        let segments = panel_segments(panel, config, &source, grid.n)?;
        let polylines: Vec<Vec<(f64, f64)>> = segments
            .iter()
            .map(|seg| seg.iter().map(|p| project(config.projection, p)).collect())
            .collect();
        let desc = panel_desc(panel, config, &source);
        Ok(vec![FigureFile {
            name: format!("panel_{}.svg", panel.letter()),
            bytes: polyline_svg(&desc, &polylines),
        }])
    }
}
