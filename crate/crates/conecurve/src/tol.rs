//! Centralized tolerance policy.
//!
//! Every threshold used by the library is defined here with its rationale,
//! so that no module carries ad-hoc magic numbers. All defaults assume
//! analytically exact derivative jets; finite-difference jets get the
//! looser `frame_fd` bound.

use serde::{Deserialize, Serialize};

/// Absolute tolerance on `<p,p>` for membership in the null cone.
///
/// Exact curve sources satisfy the cone equation to rounding (~1e-15 on
/// the default grid); 1e-9 leaves six orders of margin while still
/// rejecting curves that are merely close to the cone.
pub const CONE_TOL: f64 = 1e-9;

/// Absolute tolerance on `<d1,d1> - 1` for unit-speed parametrization.
pub const SPEED_TOL: f64 = 1e-9;

/// Frame-condition residual bound for frames built from exact jets.
pub const FRAME_TOL_EXACT: f64 = 1e-9;

/// Frame-condition residual bound for frames built from finite-difference
/// jets (stencil truncation plus rounding dominates).
pub const FRAME_TOL_FD: f64 = 1e-5;

/// Minimum `<gamma', gamma'>` for a partner sample to count as admissible.
///
/// Near the lightlike boundary the chain-rule oracle conditions like
/// eps/sigma^4 (the second-derivative rescaling divides by sigma^4), so
/// identity residuals at sigma^2 = 1e-2 reach ~5e-10 for frame magnitudes
/// up to ~5. This floor certifies the 1e-9 partner-identity bounds at
/// every admissible sample; on the default grid and sweep it excludes
/// fewer than 0.1% of the otherwise-admissible points.
pub const ADMISSIBLE_TOL: f64 = 1e-2;

/// Relative deviation below which a registered closed form is Confirmed.
/// Exact jets leave at least three orders of margin to a genuine
/// transcription error, which shows up as an O(1) relative deviation.
pub const CONFIRM_TOL: f64 = 1e-6;

/// Denominator floor for relative deviations, guarding the zero crossings
/// of partner curvatures.
pub const REL_DEV_FLOOR: f64 = 1e-3;

/// Minimum admissible samples required before a Confirmed verdict.
pub const MIN_SAMPLES: usize = 50;

/// Absolute tolerance per panel for the adaptive arc-length quadrature.
pub const QUAD_TOL: f64 = 1e-10;

/// Below this `|f_s|` (or `|x3 - x1|`) the generating-function map is
/// treated as degenerate.
pub const GENERATOR_EPS: f64 = 1e-12;

/// Smallest admissible finite-difference step. At h = 6e-5 the rounding
/// term eps/h^3 of the third derivative reaches ~1e-3 for unit-scale
/// data, swamping the h^4 truncation term.
pub const FD_MIN_STEP: f64 = 6e-5;

/// Runtime-adjustable tolerance bundle carried through assessments and the
/// command-line front end; defaults mirror the constants above.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TolerancePolicy {
    #[serde(default = "d_cone")]
    pub cone: f64,
    #[serde(default = "d_speed")]
    pub speed: f64,
    #[serde(default = "d_frame")]
    pub frame: f64,
    #[serde(default = "d_frame_fd")]
    pub frame_fd: f64,
    #[serde(default = "d_admissible")]
    pub admissible: f64,
    #[serde(default = "d_confirm")]
    pub confirm: f64,
    #[serde(default = "d_rel_floor")]
    pub rel_floor: f64,
    #[serde(default = "d_min_samples")]
    pub min_samples: usize,
    #[serde(default = "d_quad")]
    pub quad: f64,
}

fn d_cone() -> f64 {
    CONE_TOL
}
fn d_speed() -> f64 {
    SPEED_TOL
}
fn d_frame() -> f64 {
    FRAME_TOL_EXACT
}
fn d_frame_fd() -> f64 {
    FRAME_TOL_FD
}
fn d_admissible() -> f64 {
    ADMISSIBLE_TOL
}
fn d_confirm() -> f64 {
    CONFIRM_TOL
}
fn d_rel_floor() -> f64 {
    REL_DEV_FLOOR
}
fn d_min_samples() -> usize {
    MIN_SAMPLES
}
fn d_quad() -> f64 {
    QUAD_TOL
}

impl Default for TolerancePolicy {
    fn default() -> Self {
        Self {
            cone: CONE_TOL,
            speed: SPEED_TOL,
            frame: FRAME_TOL_EXACT,
            frame_fd: FRAME_TOL_FD,
            admissible: ADMISSIBLE_TOL,
            confirm: CONFIRM_TOL,
            rel_floor: REL_DEV_FLOOR,
            min_samples: MIN_SAMPLES,
            quad: QUAD_TOL,
        }
    }
}

impl TolerancePolicy {
    /// Set a tolerance by name (the names accepted by `--tol NAME=V`).
    pub fn set(&mut self, name: &str, value: f64) -> Result<(), String> {
        #[allow(clippy::neg_cmp_op_on_partial_ord)] // also rejects NaN
        if !(value > 0.0) {
            return Err(format!("tolerance {name} must be > 0, got {value}"));
        }
        match name {
            "cone" => self.cone = value,
            "speed" => self.speed = value,
            "frame" => self.frame = value,
            "frame_fd" => self.frame_fd = value,
            "admissible" => self.admissible = value,
            "confirm" => self.confirm = value,
            "rel_floor" => self.rel_floor = value,
            "quad" => self.quad = value,
            "min_samples" => self.min_samples = value as usize,
            _ => return Err(format!("unknown tolerance name: {name}")),
        }
        Ok(())
    }
}
