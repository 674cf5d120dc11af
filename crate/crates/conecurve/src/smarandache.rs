//! Partner-curve constructions over the asymptotic orthonormal frame, and
//! the chain-rule oracle for their geometry.
//!
//! A partner (Smarandache) curve fixes a linear combination of the base
//! frame:
//!
//! ```text
//! xa:  gamma = (c/b) x + alpha
//! xy:  gamma = (c x + b y) / sqrt(2cb)
//! ay:  gamma = alpha + (b/c) y
//! xay: gamma = (c x + b alpha + c* y) / sqrt(2cc* + b^2)
//! ```
//!
//! Everything the oracle computes happens in frame coordinates. Writing
//! `gamma = a0 x + a1 alpha + a2 y` with constant coefficients and moving
//! the frame by the cone frame equations gives, per unit of the *base*
//! parameter,
//!
//! ```text
//! gamma'  = (a1 k) x + (a0 - a2 k) alpha - a1 y
//! gamma'' = (a1 k' + (a0 - a2 k) k) x + (2 a1 k - a2 k') alpha - (a0 - a2 k) y
//! ```
//!
//! and the partner's own arc length s* advances with
//! `sigma = ds*/ds = sqrt(<gamma', gamma'>)`, defined only while the
//! tangent is spacelike. Derivatives with respect to s* follow by the
//! chain rule; the partner curvature is `-<d2gamma/ds*^2, .>/2` exactly as
//! for the base curve. Closed forms for these quantities are registered
//! and audited elsewhere ([`crate::registry`]); this module is the ground
//! truth they are audited against.

use crate::curve::{CurveJet, CurveSource};
use crate::frame::{frame_at, kappa_prime, FrameError, FrameSample};
use crate::lorentz::LorentzVector;
use crate::quad::{integrate_adaptive, QuadError};
use crate::tol::TolerancePolicy;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SmarandacheError {
    #[error("construction constant {name} must be strictly positive, got {value}")]
    NonPositiveConstant { name: &'static str, value: f64 },
    #[error("partner tangent is not spacelike at s = {s}: <gamma',gamma'> = {speed2:e}")]
    NonSpacelikeTangent { s: f64, speed2: f64 },
    #[error("domain violation at s = {s}: {what}")]
    DomainViolation { s: f64, what: String },
    #[error(transparent)]
    Quadrature(#[from] QuadError),
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Curve(#[from] crate::curve::CurveError),
}

/// Which linear combination of the frame the partner curve takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SmarandacheKind {
    #[serde(rename = "xa")]
    XAlpha,
    #[serde(rename = "xy")]
    XY,
    #[serde(rename = "ay")]
    AlphaY,
    #[serde(rename = "xay")]
    XAlphaY,
}

impl SmarandacheKind {
    pub const ALL: [SmarandacheKind; 4] = [
        SmarandacheKind::XAlpha,
        SmarandacheKind::XY,
        SmarandacheKind::AlphaY,
        SmarandacheKind::XAlphaY,
    ];

    pub fn token(&self) -> &'static str {
        match self {
            SmarandacheKind::XAlpha => "xa",
            SmarandacheKind::XY => "xy",
            SmarandacheKind::AlphaY => "ay",
            SmarandacheKind::XAlphaY => "xay",
        }
    }

    pub fn from_token(t: &str) -> Option<Self> {
        match t {
            "xa" => Some(SmarandacheKind::XAlpha),
            "xy" => Some(SmarandacheKind::XY),
            "ay" => Some(SmarandacheKind::AlphaY),
            "xay" => Some(SmarandacheKind::XAlphaY),
            _ => None,
        }
    }
}

impl std::fmt::Display for SmarandacheKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

/// Construction kind plus its strictly positive constants. `cstar` is only
/// read by the xay kind but always carried.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SmarandacheSpec {
    pub kind: SmarandacheKind,
    pub b: f64,
    pub c: f64,
    pub cstar: f64,
}

impl SmarandacheSpec {
    pub fn new(
        kind: SmarandacheKind,
        b: f64,
        c: f64,
        cstar: f64,
    ) -> Result<Self, SmarandacheError> {
        for (name, value) in [("b", b), ("c", c), ("cstar", cstar)] {
            #[allow(clippy::neg_cmp_op_on_partial_ord)] // also rejects NaN
            if !(value > 0.0) || !value.is_finite() {
                return Err(SmarandacheError::NonPositiveConstant { name, value });
            }
        }
        Ok(Self { kind, b, c, cstar })
    }

    /// Frame coefficients `(a0, a1, a2)` of the construction, including the
    /// normalizers of the xy and xay kinds.
    pub fn coefficients(&self) -> [f64; 3] {
        let (b, c, cs) = (self.b, self.c, self.cstar);
        match self.kind {
            SmarandacheKind::XAlpha => [c / b, 1.0, 0.0],
            SmarandacheKind::XY => {
                let n = (2.0 * c * b).sqrt();
                [c / n, 0.0, b / n]
            }
            SmarandacheKind::AlphaY => [0.0, 1.0, b / c],
            SmarandacheKind::XAlphaY => {
                let n = (2.0 * c * cs + b * b).sqrt();
                [c / n, b / n, cs / n]
            }
        }
    }

    /// Compact display like `xy(b=1,c=2)`; xay includes `cstar`.
    pub fn label(&self) -> String {
        match self.kind {
            SmarandacheKind::XAlphaY => format!(
                "{}(b={},c={},cstar={})",
                self.kind, self.b, self.c, self.cstar
            ),
            _ => format!("{}(b={},c={})", self.kind, self.b, self.c),
        }
    }
}

/// Partner-curve data at one base-parameter value, produced by the
/// chain-rule oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartnerSample {
    /// Base-curve parameter.
    pub s: f64,
    /// Partner arc length, measured from the start of the evaluated
    /// segment. Zero for standalone single-point oracle calls.
    pub sstar: f64,
    pub gamma: LorentzVector,
    /// ds*/ds at this point.
    pub sigma: f64,
    pub alpha_g: LorentzVector,
    pub y_g: LorentzVector,
    pub kappa_g: f64,
    /// Measured `<gamma, gamma>`; recorded, never asserted.
    pub gamma_self: f64,
}

/// Inner product of two vectors given in frame coordinates:
/// `<x,y> = <alpha,alpha> = 1`, all other pairings vanish.
fn coord_inner(u: &[f64; 3], v: &[f64; 3]) -> f64 {
    u[0] * v[2] + u[2] * v[0] + u[1] * v[1]
}

fn coords_to_vector(c: &[f64; 3], fr: &FrameSample) -> LorentzVector {
    fr.x.scale(c[0]) + fr.alpha.scale(c[1]) + fr.y.scale(c[2])
}

/// Express a vector in frame coordinates through the dual pairing
/// `(<v,y>, <v,alpha>, <v,x>)`.
pub fn frame_coordinates(v: &LorentzVector, fr: &FrameSample) -> [f64; 3] {
    [v.inner(&fr.y), v.inner(&fr.alpha), v.inner(&fr.x)]
}

/// The construction itself: the specified combination of the frame.
pub fn construct(spec: &SmarandacheSpec, fr: &FrameSample) -> LorentzVector {
    coords_to_vector(&spec.coefficients(), fr)
}

/// `<gamma'(s), gamma'(s)>` as a function of the base curvature alone.
pub fn speed_squared_from_kappa(spec: &SmarandacheSpec, kappa: f64) -> f64 {
    let a = spec.coefficients();
    let u2 = a[0] - a[2] * kappa;
    u2 * u2 - 2.0 * a[1] * a[1] * kappa
}

/// Partner speed `sigma = ds*/ds` from the frame at one point.
pub fn partner_speed_oracle(
    spec: &SmarandacheSpec,
    fr: &FrameSample,
    tol: &TolerancePolicy,
) -> Result<f64, SmarandacheError> {
    let speed2 = speed_squared_from_kappa(spec, fr.kappa);
    if speed2 <= tol.admissible {
        return Err(SmarandacheError::NonSpacelikeTangent {
            s: fr.s,
            speed2,
        });
    }
    Ok(speed2.sqrt())
}

/// Frame coordinates of the partner data, before conversion to ambient
/// vectors. Exposed for the registry audit, which compares printed
/// coefficient rows in exactly this basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartnerCoords {
    pub gamma: [f64; 3],
    pub sigma: f64,
    pub alpha_g: [f64; 3],
    /// d^2 gamma / ds*^2
    pub gamma_ss: [f64; 3],
    pub y_g: [f64; 3],
    pub kappa_g: f64,
}

/// Chain-rule oracle in frame coordinates, from `kappa` and `kappa' = dk/ds`.
pub fn partner_coords(
    spec: &SmarandacheSpec,
    s: f64,
    kappa: f64,
    dkappa: f64,
    tol: &TolerancePolicy,
) -> Result<PartnerCoords, SmarandacheError> {
    let a = spec.coefficients();
    let u = [a[1] * kappa, a[0] - a[2] * kappa, -a[1]];
    let v = [
        a[1] * dkappa + (a[0] - a[2] * kappa) * kappa,
        2.0 * a[1] * kappa - a[2] * dkappa,
        -(a[0] - a[2] * kappa),
    ];
    let speed2 = coord_inner(&u, &u);
    if speed2 <= tol.admissible {
        return Err(SmarandacheError::NonSpacelikeTangent { s, speed2 });
    }
    let sigma = speed2.sqrt();
    let dsigma = coord_inner(&u, &v) / sigma;
    let mut gamma_ss = [0.0; 3];
    let mut alpha_g = [0.0; 3];
    for i in 0..3 {
        alpha_g[i] = u[i] / sigma;
        gamma_ss[i] = v[i] / speed2 - u[i] * dsigma / (sigma * speed2);
    }
    let kappa_g = -(gamma_ss[0] * gamma_ss[2] + 0.5 * gamma_ss[1] * gamma_ss[1]);
    let mut y_g = [0.0; 3];
    for i in 0..3 {
        y_g[i] = kappa_g * a[i] - gamma_ss[i];
    }
    Ok(PartnerCoords {
        gamma: a,
        sigma,
        alpha_g,
        gamma_ss,
        y_g,
        kappa_g,
    })
}

/// Full chain-rule oracle at one jet: frame, partner position, unit
/// tangent, curvature and `y` companion, plus the measured self-product.
pub fn partner_frame_oracle(
    spec: &SmarandacheSpec,
    jet: &CurveJet,
    tol: &TolerancePolicy,
) -> Result<PartnerSample, SmarandacheError> {
    let fr = frame_at(jet)?;
    let coords = partner_coords(spec, jet.s, fr.kappa, kappa_prime(jet), tol)?;
    let gamma = coords_to_vector(&coords.gamma, &fr);
    Ok(PartnerSample {
        s: jet.s,
        sstar: 0.0,
        gamma,
        sigma: coords.sigma,
        alpha_g: coords_to_vector(&coords.alpha_g, &fr),
        y_g: coords_to_vector(&coords.y_g, &fr),
        kappa_g: coords.kappa_g,
        gamma_self: gamma.self_inner(),
    })
}

/// Finite-difference route to the partner curvature, for auditing the
/// exact-jet oracle: partner positions are sampled on a centered stencil,
/// differentiated in the base parameter, and rescaled to s* through the
/// same chain rule. Shares no derivative machinery with
/// [`partner_frame_oracle`] beyond the construction itself.
pub fn partner_kappa_fd(
    spec: &SmarandacheSpec,
    source: &CurveSource,
    s: f64,
    h: f64,
    tol: &TolerancePolicy,
) -> Result<f64, SmarandacheError> {
    let gamma_at = |t: f64| -> Result<LorentzVector, SmarandacheError> {
        let jet = source.jet_at(t)?;
        Ok(construct(spec, &frame_at(&jet)?))
    };
    let mut window = [LorentzVector::ZERO; crate::fd::STENCIL_LEN];
    for (k, slot) in window.iter_mut().enumerate() {
        *slot = gamma_at(s + (k as f64 - 3.0) * h)?;
    }
    let fd = crate::fd::fd_jet(s, &window, h)?;
    let speed2 = fd.d1.self_inner();
    if speed2 <= tol.admissible {
        return Err(SmarandacheError::NonSpacelikeTangent { s, speed2 });
    }
    let sigma = speed2.sqrt();
    let dsigma = fd.d1.inner(&fd.d2) / sigma;
    let gamma_ss = fd.d2.scale(1.0 / speed2) - fd.d1.scale(dsigma / (sigma * speed2));
    Ok(-0.5 * gamma_ss.self_inner())
}

/// Monotone table s -> s* with the converged quadrature panels kept as
/// extra knots, invertible by monotone cubic interpolation.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcLengthTable {
    knot_s: Vec<f64>,
    knot_sstar: Vec<f64>,
    max_err: f64,
}

impl ArcLengthTable {
    /// Total arc length over the table's range.
    pub fn total(&self) -> f64 {
        *self.knot_sstar.last().expect("non-empty table")
    }

    pub fn max_quadrature_error(&self) -> f64 {
        self.max_err
    }

    pub fn knots(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.knot_s.iter().copied().zip(self.knot_sstar.iter().copied())
    }

    /// s* at a base-parameter value inside the table range.
    pub fn sstar(&self, s: f64) -> f64 {
        pchip_eval(&self.knot_s, &self.knot_sstar, s)
    }

    /// Inverse lookup: the base parameter at a given s*.
    pub fn s_inverse(&self, sstar: f64) -> f64 {
        pchip_eval(&self.knot_sstar, &self.knot_s, sstar)
    }
}

/// Cumulative arc length of the partner curve over `[lo, hi]`, sampled at
/// `n` grid points, by adaptive quadrature of the speed.
///
/// The speed must be positive over the whole range; in particular every
/// quadrature node (which may fall between grid points) must be
/// admissible.
pub fn arclength_table(
    spec: &SmarandacheSpec,
    source: &CurveSource,
    lo: f64,
    hi: f64,
    n: usize,
    tol: &TolerancePolicy,
) -> Result<ArcLengthTable, SmarandacheError> {
    assert!(n >= 1 && hi >= lo, "range must be ordered and non-empty");
    if source.is_exact() {
        arclength_adaptive(spec, source, lo, hi, n, tol)
    } else {
        arclength_trapezoid(spec, source, lo, hi, n, tol)
    }
}

fn speed_at(
    spec: &SmarandacheSpec,
    source: &CurveSource,
    s: f64,
    tol: &TolerancePolicy,
) -> Result<f64, SmarandacheError> {
    let jet = source.jet_at(s)?;
    let fr = frame_at(&jet)?;
    partner_speed_oracle(spec, &fr, tol)
}

fn arclength_adaptive(
    spec: &SmarandacheSpec,
    source: &CurveSource,
    lo: f64,
    hi: f64,
    n: usize,
    tol: &TolerancePolicy,
) -> Result<ArcLengthTable, SmarandacheError> {
    // Admissibility is pre-checked at the grid points; a violation at a
    // quadrature node inside a panel then surfaces as a NaN from sqrt and
    // is rejected by the integrator.
    let mut knot_s = vec![lo];
    let mut knot_sstar = vec![0.0];
    let mut acc = 0.0;
    let mut max_err: f64 = 0.0;
    let mut domain_violation: Option<SmarandacheError> = None;
    for i in 0..n.max(2) - 1 {
        let a = lo + (hi - lo) * i as f64 / (n.max(2) - 1) as f64;
        let b = lo + (hi - lo) * (i + 1) as f64 / (n.max(2) - 1) as f64;
        speed_at(spec, source, a, tol)?;
        speed_at(spec, source, b, tol)?;
        if a == b {
            continue;
        }
        // NaN aborts the panel and surfaces as a domain violation below
        let integrand = |s: f64| -> f64 {
            speed_at(spec, source, s, tol).unwrap_or(f64::NAN)
        };
        let result = integrate_adaptive(integrand, a, b, tol.quad);
        let result = match result {
            Ok(r) => r,
            Err(QuadError::NonFinite { at }) => {
                domain_violation = Some(SmarandacheError::DomainViolation {
                    s: at,
                    what: "partner speed undefined at a quadrature node".to_string(),
                });
                break;
            }
            Err(e) => return Err(e.into()),
        };
        max_err = max_err.max(result.err);
        for p in &result.panels {
            acc += p.value;
            knot_s.push(p.hi);
            knot_sstar.push(acc);
        }
    }
    if let Some(e) = domain_violation {
        return Err(e);
    }
    Ok(ArcLengthTable {
        knot_s,
        knot_sstar,
        max_err,
    })
}

/// Grid-only fallback for sampled curves: composite trapezoid with an
/// O(step^2) error estimate from second differences.
fn arclength_trapezoid(
    spec: &SmarandacheSpec,
    source: &CurveSource,
    lo: f64,
    hi: f64,
    n: usize,
    tol: &TolerancePolicy,
) -> Result<ArcLengthTable, SmarandacheError> {
    let n = n.max(2);
    let h = (hi - lo) / (n - 1) as f64;
    let speeds: Vec<f64> = (0..n)
        .map(|i| speed_at(spec, source, lo + h * i as f64, tol))
        .collect::<Result<_, _>>()?;
    let mut knot_s = vec![lo];
    let mut knot_sstar = vec![0.0];
    let mut acc = 0.0;
    let mut max_err: f64 = 0.0;
    for i in 0..n - 1 {
        acc += 0.5 * h * (speeds[i] + speeds[i + 1]);
        knot_s.push(lo + h * (i + 1) as f64);
        knot_sstar.push(acc);
        if i + 2 < n {
            let dd = speeds[i + 2] - 2.0 * speeds[i + 1] + speeds[i];
            max_err = max_err.max(h * dd.abs() / 12.0);
        }
    }
    Ok(ArcLengthTable {
        knot_s,
        knot_sstar,
        max_err,
    })
}

/// Partner samples over a uniform grid, split into maximal admissible
/// segments. Inadmissible grid points are counted, never evaluated; s* is
/// measured from the start of each segment.
#[derive(Debug, Clone)]
pub struct PartnerTrajectory {
    pub samples: Vec<PartnerSample>,
    /// Half-open index ranges into `samples`, one per contiguous segment.
    pub segments: Vec<(usize, usize)>,
    pub skipped: usize,
}

pub fn partner_trajectory(
    spec: &SmarandacheSpec,
    source: &CurveSource,
    lo: f64,
    hi: f64,
    n: usize,
    tol: &TolerancePolicy,
) -> Result<PartnerTrajectory, SmarandacheError> {
    let jets = source.jets_on_grid(lo, hi, n)?;
    let mut samples = Vec::new();
    let mut segments = Vec::new();
    let mut skipped = 0usize;
    let mut run: Vec<PartnerSample> = Vec::new();
    let mut run_start_s = lo;

    let flush = |run: &mut Vec<PartnerSample>,
                     run_start_s: f64,
                     samples: &mut Vec<PartnerSample>,
                     segments: &mut Vec<(usize, usize)>|
     -> Result<(), SmarandacheError> {
        if run.is_empty() {
            return Ok(());
        }
        let run_end_s = run.last().expect("non-empty run").s;
        let sstars = segment_sstar(spec, source, run_start_s, run_end_s, run.len(), tol)?;
        let begin = samples.len();
        for (mut sample, sstar) in run.drain(..).zip(sstars) {
            sample.sstar = sstar;
            samples.push(sample);
        }
        segments.push((begin, samples.len()));
        Ok(())
    };

    for jet in &jets {
        match partner_frame_oracle(spec, jet, tol) {
            Ok(sample) => {
                if run.is_empty() {
                    run_start_s = jet.s;
                }
                run.push(sample);
            }
            Err(SmarandacheError::NonSpacelikeTangent { .. }) => {
                skipped += 1;
                flush(&mut run, run_start_s, &mut samples, &mut segments)?;
            }
            Err(e) => return Err(e),
        }
    }
    flush(&mut run, run_start_s, &mut samples, &mut segments)?;
    Ok(PartnerTrajectory {
        samples,
        segments,
        skipped,
    })
}

fn segment_sstar(
    spec: &SmarandacheSpec,
    source: &CurveSource,
    lo: f64,
    hi: f64,
    n: usize,
    tol: &TolerancePolicy,
) -> Result<Vec<f64>, SmarandacheError> {
    if n == 1 {
        return Ok(vec![0.0]);
    }
    let table = arclength_table(spec, source, lo, hi, n, tol)?;
    Ok((0..n)
        .map(|i| {
            let s = lo + (hi - lo) * i as f64 / (n - 1) as f64;
            table.sstar(s)
        })
        .collect())
}

/// Monotone cubic (Fritsch-Carlson) interpolation through `(xs, ys)`.
/// `xs` must be strictly increasing; evaluation clamps to the table range.
fn pchip_eval(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    let n = xs.len();
    debug_assert!(n == ys.len() && n >= 1);
    if n == 1 {
        return ys[0];
    }
    let x = x.clamp(xs[0], xs[n - 1]);
    // slopes
    let mut m = vec![0.0; n];
    let secant = |i: usize| (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
    m[0] = secant(0);
    m[n - 1] = secant(n - 2);
    for i in 1..n - 1 {
        let (d0, d1) = (secant(i - 1), secant(i));
        if d0 * d1 <= 0.0 {
            m[i] = 0.0;
        } else {
            let (h0, h1) = (xs[i] - xs[i - 1], xs[i + 1] - xs[i]);
            let (w0, w1) = (2.0 * h1 + h0, h1 + 2.0 * h0);
            m[i] = (w0 + w1) / (w0 / d0 + w1 / d1);
        }
    }
    // bracketing interval
    let k = match xs.binary_search_by(|v| v.partial_cmp(&x).expect("finite knots")) {
        Ok(i) => i.min(n - 2),
        Err(i) => i.saturating_sub(1).min(n - 2),
    };
    let h = xs[k + 1] - xs[k];
    let t = (x - xs[k]) / h;
    let (t2, t3) = (t * t, t * t * t);
    let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    let h10 = t3 - 2.0 * t2 + t;
    let h01 = -2.0 * t3 + 3.0 * t2;
    let h11 = t3 - t2;
    h00 * ys[k] + h10 * h * m[k] + h01 * ys[k + 1] + h11 * h * m[k + 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::example1_curve;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn tol() -> TolerancePolicy {
        TolerancePolicy::default()
    }

    fn spec(kind: SmarandacheKind, b: f64, c: f64, cstar: f64) -> SmarandacheSpec {
        SmarandacheSpec::new(kind, b, c, cstar).unwrap()
    }

    #[test]
    fn constants_must_be_positive() {
        assert!(SmarandacheSpec::new(SmarandacheKind::XY, 0.0, 1.0, 1.0).is_err());
        assert!(SmarandacheSpec::new(SmarandacheKind::XY, 1.0, -2.0, 1.0).is_err());
    }

    #[test]
    fn construct_at_origin() {
        let fr = frame_at(&example1_curve(0.0)).unwrap();
        let g = construct(&spec(SmarandacheKind::XAlpha, 1.0, 1.0, 1.0), &fr);
        assert_abs_diff_eq!(g.x1, -0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(g.x2, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(g.x3, 0.5, epsilon = 1e-14);

        let g = construct(&spec(SmarandacheKind::XY, 1.0, 1.0, 1.0), &fr);
        let r = std::f64::consts::SQRT_2.recip();
        assert_abs_diff_eq!(g.x1, -1.5 * r, epsilon = 1e-14);
        assert_abs_diff_eq!(g.x2, 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(g.x3, -0.5 * r, epsilon = 1e-14);
    }

    #[test]
    fn all_kinds_have_unit_self_product() {
        let fr = frame_at(&example1_curve(0.7)).unwrap();
        for kind in SmarandacheKind::ALL {
            let g = construct(&spec(kind, 1.3, 0.8, 2.1), &fr);
            assert_abs_diff_eq!(g.self_inner(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn speeds_at_origin() {
        let fr = frame_at(&example1_curve(0.0)).unwrap();
        let t = tol();
        // kappa = -1 here
        let s = partner_speed_oracle(&spec(SmarandacheKind::XAlpha, 1.0, 1.0, 1.0), &fr, &t).unwrap();
        assert_relative_eq!(s, 3.0f64.sqrt(), max_relative = 1e-12);
        let s = partner_speed_oracle(&spec(SmarandacheKind::XY, 1.0, 1.0, 1.0), &fr, &t).unwrap();
        assert_relative_eq!(s, 2.0f64.sqrt(), max_relative = 1e-12);
        let s = partner_speed_oracle(&spec(SmarandacheKind::XAlphaY, 1.0, 1.0, 1.0), &fr, &t).unwrap();
        assert_relative_eq!(s, 2.0f64.sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn xy_tangent_is_the_base_tangent() {
        let t = tol();
        for i in 0..81 {
            let s = -2.0 + 0.05 * i as f64;
            let jet = example1_curve(s);
            let fr = frame_at(&jet).unwrap();
            let ps =
                partner_frame_oracle(&spec(SmarandacheKind::XY, 1.7, 0.9, 1.0), &jet, &t).unwrap();
            assert!((ps.alpha_g - fr.alpha).max_abs() <= 1e-10, "s = {s}");
        }
    }

    #[test]
    fn xy_curvature_closed_form() {
        let t = tol();
        let jet = example1_curve(0.0);
        let ps = partner_frame_oracle(&spec(SmarandacheKind::XY, 1.0, 2.0, 1.0), &jet, &t).unwrap();
        assert_relative_eq!(ps.kappa_g, -4.0 / 9.0, max_relative = 1e-12);
    }

    #[test]
    fn partner_tangent_identities() {
        let t = tol();
        let jet = example1_curve(0.0);
        let ps =
            partner_frame_oracle(&spec(SmarandacheKind::XAlpha, 1.0, 1.0, 1.0), &jet, &t).unwrap();
        assert_abs_diff_eq!(ps.alpha_g.self_inner(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(ps.gamma.inner(&ps.alpha_g), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(ps.y_g.inner(&ps.alpha_g), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(ps.gamma_self, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn alpha_y_inadmissible_in_the_positive_kappa_tail() {
        // kappa > 0 for |s| > acosh(sqrt 3): speed^2 = kappa (kappa - 2) < 0
        let t = tol();
        let jet = example1_curve(2.0);
        let err = partner_frame_oracle(&spec(SmarandacheKind::AlphaY, 1.0, 1.0, 1.0), &jet, &t)
            .unwrap_err();
        assert!(matches!(err, SmarandacheError::NonSpacelikeTangent { .. }));
    }

    #[test]
    fn xalpha_depends_only_on_the_ratio() {
        let t = tol();
        let jet = example1_curve(0.4);
        let p1 =
            partner_frame_oracle(&spec(SmarandacheKind::XAlpha, 1.0, 2.0, 1.0), &jet, &t).unwrap();
        let p2 =
            partner_frame_oracle(&spec(SmarandacheKind::XAlpha, 3.0, 6.0, 1.0), &jet, &t).unwrap();
        assert_relative_eq!(p1.sigma, p2.sigma, max_relative = 1e-12);
        assert_relative_eq!(p1.kappa_g, p2.kappa_g, max_relative = 1e-12);
        assert!((p1.gamma - p2.gamma).max_abs() <= 1e-12);
    }

    #[test]
    fn arclength_zero_range() {
        let src = CurveSource::example1();
        let table = arclength_table(
            &spec(SmarandacheKind::XY, 1.0, 1.0, 1.0),
            &src,
            0.5,
            0.5,
            1,
            &tol(),
        )
        .unwrap();
        assert_eq!(table.total(), 0.0);
    }

    #[test]
    fn arclength_xy_closed_form() {
        // integrand (1 - kappa)/sqrt(2), antiderivative (s/2 + (3/2) tanh s)/sqrt(2)
        let src = CurveSource::example1();
        let table = arclength_table(
            &spec(SmarandacheKind::XY, 1.0, 1.0, 1.0),
            &src,
            0.0,
            1.0,
            11,
            &tol(),
        )
        .unwrap();
        let expect = (0.5 + 1.5 * 1.0f64.tanh()) / std::f64::consts::SQRT_2;
        assert_abs_diff_eq!(table.total(), expect, epsilon = 1e-8);
        assert!(table.max_quadrature_error() <= 1e-9);
    }

    #[test]
    fn arclength_inverse_roundtrip() {
        let src = CurveSource::example1();
        let table = arclength_table(
            &spec(SmarandacheKind::XY, 1.0, 1.0, 1.0),
            &src,
            -1.0,
            1.0,
            21,
            &tol(),
        )
        .unwrap();
        for i in 0..=20 {
            let s = -1.0 + 0.1 * i as f64;
            let back = table.s_inverse(table.sstar(s));
            assert_abs_diff_eq!(back, s, epsilon = 1e-6);
        }
    }

    #[test]
    fn trajectory_splits_at_domain_boundaries() {
        // ay with b=c=1 is admissible only where kappa < 0, i.e. |s| < acosh(sqrt 3)
        let src = CurveSource::example1();
        let tr = partner_trajectory(
            &spec(SmarandacheKind::AlphaY, 1.0, 1.0, 1.0),
            &src,
            -2.0,
            2.0,
            401,
            &tol(),
        )
        .unwrap();
        assert_eq!(tr.segments.len(), 1);
        assert!(tr.skipped > 0);
        assert_eq!(tr.samples.len() + tr.skipped, 401);
        let bound = 3.0f64.sqrt().acosh();
        for p in &tr.samples {
            assert!(p.s.abs() < bound + 1e-9);
        }
        // sstar starts at zero and increases
        assert_eq!(tr.samples[0].sstar, 0.0);
        for w in tr.samples.windows(2) {
            assert!(w[1].sstar > w[0].sstar);
        }
    }

    #[test]
    fn fd_route_confirms_the_exact_partner_curvature() {
        let t = tol();
        let src = CurveSource::example1();
        let h = 1e-3;
        for kind in SmarandacheKind::ALL {
            let sp = spec(kind, 1.0, 2.0, 1.0);
            for s in [-1.5, -0.7, 0.0, 0.4, 1.0] {
                let jet = example1_curve(s);
                let exact = match partner_frame_oracle(&sp, &jet, &t) {
                    Ok(ps) => ps.kappa_g,
                    Err(_) => continue,
                };
                let fd = partner_kappa_fd(&sp, &src, s, h, &t).unwrap();
                // d2 truncation is O(h^4) with rounding eps/h^2, amplified
                // by the 1/sigma^2 rescaling; 1e-5 is generous here
                assert!(
                    (fd - exact).abs() <= 1e-5 * (1.0 + exact.abs()),
                    "{kind} at s={s}: fd {fd} vs exact {exact}"
                );
            }
        }
    }

    #[test]
    fn pchip_is_monotone_on_monotone_data() {
        let xs: Vec<f64> = (0..8).map(|i| i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|x| x * x).collect();
        let mut prev = f64::NEG_INFINITY;
        for i in 0..=70 {
            let v = pchip_eval(&xs, &ys, i as f64 * 0.1);
            assert!(v >= prev - 1e-12);
            prev = v;
        }
    }
}
