//! Parametric curve sources on the null cone, with derivative jets to
//! order 3.
//!
//! Three kinds of source are supported:
//!
//! * generating-function curves `x(s) = (1/(2 f')) (f^2 - 1, 2f, f^2 + 1)`,
//!   which are automatically null and unit-speed for any f with f' != 0;
//! * the closed-form example curve
//!   `(cosh s / 2 - 1/cosh s, tanh s, cosh s / 2)` (the f = sinh case,
//!   evaluated through its own hyperbolic expressions so the two paths can
//!   cross-check each other);
//! * sampled curves on a uniform grid, differentiated by finite-difference
//!   stencils (see [`crate::fd`]) and flagged as such.
//!
//! Jets of the exact sources are propagated through [`Jet4`] arithmetic;
//! finite differences exist only as an audit oracle, so the downstream
//! frame and partner machinery never inherits stencil noise.

use crate::fd;
use crate::jet::{Jet4, ScalarJet3};
use crate::lorentz::LorentzVector;
use crate::tol::GENERATOR_EPS;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CurveError {
    #[error("degenerate generating function: |f_s| = {fs:e} < {eps:e} at s = {s}")]
    DegenerateGenerator { s: f64, fs: f64, eps: f64 },
    #[error("degenerate projection: |x3 - x1| = {dx:e} < {eps:e} at s = {s}")]
    DegenerateProjection { s: f64, dx: f64, eps: f64 },
    #[error("finite-difference step {h:e} below cancellation floor {min:e}")]
    StepTooSmall { h: f64, min: f64 },
    #[error("sampled curves provide jets at grid points only; s = {s} is off-grid")]
    OffGrid { s: f64 },
    #[error("sampled grid has {n} points; at least {min} are required for the stencil")]
    GridTooShort { n: usize, min: usize },
    #[error("unknown generating function name: {0}")]
    UnknownGenerator(String),
    #[error("non-finite jet component at s = {s}")]
    NonFinite { s: f64 },
}

/// How a jet was obtained; frames built on top of it pick their residual
/// tolerance accordingly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JetAccuracy {
    /// Analytic differentiation through jet arithmetic.
    Exact,
    /// Centered 7-point finite-difference stencil.
    Central,
    /// One-sided 7-point stencil (grid ends).
    OneSided,
}

/// Position and derivatives up to order 3 of a parametric curve at one
/// parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveJet {
    pub s: f64,
    pub p: LorentzVector,
    pub d1: LorentzVector,
    pub d2: LorentzVector,
    pub d3: LorentzVector,
    pub accuracy: JetAccuracy,
}

impl CurveJet {
    pub fn is_finite(&self) -> bool {
        self.p.is_finite() && self.d1.is_finite() && self.d2.is_finite() && self.d3.is_finite()
    }

    /// The three component jets as scalar jets (order 3).
    pub fn component_jets(&self) -> [ScalarJet3; 3] {
        [
            ScalarJet3::new(self.p.x1, self.d1.x1, self.d2.x1, self.d3.x1),
            ScalarJet3::new(self.p.x2, self.d1.x2, self.d2.x2, self.d3.x2),
            ScalarJet3::new(self.p.x3, self.d1.x3, self.d2.x3, self.d3.x3),
        ]
    }
}

fn jet_triple_to_curve(s: f64, j: [Jet4; 3], accuracy: JetAccuracy) -> CurveJet {
    let pick = |k: usize| LorentzVector::new(j[0].deriv(k), j[1].deriv(k), j[2].deriv(k));
    CurveJet {
        s,
        p: pick(0),
        d1: pick(1),
        d2: pick(2),
        d3: pick(3),
        accuracy,
    }
}

/// Evaluate the generating-function representation at `s` from a full
/// order-4 jet of f. The fourth derivative of f feeds the third derivative
/// of the position.
pub fn eval_cone_curve(s: f64, fjet: &Jet4) -> Result<CurveJet, CurveError> {
    let fs = fjet.deriv(1);
    if fs.abs() < GENERATOR_EPS {
        return Err(CurveError::DegenerateGenerator {
            s,
            fs,
            eps: GENERATOR_EPS,
        });
    }
    let f2 = fjet.mul(fjet);
    // The f' jet is f shifted down one order. Its own fourth derivative
    // (f^(5)) is unknown and set to zero; it would only feed the position's
    // fourth derivative, which is not reported.
    let fprime = Jet4::from_derivs([
        fjet.deriv(1),
        fjet.deriv(2),
        fjet.deriv(3),
        fjet.deriv(4),
        0.0,
    ]);
    let scale = fprime.recip().scale(0.5);
    let one = Jet4::constant(1.0);
    let comps = [
        scale.mul(&f2.sub(&one)),
        scale.mul(&fjet.scale(2.0)),
        scale.mul(&f2.add(&one)),
    ];
    let jet = jet_triple_to_curve(s, comps, JetAccuracy::Exact);
    if !jet.is_finite() {
        return Err(CurveError::NonFinite { s });
    }
    Ok(jet)
}

/// Position alone from (f, f_s); used by roundtrip checks and the printed
/// representation formulas.
pub fn position_from_generator(f: f64, fs: f64) -> LorentzVector {
    LorentzVector::new(f * f - 1.0, 2.0 * f, f * f + 1.0).scale(0.5 / fs)
}

/// Analytic jet of the closed-form example curve
/// `(cosh s / 2 - 1/cosh s, tanh s, cosh s / 2)`.
pub fn example1_curve(s: f64) -> CurveJet {
    let v = Jet4::variable(s);
    let cosh = v.cosh();
    let half_cosh = cosh.scale(0.5);
    let comps = [
        half_cosh.sub(&cosh.recip()),
        v.sinh().div(&cosh),
        half_cosh,
    ];
    jet_triple_to_curve(s, comps, JetAccuracy::Exact)
}

/// Invert the generating-function representation: from a curve jet recover
/// the jet of f, using `f = x2/(x3 - x1)` and series division.
pub fn recover_generating_function(c: &CurveJet) -> Result<ScalarJet3, CurveError> {
    let dx = c.p.x3 - c.p.x1;
    if dx.abs() < GENERATOR_EPS {
        return Err(CurveError::DegenerateProjection {
            s: c.s,
            dx,
            eps: GENERATOR_EPS,
        });
    }
    let [j1, j2, j3] = c.component_jets();
    let num = j2.extend(0.0);
    let den = j3.extend(0.0).sub(&j1.extend(0.0));
    Ok(num.div(&den).truncate())
}

/// Named generating functions accepted by the command line (`f:NAME`).
#[derive(Clone)]
pub enum Generator {
    /// f = sinh s; generates the example curve.
    Sinh,
    /// f = exp s.
    Exp,
    /// f = s + s^3/6; a polynomial with f' >= 1 everywhere.
    Cubic,
    /// Arbitrary jet-valued generator (used by tests and embedders).
    Custom(Arc<dyn Fn(f64) -> Jet4 + Send + Sync>),
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Sinh => write!(f, "Sinh"),
            Generator::Exp => write!(f, "Exp"),
            Generator::Cubic => write!(f, "Cubic"),
            Generator::Custom(_) => write!(f, "Custom(..)"),
        }
    }
}

impl Generator {
    pub fn by_name(name: &str) -> Result<Self, CurveError> {
        match name {
            "sinh" => Ok(Generator::Sinh),
            "exp" => Ok(Generator::Exp),
            "cubic" => Ok(Generator::Cubic),
            other => Err(CurveError::UnknownGenerator(other.to_string())),
        }
    }

    pub fn jet_at(&self, s: f64) -> Jet4 {
        let v = Jet4::variable(s);
        match self {
            Generator::Sinh => v.sinh(),
            Generator::Exp => v.exp(),
            Generator::Cubic => v.add(&v.powi(3).scale(1.0 / 6.0)),
            Generator::Custom(f) => f(s),
        }
    }
}

/// Uniformly sampled curve positions; jets come from 7-point stencils.
#[derive(Debug, Clone)]
pub struct SampledCurve {
    s0: f64,
    step: f64,
    points: Vec<LorentzVector>,
}

impl SampledCurve {
    /// Minimum grid length for a full 7-point stencil.
    pub const MIN_POINTS: usize = fd::STENCIL_LEN;

    pub fn new(s0: f64, step: f64, points: Vec<LorentzVector>) -> Result<Self, CurveError> {
        if points.len() < Self::MIN_POINTS {
            return Err(CurveError::GridTooShort {
                n: points.len(),
                min: Self::MIN_POINTS,
            });
        }
        Ok(Self { s0, step, points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn s_at(&self, i: usize) -> f64 {
        self.s0 + self.step * i as f64
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// Jet at grid index `i`. Interior points use the centered stencil,
    /// points within three steps of an end fall back to a one-sided one.
    pub fn jet_at_index(&self, i: usize) -> CurveJet {
        let n = self.points.len();
        let half = fd::STENCIL_LEN / 2;
        let (start, accuracy) = if i >= half && i + half < n {
            (i - half, JetAccuracy::Central)
        } else if i < half {
            (0, JetAccuracy::OneSided)
        } else {
            (n - fd::STENCIL_LEN, JetAccuracy::OneSided)
        };
        let window: Vec<LorentzVector> =
            self.points[start..start + fd::STENCIL_LEN].to_vec();
        let offset = i - start;
        fd::stencil_jet(self.s_at(i), &window, offset, self.step, accuracy)
    }
}

/// A curve source: maps parameter values to jets.
#[derive(Debug, Clone)]
pub enum CurveSource {
    /// The closed-form example curve.
    Example1,
    /// A generating-function curve.
    GeneratingFunction(Generator),
    /// Positions on a uniform grid.
    Sampled(SampledCurve),
}

impl CurveSource {
    pub fn example1() -> Self {
        CurveSource::Example1
    }

    pub fn generating(name: &str) -> Result<Self, CurveError> {
        Ok(CurveSource::GeneratingFunction(Generator::by_name(name)?))
    }

    /// Human-readable descriptor used in reports and output metadata.
    pub fn descriptor(&self) -> String {
        match self {
            CurveSource::Example1 => "example1".to_string(),
            CurveSource::GeneratingFunction(g) => format!("f:{g:?}").to_lowercase(),
            CurveSource::Sampled(sc) => format!("sampled(n={})", sc.len()),
        }
    }

    /// Whether jets are analytic (true) or stencil-based (false).
    pub fn is_exact(&self) -> bool {
        !matches!(self, CurveSource::Sampled(_))
    }

    /// Jet at an arbitrary parameter value. Sampled sources only support
    /// their own grid points (within a half step of rounding).
    pub fn jet_at(&self, s: f64) -> Result<CurveJet, CurveError> {
        match self {
            CurveSource::Example1 => Ok(example1_curve(s)),
            CurveSource::GeneratingFunction(g) => eval_cone_curve(s, &g.jet_at(s)),
            CurveSource::Sampled(sc) => {
                let fi = (s - sc.s_at(0)) / sc.step();
                let i = fi.round();
                if (fi - i).abs() > 1e-6 || i < 0.0 || i as usize >= sc.len() {
                    return Err(CurveError::OffGrid { s });
                }
                Ok(sc.jet_at_index(i as usize))
            }
        }
    }

    /// Jets over a uniform grid of `n` points on `[lo, hi]`.
    pub fn jets_on_grid(&self, lo: f64, hi: f64, n: usize) -> Result<Vec<CurveJet>, CurveError> {
        (0..n)
            .map(|i| {
                let t = if n == 1 {
                    0.0
                } else {
                    i as f64 / (n - 1) as f64
                };
                self.jet_at(lo + t * (hi - lo))
            })
            .collect()
    }
}
