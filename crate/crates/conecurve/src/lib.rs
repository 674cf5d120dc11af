//! Geometry of curves on the null cone of 3-dimensional Minkowski space.
//!
//! The crate builds, from derivative jets of a null-cone curve:
//!
//! * the asymptotic orthonormal frame `{x, alpha, y}` and the cone
//!   curvature kappa ([`frame`]);
//! * the four Smarandache partner constructions over that frame, with
//!   their arc-length reparametrizations and a chain-rule oracle for the
//!   partner frame and curvature ([`smarandache`]);
//! * a registry of the published closed forms for those quantities
//!   ([`registry`]) and an audit engine that cross-validates every printed
//!   expression against the oracle and emits structured verdicts
//!   ([`assess`], [`report`]).
//!
//! Curves come from the generating-function representation, a closed-form
//! example, or sampled grids ([`curve`]); jets are propagated exactly
//! through truncated Taylor arithmetic ([`jet`]) and audited against
//! finite differences ([`fd`]).

pub mod assess;
pub mod curve;
pub mod fd;
pub mod frame;
pub mod io;
pub mod jet;
pub mod lorentz;
pub mod quad;
pub mod registry;
pub mod report;
pub mod smarandache;
pub mod tol;

pub use assess::{assess, AssessmentReport, FormulaVerdict, GridSpec, Verdict};
pub use curve::{
    eval_cone_curve, example1_curve, recover_generating_function, CurveJet, CurveSource,
};
pub use frame::{frame_at, frame_condition_residuals, frenet_residuals, FrameSample};
pub use jet::{Jet4, ScalarJet3};
pub use lorentz::{CausalCharacter, LorentzVector};
pub use report::{render_report, ReportFormat};
pub use smarandache::{
    arclength_table, construct, partner_frame_oracle, partner_speed_oracle, partner_trajectory,
    PartnerSample, SmarandacheKind, SmarandacheSpec,
};
pub use tol::TolerancePolicy;
