//! The audit engine: every registered closed form is evaluated against the
//! chain-rule oracle over a grid and a parameter sweep, and classified.
//!
//! Ground truth is always the oracle ([`crate::smarandache`]); printed
//! formulas are data. A formula is Confirmed only when its worst relative
//! deviation stays under the confirmation tolerance *and* enough
//! admissible samples were seen; points where either the oracle or the
//! printed expression leaves its validity domain are counted and skipped,
//! never extrapolated. Alongside the formula verdicts, the report records
//! measured values of three structural claims (partner self-product and
//! the two frame pairings involving the partner y), which the source
//! asserts to be 0, 0 and 1.

use crate::curve::{recover_generating_function, CurveError, CurveSource};
use crate::frame::{frame_at, kappa_prime, FrameError};
use crate::lorentz::LorentzVector;
use crate::registry::{
    closed_form_eval, entries_for, FormulaCtx, FormulaTarget, FormulaValue,
};
use crate::smarandache::{
    frame_coordinates, partner_frame_oracle, SmarandacheError, SmarandacheSpec,
};
use crate::tol::TolerancePolicy;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AssessError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Smarandache(#[from] SmarandacheError),
}

/// Uniform evaluation grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl GridSpec {
    pub fn validate(&self) -> Result<(), AssessError> {
        // negated form also rejects NaN bounds
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(self.lo < self.hi) || self.n < 2 {
            return Err(AssessError::InvalidGrid(format!(
                "need lo < hi and n >= 2, got [{}, {}] with n = {}",
                self.lo, self.hi, self.n
            )));
        }
        Ok(())
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let (lo, hi, n) = (self.lo, self.hi, self.n);
        (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Confirmed,
    Discrepant,
    DomainEmpty,
}

/// Outcome of auditing one printed formula under one parameter choice.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormulaVerdict {
    pub formula_id: String,
    pub variant: String,
    pub spec: SmarandacheSpec,
    pub samples: usize,
    pub skipped: usize,
    pub max_abs_dev: f64,
    pub max_rel_dev: f64,
    pub verdict: Verdict,
}

/// Measured value of a structural claim over the admissible grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub claim_id: String,
    pub spec: SmarandacheSpec,
    pub samples: usize,
    /// The value the source asserts.
    pub asserted: f64,
    pub measured_min: f64,
    pub measured_max: f64,
    pub max_abs_dev: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssessmentReport {
    pub curve: String,
    pub grid: GridSpec,
    pub tolerances: TolerancePolicy,
    pub verdicts: Vec<FormulaVerdict>,
    pub claims: Vec<ClaimCheck>,
    /// Reading conventions the audit depends on, recorded rather than
    /// silently assumed.
    pub notes: Vec<String>,
}

/// The (b, c) pairs and c* values of the default audit sweep. The pairs
/// intentionally include b != 1 != c so that dropped factors, invisible at
/// b = c = 1, break coincidental agreement.
pub const DEFAULT_SWEEP_BC: [(f64, f64); 3] = [(1.0, 1.0), (1.0, 2.0), (2.0, 3.0)];
pub const DEFAULT_SWEEP_CSTAR: [f64; 2] = [1.0, 2.0];

/// The default parameter sweep over all four construction kinds.
pub fn default_sweep() -> Vec<SmarandacheSpec> {
    use crate::smarandache::SmarandacheKind;
    let mut out = Vec::new();
    for kind in SmarandacheKind::ALL {
        for &(b, c) in &DEFAULT_SWEEP_BC {
            if kind == SmarandacheKind::XAlphaY {
                for &cs in &DEFAULT_SWEEP_CSTAR {
                    out.push(SmarandacheSpec::new(kind, b, c, cs).expect("positive constants"));
                }
            } else {
                out.push(SmarandacheSpec::new(kind, b, c, 1.0).expect("positive constants"));
            }
        }
    }
    out
}

fn deviation(printed: &FormulaValue, oracle: &FormulaValue, floor: f64) -> (f64, f64) {
    let pair = |p: f64, o: f64| {
        let abs = (p - o).abs();
        (abs, abs / o.abs().max(floor))
    };
    match (printed, oracle) {
        (FormulaValue::Scalar(p), FormulaValue::Scalar(o)) => pair(*p, *o),
        (FormulaValue::Row(p), FormulaValue::Row(o)) => p
            .iter()
            .zip(o.iter())
            .map(|(a, b)| pair(*a, *b))
            .fold((0.0, 0.0), |(ma, mr), (a, r)| (ma.max(a), mr.max(r))),
        (FormulaValue::Vector(p), FormulaValue::Vector(o)) => [
            (p.x1, o.x1),
            (p.x2, o.x2),
            (p.x3, o.x3),
        ]
        .into_iter()
        .map(|(a, b)| pair(a, b))
        .fold((0.0, 0.0), |(ma, mr), (a, r)| (ma.max(a), mr.max(r))),
        _ => unreachable!("printed and oracle values always share a shape"),
    }
}

#[derive(Default)]
struct VerdictAcc {
    samples: usize,
    skipped: usize,
    max_abs: f64,
    max_rel: f64,
}

#[derive(Default)]
struct ClaimAcc {
    samples: usize,
    min: f64,
    max: f64,
    max_dev: f64,
}

impl ClaimAcc {
    fn push(&mut self, measured: f64, asserted: f64) {
        if self.samples == 0 {
            self.min = measured;
            self.max = measured;
        } else {
            self.min = self.min.min(measured);
            self.max = self.max.max(measured);
        }
        self.max_dev = self.max_dev.max((measured - asserted).abs());
        self.samples += 1;
    }
}

const CLAIMS: [(&str, f64); 3] = [
    // the source asserts the partner lies on the null cone
    ("partner-on-cone:<gamma,gamma>", 0.0),
    // frame conditions the source carries over to the partner frame
    ("partner-frame:<y,y>", 0.0),
    ("partner-frame:<gamma,y>", 1.0),
];

/// Audit every registered formula for every given spec over the grid.
///
/// An empty spec list is allowed and produces a report with empty verdict
/// and claim tables.
pub fn assess(
    source: &CurveSource,
    specs: &[SmarandacheSpec],
    grid: &GridSpec,
    tol: &TolerancePolicy,
) -> Result<AssessmentReport, AssessError> {
    grid.validate()?;

    // (spec index, entry) pairs in report order: source ordering of the
    // registry first, then the sweep order.
    let mut slots: Vec<(usize, &crate::registry::FormulaEntry)> = specs
        .iter()
        .enumerate()
        .flat_map(|(si, spec)| entries_for(spec.kind).map(move |e| (si, e)))
        .collect();
    slots.sort_by_key(|(si, e)| (e.ordinal, e.variant.label(), *si));
    let mut accs: Vec<VerdictAcc> = slots.iter().map(|_| VerdictAcc::default()).collect();
    let mut claim_accs: Vec<[ClaimAcc; 3]> =
        specs.iter().map(|_| Default::default()).collect();

    for s in grid.points() {
        let jet = source.jet_at(s)?;
        let fr = frame_at(&jet)?;
        let dkappa = kappa_prime(&jet);
        let fjet = recover_generating_function(&jet).ok();

        // oracle per spec at this point (None when inadmissible)
        let oracles: Vec<Option<crate::smarandache::PartnerSample>> = specs
            .iter()
            .map(|spec| partner_frame_oracle(spec, &jet, tol).ok())
            .collect();

        for (si, oracle) in oracles.iter().enumerate() {
            if let Some(ps) = oracle {
                for (c, (id, asserted)) in claim_accs[si].iter_mut().zip(CLAIMS.iter()) {
                    let measured = match *id {
                        "partner-on-cone:<gamma,gamma>" => ps.gamma_self,
                        "partner-frame:<y,y>" => ps.y_g.self_inner(),
                        _ => ps.gamma.inner(&ps.y_g),
                    };
                    c.push(measured, *asserted);
                }
            }
        }

        for (slot, acc) in slots.iter().zip(accs.iter_mut()) {
            let (si, entry) = slot;
            let spec = &specs[*si];
            let ps = match &oracles[*si] {
                Some(ps) => ps,
                None => {
                    acc.skipped += 1;
                    continue;
                }
            };
            let ctx = FormulaCtx {
                spec,
                kappa: fr.kappa,
                dkappa,
                sigma: ps.sigma,
                fjet,
            };
            let printed = match closed_form_eval(entry, &ctx) {
                // an overflow past the guarded radicands is a domain
                // violation too, never a candidate for comparison
                Ok(v) if v.is_finite() => v,
                _ => {
                    acc.skipped += 1;
                    continue;
                }
            };
            let oracle = match entry.target {
                FormulaTarget::Speed => FormulaValue::Scalar(ps.sigma),
                FormulaTarget::Psi => {
                    FormulaValue::Scalar(frame_coordinates(&ps.alpha_g, &fr)[1])
                }
                FormulaTarget::Kappa => FormulaValue::Scalar(ps.kappa_g),
                FormulaTarget::GammaRow => {
                    FormulaValue::Row(frame_coordinates(&ps.gamma, &fr))
                }
                FormulaTarget::AlphaRow | FormulaTarget::AlphaIdentity => {
                    FormulaValue::Row(frame_coordinates(&ps.alpha_g, &fr))
                }
                FormulaTarget::YRow => FormulaValue::Row(frame_coordinates(&ps.y_g, &fr)),
                FormulaTarget::GammaSsRow => {
                    let gamma_ss: LorentzVector =
                        ps.gamma.scale(ps.kappa_g) - ps.y_g;
                    FormulaValue::Row(frame_coordinates(&gamma_ss, &fr))
                }
                FormulaTarget::PartnerCurve => FormulaValue::Vector(ps.gamma),
            };
            let (abs, rel) = deviation(&printed, &oracle, tol.rel_floor);
            acc.samples += 1;
            acc.max_abs = acc.max_abs.max(abs);
            acc.max_rel = acc.max_rel.max(rel);
        }
    }

    let verdicts = slots
        .iter()
        .zip(accs.iter())
        .map(|((si, entry), acc)| {
            let verdict = if acc.samples == 0 {
                Verdict::DomainEmpty
            } else if acc.max_rel <= tol.confirm && acc.samples >= tol.min_samples {
                Verdict::Confirmed
            } else {
                Verdict::Discrepant
            };
            FormulaVerdict {
                formula_id: entry.id.to_string(),
                variant: entry.variant.label().to_string(),
                spec: specs[*si],
                samples: acc.samples,
                skipped: acc.skipped,
                max_abs_dev: acc.max_abs,
                max_rel_dev: acc.max_rel,
                verdict,
            }
        })
        .collect();

    let claims = specs
        .iter()
        .enumerate()
        .flat_map(|(si, spec)| {
            CLAIMS
                .iter()
                .zip(claim_accs[si].iter())
                .map(move |((id, asserted), acc)| ClaimCheck {
                    claim_id: id.to_string(),
                    spec: *spec,
                    samples: acc.samples,
                    asserted: *asserted,
                    measured_min: acc.min,
                    measured_max: acc.max,
                    max_abs_dev: acc.max_dev,
                })
        })
        .collect();

    Ok(AssessmentReport {
        curve: source.descriptor(),
        grid: *grid,
        tolerances: tol.clone(),
        verdicts,
        claims,
        notes: vec![
            "tuples printed as (1.0, 1) are read as the vector (1, 0, 1)".to_string(),
            "primed auxiliaries are evaluated under both the d/ds and d/ds* readings; \
             the d/ds* reading divides each derivative by the oracle speed"
                .to_string(),
            "ground truth is the chain-rule oracle; printed closed forms are never patched"
                .to_string(),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smarandache::SmarandacheKind;

    fn grid() -> GridSpec {
        GridSpec {
            lo: -2.0,
            hi: 2.0,
            n: 401,
        }
    }

    fn report_for(specs: &[SmarandacheSpec]) -> AssessmentReport {
        assess(
            &CurveSource::example1(),
            specs,
            &grid(),
            &TolerancePolicy::default(),
        )
        .unwrap()
    }

    fn find<'a>(
        r: &'a AssessmentReport,
        id: &str,
        variant: &str,
        spec: &SmarandacheSpec,
    ) -> &'a FormulaVerdict {
        r.verdicts
            .iter()
            .find(|v| v.formula_id == id && v.variant == variant && v.spec == *spec)
            .unwrap_or_else(|| panic!("verdict {id}/{variant} missing"))
    }

    #[test]
    fn xy_kappa_definition_discrepant_proof_confirmed() {
        let spec = SmarandacheSpec::new(SmarandacheKind::XY, 1.0, 2.0, 1.0).unwrap();
        let r = report_for(&[spec]);
        let d = find(&r, "3.16:kappa", "definition", &spec);
        assert_eq!(d.verdict, Verdict::Discrepant);
        assert!(d.max_rel_dev >= 0.3, "rel dev {}", d.max_rel_dev);
        let p = find(&r, "3.16:kappa", "proof", &spec);
        assert_eq!(p.verdict, Verdict::Confirmed);
    }

    #[test]
    fn xy_tangent_identity_confirmed() {
        let spec = SmarandacheSpec::new(SmarandacheKind::XY, 2.0, 3.0, 1.0).unwrap();
        let r = report_for(&[spec]);
        let v = find(&r, "3.19:alpha-identity", "as-printed", &spec);
        assert_eq!(v.verdict, Verdict::Confirmed);
        assert!(v.max_abs_dev <= 1e-10);
    }

    #[test]
    fn ay_printed_speed_has_empty_domain_at_unit_constants() {
        let spec = SmarandacheSpec::new(SmarandacheKind::AlphaY, 1.0, 1.0, 1.0).unwrap();
        let r = report_for(&[spec]);
        let v = find(&r, "3.28:speed", "as-printed", &spec);
        assert_eq!(v.verdict, Verdict::DomainEmpty);
        assert_eq!(v.samples, 0);
        assert!(v.skipped > 0);
    }

    #[test]
    fn partner_on_cone_claim_measures_one() {
        let r = report_for(&default_sweep());
        let cone_claims: Vec<_> = r
            .claims
            .iter()
            .filter(|c| c.claim_id.starts_with("partner-on-cone"))
            .collect();
        assert_eq!(cone_claims.len(), 15);
        for c in cone_claims {
            assert!(c.samples > 0);
            assert!((c.measured_min - 1.0).abs() <= 1e-9);
            assert!((c.measured_max - 1.0).abs() <= 1e-9);
            assert!((c.max_abs_dev - 1.0).abs() <= 1e-9, "asserted 0, measured 1");
        }
    }

    #[test]
    fn representation_display_xa_confirmed_tightly() {
        let spec = SmarandacheSpec::new(SmarandacheKind::XAlpha, 1.0, 2.0, 1.0).unwrap();
        let r = report_for(&[spec]);
        let v = find(&r, "3.47:curve", "as-printed", &spec);
        assert_eq!(v.verdict, Verdict::Confirmed);
        assert!(v.max_abs_dev <= 1e-9);
    }

    #[test]
    fn xy_representation_display_breaks_off_b_equals_one() {
        let ok = SmarandacheSpec::new(SmarandacheKind::XY, 1.0, 2.0, 1.0).unwrap();
        let bad = SmarandacheSpec::new(SmarandacheKind::XY, 2.0, 3.0, 1.0).unwrap();
        let r = report_for(&[ok, bad]);
        assert_eq!(
            find(&r, "3.48:curve", "as-printed", &ok).verdict,
            Verdict::Confirmed
        );
        assert_eq!(
            find(&r, "3.48:curve", "as-printed", &bad).verdict,
            Verdict::Discrepant
        );
    }

    #[test]
    fn empty_spec_list_yields_empty_tables() {
        let r = report_for(&[]);
        assert!(r.verdicts.is_empty());
        assert!(r.claims.is_empty());
    }

    #[test]
    fn loosening_confirm_tol_never_unconfirms() {
        let spec = SmarandacheSpec::new(SmarandacheKind::XY, 1.0, 2.0, 1.0).unwrap();
        let tight = report_for(&[spec]);
        let mut tol = TolerancePolicy::default();
        tol.confirm *= 100.0;
        let loose = assess(&CurveSource::example1(), &[spec], &grid(), &tol).unwrap();
        for (t, l) in tight.verdicts.iter().zip(loose.verdicts.iter()) {
            if t.verdict == Verdict::Confirmed {
                assert_eq!(l.verdict, Verdict::Confirmed, "{}", t.formula_id);
            }
        }
    }

    #[test]
    fn report_is_deterministic() {
        let specs = default_sweep();
        let a = serde_json::to_string(&report_for(&specs)).unwrap();
        let b = serde_json::to_string(&report_for(&specs)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn completeness_every_anchor_appears() {
        let r = report_for(&default_sweep());
        for id in [
            "3.2:gamma-row",
            "3.2:alpha-row",
            "3.3:psi",
            "3.4:gammass-row",
            "3.5:y-row",
            "3.6:kappa",
            "3.8:speed",
            "3.15:gamma-row",
            "3.15:alpha-row",
            "3.15:y-row",
            "3.16:kappa",
            "3.17:speed",
            "3.19:alpha-identity",
            "3.21:gammass-row",
            "3.24:gamma-row",
            "3.24:alpha-row",
            "3.25:gammass-row",
            "3.26:y-row",
            "3.27:kappa",
            "3.28:speed",
            "3.35:gamma-row",
            "3.36:alpha-row",
            "3.36:gammass-row",
            "3.37:y-row",
            "3.38:kappa",
            "3.39:speed",
            "3.47:curve",
            "3.48:curve",
            "3.49:curve",
            "xay-display:curve",
        ] {
            assert!(
                r.verdicts.iter().any(|v| v.formula_id == id),
                "missing {id}"
            );
        }
    }
}
