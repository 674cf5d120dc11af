//! CSV schemas: curve, frame and partner trajectory export, and sampled
//! curve ingestion.
//!
//! Floats are written with the shortest round-trip formatting, so files
//! are byte-deterministic and parse back to the exact values.

use crate::curve::{CurveJet, SampledCurve};
use crate::frame::FrameSample;
use crate::lorentz::LorentzVector;
use crate::smarandache::PartnerSample;
use std::io::{BufRead, Write};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("missing header line; expected `s,x1,x2,x3`")]
    MissingHeader,
    #[error("bad header `{found}`; expected `s,x1,x2,x3`")]
    BadHeader { found: String },
    #[error("row {row}: expected 4 comma-separated fields, found {found}")]
    BadFieldCount { row: usize, found: usize },
    #[error("row {row}: cannot parse `{field}` as a number")]
    BadNumber { row: usize, field: String },
    #[error("row {row}: s = {s} does not increase over the previous row")]
    NonMonotonic { row: usize, s: f64 },
    #[error("row {row}: step {found:e} deviates from the first step {expected:e} beyond 1e-9 relative")]
    NonUniformStep { row: usize, expected: f64, found: f64 },
    #[error("need at least {min} data rows, found {n}")]
    TooFewRows { n: usize, min: usize },
    #[error(transparent)]
    Curve(#[from] crate::curve::CurveError),
}

pub const CURVE_HEADER: &str = "s,x1,x2,x3";
pub const FRAME_HEADER: &str = "s,kappa,x1,x2,x3,a1,a2,a3,y1,y2,y3";
pub const PARTNER_HEADER: &str = "s,sstar,sigma,kappa_g,gamma_self,g1,g2,g3,a1,a2,a3,y1,y2,y3";

/// Relative tolerance on step uniformity for ingested grids.
pub const STEP_TOL: f64 = 1e-9;

pub fn write_curve_csv<W: Write>(w: &mut W, jets: &[CurveJet]) -> std::io::Result<()> {
    writeln!(w, "{CURVE_HEADER}")?;
    for j in jets {
        writeln!(w, "{},{},{},{}", j.s, j.p.x1, j.p.x2, j.p.x3)?;
    }
    Ok(())
}

pub fn write_frame_csv<W: Write>(w: &mut W, frames: &[FrameSample]) -> std::io::Result<()> {
    writeln!(w, "{FRAME_HEADER}")?;
    for f in frames {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{}",
            f.s,
            f.kappa,
            f.x.x1,
            f.x.x2,
            f.x.x3,
            f.alpha.x1,
            f.alpha.x2,
            f.alpha.x3,
            f.y.x1,
            f.y.x2,
            f.y.x3
        )?;
    }
    Ok(())
}

pub fn write_partner_csv<W: Write>(w: &mut W, samples: &[PartnerSample]) -> std::io::Result<()> {
    writeln!(w, "{PARTNER_HEADER}")?;
    for p in samples {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            p.s,
            p.sstar,
            p.sigma,
            p.kappa_g,
            p.gamma_self,
            p.gamma.x1,
            p.gamma.x2,
            p.gamma.x3,
            p.alpha_g.x1,
            p.alpha_g.x2,
            p.alpha_g.x3,
            p.y_g.x1,
            p.y_g.x2,
            p.y_g.x3
        )?;
    }
    Ok(())
}

/// Parse a `s,x1,x2,x3` file into a sampled curve. The s column must be
/// strictly increasing with a uniform step (relative tolerance
/// [`STEP_TOL`]); errors name the first offending data row (1-based).
pub fn read_curve_csv<R: BufRead>(r: R) -> Result<SampledCurve, IngestError> {
    let mut lines = r.lines();
    let header = lines.next().ok_or(IngestError::MissingHeader)??;
    if header.trim() != CURVE_HEADER {
        return Err(IngestError::BadHeader { found: header });
    }
    let mut ss: Vec<f64> = Vec::new();
    let mut points: Vec<LorentzVector> = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let row = i + 1;
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(IngestError::BadFieldCount {
                row,
                found: fields.len(),
            });
        }
        let mut vals = [0.0f64; 4];
        for (k, f) in fields.iter().enumerate() {
            let v: f64 = f.trim().parse().map_err(|_| IngestError::BadNumber {
                row,
                field: f.trim().to_string(),
            })?;
            // NaN/inf never enter downstream math
            if !v.is_finite() {
                return Err(IngestError::BadNumber {
                    row,
                    field: f.trim().to_string(),
                });
            }
            vals[k] = v;
        }
        if let Some(&prev) = ss.last() {
            if vals[0] <= prev {
                return Err(IngestError::NonMonotonic { row, s: vals[0] });
            }
        }
        ss.push(vals[0]);
        points.push(LorentzVector::new(vals[1], vals[2], vals[3]));
    }
    if ss.len() < SampledCurve::MIN_POINTS {
        return Err(IngestError::TooFewRows {
            n: ss.len(),
            min: SampledCurve::MIN_POINTS,
        });
    }
    let step = ss[1] - ss[0];
    for (i, w) in ss.windows(2).enumerate() {
        let found = w[1] - w[0];
        if (found - step).abs() > STEP_TOL * step.abs() {
            return Err(IngestError::NonUniformStep {
                row: i + 2,
                expected: step,
                found,
            });
        }
    }
    Ok(SampledCurve::new(ss[0], step, points)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::example1_curve;
    use std::io::Cursor;

    fn sample_csv(n: usize, step: f64) -> String {
        let mut s = format!("{CURVE_HEADER}\n");
        for i in 0..n {
            let t = i as f64 * step;
            let p = example1_curve(t).p;
            s.push_str(&format!("{},{},{},{}\n", t, p.x1, p.x2, p.x3));
        }
        s
    }

    #[test]
    fn roundtrip_parses_written_values_exactly() {
        let jets: Vec<_> = (0..9).map(|i| example1_curve(i as f64 * 0.25)).collect();
        let mut buf = Vec::new();
        write_curve_csv(&mut buf, &jets).unwrap();
        let sc = read_curve_csv(Cursor::new(buf)).unwrap();
        assert_eq!(sc.len(), 9);
        for (i, j) in jets.iter().enumerate() {
            let jet = sc.jet_at_index(i);
            assert_eq!(jet.p, j.p);
        }
    }

    #[test]
    fn non_uniform_step_names_the_row() {
        let mut csv = sample_csv(8, 0.1);
        csv.push_str("0.95,0,0,0\n");
        let err = read_curve_csv(Cursor::new(csv)).unwrap_err();
        match err {
            IngestError::NonUniformStep { row, .. } => assert_eq!(row, 9),
            other => panic!("expected NonUniformStep, got {other}"),
        }
    }

    #[test]
    fn non_monotonic_rejected() {
        let mut csv = sample_csv(8, 0.1);
        csv.push_str("0.3,0,0,0\n");
        let err = read_curve_csv(Cursor::new(csv)).unwrap_err();
        assert!(matches!(err, IngestError::NonMonotonic { row: 9, .. }));
    }

    #[test]
    fn bad_header_rejected() {
        let err = read_curve_csv(Cursor::new("s,x,y,z\n0,0,0,0\n")).unwrap_err();
        assert!(matches!(err, IngestError::BadHeader { .. }));
    }

    #[test]
    fn bad_number_names_row_and_field() {
        let mut csv = sample_csv(7, 0.1);
        csv.push_str("0.7,one,0,0\n");
        let err = read_curve_csv(Cursor::new(csv)).unwrap_err();
        match err {
            IngestError::BadNumber { row, field } => {
                assert_eq!(row, 8);
                assert_eq!(field, "one");
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn too_few_rows() {
        let err = read_curve_csv(Cursor::new(sample_csv(4, 0.1))).unwrap_err();
        assert!(matches!(err, IngestError::TooFewRows { n: 4, .. }));
    }

    #[test]
    fn non_finite_values_rejected() {
        let mut csv = sample_csv(7, 0.1);
        csv.push_str("0.7,inf,0,0\n");
        let err = read_curve_csv(Cursor::new(csv)).unwrap_err();
        assert!(matches!(err, IngestError::BadNumber { row: 8, .. }));
    }
}
