//! Finite-difference jets: the independent oracle for derivative audits.
//!
//! A 7-point stencil determines derivatives 1..3 with truncation order at
//! least 4 (order 6 for the first derivative at the center). Weights are
//! generated by the Fornberg recurrence, which also covers the one-sided
//! stencils used at sampled-grid ends.
//!
//! These jets exist to audit the analytic ones, and to differentiate
//! externally supplied sample grids; exact sources never route through
//! them.

use crate::curve::{CurveError, CurveJet, JetAccuracy};
use crate::lorentz::LorentzVector;
use crate::tol::FD_MIN_STEP;

/// Stencil width used throughout.
pub const STENCIL_LEN: usize = 7;

/// Fornberg weights for the m-th derivative at evaluation point `z`, given
/// node coordinates `x`. Returns one weight per node.
///
/// Classical recurrence over increasing node count and derivative order;
/// exact for polynomials of degree `x.len() - 1`.
#[allow(clippy::needless_range_loop)] // the recurrence updates c in place by index
pub fn fornberg_weights(z: f64, x: &[f64], m: usize) -> Vec<f64> {
    let n = x.len();
    assert!(m < n, "derivative order must be below the node count");
    // c[k][j]: weight of node j for derivative k, over nodes 0..=i
    let mut c = vec![vec![0.0; n]; m + 1];
    let mut c1 = 1.0;
    let mut c4 = x[0] - z;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = x[i] - z;
        for j in 0..i {
            let c3 = x[i] - x[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[k][i] = c1 * (k as f64 * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                c[k][j] = (c4 * c[k][j] - k as f64 * c[k - 1][j]) / c3;
            }
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    c[m].clone()
}

fn weighted_sum(points: &[LorentzVector], w: &[f64]) -> LorentzVector {
    let mut acc = LorentzVector::ZERO;
    for (p, wi) in points.iter().zip(w) {
        acc = acc + p.scale(*wi);
    }
    acc
}

/// Derivative jet at node `offset` of a 7-point window with uniform step
/// `h`. Used both by [`fd_jet`] (centered) and the sampled-curve ends
/// (one-sided).
pub fn stencil_jet(
    s: f64,
    window: &[LorentzVector],
    offset: usize,
    h: f64,
    accuracy: JetAccuracy,
) -> CurveJet {
    debug_assert_eq!(window.len(), STENCIL_LEN);
    let nodes: Vec<f64> = (0..STENCIL_LEN)
        .map(|i| (i as f64 - offset as f64) * h)
        .collect();
    let d = |m: usize| weighted_sum(window, &fornberg_weights(0.0, &nodes, m));
    CurveJet {
        s,
        p: window[offset],
        d1: d(1),
        d2: d(2),
        d3: d(3),
        accuracy,
    }
}

/// Central-difference jet from positions on the symmetric stencil
/// `s + k*h, k = -3..=3`.
///
/// Truncation is O(h^6) for d1 and at least O(h^4) for d2 and d3; rounding
/// grows as eps/h^m, which is why steps below [`FD_MIN_STEP`] are refused.
pub fn fd_jet(s: f64, positions: &[LorentzVector; STENCIL_LEN], h: f64) -> Result<CurveJet, CurveError> {
    // negated form also rejects NaN steps
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(h >= FD_MIN_STEP) {
        return Err(CurveError::StepTooSmall {
            h,
            min: FD_MIN_STEP,
        });
    }
    Ok(stencil_jet(s, positions, STENCIL_LEN / 2, h, JetAccuracy::Central))
}

/// A-priori error bound for the centered stencil's m-th derivative.
///
/// `hi_scale` bounds |f^(7)| on the stencil, `val_scale` bounds |f|.
/// The first term is truncation, the second rounding amplification; the
/// constants are generous envelopes of the exact stencil coefficients.
pub fn fd_error_bound(m: usize, h: f64, val_scale: f64, hi_scale: f64) -> f64 {
    let trunc = hi_scale * h.powi(7 - m as i32);
    let round = 40.0 * f64::EPSILON * val_scale / h.powi(m as i32);
    trunc + round
}

/// Evaluate a closed-form curve on the centered stencil around `s`.
pub fn sample_stencil(
    mut position: impl FnMut(f64) -> LorentzVector,
    s: f64,
    h: f64,
) -> [LorentzVector; STENCIL_LEN] {
    let mut out = [LorentzVector::ZERO; STENCIL_LEN];
    for (k, slot) in out.iter_mut().enumerate() {
        *slot = position(s + (k as f64 - 3.0) * h);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::example1_curve;
    use approx::assert_abs_diff_eq;

    #[test]
    fn centered_weights_first_derivative() {
        // classical 7-point centered d1 weights: (-1, 9, -45, 0, 45, -9, 1)/60h
        let nodes: Vec<f64> = (-3..=3).map(|k| k as f64).collect();
        let w = fornberg_weights(0.0, &nodes, 1);
        let expect = [-1.0, 9.0, -45.0, 0.0, 45.0, -9.0, 1.0].map(|v| v / 60.0);
        for (a, b) in w.iter().zip(expect.iter()) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn constant_curve_has_zero_derivatives() {
        let pts = [LorentzVector::new(1.0, 2.0, 3.0); STENCIL_LEN];
        let j = fd_jet(0.0, &pts, 1e-3).unwrap();
        assert_abs_diff_eq!(j.d1.max_abs(), 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(j.d2.max_abs(), 0.0, epsilon = 1e-6);
        assert_abs_diff_eq!(j.d3.max_abs(), 0.0, epsilon = 1e-3);
    }

    #[test]
    fn cubic_component_is_differentiated_exactly() {
        // stencil is exact on polynomials up to degree 6
        let h = 0.05;
        let pts = sample_stencil(
            |s| LorentzVector::new(s * s * s, 0.0, 0.0),
            0.4,
            h,
        );
        let j = fd_jet(0.4, &pts, h).unwrap();
        assert_abs_diff_eq!(j.d1.x1, 3.0 * 0.4f64.powi(2), epsilon = 1e-12);
        assert_abs_diff_eq!(j.d2.x1, 6.0 * 0.4, epsilon = 1e-11);
        assert_abs_diff_eq!(j.d3.x1, 6.0, epsilon = 1e-10);
    }

    #[test]
    fn example_curve_first_derivative_at_origin() {
        let h = 1e-3;
        let pts = sample_stencil(|s| example1_curve(s).p, 0.0, h);
        let j = fd_jet(0.0, &pts, h).unwrap();
        let d1 = LorentzVector::new(0.0, 1.0, 0.0);
        assert!((j.d1 - d1).max_abs() <= 1e-9, "d1 = {:?}", j.d1);
    }

    #[test]
    fn step_below_floor_is_refused() {
        let pts = [LorentzVector::ZERO; STENCIL_LEN];
        assert!(matches!(
            fd_jet(0.0, &pts, 1e-6),
            Err(CurveError::StepTooSmall { .. })
        ));
    }

    #[test]
    fn fd_matches_exact_jets_within_error_model() {
        let h = 1e-3;
        // |f| and |f^(7)| on [-2,2] are bounded by ~4 for all components
        let (val_scale, hi_scale) = (4.0, 4.0);
        for i in 0..41 {
            let s = -2.0 + 0.1 * i as f64;
            let exact = example1_curve(s);
            let pts = sample_stencil(|t| example1_curve(t).p, s, h);
            let fd = fd_jet(s, &pts, h).unwrap();
            assert!((fd.d1 - exact.d1).max_abs() <= fd_error_bound(1, h, val_scale, hi_scale));
            assert!((fd.d2 - exact.d2).max_abs() <= fd_error_bound(2, h, val_scale, hi_scale));
            assert!((fd.d3 - exact.d3).max_abs() <= fd_error_bound(3, h, val_scale, hi_scale));
        }
    }
}
