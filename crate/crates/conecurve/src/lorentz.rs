//! Value-level algebra of the pseudo-Euclidean space with signature (2,1).
//!
//! The bilinear form is `<u,v> = u1*v1 + u2*v2 - u3*v3`: the first two axes
//! are spacelike, the third is timelike. Everything downstream (cone
//! membership, frames, partner curves) assumes this ordering.

use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LorentzError {
    /// `norm` was asked for a timelike vector; the square root of a negative
    /// self-product is not a real number and silently taking `|.|` would
    /// hide sign errors.
    #[error("negative quadrance {quadrance:e}: norm is undefined for timelike vectors")]
    NegativeQuadrance { quadrance: f64 },
}

/// A point/vector of the ambient space, components in the (spacelike,
/// spacelike, timelike) axis order.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct LorentzVector {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

/// Sign class of the self-inner-product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CausalCharacter {
    Spacelike,
    Timelike,
    Lightlike,
}

impl LorentzVector {
    pub const ZERO: Self = Self {
        x1: 0.0,
        x2: 0.0,
        x3: 0.0,
    };

    pub fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Self { x1, x2, x3 }
    }

    pub fn is_finite(&self) -> bool {
        self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }

    /// Signature-(2,1) inner product `u1*v1 + u2*v2 - u3*v3`.
    pub fn inner(&self, other: &Self) -> f64 {
        self.x1 * other.x1 + self.x2 * other.x2 - self.x3 * other.x3
    }

    /// `<v,v>`, the quadrance of the vector.
    pub fn self_inner(&self) -> f64 {
        self.inner(self)
    }

    /// Classify by the sign of `<v,v>` with an absolute dead band of `tol`
    /// around zero (cone membership is enforced on analytically exact
    /// curves, so an absolute tolerance suffices).
    pub fn causal_character(&self, tol: f64) -> CausalCharacter {
        debug_assert!(tol >= 0.0);
        let q = self.self_inner();
        if q.abs() <= tol {
            CausalCharacter::Lightlike
        } else if q > 0.0 {
            CausalCharacter::Spacelike
        } else {
            CausalCharacter::Timelike
        }
    }

    /// `sqrt(<v,v>)`; defined only for spacelike and lightlike vectors.
    pub fn norm(&self) -> Result<f64, LorentzError> {
        let q = self.self_inner();
        if q < 0.0 {
            return Err(LorentzError::NegativeQuadrance { quadrance: q });
        }
        Ok(q.sqrt())
    }

    /// Rotate the spacelike plane (x1, x2) by `theta` radians, fixing the
    /// timelike axis. This is an isometry of the ambient space that maps the
    /// null cone to itself.
    pub fn rotate_about_timelike_axis(&self, theta: f64) -> Self {
        let (sin, cos) = theta.sin_cos();
        Self {
            x1: cos * self.x1 - sin * self.x2,
            x2: sin * self.x1 + cos * self.x2,
            x3: self.x3,
        }
    }

    /// Largest absolute component; the residual measure used by the frame
    /// and Frenet diagnostics.
    pub fn max_abs(&self) -> f64 {
        self.x1.abs().max(self.x2.abs()).max(self.x3.abs())
    }

    pub fn scale(&self, k: f64) -> Self {
        Self::new(k * self.x1, k * self.x2, k * self.x3)
    }
}

impl Add for LorentzVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x1 + rhs.x1, self.x2 + rhs.x2, self.x3 + rhs.x3)
    }
}

impl Sub for LorentzVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x1 - rhs.x1, self.x2 - rhs.x2, self.x3 - rhs.x3)
    }
}

impl Neg for LorentzVector {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl Mul<f64> for LorentzVector {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        self.scale(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn inner_examples() {
        let l = LorentzVector::new(1.0, 0.0, 1.0);
        assert_eq!(l.inner(&l), 0.0);
        let e2 = LorentzVector::new(0.0, 1.0, 0.0);
        assert_eq!(e2.inner(&e2), 1.0);
        let u = LorentzVector::new(1.0, 2.0, 3.0);
        let v = LorentzVector::new(4.0, 5.0, 6.0);
        assert_eq!(u.inner(&v), 4.0 + 10.0 - 18.0);
    }

    #[test]
    fn causal_characters() {
        let tol = 1e-12;
        assert_eq!(
            LorentzVector::new(1.0, 0.0, 1.0).causal_character(tol),
            CausalCharacter::Lightlike
        );
        assert_eq!(
            LorentzVector::new(0.0, 0.0, 1.0).causal_character(tol),
            CausalCharacter::Timelike
        );
        // (-1/2, 0, 1/2) + (0, 1, 0): quadrance 1
        let g = LorentzVector::new(-0.5, 1.0, 0.5);
        assert_eq!(g.causal_character(tol), CausalCharacter::Spacelike);
        assert_abs_diff_eq!(g.self_inner(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn norms() {
        assert_eq!(LorentzVector::new(0.0, 1.0, 0.0).norm().unwrap(), 1.0);
        assert_eq!(LorentzVector::new(1.0, 0.0, 1.0).norm().unwrap(), 0.0);
        assert_eq!(LorentzVector::new(3.0, 4.0, 0.0).norm().unwrap(), 5.0);
        let err = LorentzVector::new(0.0, 0.0, 2.0).norm().unwrap_err();
        assert_eq!(err, LorentzError::NegativeQuadrance { quadrance: -4.0 });
    }

    #[test]
    fn rotation_examples() {
        let v = LorentzVector::new(1.0, 0.0, 1.0);
        let r = v.rotate_about_timelike_axis(FRAC_PI_2);
        assert_abs_diff_eq!(r.x1, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r.x2, 1.0, epsilon = 1e-15);
        assert_eq!(r.x3, 1.0);

        let w = LorentzVector::new(0.3, -0.7, 2.0);
        assert_eq!(w.rotate_about_timelike_axis(0.0), w);

        let r = v.rotate_about_timelike_axis(FRAC_PI_4);
        let h = std::f64::consts::SQRT_2 / 2.0;
        assert_abs_diff_eq!(r.x1, h, epsilon = 1e-15);
        assert_abs_diff_eq!(r.x2, h, epsilon = 1e-15);
        assert_abs_diff_eq!(r.self_inner(), 0.0, epsilon = 1e-15);
    }
}
