//! Truncated Taylor jets: exact forward propagation of derivatives.
//!
//! [`Jet4`] carries a function value and its first four derivatives at one
//! point, represented internally as Taylor coefficients so that products
//! reduce to coefficient convolution. This is the machinery behind every
//! "exact jet" in the crate: generating-function curves, the closed-form
//! example curve, and the coefficient formulas of the closed-form registry
//! are all differentiated through it rather than by hand.

use serde::{Deserialize, Serialize};

/// Order kept by [`Jet4`]: value plus derivatives 1..=4.
pub const JET_ORDER: usize = 4;

const N: usize = JET_ORDER + 1;

/// k! for k = 0..=4.
const FACT: [f64; N] = [1.0, 1.0, 2.0, 6.0, 24.0];

/// Value and derivatives up to order 3 of a scalar function at one
/// parameter value: the shape produced by generating-function recovery and
/// consumed by the printed-formula evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScalarJet3 {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
}

impl ScalarJet3 {
    pub fn new(value: f64, d1: f64, d2: f64, d3: f64) -> Self {
        Self { value, d1, d2, d3 }
    }

    pub fn is_finite(&self) -> bool {
        self.value.is_finite() && self.d1.is_finite() && self.d2.is_finite() && self.d3.is_finite()
    }

    /// Promote to a full jet with the fourth derivative supplied by the
    /// caller (zero is fine when only lower orders of a downstream result
    /// will be read).
    pub fn extend(&self, d4: f64) -> Jet4 {
        Jet4::from_derivs([self.value, self.d1, self.d2, self.d3, d4])
    }
}

/// Fourth-order truncated Taylor jet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet4 {
    /// Taylor coefficients: c[k] = f^(k) / k!.
    c: [f64; N],
}

impl Jet4 {
    pub fn constant(v: f64) -> Self {
        let mut c = [0.0; N];
        c[0] = v;
        Self { c }
    }

    /// The identity function evaluated at `s`: value `s`, derivative 1.
    pub fn variable(s: f64) -> Self {
        let mut c = [0.0; N];
        c[0] = s;
        c[1] = 1.0;
        Self { c }
    }

    /// Build from raw derivatives `[f, f', f'', f''', f'''']`.
    pub fn from_derivs(d: [f64; N]) -> Self {
        let mut c = [0.0; N];
        for k in 0..N {
            c[k] = d[k] / FACT[k];
        }
        Self { c }
    }

    /// k-th derivative, k <= 4.
    pub fn deriv(&self, k: usize) -> f64 {
        self.c[k] * FACT[k]
    }

    pub fn value(&self) -> f64 {
        self.c[0]
    }

    pub fn truncate(&self) -> ScalarJet3 {
        ScalarJet3::new(self.deriv(0), self.deriv(1), self.deriv(2), self.deriv(3))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(o.c.iter()) {
            *a += b;
        }
        Self { c }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut c = self.c;
        for (a, b) in c.iter_mut().zip(o.c.iter()) {
            *a -= b;
        }
        Self { c }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1.0)
    }

    pub fn scale(&self, k: f64) -> Self {
        let mut c = self.c;
        for v in &mut c {
            *v *= k;
        }
        Self { c }
    }

    /// Cauchy product of the truncated series.
    pub fn mul(&self, o: &Self) -> Self {
        let mut c = [0.0; N];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().take(N - i).enumerate() {
                c[i + j] += a * b;
            }
        }
        Self { c }
    }

    /// Series division; requires a nonzero leading coefficient.
    pub fn div(&self, o: &Self) -> Self {
        let mut c = [0.0; N];
        for k in 0..N {
            let mut acc = self.c[k];
            for (ci, oc) in c[..k].iter().zip(o.c[1..=k].iter().rev()) {
                acc -= ci * oc;
            }
            c[k] = acc / o.c[0];
        }
        Self { c }
    }

    pub fn recip(&self) -> Self {
        Self::constant(1.0).div(self)
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut acc = Self::constant(1.0);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Compose an outer function, given its derivatives at the jet's value.
    ///
    /// `g[k]` must be the k-th derivative of the outer function at
    /// `self.value()`. Evaluates the truncated Taylor expansion of the
    /// composition by Horner accumulation in the zero-constant part.
    pub fn compose(&self, g: [f64; N]) -> Self {
        let mut p = *self;
        p.c[0] = 0.0;
        // result = sum_k g[k]/k! * p^k, truncated
        let mut acc = Self::constant(g[N - 1] / FACT[N - 1]);
        for k in (0..N - 1).rev() {
            acc = acc.mul(&p).add(&Self::constant(g[k] / FACT[k]));
        }
        acc
    }

    pub fn exp(&self) -> Self {
        let e = self.value().exp();
        self.compose([e; N])
    }

    pub fn sinh(&self) -> Self {
        let (s, c) = (self.value().sinh(), self.value().cosh());
        self.compose([s, c, s, c, s])
    }

    pub fn cosh(&self) -> Self {
        let (s, c) = (self.value().sinh(), self.value().cosh());
        self.compose([c, s, c, s, c])
    }

    pub fn tanh(&self) -> Self {
        self.sinh().div(&self.cosh())
    }

    pub fn sqrt(&self) -> Self {
        let v = self.value();
        let r = v.sqrt();
        self.compose([
            r,
            0.5 / r,
            -0.25 / (r * v),
            0.375 / (r * v * v),
            -0.9375 / (r * v * v * v),
        ])
    }
}
