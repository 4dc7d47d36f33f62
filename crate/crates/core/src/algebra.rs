//! Scalar combination laws shared by the classical and quantum realizations.
//!
//! Every state space in this crate supports the same four operations:
//! magnitude, resize, group and combine ([`StateSpace`]). What separates the
//! realizations is how the magnitude of a combined state relates to the
//! magnitudes of its inputs. Classically it is additive. For irreducible
//! states it picks up an interference term governed by a [`Correlation`]:
//!
//! ```text
//! M(C(s1, s2)) = M1 + M2 + 2 sqrt(M1 M2) corr
//!              = (sqrt(M1) + e^{-i theta} sqrt(M2)) (sqrt(M1) + e^{+i theta} sqrt(M2))
//! ```
//!
//! with `theta = arccos(corr)` the [`CorrelationAngle`].

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Slack allowed on `|corr| <= 1` before a value is rejected. Inner products
/// computed in floating point overshoot the bound by a few ulps.
pub const CORRELATION_SLACK: f64 = 1e-12;

/// Relative bound on the imaginary part of the factored product.
pub const FACTORED_RESIDUE_TOL: f64 = 1e-12;

/// The operations every state space provides.
pub trait StateSpace: Sized {
    /// The type of a two-system state produced by [`StateSpace::group`].
    type Grouped;

    fn magnitude(&self) -> Magnitude;

    /// Scales the magnitude by `factor`.
    fn resize(&self, factor: f64) -> Result<Self>;

    /// Puts two states together as parts of a larger system.
    fn group(&self, other: &Self) -> Result<Self::Grouped>;

    /// Modifies `self` according to `other`, staying in the same space.
    fn combine(&self, other: &Self) -> Result<Self>;
}

/// Size of a state. Extensive quantities such as mass or charge are
/// proportional to it.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Magnitude(f64);

impl Magnitude {
    pub const ZERO: Magnitude = Magnitude(0.0);

    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::domain(format!("magnitude {value} is not finite")));
        }
        if value < 0.0 {
            return Err(Error::domain(format!("magnitude {value} is negative")));
        }
        Ok(Magnitude(value))
    }

    /// For sums of squares and other values that are nonnegative by
    /// construction; clips round-off below zero.
    pub(crate) fn from_nonnegative(value: f64) -> Self {
        debug_assert!(value.is_finite(), "non-finite magnitude {value}");
        Magnitude(value.max(0.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn sqrt(self) -> f64 {
        self.0.sqrt()
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Correlation of the uncertainty of two states, in `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Correlation(f64);

impl Correlation {
    pub const UNCORRELATED: Correlation = Correlation(0.0);

    /// Values within [`CORRELATION_SLACK`] of the interval are clamped onto it.
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value.abs() > 1.0 + CORRELATION_SLACK {
            return Err(Error::domain(format!(
                "correlation {value} is outside [-1, 1]"
            )));
        }
        Ok(Correlation(value.clamp(-1.0, 1.0)))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn angle(self) -> CorrelationAngle {
        CorrelationAngle(self.0.acos())
    }
}

/// `arccos` of a [`Correlation`], in `[0, pi]` radians.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct CorrelationAngle(f64);

impl CorrelationAngle {
    pub fn new(theta: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::domain(format!(
                "correlation angle {theta} is outside [0, pi]"
            )));
        }
        Ok(CorrelationAngle(theta))
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn correlation(self) -> Correlation {
        Correlation(self.0.cos().clamp(-1.0, 1.0))
    }
}

/// Magnitude of the combination of two states with the given correlation.
///
/// Symmetric in `m1` and `m2`, and exactly `m1 + m2` when `corr` is zero.
pub fn combined_magnitude(m1: Magnitude, m2: Magnitude, corr: Correlation) -> Magnitude {
    let cross = 2.0 * (m1.0 * m2.0).sqrt() * corr.0;
    Magnitude::from_nonnegative(m1.0 + m2.0 + cross)
}

/// The complex product `(sqrt(m1) + e^{-i theta} sqrt(m2)) (sqrt(m1) + e^{+i theta} sqrt(m2))`
/// before its imaginary part is discarded.
pub fn factored_product(m1: Magnitude, m2: Magnitude, theta: CorrelationAngle) -> Complex64 {
    let (r1, r2) = (m1.sqrt(), m2.sqrt());
    let left = Complex64::from(r1) + Complex64::from_polar(r2, -theta.0);
    let right = Complex64::from(r1) + Complex64::from_polar(r2, theta.0);
    left * right
}

/// Same law as [`combined_magnitude`], evaluated through the factored
/// complex form. Fails if the product carries an imaginary residue larger
/// than `1e-12 * (m1 + m2 + 1)`.
pub fn combined_magnitude_factored(
    m1: Magnitude,
    m2: Magnitude,
    theta: CorrelationAngle,
) -> Result<Magnitude> {
    let product = factored_product(m1, m2, theta);
    let bound = FACTORED_RESIDUE_TOL * (m1.0 + m2.0 + 1.0);
    if product.im.abs() > bound {
        return Err(Error::domain(format!(
            "factored product has imaginary residue {} (bound {bound})",
            product.im
        )));
    }
    Ok(Magnitude::from_nonnegative(product.re))
}

/// `arccos` of a raw correlation value; see [`Correlation::new`] for the
/// accepted range.
pub fn corr_to_angle(corr: f64) -> Result<CorrelationAngle> {
    Correlation::new(corr).map(Correlation::angle)
}

pub fn angle_to_corr(theta: f64) -> Result<Correlation> {
    CorrelationAngle::new(theta).map(CorrelationAngle::correlation)
}
