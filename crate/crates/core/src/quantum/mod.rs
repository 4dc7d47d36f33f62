//! Irreducible states: complex amplitude vectors over one parametrization at
//! a time.
//!
//! Amplitudes are the coefficients `<x|s> = rho_x(x) e^{i theta_x(x)}` at cell
//! midpoints, with `rho_x^2` a magnitude per unit length. Inner products carry
//! the cell measure, so the magnitude `<s|s> = sum |psi|^2 dx` is the squared
//! norm. Combining adds amplitudes, which makes the square root of the
//! magnitude (not the magnitude) the quantity that adds, up to the relative
//! phase captured by [`QuantumState::correlation`].

mod composite;
mod fourier;

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::algebra::{Correlation, CorrelationAngle, Magnitude, StateSpace};
use crate::error::{Error, Result};

pub use composite::CompositeState;

/// Which coordinate the amplitudes are parametrized by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Position,
    Momentum,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Position => "position",
            Basis::Momentum => "momentum",
        })
    }
}

/// `n` position cells over `[x_min, x_max)`.
///
/// The conjugate momentum grid has the same `n` points
/// `p_k = 2 pi (k - n/2) / (n dx)`, covering `[-pi/dx, pi/dx)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositionGrid {
    x_min: f64,
    x_max: f64,
    n: usize,
}

impl PositionGrid {
    pub fn new(x_min: f64, x_max: f64, n: usize) -> Result<Self> {
        if !x_min.is_finite() || !x_max.is_finite() || x_max <= x_min {
            return Err(Error::InvalidGrid(format!(
                "empty domain [{x_min}, {x_max})"
            )));
        }
        if n < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 cells, got {n}"
            )));
        }
        Ok(PositionGrid { x_min, x_max, n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bounds(&self) -> (f64, f64) {
        (self.x_min, self.x_max)
    }

    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / self.n as f64
    }

    pub fn dp(&self) -> f64 {
        2.0 * PI / (self.n as f64 * self.dx())
    }

    /// Midpoint of cell `j`.
    pub fn x(&self, j: usize) -> f64 {
        self.x_min + (j as f64 + 0.5) * self.dx()
    }

    pub fn momentum(&self, k: usize) -> f64 {
        (k as f64 - (self.n / 2) as f64) * self.dp()
    }

    pub fn coordinate(&self, basis: Basis, k: usize) -> f64 {
        match basis {
            Basis::Position => self.x(k),
            Basis::Momentum => self.momentum(k),
        }
    }

    pub fn measure(&self, basis: Basis) -> f64 {
        match basis {
            Basis::Position => self.dx(),
            Basis::Momentum => self.dp(),
        }
    }

    /// Index of the momentum sample closest to `p`, if it lies on the grid.
    pub fn momentum_index(&self, p: f64) -> Option<usize> {
        let k = (p / self.dp()).round() + (self.n / 2) as f64;
        (k >= 0.0 && k < self.n as f64).then_some(k as usize)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState {
    grid: PositionGrid,
    amplitudes: Vec<Complex64>,
    basis: Basis,
}

impl QuantumState {
    pub fn zeros(grid: PositionGrid, basis: Basis) -> Self {
        QuantumState {
            grid,
            amplitudes: vec![Complex64::new(0.0, 0.0); grid.n],
            basis,
        }
    }

    pub fn from_amplitudes(
        grid: PositionGrid,
        amplitudes: Vec<Complex64>,
        basis: Basis,
    ) -> Result<Self> {
        if amplitudes.len() != grid.n {
            return Err(Error::InvalidGrid(format!(
                "{} amplitudes for a grid of {} cells",
                amplitudes.len(),
                grid.n
            )));
        }
        if let Some(bad) = amplitudes.iter().find(|a| !a.is_finite()) {
            return Err(Error::domain(format!("amplitude {bad} is not finite")));
        }
        Ok(QuantumState {
            grid,
            amplitudes,
            basis,
        })
    }

    /// Samples `f` at the coordinates of `basis`.
    pub fn from_fn(grid: PositionGrid, basis: Basis, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        let amplitudes = (0..grid.n).map(|k| f(grid.coordinate(basis, k))).collect();
        Self::from_amplitudes(grid, amplitudes, basis)
    }

    /// State supported on a single cell.
    pub fn point(
        grid: PositionGrid,
        basis: Basis,
        index: usize,
        amplitude: Complex64,
    ) -> Result<Self> {
        if index >= grid.n {
            return Err(Error::OutOfBounds {
                i: index,
                j: 0,
                nx: grid.n,
                np: 1,
            });
        }
        let mut state = Self::zeros(grid, basis);
        state.amplitudes[index] = amplitude;
        Self::from_amplitudes(grid, state.amplitudes, basis)
    }

    pub fn grid(&self) -> &PositionGrid {
        &self.grid
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    /// Cell width in the current parametrization.
    pub fn cell_measure(&self) -> f64 {
        self.grid.measure(self.basis)
    }

    pub fn coordinates(&self) -> Vec<f64> {
        (0..self.len())
            .map(|k| self.grid.coordinate(self.basis, k))
            .collect()
    }

    /// Magnitude per unit coordinate, `|psi|^2`.
    pub fn density(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::Incompatible(format!(
                "bases differ: {} vs {}",
                self.basis, other.basis
            )));
        }
        if self.grid != other.grid {
            return Err(Error::Incompatible(format!(
                "grids differ: {:?} vs {:?}",
                self.grid, other.grid
            )));
        }
        Ok(())
    }

    pub fn magnitude(&self) -> Magnitude {
        let sum: f64 = self.amplitudes.iter().map(|a| a.norm_sqr()).sum();
        Magnitude::from_nonnegative(sum * self.cell_measure())
    }

    /// `<self|other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        self.check_compatible(other)?;
        let sum: Complex64 = self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum();
        Ok(sum * self.cell_measure())
    }

    /// Amplitude sum.
    pub fn combine(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(QuantumState {
            grid: self.grid,
            amplitudes: self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| a + b)
                .collect(),
            basis: self.basis,
        })
    }

    /// Tensor product `|self>|other>`. The grids and bases may differ.
    pub fn group(&self, other: &Self) -> CompositeState {
        CompositeState::product(self, other)
    }

    /// Scales the amplitudes by `sqrt(factor)`, so the magnitude scales by
    /// `factor`.
    pub fn resize(&self, factor: f64) -> Result<Self> {
        if !factor.is_finite() || factor < 0.0 {
            return Err(Error::domain(format!(
                "resize factor {factor} must be finite and >= 0"
            )));
        }
        Ok(self.scaled(Complex64::from(factor.sqrt())))
    }

    /// Multiplies every amplitude by `e^{i phase}`.
    pub fn apply_phase(&self, phase: f64) -> Result<Self> {
        if !phase.is_finite() {
            return Err(Error::domain(format!("phase {phase} is not finite")));
        }
        Ok(self.scaled(Complex64::from_polar(1.0, phase)))
    }

    fn scaled(&self, factor: Complex64) -> Self {
        QuantumState {
            grid: self.grid,
            amplitudes: self.amplitudes.iter().map(|a| a * factor).collect(),
            basis: self.basis,
        }
    }

    /// `Re<self|other> / sqrt(M(self) M(other))`, the correlation for which
    /// `M(self + other) = M1 + M2 + 2 sqrt(M1 M2) corr` holds identically.
    pub fn correlation(&self, other: &Self) -> Result<Correlation> {
        let overlap = self.inner(other)?;
        let (m1, m2) = (self.magnitude().value(), other.magnitude().value());
        if m1 == 0.0 || m2 == 0.0 {
            return Err(Error::domain(
                "correlation with a zero-magnitude state is undefined",
            ));
        }
        Correlation::new(overlap.re / (m1 * m2).sqrt())
    }

    pub fn correlation_angle(&self, other: &Self) -> Result<CorrelationAngle> {
        self.correlation(other).map(Correlation::angle)
    }

    /// Resizes to unit magnitude.
    pub fn normalize(&self) -> Result<Self> {
        let m = self.magnitude().value();
        if m == 0.0 {
            return Err(Error::domain("cannot normalize a zero-magnitude state"));
        }
        self.resize(1.0 / m)
    }

    pub fn to_momentum_basis(&self) -> Result<Self> {
        self.expect_basis(Basis::Position)?;
        Ok(QuantumState {
            grid: self.grid,
            amplitudes: fourier::forward(&self.grid, &self.amplitudes),
            basis: Basis::Momentum,
        })
    }

    pub fn to_position_basis(&self) -> Result<Self> {
        self.expect_basis(Basis::Momentum)?;
        Ok(QuantumState {
            grid: self.grid,
            amplitudes: fourier::inverse(&self.grid, &self.amplitudes),
            basis: Basis::Position,
        })
    }

    fn expect_basis(&self, expected: Basis) -> Result<()> {
        if self.basis != expected {
            return Err(Error::WrongBasis {
                expected,
                actual: self.basis,
            });
        }
        Ok(())
    }

    /// Mean of the current coordinate under the normalized density.
    pub fn basis_mean(&self) -> Result<f64> {
        self.moments().map(|(mean, _)| mean)
    }

    /// Standard deviation of the current coordinate under the normalized
    /// density `|psi|^2 / M`.
    pub fn basis_stddev(&self) -> Result<f64> {
        self.moments().map(|(_, var)| var.sqrt())
    }

    fn moments(&self) -> Result<(f64, f64)> {
        let weights = self.density();
        let total: f64 = weights.iter().sum();
        if total == 0.0 {
            return Err(Error::domain(
                "moments of a zero-magnitude state are undefined",
            ));
        }
        let coords = self.coordinates();
        let mean = coords.iter().zip(&weights).map(|(c, w)| c * w).sum::<f64>() / total;
        let var = coords
            .iter()
            .zip(&weights)
            .map(|(c, w)| (c - mean).powi(2) * w)
            .sum::<f64>()
            / total;
        Ok((mean, var))
    }
}

impl StateSpace for QuantumState {
    type Grouped = CompositeState;

    fn magnitude(&self) -> Magnitude {
        QuantumState::magnitude(self)
    }

    fn resize(&self, factor: f64) -> Result<Self> {
        QuantumState::resize(self, factor)
    }

    fn group(&self, other: &Self) -> Result<CompositeState> {
        Ok(QuantumState::group(self, other))
    }

    fn combine(&self, other: &Self) -> Result<Self> {
        QuantumState::combine(self, other)
    }
}

/// Normalized wavepacket `~ exp(-(x - x0)^2 / (4 sigma^2) + i p0 x)` in the
/// position basis. `sigma` is the position standard deviation.
pub fn gaussian_wavepacket(
    grid: PositionGrid,
    x0: f64,
    p0: f64,
    sigma: f64,
) -> Result<QuantumState> {
    if !sigma.is_finite() || sigma <= 0.0 {
        return Err(Error::domain(format!(
            "wavepacket width {sigma} must be positive"
        )));
    }
    if !x0.is_finite() || !p0.is_finite() {
        return Err(Error::domain(format!(
            "wavepacket center ({x0}, {p0}) is not finite"
        )));
    }
    let (lo, hi) = grid.bounds();
    if x0 - 5.0 * sigma < lo || x0 + 5.0 * sigma > hi {
        log::warn!("wavepacket at x0={x0} with sigma={sigma} is truncated by [{lo}, {hi})");
    }
    let state = QuantumState::from_fn(grid, Basis::Position, |x| {
        let u = x - x0;
        Complex64::from_polar((-u * u / (4.0 * sigma * sigma)).exp(), p0 * x)
    })?;
    state.normalize()
}
