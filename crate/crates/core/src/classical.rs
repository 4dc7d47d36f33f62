//! Infinitesimally reducible states: nonnegative magnitude densities over a
//! discretized position-momentum grid.
//!
//! The basis element for each cell is the cell indicator, normalized so that
//! its inner product with a state extracts the density coefficient
//! `rho(x, p)`. Integrals use the midpoint rule with measure `dx * dp`.
//! Grouping and combining are both the pointwise sum of densities, so the
//! magnitude is linear in both operations. It is not the vector norm.

use crate::algebra::{Magnitude, StateSpace};
use crate::error::{Error, Result};

/// Densities below zero by no more than this are treated as round-off.
pub const NEGATIVE_DENSITY_TOL: f64 = 1e-15;

/// Uniform `nx x np` grid of cells over `[x_min, x_max) x [p_min, p_max)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseSpaceGrid {
    x_min: f64,
    x_max: f64,
    p_min: f64,
    p_max: f64,
    nx: usize,
    np: usize,
}

impl PhaseSpaceGrid {
    pub fn new(
        x_min: f64,
        x_max: f64,
        nx: usize,
        p_min: f64,
        p_max: f64,
        np: usize,
    ) -> Result<Self> {
        let bounds = [x_min, x_max, p_min, p_max];
        if bounds.iter().any(|b| !b.is_finite()) {
            return Err(Error::InvalidGrid(format!("non-finite bounds {bounds:?}")));
        }
        if x_max <= x_min || p_max <= p_min {
            return Err(Error::InvalidGrid(format!(
                "empty domain [{x_min}, {x_max}) x [{p_min}, {p_max})"
            )));
        }
        if nx == 0 || np == 0 {
            return Err(Error::InvalidGrid(format!(
                "cell counts {nx}x{np} must be positive"
            )));
        }
        let grid = PhaseSpaceGrid {
            x_min,
            x_max,
            p_min,
            p_max,
            nx,
            np,
        };
        if grid.cell_measure() <= 0.0 {
            return Err(Error::InvalidGrid("cell measure underflows to zero".into()));
        }
        Ok(grid)
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn np(&self) -> usize {
        self.np
    }

    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / self.nx as f64
    }

    pub fn dp(&self) -> f64 {
        (self.p_max - self.p_min) / self.np as f64
    }

    pub fn cell_measure(&self) -> f64 {
        self.dx() * self.dp()
    }

    pub fn area(&self) -> f64 {
        (self.x_max - self.x_min) * (self.p_max - self.p_min)
    }

    /// Midpoint of position cell `i`.
    pub fn x(&self, i: usize) -> f64 {
        self.x_min + (i as f64 + 0.5) * self.dx()
    }

    /// Midpoint of momentum cell `j`.
    pub fn p(&self, j: usize) -> f64 {
        self.p_min + (j as f64 + 0.5) * self.dp()
    }

    pub fn x_bounds(&self) -> (f64, f64) {
        (self.x_min, self.x_max)
    }

    pub fn p_bounds(&self) -> (f64, f64) {
        (self.p_min, self.p_max)
    }

    fn len(&self) -> usize {
        self.nx * self.np
    }
}

/// A magnitude density `rho(x, p)` sampled at cell midpoints, stored
/// row-major with position as the slow index.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalState {
    grid: PhaseSpaceGrid,
    rho: Vec<f64>,
}

impl ClassicalState {
    pub fn zeros(grid: PhaseSpaceGrid) -> Self {
        ClassicalState {
            grid,
            rho: vec![0.0; grid.len()],
        }
    }

    /// Wraps a row-major density array of length `nx * np`.
    pub fn from_density(grid: PhaseSpaceGrid, rho: Vec<f64>) -> Result<Self> {
        if rho.len() != grid.len() {
            return Err(Error::InvalidGrid(format!(
                "density has {} entries, grid has {}",
                rho.len(),
                grid.len()
            )));
        }
        if let Some(bad) = rho.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(Error::domain(format!(
                "density entry {bad} is not a finite nonnegative value"
            )));
        }
        Ok(ClassicalState { grid, rho })
    }

    /// Samples `f` at every cell midpoint. Round-off negatives down to
    /// `-NEGATIVE_DENSITY_TOL` are clipped to zero.
    pub fn from_fn(grid: PhaseSpaceGrid, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        let mut rho = Vec::with_capacity(grid.len());
        for i in 0..grid.nx {
            let x = grid.x(i);
            for j in 0..grid.np {
                let p = grid.p(j);
                let v = f(x, p);
                if !v.is_finite() || v < -NEGATIVE_DENSITY_TOL {
                    return Err(Error::domain(format!(
                        "density {v} at (x={x}, p={p}) is not a magnitude density"
                    )));
                }
                rho.push(v.max(0.0));
            }
        }
        Ok(ClassicalState { grid, rho })
    }

    /// State whose only support is cell `(i, j)`, with density `value` there.
    pub fn indicator(grid: PhaseSpaceGrid, i: usize, j: usize, value: f64) -> Result<Self> {
        let mut state = Self::zeros(grid);
        let k = state.index(i, j)?;
        if !value.is_finite() || value < 0.0 {
            return Err(Error::domain(format!(
                "density {value} is negative or non-finite"
            )));
        }
        state.rho[k] = value;
        Ok(state)
    }

    pub fn grid(&self) -> &PhaseSpaceGrid {
        &self.grid
    }

    pub fn density(&self) -> &[f64] {
        &self.rho
    }

    fn index(&self, i: usize, j: usize) -> Result<usize> {
        let (nx, np) = (self.grid.nx, self.grid.np);
        if i >= nx || j >= np {
            return Err(Error::OutOfBounds { i, j, nx, np });
        }
        Ok(i * np + j)
    }

    /// Coefficient of the state against the basis element of cell `(i, j)`.
    pub fn density_at(&self, i: usize, j: usize) -> Result<f64> {
        self.index(i, j).map(|k| self.rho[k])
    }

    /// Midpoint-rule integral of the density over the grid.
    pub fn magnitude(&self) -> Magnitude {
        let sum: f64 = self.rho.iter().sum();
        Magnitude::from_nonnegative(sum * self.grid.cell_measure())
    }

    pub fn resize(&self, factor: f64) -> Result<Self> {
        if !factor.is_finite() || factor < 0.0 {
            return Err(Error::domain(format!(
                "resize factor {factor} must be finite and >= 0"
            )));
        }
        Ok(ClassicalState {
            grid: self.grid,
            rho: self.rho.iter().map(|v| factor * v).collect(),
        })
    }

    /// Pointwise sum of the two densities.
    pub fn combine(&self, other: &Self) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::Incompatible(format!(
                "phase-space grids differ: {:?} vs {:?}",
                self.grid, other.grid
            )));
        }
        Ok(ClassicalState {
            grid: self.grid,
            rho: self
                .rho
                .iter()
                .zip(&other.rho)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Position density: entry `i` is the momentum integral of row `i`.
    pub fn marginal_position(&self) -> Vec<f64> {
        let dp = self.grid.dp();
        self.rho
            .chunks_exact(self.grid.np)
            .map(|row| row.iter().sum::<f64>() * dp)
            .collect()
    }

    /// Momentum density: entry `j` is the position integral of column `j`.
    pub fn marginal_momentum(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.grid.np];
        for row in self.rho.chunks_exact(self.grid.np) {
            for (acc, v) in out.iter_mut().zip(row) {
                *acc += v;
            }
        }
        let dx = self.grid.dx();
        out.iter_mut().for_each(|v| *v *= dx);
        out
    }
}

impl StateSpace for ClassicalState {
    /// Reducible states regroup freely, so a group is just another state.
    type Grouped = ClassicalState;

    fn magnitude(&self) -> Magnitude {
        ClassicalState::magnitude(self)
    }

    fn resize(&self, factor: f64) -> Result<Self> {
        ClassicalState::resize(self, factor)
    }

    fn group(&self, other: &Self) -> Result<Self> {
        self.combine(other)
    }

    fn combine(&self, other: &Self) -> Result<Self> {
        ClassicalState::combine(self, other)
    }
}

/// Normalized product Gaussian density centered at `(x0, p0)`.
pub fn gaussian_density(x0: f64, p0: f64, sigma_x: f64, sigma_p: f64) -> impl Fn(f64, f64) -> f64 {
    let norm = 1.0 / (2.0 * std::f64::consts::PI * sigma_x * sigma_p);
    move |x, p| {
        let u = (x - x0) / sigma_x;
        let v = (p - p0) / sigma_p;
        norm * (-0.5 * (u * u + v * v)).exp()
    }
}
