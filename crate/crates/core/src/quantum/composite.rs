use num_complex::Complex64;

use super::{Basis, PositionGrid, QuantumState};
use crate::algebra::Magnitude;
use crate::error::{Error, Result};

/// State of two irreducible systems, the tensor product of two
/// [`QuantumState`]s. Amplitude `(i, j)` is stored at `i * n2 + j` and the
/// cell measure is the product of the factors' measures.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositeState {
    factors: [(PositionGrid, Basis); 2],
    amplitudes: Vec<Complex64>,
}

impl CompositeState {
    pub(crate) fn product(first: &QuantumState, second: &QuantumState) -> Self {
        let amplitudes = first
            .amplitudes()
            .iter()
            .flat_map(|a| second.amplitudes().iter().map(move |b| a * b))
            .collect();
        CompositeState {
            factors: [(first.grid, first.basis), (second.grid, second.basis)],
            amplitudes,
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.factors[0].0.n(), self.factors[1].0.n())
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, i: usize, j: usize) -> Result<Complex64> {
        let (n1, n2) = self.shape();
        if i >= n1 || j >= n2 {
            return Err(Error::OutOfBounds {
                i,
                j,
                nx: n1,
                np: n2,
            });
        }
        Ok(self.amplitudes[i * n2 + j])
    }

    pub fn cell_measure(&self) -> f64 {
        self.factors.iter().map(|(g, b)| g.measure(*b)).product()
    }

    pub fn magnitude(&self) -> Magnitude {
        let sum: f64 = self.amplitudes.iter().map(|a| a.norm_sqr()).sum();
        Magnitude::from_nonnegative(sum * self.cell_measure())
    }

    pub fn combine(&self, other: &Self) -> Result<Self> {
        if self.factors != other.factors {
            return Err(Error::Incompatible(
                "composite states live on different grids".into(),
            ));
        }
        Ok(CompositeState {
            factors: self.factors,
            amplitudes: self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn resize(&self, factor: f64) -> Result<Self> {
        if !factor.is_finite() || factor < 0.0 {
            return Err(Error::domain(format!(
                "resize factor {factor} must be finite and >= 0"
            )));
        }
        let k = factor.sqrt();
        Ok(CompositeState {
            factors: self.factors,
            amplitudes: self.amplitudes.iter().map(|a| a * k).collect(),
        })
    }
}
