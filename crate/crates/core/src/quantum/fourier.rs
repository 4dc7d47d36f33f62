//! Unitary centered discrete Fourier transform between the position and
//! momentum parametrizations (hbar = 1).
//!
//! With position midpoints `x_j = x_min + (j + 1/2) dx` and momenta
//! `p_k = 2 pi (k - n/2) / (n dx)`:
//!
//! ```text
//! phi_k = dx / sqrt(2 pi) * sum_j psi_j e^{-i p_k x_j}
//! psi_j = dp / sqrt(2 pi) * sum_k phi_k e^{+i p_k x_j}
//! ```
//!
//! which preserves `sum |psi|^2 dx = sum |phi|^2 dp` exactly. The sums are
//! evaluated directly, O(n^2), with a precomputed table of n-th roots of
//! unity.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::PositionGrid;

/// `table[m] = e^{-2 pi i m / n}`.
fn roots_of_unity(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|m| Complex64::from_polar(1.0, -2.0 * PI * m as f64 / n as f64))
        .collect()
}

/// Twiddle index of `(k - n/2) * j` modulo `n`.
fn shifted_index(k: usize, j: usize, n: usize) -> usize {
    let shift = k as i128 - (n / 2) as i128;
    (shift * j as i128).rem_euclid(n as i128) as usize
}

pub(crate) fn forward(grid: &PositionGrid, psi: &[Complex64]) -> Vec<Complex64> {
    let n = grid.n();
    debug_assert_eq!(psi.len(), n);
    let roots = roots_of_unity(n);
    let scale = grid.dx() / (2.0 * PI).sqrt();
    let x_first = grid.x(0);
    (0..n)
        .map(|k| {
            let sum: Complex64 = psi
                .iter()
                .enumerate()
                .map(|(j, &v)| v * roots[shifted_index(k, j, n)])
                .sum();
            let offset = Complex64::from_polar(scale, -grid.momentum(k) * x_first);
            offset * sum
        })
        .collect()
}

pub(crate) fn inverse(grid: &PositionGrid, phi: &[Complex64]) -> Vec<Complex64> {
    let n = grid.n();
    debug_assert_eq!(phi.len(), n);
    let roots = roots_of_unity(n);
    let x_first = grid.x(0);
    let shifted: Vec<Complex64> = phi
        .iter()
        .enumerate()
        .map(|(k, &v)| v * Complex64::from_polar(1.0, grid.momentum(k) * x_first))
        .collect();
    let scale = grid.dp() / (2.0 * PI).sqrt();
    (0..n)
        .map(|j| {
            let sum: Complex64 = shifted
                .iter()
                .enumerate()
                .map(|(k, &v)| v * roots[shifted_index(k, j, n)].conj())
                .sum();
            sum * scale
        })
        .collect()
}
