use num_complex::Complex64;

use crate::error::Result;
use crate::numerics::grid::Grid1D;
use crate::numerics::quad::{integrate_grid_1d, integrate_grid_1d_complex};

/// Unnormalized complex field on a grid: the output type of the restricted
/// and crossing amplitude maps, whose norms are the candidate probabilities.
#[derive(Debug, Clone)]
pub struct AmplitudeField {
    pub grid: Grid1D,
    pub samples: Vec<Complex64>,
}

impl AmplitudeField {
    pub fn new(grid: Grid1D, samples: Vec<Complex64>) -> Self {
        debug_assert_eq!(grid.n_points(), samples.len());
        Self { grid, samples }
    }

    /// `∫ |f|² dx`.
    pub fn norm_sq(&self) -> Result<f64> {
        let density: Vec<f64> = self.samples.iter().map(|s| s.norm_sqr()).collect();
        integrate_grid_1d(&self.grid, &density)
    }

    /// `∫ f g* dx`.
    pub fn inner(&self, other: &AmplitudeField) -> Result<Complex64> {
        let prod: Vec<Complex64> = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a * b.conj())
            .collect();
        integrate_grid_1d_complex(&self.grid, &prod)
    }

    /// L² distance to another field on the same grid.
    pub fn l2_distance(&self, other: &AmplitudeField) -> Result<f64> {
        let diff: Vec<f64> = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| (a - b).norm_sqr())
            .collect();
        Ok(integrate_grid_1d(&self.grid, &diff)?.sqrt())
    }
}
