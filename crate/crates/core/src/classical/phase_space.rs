use ndarray::Array2;

use crate::error::{CoreError, Result};
use crate::numerics::grid::{Grid1D, Grid2D};
use crate::numerics::quad::integrate_grid_2d;

/// A point of the single-particle phase space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseSpacePoint {
    pub p: f64,
    pub x: f64,
}

impl PhaseSpacePoint {
    pub fn new(p: f64, x: f64) -> Result<Self> {
        if !(p.is_finite() && x.is_finite()) {
            return Err(CoreError::NonFinite("PhaseSpacePoint"));
        }
        Ok(Self { p, x })
    }
}

/// Whether a phase-space function is a classical density (non-negative) or a
/// Wigner function (may go negative in interference regions).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistributionKind {
    Classical,
    Wigner,
}

/// Real distribution on a rectangular `(p, x)` grid, normalized to one.
#[derive(Debug, Clone)]
pub struct PhaseSpaceDistribution {
    grid: Grid2D,
    samples: Array2<f64>,
    kind: DistributionKind,
}

impl PhaseSpaceDistribution {
    /// Wrap samples, checking normalization (1e-6) and, for the classical
    /// kind, positivity down to -1e-12.
    pub fn new(grid: Grid2D, samples: Array2<f64>, kind: DistributionKind) -> Result<Self> {
        let total = integrate_grid_2d(&grid, &samples)?;
        if (total - 1.0).abs() > 1e-6 {
            return Err(CoreError::Domain(format!(
                "distribution integrates to {total}, expected 1"
            )));
        }
        if kind == DistributionKind::Classical {
            let min = samples.iter().cloned().fold(f64::INFINITY, f64::min);
            if min < -1e-12 {
                return Err(CoreError::Domain(format!(
                    "classical distribution has negative sample {min}"
                )));
            }
        }
        Ok(Self { grid, samples, kind })
    }

    /// Product-Gaussian density centered at `mean` with standard deviations
    /// `(sigma_p, sigma_x)`, sampled on a grid covering `±extent` sigmas and
    /// renormalized on the grid.
    pub fn gaussian(
        mean: PhaseSpacePoint,
        sigma_p: f64,
        sigma_x: f64,
        n_p: usize,
        n_x: usize,
        extent: f64,
    ) -> Result<Self> {
        if !(sigma_p > 0.0 && sigma_x > 0.0) {
            return Err(CoreError::Domain("sigmas must be positive".into()));
        }
        let p_axis = Grid1D::new(mean.p - extent * sigma_p, mean.p + extent * sigma_p, n_p)?;
        let x_axis = Grid1D::new(mean.x - extent * sigma_x, mean.x + extent * sigma_x, n_x)?;
        let grid = Grid2D::new(p_axis, x_axis);
        let mut samples = Array2::zeros((n_p, n_x));
        for i in 0..n_p {
            let p = p_axis.point(i);
            for j in 0..n_x {
                let x = x_axis.point(j);
                let up = (p - mean.p) / sigma_p;
                let ux = (x - mean.x) / sigma_x;
                samples[[i, j]] = (-0.5 * (up * up + ux * ux)).exp();
            }
        }
        let total = integrate_grid_2d(&grid, &samples)?;
        samples.mapv_inplace(|v| v / total);
        Self::new(grid, samples, DistributionKind::Classical)
    }

    pub fn grid(&self) -> &Grid2D {
        &self.grid
    }

    pub fn samples(&self) -> &Array2<f64> {
        &self.samples
    }

    pub fn kind(&self) -> DistributionKind {
        self.kind
    }

    pub fn total(&self) -> f64 {
        integrate_grid_2d(&self.grid, &self.samples).expect("samples validated finite")
    }

    /// Probability weight carried by nodes with `x <= 0` (absolute values,
    /// so Wigner fringes count toward the violation).
    pub fn mass_left_of_surface(&self) -> f64 {
        let (np, nx) = self.grid.shape();
        let mut acc = 0.0;
        for j in 0..nx {
            if self.grid.x_axis.point(j) > 0.0 {
                continue;
            }
            for i in 0..np {
                acc += self.grid.weight(i, j) * self.samples[[i, j]].abs();
            }
        }
        acc
    }

    /// Most negative sample (0 for a strictly positive table).
    pub fn min_sample(&self) -> f64 {
        self.samples.iter().cloned().fold(f64::INFINITY, f64::min).min(0.0)
    }
}
