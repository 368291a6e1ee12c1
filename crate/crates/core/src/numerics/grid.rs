use crate::error::{CoreError, Result};

/// Uniform one-dimensional grid with both endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    x_min: f64,
    x_max: f64,
    n_points: usize,
}

impl Grid1D {
    pub fn new(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite()) {
            return Err(CoreError::NonFinite("Grid1D bounds"));
        }
        if n_points < 2 {
            return Err(CoreError::Domain(format!(
                "Grid1D needs at least 2 points, got {n_points}"
            )));
        }
        if x_max <= x_min {
            return Err(CoreError::Domain(format!(
                "Grid1D needs x_max > x_min, got [{x_min}, {x_max}]"
            )));
        }
        Ok(Self { x_min, x_max, n_points })
    }

    /// Grid covering `[-half_width, half_width - spacing]` with `n` points.
    ///
    /// This is the natural layout for FFT work: the points tile one period
    /// of length `n * spacing` and `x = 0` falls exactly on the node `n/2`
    /// when `n` is even, so reflection about the origin is an exact index
    /// map on the periodic extension.
    pub fn symmetric_torus(half_width: f64, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(CoreError::Domain(format!(
                "Grid1D needs at least 2 points, got {n}"
            )));
        }
        let h = 2.0 * half_width / n as f64;
        Self::new(-half_width, half_width - h, n)
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points - 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        debug_assert!(i < self.n_points);
        self.x_min + i as f64 * self.spacing()
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_points).map(move |i| self.point(i))
    }

    /// Trapezoidal weight of node `i` (spacing at interior nodes, half at the ends).
    pub fn weight(&self, i: usize) -> f64 {
        let h = self.spacing();
        if i == 0 || i == self.n_points - 1 {
            0.5 * h
        } else {
            h
        }
    }

    /// Sample a scalar function on the grid.
    pub fn sample<T>(&self, f: impl Fn(f64) -> T) -> Vec<T> {
        self.points().map(f).collect()
    }

    /// Index whose coordinate is exactly zero, if the grid has one.
    pub fn zero_index(&self) -> Option<usize> {
        let h = self.spacing();
        let k = -self.x_min / h;
        let i = k.round();
        if (k - i).abs() < 1e-9 && i >= 0.0 && (i as usize) < self.n_points {
            Some(i as usize)
        } else {
            None
        }
    }
}

/// Rectangular phase-space grid: a momentum axis times a position axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid2D {
    pub p_axis: Grid1D,
    pub x_axis: Grid1D,
}

impl Grid2D {
    pub fn new(p_axis: Grid1D, x_axis: Grid1D) -> Self {
        Self { p_axis, x_axis }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.p_axis.n_points(), self.x_axis.n_points())
    }

    /// Product of the trapezoidal weights of node `(i, j)`.
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.p_axis.weight(i) * self.x_axis.weight(j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spacing_and_points() {
        let g = Grid1D::new(0.0, 1.0, 5).unwrap();
        assert_eq!(g.spacing(), 0.25);
        let pts: Vec<f64> = g.points().collect();
        assert_eq!(pts, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    }

    #[test]
    fn rejects_degenerate() {
        assert!(Grid1D::new(0.0, 0.0, 5).is_err());
        assert!(Grid1D::new(0.0, 1.0, 1).is_err());
        assert!(Grid1D::new(1.0, 0.0, 5).is_err());
        assert!(Grid1D::new(f64::NAN, 1.0, 5).is_err());
    }

    #[test]
    fn torus_grid_contains_zero() {
        let g = Grid1D::symmetric_torus(8.0, 256).unwrap();
        assert_eq!(g.n_points(), 256);
        assert_eq!(g.point(128), 0.0);
        assert_eq!(g.zero_index(), Some(128));
        let h = g.spacing();
        assert!((h - 16.0 / 256.0).abs() < 1e-15);
        assert!((g.x_max() - (8.0 - h)).abs() < 1e-12);
    }

    #[test]
    fn zero_index_absent_when_offset() {
        let g = Grid1D::new(0.5, 1.5, 11).unwrap();
        assert_eq!(g.zero_index(), None);
    }
}
