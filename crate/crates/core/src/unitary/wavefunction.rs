use num_complex::Complex64;
use rand::Rng;

use crate::error::{CoreError, Result};
use crate::numerics::grid::Grid1D;
use crate::numerics::quad::integrate_grid_1d;
use crate::numerics::rng::RandomStream;

/// Normalized complex wavefunction sampled on a uniform grid.
///
/// Construction enforces `∫ |ψ|² dx = 1` (trapezoidal measure); evolved,
/// unnormalized objects live in [`super::amplitude::AmplitudeField`].
#[derive(Debug, Clone)]
pub struct Wavefunction {
    grid: Grid1D,
    samples: Vec<Complex64>,
}

impl Wavefunction {
    pub fn new(grid: Grid1D, mut samples: Vec<Complex64>) -> Result<Self> {
        if samples.len() != grid.n_points() {
            return Err(CoreError::Domain(format!(
                "sample count {} does not match grid size {}",
                samples.len(),
                grid.n_points()
            )));
        }
        let norm_sq = norm_sq_on(&grid, &samples)?;
        if norm_sq <= 0.0 {
            return Err(CoreError::Domain("cannot normalize the zero function".into()));
        }
        let scale = 1.0 / norm_sq.sqrt();
        for s in samples.iter_mut() {
            *s *= scale;
        }
        Ok(Self { grid, samples })
    }

    /// Gaussian packet with position mean `x0`, momentum mean `p0` and
    /// position spread `sigma` (standard deviation of `|ψ|²`).
    pub fn gaussian(grid: Grid1D, x0: f64, p0: f64, sigma: f64, hbar: f64) -> Result<Self> {
        if !(sigma > 0.0) {
            return Err(CoreError::Domain(format!("sigma must be positive, got {sigma}")));
        }
        let samples = grid.sample(|x| gaussian_sample(x, x0, p0, sigma, hbar));
        Self::new(grid, samples)
    }

    /// Odd combination `φ(x) - φ(-x)` of a Gaussian packet: exactly
    /// antisymmetric about the crossing surface.
    pub fn antisymmetric_gaussian(
        grid: Grid1D,
        x0: f64,
        p0: f64,
        sigma: f64,
        hbar: f64,
    ) -> Result<Self> {
        let samples = grid.sample(|x| {
            gaussian_sample(x, x0, p0, sigma, hbar) - gaussian_sample(-x, x0, p0, sigma, hbar)
        });
        Self::new(grid, samples)
    }

    /// Normalized `a ψ1 + b ψ2` of two Gaussian packets given as
    /// `(x0, p0, sigma)` triples.
    pub fn superposition(
        grid: Grid1D,
        a: Complex64,
        packet1: (f64, f64, f64),
        b: Complex64,
        packet2: (f64, f64, f64),
        hbar: f64,
    ) -> Result<Self> {
        let samples = grid.sample(|x| {
            a * gaussian_sample(x, packet1.0, packet1.1, packet1.2, hbar)
                + b * gaussian_sample(x, packet2.0, packet2.1, packet2.2, hbar)
        });
        Self::new(grid, samples)
    }

    /// Random normalized state: a few Gaussian packets with random centers,
    /// momenta, widths and complex coefficients, kept well inside the grid
    /// window and under the momentum resolution of the grid.
    pub fn random(grid: Grid1D, hbar: f64, stream: &RandomStream) -> Result<Self> {
        let mut rng = stream.rng();
        let l = 0.5 * (grid.x_max() - grid.x_min());
        let center = 0.5 * (grid.x_max() + grid.x_min());
        let p_nyquist = std::f64::consts::PI * hbar / grid.spacing();
        let n_packets = rng.random_range(2..=4);
        let mut samples = vec![Complex64::new(0.0, 0.0); grid.n_points()];
        for _ in 0..n_packets {
            let x0 = center + rng.random_range(-0.35..0.35) * l;
            let sigma = rng.random_range(0.04..0.12) * l;
            let p0 = rng.random_range(-0.2..0.2) * p_nyquist;
            let coeff = Complex64::from_polar(
                rng.random_range(0.2..1.0),
                rng.random_range(0.0..std::f64::consts::TAU),
            );
            for (s, x) in samples.iter_mut().zip(grid.points()) {
                *s += coeff * gaussian_sample(x, x0, p0, sigma, hbar);
            }
        }
        Self::new(grid, samples)
    }

    pub fn grid(&self) -> &Grid1D {
        &self.grid
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn norm_sq(&self) -> f64 {
        norm_sq_on(&self.grid, &self.samples).expect("constructed samples are finite")
    }

    /// Largest edge magnitude; amplitude operations require it below 1e-8.
    pub fn edge_magnitude(&self) -> f64 {
        let first = self.samples.first().map(|s| s.norm()).unwrap_or(0.0);
        let last = self.samples.last().map(|s| s.norm()).unwrap_or(0.0);
        first.max(last)
    }

    /// The state `ψ(-x)`, evaluated by exact index reflection.
    ///
    /// Requires a grid symmetric about the origin, either endpoint-symmetric
    /// (`x_min = -x_max`) or torus-symmetric (`x_min = -(x_max + spacing)`).
    pub fn reflected(&self) -> Result<Self> {
        let perm = reflection_permutation(&self.grid)?;
        let samples = perm.iter().map(|&j| self.samples[j]).collect();
        Ok(Self { grid: self.grid, samples })
    }
}

pub(crate) fn norm_sq_on(grid: &Grid1D, samples: &[Complex64]) -> Result<f64> {
    let density: Vec<f64> = samples.iter().map(|s| s.norm_sqr()).collect();
    integrate_grid_1d(grid, &density)
}

pub(crate) fn gaussian_sample(x: f64, x0: f64, p0: f64, sigma: f64, hbar: f64) -> Complex64 {
    let amp = (2.0 * std::f64::consts::PI * sigma * sigma).powf(-0.25)
        * (-(x - x0) * (x - x0) / (4.0 * sigma * sigma)).exp();
    amp * Complex64::from_polar(1.0, p0 * (x - x0) / hbar)
}

/// Index permutation realizing `x -> -x` on a symmetric grid.
pub(crate) fn reflection_permutation(grid: &Grid1D) -> Result<Vec<usize>> {
    let n = grid.n_points();
    let h = grid.spacing();
    let tol = 1e-9 * h;
    if (grid.x_min() + grid.x_max()).abs() < tol {
        Ok((0..n).map(|i| n - 1 - i).collect())
    } else if (grid.x_min() + grid.x_max() + h).abs() < tol {
        // Torus layout [-L, L-h]: -x_j = x_{(n-j) mod n} on the periodic extension.
        Ok((0..n).map(|i| (n - i) % n).collect())
    } else {
        Err(CoreError::Domain(
            "reflection requires a grid symmetric about x = 0".into(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn grid() -> Grid1D {
        Grid1D::symmetric_torus(12.0, 1024).unwrap()
    }

    #[test]
    fn gaussian_is_normalized() {
        let psi = Wavefunction::gaussian(grid(), 2.0, 3.0, 0.7, 1.0).unwrap();
        assert_abs_diff_eq!(psi.norm_sq(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn antisymmetric_is_odd() {
        let psi = Wavefunction::antisymmetric_gaussian(grid(), 2.0, -1.0, 0.6, 1.0).unwrap();
        let refl = psi.reflected().unwrap();
        for (a, b) in psi.samples().iter().zip(refl.samples()) {
            assert_abs_diff_eq!(a.re, -b.re, epsilon = 1e-12);
            assert_abs_diff_eq!(a.im, -b.im, epsilon = 1e-12);
        }
    }

    #[test]
    fn reflection_is_involutive() {
        let psi = Wavefunction::gaussian(grid(), 1.5, -2.0, 0.5, 1.0).unwrap();
        let back = psi.reflected().unwrap().reflected().unwrap();
        for (a, b) in psi.samples().iter().zip(back.samples()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn random_states_are_normalized_and_reproducible() {
        let s = RandomStream::new(11, 3);
        let a = Wavefunction::random(grid(), 1.0, &s).unwrap();
        let b = Wavefunction::random(grid(), 1.0, &s).unwrap();
        assert_abs_diff_eq!(a.norm_sq(), 1.0, epsilon = 1e-10);
        assert_eq!(a.samples(), b.samples());
    }

    #[test]
    fn rejects_zero_function() {
        let g = grid();
        let z = vec![Complex64::new(0.0, 0.0); g.n_points()];
        assert!(Wavefunction::new(g, z).is_err());
    }
}
