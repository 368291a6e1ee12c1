//! Thin wrapper over rustfft with the conventions used throughout the crate.
//!
//! Forward transform: `F[k] = Σ_j f[j] exp(-2πi jk / n)` (rustfft's native
//! convention); the inverse here is normalized by `1/n` so that
//! `inverse(forward(f)) = f` exactly up to round-off.

use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

#[derive(Clone)]
pub struct FftPair {
    len: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl FftPair {
    pub fn new(len: usize) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            len,
            forward: planner.plan_fft_forward(len),
            inverse: planner.plan_fft_inverse(len),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn forward(&self, buf: &mut [Complex64]) {
        debug_assert_eq!(buf.len(), self.len);
        self.forward.process(buf);
    }

    pub fn inverse(&self, buf: &mut [Complex64]) {
        debug_assert_eq!(buf.len(), self.len);
        self.inverse.process(buf);
        let scale = 1.0 / self.len as f64;
        for v in buf.iter_mut() {
            *v *= scale;
        }
    }
}

/// Angular wavenumbers conjugate to a length-`period` sample window of `n`
/// points, in FFT bin order: `k_j = 2π j / period` with `j` wrapped to
/// `[-n/2, n/2)`.
pub fn wavenumbers(n: usize, period: f64) -> Vec<f64> {
    let base = 2.0 * std::f64::consts::PI / period;
    (0..n)
        .map(|j| {
            let j_signed = if j <= (n - 1) / 2 { j as i64 } else { j as i64 - n as i64 };
            base * j_signed as f64
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn round_trip() {
        let n = 48;
        let pair = FftPair::new(n);
        let orig: Vec<Complex64> =
            (0..n).map(|j| Complex64::new((j as f64).sin(), (j as f64 * 0.3).cos())).collect();
        let mut buf = orig.clone();
        pair.forward(&mut buf);
        pair.inverse(&mut buf);
        for (a, b) in buf.iter().zip(&orig) {
            assert_abs_diff_eq!(a.re, b.re, epsilon = 1e-13);
            assert_abs_diff_eq!(a.im, b.im, epsilon = 1e-13);
        }
    }

    #[test]
    fn wavenumber_order() {
        let k = wavenumbers(8, 8.0);
        let tau = 2.0 * std::f64::consts::PI / 8.0;
        let expect = [0.0, 1.0, 2.0, 3.0, -4.0, -3.0, -2.0, -1.0];
        for (a, e) in k.iter().zip(expect) {
            assert_abs_diff_eq!(*a, e * tau, epsilon = 1e-15);
        }
    }
}
