use num_complex::Complex64;

use crate::error::{CoreError, Result};
use crate::unitary::table::CrossingDecoherenceTable;

/// One-particle input to the ensemble machinery: crossing probability `p`,
/// non-crossing probability `pbar`, and the complex off-diagonal term `d`
/// of the 2x2 decoherence functional, tied together by the sum rule
/// `p + pbar + 2 Re d = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OneParticleHistoryData {
    pub p: f64,
    pub pbar: f64,
    pub d: Complex64,
}

impl OneParticleHistoryData {
    pub fn new(p: f64, pbar: f64, d: Complex64) -> Result<Self> {
        if !(p >= 0.0 && pbar >= 0.0) {
            return Err(CoreError::Domain(format!(
                "probabilities must be non-negative: p = {p}, pbar = {pbar}"
            )));
        }
        let residual = p + pbar + 2.0 * d.re - 1.0;
        if residual.abs() > 1e-8 {
            return Err(CoreError::Domain(format!(
                "sum rule violated by {residual:.3e}: p + pbar + 2 Re d must be 1"
            )));
        }
        Ok(Self { p, pbar, d })
    }

    /// Synthetic data with `Re d` forced by the sum rule and `Im d` free.
    pub fn synthetic(p: f64, pbar: f64, d_im: f64) -> Result<Self> {
        let d_re = 0.5 * (1.0 - p - pbar);
        Self::new(p, pbar, Complex64::new(d_re, d_im))
    }

    /// Synthetic data with a prescribed decoherence ratio
    /// `alpha = p pbar / |d|²`; `Re d` is fixed by the sum rule and `Im d`
    /// absorbs the rest of the required magnitude.
    pub fn with_alpha(p: f64, pbar: f64, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) {
            return Err(CoreError::Domain(format!("alpha must be positive, got {alpha}")));
        }
        let d_re = 0.5 * (1.0 - p - pbar);
        let mag_sq = p * pbar / alpha;
        if mag_sq < d_re * d_re {
            return Err(CoreError::Domain(format!(
                "alpha = {alpha} unreachable: |d| >= |Re d| = {} forced by the sum rule",
                d_re.abs()
            )));
        }
        Self::new(p, pbar, Complex64::new(d_re, (mag_sq - d_re * d_re).sqrt()))
    }

    /// Live input from the free-particle pipeline.
    pub fn from_table(table: &CrossingDecoherenceTable) -> Result<Self> {
        Self::new(table.p_cross, table.p_nocross, table.d_offdiag)
    }

    /// The ratio `alpha = p pbar / |d|²`; infinite when `d = 0`.
    pub fn alpha(&self) -> f64 {
        let mag_sq = self.d.norm_sqr();
        if mag_sq == 0.0 {
            f64::INFINITY
        } else {
            self.p * self.pbar / mag_sq
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn sum_rule_enforced() {
        assert!(OneParticleHistoryData::new(0.3, 0.6, Complex64::new(0.05, 0.1)).is_ok());
        assert!(OneParticleHistoryData::new(0.3, 0.6, Complex64::new(0.2, 0.0)).is_err());
    }

    #[test]
    fn with_alpha_hits_target() {
        let one = OneParticleHistoryData::with_alpha(0.3, 0.6999, 1.0e6).unwrap();
        assert_abs_diff_eq!(one.alpha(), 1.0e6, epsilon = 1.0);
        assert_abs_diff_eq!(one.p + one.pbar + 2.0 * one.d.re, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn unreachable_alpha_rejected() {
        // Re d = 0.05 forces |d| >= 0.05, so alpha <= p pbar / 0.0025.
        let max_alpha = 0.3 * 0.6 / 0.0025;
        assert!(OneParticleHistoryData::with_alpha(0.3, 0.6, max_alpha * 1.01).is_err());
        assert!(OneParticleHistoryData::with_alpha(0.3, 0.6, max_alpha * 0.99).is_ok());
    }

    #[test]
    fn zero_d_gives_infinite_alpha() {
        let one = OneParticleHistoryData::new(0.25, 0.75, Complex64::new(0.0, 0.0)).unwrap();
        assert!(one.alpha().is_infinite());
    }
}
