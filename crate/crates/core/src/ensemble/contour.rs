//! Contour-integral route to the decoherence matrix:
//!
//! ```text
//! D(n,n') = C(N,n) pbar^(N-n-n') (d*)^n' d^n · (1/2πi) ∮ dz z^(-n'-1) (1+z)^(N-n) (1+αz)^n
//! ```
//!
//! on any circle about the origin. The trapezoidal rule on the circle is
//! exact once the sample count exceeds the Laurent bandwidth of the
//! integrand, so this is an independent algebraic route, not an
//! approximation.

use super::one_particle::OneParticleHistoryData;
use super::saddle::saddle_rho;
use crate::error::{CoreError, Result};
use crate::numerics::logcomplex::LogComplex;
use crate::numerics::special::log_binomial;

/// Contour evaluation with the default radius: the saddle radius when the
/// indices are interior, otherwise 1.
pub fn contour_dnn(
    n_total: usize,
    n: usize,
    nprime: usize,
    one: &OneParticleHistoryData,
    m_points: usize,
) -> Result<LogComplex> {
    let alpha = one.alpha();
    let radius = if alpha.is_finite() {
        saddle_rho(n_total, n, nprime, alpha).map(|s| s.rho).unwrap_or(1.0)
    } else {
        1.0
    };
    contour_dnn_with_radius(n_total, n, nprime, one, m_points, radius)
}

/// Contour evaluation on a circle of the given radius.
pub fn contour_dnn_with_radius(
    n_total: usize,
    n: usize,
    nprime: usize,
    one: &OneParticleHistoryData,
    m_points: usize,
    radius: f64,
) -> Result<LogComplex> {
    if n > n_total || nprime > n_total {
        return Err(CoreError::Domain(format!(
            "indices out of range: n = {n}, n' = {nprime}, N = {n_total}"
        )));
    }
    if m_points < n_total + nprime + 2 {
        return Err(CoreError::Resolution(format!(
            "contour needs at least N + n' + 2 = {} samples, got {m_points}",
            n_total + nprime + 2
        )));
    }
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(CoreError::Domain(format!("radius must be positive, got {radius}")));
    }
    let alpha = one.alpha();
    if !alpha.is_finite() {
        return Err(CoreError::Domain(
            "contour route needs |d| > 0 (finite alpha); use the exact sum for d = 0".into(),
        ));
    }

    // J = (1/2π) ∫ dθ r^(-n') e^(-i n' θ) (1+z)^(N-n) (1+αz)^n, z = r e^(iθ).
    let mut samples = Vec::with_capacity(m_points);
    for j in 0..m_points {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / m_points as f64;
        let z = num_complex::Complex64::from_polar(radius, theta);
        let w1 = 1.0 + z;
        let w2 = 1.0 + alpha * z;
        let ln_mag = (n_total - n) as f64 * w1.norm().ln() + n as f64 * w2.norm().ln()
            - nprime as f64 * radius.ln();
        let phase =
            (n_total - n) as f64 * w1.arg() + n as f64 * w2.arg() - nprime as f64 * theta;
        samples.push(LogComplex::new(ln_mag, phase));
    }
    let mut j_val = LogComplex::sum(&samples);
    if j_val.is_zero() {
        return Ok(LogComplex::ZERO);
    }
    j_val.ln_mag -= (m_points as f64).ln();

    let ln_pbar = if one.pbar > 0.0 { one.pbar.ln() } else { f64::NEG_INFINITY };
    let exponent_pbar = n_total as i64 - n as i64 - nprime as i64;
    let ln_pref = log_binomial(n_total as u64, n as u64)?
        + if exponent_pbar == 0 { 0.0 } else { exponent_pbar as f64 * ln_pbar }
        + (n + nprime) as f64 * one.d.norm().ln();
    let phase_pref = (n as f64 - nprime as f64) * one.d.arg();
    Ok(LogComplex::new(ln_pref + j_val.ln_mag, phase_pref + j_val.phase))
}
