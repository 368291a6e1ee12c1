//! Saddle-point asymptotics of the contour representation for large `N`.
//!
//! With `f(z) = (1+z)^(1-n/N) (1+αz)^(n/N)`, the circle radius is pinned to
//! the unique positive root of `N ρ f'(ρ)/f(ρ) = n'`, which is a quadratic:
//!
//! ```text
//! α (N-n') ρ² + (N-n-n' + α(n-n')) ρ - n' = 0
//! ```
//!
//! and the integral contributes `f(ρ)^N ρ^(-n') / sqrt(2π N κ₂)` with the
//! curvature `κ₂ = ρ f'/f + ρ² (f''/f - (f'/f)²)`.

use super::one_particle::OneParticleHistoryData;
use crate::error::{CoreError, Result};
use crate::numerics::logcomplex::LogComplex;
use crate::numerics::special::log_binomial;

#[derive(Debug, Clone, Copy)]
pub struct SaddleState {
    /// Positive saddle radius.
    pub rho: f64,
    /// Curvature of `ln f` along the contour at the saddle; positive there.
    pub kappa2: f64,
    /// `ln f(ρ)`.
    pub f_ln_at_rho: f64,
}

/// Solve the saddle equation for interior indices.
pub fn saddle_rho(n_total: usize, n: usize, nprime: usize, alpha: f64) -> Result<SaddleState> {
    if n == 0 || nprime == 0 || n >= n_total || nprime >= n_total {
        return Err(CoreError::AsymptoticInvalid(format!(
            "saddle point requires interior indices, got n = {n}, n' = {nprime}, N = {n_total}"
        )));
    }
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(CoreError::Domain(format!("alpha must be positive finite, got {alpha}")));
    }
    let big_n = n_total as f64;
    let (nf, npf) = (n as f64, nprime as f64);
    let a = alpha * (big_n - npf);
    let b = big_n - nf - npf + alpha * (nf - npf);
    let c = -npf;
    // Positive root, rationalized to avoid cancellation when b > 0.
    let disc = (b * b - 4.0 * a * c).sqrt();
    let rho = if b >= 0.0 { 2.0 * npf / (b + disc) } else { (disc - b) / (2.0 * a) };
    if !(rho > 0.0) || !rho.is_finite() {
        return Err(CoreError::AsymptoticInvalid(format!(
            "no positive saddle radius for n = {n}, n' = {nprime}, N = {n_total}, alpha = {alpha}"
        )));
    }
    let nu = nf / big_n;
    let u = (1.0 - nu) / (1.0 + rho) + alpha * nu / (1.0 + alpha * rho);
    let du = -(1.0 - nu) / ((1.0 + rho) * (1.0 + rho))
        - alpha * alpha * nu / ((1.0 + alpha * rho) * (1.0 + alpha * rho));
    let kappa2 = rho * u + rho * rho * du;
    let residual = (big_n * rho * u - npf).abs() / npf;
    if residual > 1e-10 {
        return Err(CoreError::AsymptoticInvalid(format!(
            "saddle residual {residual:.3e} exceeds 1e-10"
        )));
    }
    if !(kappa2 > 0.0) {
        return Err(CoreError::AsymptoticInvalid(format!(
            "curvature kappa2 = {kappa2} not positive at the saddle"
        )));
    }
    let f_ln_at_rho = (1.0 - nu) * (1.0 + rho).ln() + nu * (1.0 + alpha * rho).ln();
    Ok(SaddleState { rho, kappa2, f_ln_at_rho })
}

/// The displayed closed-form root, kept verbatim for cross-checking the
/// stable solver.
pub fn rho_closed_form(n_total: usize, n: usize, nprime: usize, alpha: f64) -> f64 {
    let big_n = n_total as f64;
    let (nf, npf) = (n as f64, nprime as f64);
    let b = big_n - nf - npf + alpha * (nf - npf);
    (-b + (b * b + 4.0 * alpha * npf * (big_n - npf)).sqrt()) / (2.0 * alpha * (big_n - npf))
}

/// Saddle-point approximation to `D(n, n')`, including the Gaussian
/// `(2π N κ₂)^(-1/2)` factor; relative accuracy `O(1/N)` at interior
/// indices.
pub fn asymptotic_dnn(
    n_total: usize,
    n: usize,
    nprime: usize,
    one: &OneParticleHistoryData,
) -> Result<LogComplex> {
    let alpha = one.alpha();
    let saddle = saddle_rho(n_total, n, nprime, alpha)?;
    let big_n = n_total as f64;
    let ln_j = big_n * saddle.f_ln_at_rho
        - nprime as f64 * saddle.rho.ln()
        - 0.5 * (2.0 * std::f64::consts::PI * big_n * saddle.kappa2).ln();
    let ln_pbar = if one.pbar > 0.0 { one.pbar.ln() } else { f64::NEG_INFINITY };
    let mag_d = one.d.norm();
    let ln_d = if mag_d > 0.0 { mag_d.ln() } else { f64::NEG_INFINITY };
    let exponent_pbar = n_total as i64 - n as i64 - nprime as i64;
    let ln_pref = log_binomial(n_total as u64, n as u64)?
        + if exponent_pbar == 0 { 0.0 } else { exponent_pbar as f64 * ln_pbar }
        + (n + nprime) as f64 * ln_d;
    let phase = (n as f64 - nprime as f64) * one.d.arg();
    Ok(LogComplex::new(ln_pref + ln_j, phase))
}
