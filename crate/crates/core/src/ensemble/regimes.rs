//! Decoherence measures and the analytic regime expansions.

use super::exact::exact_dnn;
use super::matrix::EnsembleDecoherenceMatrix;
use super::one_particle::OneParticleHistoryData;
use crate::error::{CoreError, Result};
use crate::numerics::special::log_binomial;

/// `ln ε(n, n') = 2 ln|D(n,n')| - ln D(n,n) - ln D(n',n')`, the log of the
/// approximate-decoherence measure, computed entirely in log space.
pub fn log_epsilon(matrix: &EnsembleDecoherenceMatrix, n: usize, nprime: usize) -> Result<f64> {
    let dnn = matrix.entry(n, n);
    let dpp = matrix.entry(nprime, nprime);
    if dnn.is_zero() {
        return Err(CoreError::UndefinedMeasure(n, n));
    }
    if dpp.is_zero() {
        return Err(CoreError::UndefinedMeasure(nprime, nprime));
    }
    let off = matrix.entry(n, nprime);
    if off.is_zero() {
        return Ok(f64::NEG_INFINITY);
    }
    Ok(2.0 * off.ln_mag - dnn.ln_mag - dpp.ln_mag)
}

/// `ε(n, n')` in linear form (may underflow to zero for strong decoherence).
pub fn epsilon_measure(
    matrix: &EnsembleDecoherenceMatrix,
    n: usize,
    nprime: usize,
) -> Result<f64> {
    Ok(log_epsilon(matrix, n, nprime)?.exp())
}

/// The closed-form large-α prediction
/// `ε ≈ α^-(n'-n) n'!(N-n)! / (n!(N-n')!((n'-n)!)²)` for `n' > n`,
/// returned as a natural log.
pub fn log_epsilon_large_alpha(
    n_total: usize,
    n: usize,
    nprime: usize,
    alpha: f64,
) -> Result<f64> {
    if nprime <= n {
        return Err(CoreError::Domain("large-alpha form needs n' > n".into()));
    }
    let s = (nprime - n) as u64;
    // n'!(N-n)! / (n!(N-n')!((n'-n)!)²) = C(n', s) C(N-n, s).
    let ln_comb = log_binomial(nprime as u64, s)? + log_binomial((n_total - n) as u64, s)?;
    Ok(-(s as f64) * alpha.ln() + ln_comb)
}

/// Leading-order estimates near the no-decoherence point `α = 1 + δ`.
#[derive(Debug, Clone)]
pub struct NearOneRegime {
    pub delta: f64,
    /// Whether `0 < δ < 0.5` holds; outside it the expansion is unreliable.
    pub in_regime: bool,
    /// `ln ε ≈ -(n-n')² δ / N`.
    pub log_epsilon_estimate: f64,
    /// Exact `ln ε` from the finite sums, for comparison.
    pub log_epsilon_exact: f64,
    /// `ln p(n) ≈ ln [C(N,n)² pbar^(N-n) p^n exp(δ n²/N)]` for all `n`.
    pub log_pn_estimate: Vec<f64>,
}

pub fn near_one_regime(
    n_total: usize,
    n: usize,
    nprime: usize,
    one: &OneParticleHistoryData,
) -> Result<NearOneRegime> {
    let delta = one.alpha() - 1.0;
    let in_regime = delta > 0.0 && delta < 0.5;
    let big_n = n_total as f64;
    let diff = n as f64 - nprime as f64;
    let log_epsilon_estimate = -diff * diff * delta / big_n;

    let d_nn = exact_dnn(n_total, n, nprime, one)?;
    let d_n = exact_dnn(n_total, n, n, one)?;
    let d_p = exact_dnn(n_total, nprime, nprime, one)?;
    let log_epsilon_exact = 2.0 * d_nn.ln_mag - d_n.ln_mag - d_p.ln_mag;

    let ln_p = one.p.ln();
    let ln_pbar = one.pbar.ln();
    let log_pn_estimate = (0..=n_total)
        .map(|k| {
            let lb = log_binomial(n_total as u64, k as u64).expect("k <= N");
            2.0 * lb
                + (n_total - k) as f64 * ln_pbar
                + k as f64 * ln_p
                + delta * (k * k) as f64 / big_n
        })
        .collect();

    Ok(NearOneRegime {
        delta,
        in_regime,
        log_epsilon_estimate,
        log_epsilon_exact,
        log_pn_estimate,
    })
}
