//! Small-time scaling of the crossing quantities.
//!
//! For a state supported in `x > 0`, both `|D(t)|` and the crossing
//! probability vanish like `(ħ t / m)^(1/2)` as `t -> 0`, while the
//! non-crossing probability tends to one. The sweep below measures the
//! log-log slopes on a shared grid fine enough for the shortest time.

use super::evolve::UnitaryEngine;
use super::table::{decoherence_table_with, CrossingDecoherenceTable};
use super::wavefunction::Wavefunction;
use crate::error::{CoreError, Result};

#[derive(Debug, Clone)]
pub struct SmallTimeScaling {
    pub times: Vec<f64>,
    pub tables: Vec<CrossingDecoherenceTable>,
    /// Fitted log-log slope of |D| vs t.
    pub slope_d: f64,
    /// Fitted log-log slope of p_cross vs t.
    pub slope_p: f64,
    /// Smallest non-crossing probability over the sweep.
    pub min_p_nocross: f64,
    /// Largest |D|²/(p p̄) over the sweep.
    pub max_epsilon_ratio: f64,
}

/// Run the decoherence table over a time sweep and fit the scaling slopes.
pub fn small_time_scaling(
    psi0: &Wavefunction,
    mass: f64,
    hbar: f64,
    times: &[f64],
) -> Result<SmallTimeScaling> {
    if times.len() < 3 {
        return Err(CoreError::Domain("scaling sweep needs at least 3 times".into()));
    }
    if times.windows(2).any(|w| w[0] >= w[1]) || times[0] <= 0.0 {
        return Err(CoreError::Domain("times must be positive and increasing".into()));
    }
    let engine = UnitaryEngine::new(*psi0.grid(), mass, hbar)?;
    let tables: Vec<CrossingDecoherenceTable> = times
        .iter()
        .map(|&t| decoherence_table_with(&engine, psi0, t))
        .collect::<Result<Vec<_>>>()?;
    let ln_t: Vec<f64> = times.iter().map(|t| t.ln()).collect();
    let ln_d: Vec<f64> = tables.iter().map(|tb| tb.d_offdiag.norm().ln()).collect();
    let ln_p: Vec<f64> = tables.iter().map(|tb| tb.p_cross.ln()).collect();
    let slope_d = fit_log_slope(&ln_t, &ln_d)?;
    let slope_p = fit_log_slope(&ln_t, &ln_p)?;
    let min_p_nocross = tables.iter().map(|tb| tb.p_nocross).fold(f64::INFINITY, f64::min);
    let max_epsilon_ratio = tables.iter().map(|tb| tb.epsilon_ratio).fold(0.0, f64::max);
    Ok(SmallTimeScaling {
        times: times.to_vec(),
        tables,
        slope_d,
        slope_p,
        min_p_nocross,
        max_epsilon_ratio,
    })
}

/// Least-squares slope of `y` against `x`.
pub fn fit_log_slope(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() || x.len() < 2 {
        return Err(CoreError::Domain("slope fit needs matching samples".into()));
    }
    if x.iter().chain(y.iter()).any(|v| !v.is_finite()) {
        return Err(CoreError::NonFinite("slope fit input"));
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|v| (v - mx) * (v - mx)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(u, v)| (u - mx) * (v - my)).sum();
    if sxx == 0.0 {
        return Err(CoreError::Domain("slope fit needs spread in x".into()));
    }
    Ok(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn exact_line_recovered() {
        let x = [0.0, 1.0, 2.0, 3.0];
        let y = [1.0, 1.5, 2.0, 2.5];
        assert_abs_diff_eq!(fit_log_slope(&x, &y).unwrap(), 0.5, epsilon = 1e-14);
    }
}
