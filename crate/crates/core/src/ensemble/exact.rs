//! Exact finite-sum evaluation of the ensemble decoherence matrix.
//!
//! For `n <= n'` the entry is
//!
//! ```text
//! D(n,n') = C(N,n) pbar^(N-n-n') (d*)^n' d^n  Σ_k C(N-n, n'-k) C(n,k) α^k
//! ```
//!
//! and for `n >= n'`
//!
//! ```text
//! D(n,n') = C(N,n) pbar^(N-n) p^n' d^(n-n')  Σ_k C(N-n, k) C(n, n'-k) α^(-k)
//! ```
//!
//! with `α = p pbar / |d|²`. Every term is evaluated in log space with the
//! common phase `(n - n') arg d` factored out, which leaves a sum of
//! positive magnitudes: no cancellation, no overflow up to `N ~ 10^4`.

use rayon::prelude::*;

use ndarray::Array2;

use super::matrix::EnsembleDecoherenceMatrix;
use super::one_particle::OneParticleHistoryData;
use crate::error::{CoreError, Result};
use crate::numerics::logcomplex::LogComplex;
use crate::numerics::special::{log_binomial, log_sum_exp};

/// `coeff * ln_val` with the convention `0 * (-inf) = 0`, so that zero
/// probabilities and `d = 0` flow through the log-space terms correctly.
#[inline]
fn xlny(coeff: i64, ln_val: f64) -> f64 {
    if coeff == 0 {
        0.0
    } else {
        coeff as f64 * ln_val
    }
}

/// Exact `D(n, n')` in log form.
pub fn exact_dnn(
    n_total: usize,
    n: usize,
    nprime: usize,
    one: &OneParticleHistoryData,
) -> Result<LogComplex> {
    if n > n_total || nprime > n_total {
        return Err(CoreError::Domain(format!(
            "indices out of range: n = {n}, n' = {nprime}, N = {n_total}"
        )));
    }
    if n == nprime {
        let lower = branch_lower(n_total, n, nprime, one)?;
        let upper = branch_upper(n_total, n, nprime, one)?;
        debug_assert!(
            branch_agreement(&lower, &upper) < 1e-10,
            "branch formulas disagree at n = n' = {n}: {lower:?} vs {upper:?}"
        );
        return Ok(upper);
    }
    if n < nprime {
        branch_lower(n_total, n, nprime, one)
    } else {
        branch_upper(n_total, n, nprime, one)
    }
}

/// The `n <= n'` finite sum.
fn branch_lower(
    n_total: usize,
    n: usize,
    nprime: usize,
    one: &OneParticleHistoryData,
) -> Result<LogComplex> {
    let (ln_p, ln_pbar, ln_d, phase_d) = logs_of(one);
    let big_n = n_total as i64;
    let (ni, npi) = (n as i64, nprime as i64);
    let ln_choose_n = log_binomial(n_total as u64, n as u64)?;

    // C(N-n, n'-k) needs n'-k <= N-n.
    let k_min = (ni + npi - big_n).max(0) as usize;
    let mut terms = Vec::with_capacity(n + 1 - k_min.min(n + 1));
    for k in k_min..=n {
        let ki = k as i64;
        let ln_t = ln_choose_n
            + log_binomial((n_total - n) as u64, (nprime - k) as u64)?
            + log_binomial(n as u64, k as u64)?
            + xlny(big_n - ni - npi, ln_pbar)
            + xlny(ki, ln_p + ln_pbar)
            + xlny(ni + npi - 2 * ki, ln_d);
        terms.push(ln_t);
    }
    Ok(assemble(&terms, (ni - npi) as f64 * phase_d))
}

/// The `n >= n'` finite sum.
fn branch_upper(
    n_total: usize,
    n: usize,
    nprime: usize,
    one: &OneParticleHistoryData,
) -> Result<LogComplex> {
    let (ln_p, ln_pbar, ln_d, phase_d) = logs_of(one);
    let big_n = n_total as i64;
    let (ni, npi) = (n as i64, nprime as i64);
    let ln_choose_n = log_binomial(n_total as u64, n as u64)?;

    let k_max = (n_total - n).min(nprime);
    // C(n, n'-k) needs n'-k <= n.
    let k_min = (npi - ni).max(0) as usize;
    let mut terms = Vec::with_capacity(k_max + 1);
    for k in k_min..=k_max {
        let ki = k as i64;
        let ln_t = ln_choose_n
            + log_binomial((n_total - n) as u64, k as u64)?
            + log_binomial(n as u64, (nprime - k) as u64)?
            + xlny(big_n - ni - ki, ln_pbar)
            + xlny(npi - ki, ln_p)
            + xlny(ni - npi + 2 * ki, ln_d);
        terms.push(ln_t);
    }
    Ok(assemble(&terms, (ni - npi) as f64 * phase_d))
}

fn logs_of(one: &OneParticleHistoryData) -> (f64, f64, f64, f64) {
    let ln_p = if one.p > 0.0 { one.p.ln() } else { f64::NEG_INFINITY };
    let ln_pbar = if one.pbar > 0.0 { one.pbar.ln() } else { f64::NEG_INFINITY };
    let mag = one.d.norm();
    let ln_d = if mag > 0.0 { mag.ln() } else { f64::NEG_INFINITY };
    let phase_d = if mag > 0.0 { one.d.arg() } else { 0.0 };
    (ln_p, ln_pbar, ln_d, phase_d)
}

fn assemble(ln_terms: &[f64], phase: f64) -> LogComplex {
    if ln_terms.is_empty() {
        return LogComplex::ZERO;
    }
    let ln_mag = log_sum_exp(ln_terms);
    if ln_mag == f64::NEG_INFINITY {
        return LogComplex::ZERO;
    }
    LogComplex::new(ln_mag, phase)
}

fn branch_agreement(a: &LogComplex, b: &LogComplex) -> f64 {
    if a.is_zero() && b.is_zero() {
        return 0.0;
    }
    let scale = a.ln_mag.max(b.ln_mag);
    (LogComplex::new(a.ln_mag - scale, a.phase).to_complex()
        - LogComplex::new(b.ln_mag - scale, b.phase).to_complex())
    .norm()
}

/// Fill the whole `(N+1) x (N+1)` matrix, rows in parallel.
pub fn exact_matrix(
    n_total: usize,
    one: &OneParticleHistoryData,
) -> Result<EnsembleDecoherenceMatrix> {
    let dim = n_total + 1;
    let rows: Vec<Vec<LogComplex>> = (0..dim)
        .into_par_iter()
        .map(|n| {
            (0..dim)
                .map(|np| exact_dnn(n_total, n, np, one))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut entries = Array2::from_elem((dim, dim), LogComplex::ZERO);
    for (n, row) in rows.into_iter().enumerate() {
        for (np, v) in row.into_iter().enumerate() {
            entries[[n, np]] = v;
        }
    }
    EnsembleDecoherenceMatrix::from_entries(entries)
}
