//! Candidate probabilities `p(n) = D(n, n)` for the number of crossings.

use rayon::prelude::*;

use super::exact::exact_dnn;
use super::one_particle::OneParticleHistoryData;
use crate::error::Result;
use crate::numerics::special::log_sum_exp;

/// Diagonal of the decoherence matrix in log form.
#[derive(Debug, Clone)]
pub struct ProbabilityTable {
    pub log_p: Vec<f64>,
}

impl ProbabilityTable {
    pub fn n_total(&self) -> usize {
        self.log_p.len() - 1
    }

    pub fn argmax(&self) -> usize {
        self.log_p
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).expect("finite logs"))
            .map(|(i, _)| i)
            .unwrap_or(0)
    }

    /// `Σ p(n)`, at most 1; the deficit is the off-diagonal weight.
    pub fn total(&self) -> f64 {
        log_sum_exp(&self.log_p).exp()
    }

    pub fn deficit(&self) -> f64 {
        1.0 - self.total()
    }

    /// Mean and variance of `n` under the normalized table.
    pub fn mean_and_variance(&self) -> (f64, f64) {
        let max = self.log_p.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let mut w_sum = 0.0;
        let mut m1 = 0.0;
        for (n, &lp) in self.log_p.iter().enumerate() {
            let w = (lp - max).exp();
            w_sum += w;
            m1 += w * n as f64;
        }
        let mean = m1 / w_sum;
        let mut m2 = 0.0;
        for (n, &lp) in self.log_p.iter().enumerate() {
            let w = (lp - max).exp();
            m2 += w * (n as f64 - mean) * (n as f64 - mean);
        }
        (mean, m2 / w_sum)
    }
}

/// Exact diagonal `p(n) = D(n, n) >= 0` for `n` in `[0, N]`.
pub fn candidate_probabilities(
    n_total: usize,
    one: &OneParticleHistoryData,
) -> Result<ProbabilityTable> {
    let log_p: Vec<f64> = (0..=n_total)
        .into_par_iter()
        .map(|n| exact_dnn(n_total, n, n, one).map(|d| d.ln_mag))
        .collect::<Result<Vec<_>>>()?;
    Ok(ProbabilityTable { log_p })
}
