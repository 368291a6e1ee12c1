use num_complex::Complex64;

use super::evolve::UnitaryEngine;
use super::params::ParticleParams;
use super::wavefunction::Wavefunction;
use crate::error::Result;

/// Candidate probabilities and off-diagonal decoherence term for the
/// crossing / non-crossing pair of histories.
///
/// Probabilities are reported raw; the sum-rule residual
/// `p + p̄ + 2 Re D - 1` is stored, never assumed zero, and
/// `epsilon_ratio = |D|² / (p p̄)` is the approximate-decoherence measure.
#[derive(Debug, Clone, Copy)]
pub struct CrossingDecoherenceTable {
    pub p_cross: f64,
    pub p_nocross: f64,
    pub d_offdiag: Complex64,
    pub epsilon_ratio: f64,
    pub sum_rule_residual: f64,
}

impl CrossingDecoherenceTable {
    pub fn from_parts(p_cross: f64, p_nocross: f64, d_offdiag: Complex64) -> Self {
        let pp = p_cross * p_nocross;
        let epsilon_ratio = if pp > 0.0 { d_offdiag.norm_sqr() / pp } else { f64::INFINITY };
        Self {
            p_cross,
            p_nocross,
            d_offdiag,
            epsilon_ratio,
            sum_rule_residual: p_cross + p_nocross + 2.0 * d_offdiag.re - 1.0,
        }
    }
}

/// Evolve the crossing and non-crossing amplitudes and assemble the 2x2
/// decoherence data: `p = ||Ψ^c||²`, `p̄ = ||Ψ^r||²`, `D = ∫ Ψ^c (Ψ^r)*`.
pub fn decoherence_table(
    psi0: &Wavefunction,
    params: &ParticleParams,
) -> Result<CrossingDecoherenceTable> {
    let engine = UnitaryEngine::for_params(*psi0.grid(), params)?;
    decoherence_table_with(&engine, psi0, params.duration)
}

/// Same as [`decoherence_table`] but reusing an engine across a time sweep.
pub fn decoherence_table_with(
    engine: &UnitaryEngine,
    psi0: &Wavefunction,
    t: f64,
) -> Result<CrossingDecoherenceTable> {
    let restricted = engine.restricted_amplitude(psi0, t)?;
    let crossing = engine.crossing_amplitude(psi0, t)?;
    let p_nocross = restricted.norm_sq()?;
    let p_cross = crossing.norm_sq()?;
    let d = crossing.inner(&restricted)?;
    Ok(CrossingDecoherenceTable::from_parts(p_cross, p_nocross, d))
}
