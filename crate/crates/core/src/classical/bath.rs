use crate::error::{CoreError, Result};

/// Thermal environment of the Brownian particle: mass, dissipation
/// coefficient and temperature (as `k T`), in the limit where only the
/// momentum diffusion `Dp = 2 m γ k T` survives in the dynamics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathParams {
    pub mass: f64,
    pub gamma: f64,
    pub k_t: f64,
}

impl BathParams {
    pub fn new(mass: f64, gamma: f64, k_t: f64) -> Result<Self> {
        if !(mass > 0.0 && gamma > 0.0 && k_t > 0.0) {
            return Err(CoreError::Domain(format!(
                "bath parameters must be positive: m = {mass}, gamma = {gamma}, kT = {k_t}"
            )));
        }
        Ok(Self { mass, gamma, k_t })
    }

    /// Convenience constructor fixing `Dp` directly, with `m` given and the
    /// split between `γ` and `kT` immaterial for the undamped dynamics.
    pub fn with_diffusion(mass: f64, dp: f64) -> Result<Self> {
        if !(dp > 0.0) {
            return Err(CoreError::Domain(format!("Dp must be positive, got {dp}")));
        }
        Self::new(mass, 1.0, dp / (2.0 * mass))
    }

    /// Momentum-space diffusion coefficient `Dp = 2 m γ k T`.
    pub fn dp(&self) -> f64 {
        2.0 * self.mass * self.gamma * self.k_t
    }

    /// Momentum standard deviation accumulated over time `t`.
    pub fn sigma_p(&self, t: f64) -> f64 {
        (2.0 * self.dp() * t).sqrt()
    }

    /// Position standard deviation accumulated over time `t` (for a particle
    /// started at a phase-space point): `sqrt(2 Dp t³ / 3) / m`.
    pub fn sigma_x(&self, t: f64) -> f64 {
        (2.0 * self.dp() * t * t * t / 3.0).sqrt() / self.mass
    }
}
