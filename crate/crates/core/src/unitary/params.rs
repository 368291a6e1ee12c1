use crate::error::{CoreError, Result};

/// Mass, Planck constant and evolution time for the free-particle pipeline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticleParams {
    pub mass: f64,
    pub hbar: f64,
    pub duration: f64,
}

impl ParticleParams {
    pub fn new(mass: f64, hbar: f64, duration: f64) -> Result<Self> {
        if !(mass > 0.0) {
            return Err(CoreError::Domain(format!("mass must be positive, got {mass}")));
        }
        if !(hbar > 0.0) {
            return Err(CoreError::Domain(format!("hbar must be positive, got {hbar}")));
        }
        if !(duration >= 0.0) || !duration.is_finite() {
            return Err(CoreError::Domain(format!(
                "duration must be finite and non-negative, got {duration}"
            )));
        }
        Ok(Self { mass, hbar, duration })
    }

    pub fn with_duration(&self, duration: f64) -> Result<Self> {
        Self::new(self.mass, self.hbar, duration)
    }

    /// The spreading length `(ħ t / m)^(1/2)` that controls the small-time
    /// behaviour of crossing quantities.
    pub fn spreading_length(&self) -> f64 {
        (self.hbar * self.duration / self.mass).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_fields() {
        assert!(ParticleParams::new(1.0, 1.0, 0.0).is_ok());
        assert!(ParticleParams::new(0.0, 1.0, 1.0).is_err());
        assert!(ParticleParams::new(1.0, -1.0, 1.0).is_err());
        assert!(ParticleParams::new(1.0, 1.0, f64::INFINITY).is_err());
    }
}
