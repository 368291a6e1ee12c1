//! Classical first-passage machinery for the undamped Brownian particle.

pub mod bath;
pub mod phase_space;

pub use bath::BathParams;
pub use phase_space::{DistributionKind, PhaseSpaceDistribution, PhaseSpacePoint};
