//! Free-particle crossing/non-crossing histories: image-method propagators,
//! restricted and crossing amplitudes, the 2x2 decoherence functional with
//! its sum rule, and the small-time scaling diagnostics.

pub mod amplitude;
pub mod evolve;
pub mod params;
pub mod propagator;
pub mod scaling;
pub mod table;
pub mod wavefunction;

pub use amplitude::AmplitudeField;
pub use evolve::UnitaryEngine;
pub use params::ParticleParams;
pub use propagator::{crossing_propagator, free_propagator, restricted_propagator};
pub use scaling::{fit_log_slope, small_time_scaling, SmallTimeScaling};
pub use table::{decoherence_table, CrossingDecoherenceTable};
pub use wavefunction::Wavefunction;
