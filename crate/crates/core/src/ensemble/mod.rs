//! Decoherence of crossing densities for `N` independent particles.
//!
//! Everything is driven by one-particle data `(p, pbar, d)`; the matrix
//! `D(n, n')` follows from a generating function and is evaluated four ways
//! (exact sums, contour quadrature, brute-force expansion, saddle-point
//! asymptotics) that cross-check each other.

pub mod brute;
pub mod contour;
pub mod exact;
pub mod matrix;
pub mod one_particle;
pub mod probabilities;
pub mod regimes;
pub mod saddle;

pub use brute::{brute_force_dnn, BRUTE_FORCE_MAX_N};
pub use contour::{contour_dnn, contour_dnn_with_radius};
pub use exact::{exact_dnn, exact_matrix};
pub use matrix::{BinSpec, EnsembleDecoherenceMatrix};
pub use one_particle::OneParticleHistoryData;
pub use probabilities::{candidate_probabilities, ProbabilityTable};
pub use regimes::{
    epsilon_measure, log_epsilon, log_epsilon_large_alpha, near_one_regime, NearOneRegime,
};
pub use saddle::{asymptotic_dnn, rho_closed_form, saddle_rho, SaddleState};
