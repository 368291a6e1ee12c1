//! Arrival-time (surface-crossing) probabilities in the decoherent-histories
//! framework, for a free quantum particle, a classical Brownian particle, a
//! quantum Brownian particle, and ensembles of `N` independent copies.
//!
//! The library is organised around four pipelines:
//!
//! * [`unitary`] — image-method crossing/non-crossing amplitudes for a free
//!   particle and the 2x2 decoherence functional built from them.
//! * [`classical`] — the exact Fokker-Planck propagator in the negligible
//!   dissipation limit, its Carslaw-image restriction to `x > 0`, survival
//!   and crossing probabilities, and a Langevin Monte Carlo oracle.
//! * [`qbm`] — master-equation evolution of the position-space density
//!   matrix, the Wigner transform pair, and crossing probabilities obtained
//!   by feeding the initial Wigner function through the classical machinery.
//! * [`ensemble`] — the decoherence matrix `D(n, n')` for `n` of `N`
//!   particles crossing, evaluated by exact finite sums, contour
//!   integration, brute-force expansion, and saddle-point asymptotics.
//!
//! [`numerics`] holds the shared kernels (grids, quadrature, the incomplete
//! Gaussian integral, log-space combinatorics and complex arithmetic, seeded
//! random streams).

pub mod classical;
pub mod ensemble;
pub mod error;
pub mod numerics;
pub mod qbm;
pub mod unitary;

pub use error::{CoreError, Result};
pub use numerics::grid::{Grid1D, Grid2D};
pub use numerics::logcomplex::LogComplex;
pub use numerics::rng::RandomStream;
pub use unitary::params::ParticleParams;
pub use unitary::table::CrossingDecoherenceTable;
pub use unitary::wavefunction::Wavefunction;

pub use classical::bath::BathParams;
pub use classical::phase_space::{DistributionKind, PhaseSpaceDistribution, PhaseSpacePoint};

pub use ensemble::matrix::{BinSpec, EnsembleDecoherenceMatrix};
pub use ensemble::one_particle::OneParticleHistoryData;

pub use qbm::density::DensityMatrixGrid;
pub use qbm::wigner::WignerGrid;
