//! Quantum Brownian motion pipeline.

pub mod density;
pub mod wigner;

pub use density::DensityMatrixGrid;
pub use wigner::WignerGrid;
