//! Shared numeric kernels: grids and trapezoidal quadrature, the incomplete
//! Gaussian integral, log-space combinatorics, log-magnitude/phase complex
//! arithmetic, FFT plumbing, and seeded random streams.

pub mod fft;
pub mod grid;
pub mod logcomplex;
pub mod quad;
pub mod rng;
pub mod special;

pub use grid::{Grid1D, Grid2D};
pub use logcomplex::LogComplex;
pub use quad::{integrate_grid_1d, integrate_grid_1d_complex, integrate_grid_2d};
pub use rng::RandomStream;
pub use special::{gauss_tail_integral, log_binomial};
