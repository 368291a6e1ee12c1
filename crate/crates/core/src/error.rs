use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum CoreError {
    /// A precondition on a numeric argument was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// Free kernel requested at `t = 0`, where it is a delta function.
    #[error("singular kernel: t = 0 has no pointwise propagator; use the identity limit")]
    SingularKernel,

    /// A state leaks outside the grid it is sampled on.
    #[error("grid coverage: {0}")]
    GridCoverage(String),

    /// Initial distribution has weight on the wrong side of the surface.
    #[error("support violation: {0}")]
    Support(String),

    /// A sampled value was NaN or infinite where a finite one is required.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    /// Evolution step exceeds the documented stability bound.
    #[error("step size {dt} exceeds stability bound {bound}")]
    StepSize { dt: f64, bound: f64 },

    /// Quadrature resolution too low for the requested object.
    #[error("resolution: {0}")]
    Resolution(String),

    /// Physical-regime check failed (escalated from a warning in strict mode).
    #[error("regime violation: {0}")]
    Regime(String),

    /// Decoherence measure requested where its denominator vanishes.
    #[error("undefined measure: zero diagonal entry at ({0}, {1})")]
    UndefinedMeasure(usize, usize),

    /// Saddle-point expansion requested at a boundary index where it breaks down.
    #[error("asymptotic expansion invalid: {0}")]
    AsymptoticInvalid(String),
}

pub type Result<T> = std::result::Result<T, CoreError>;
