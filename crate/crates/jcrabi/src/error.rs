use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter violates the model invariants (η ∉ [0,1], λ ≤ 0, ...).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Input outside the mathematical domain of a closed-form expression.
    #[error("domain error: {0}")]
    Domain(String),

    /// η < η_κ: the square root in the critical-coupling formula is complex
    /// and no critical coupling strength exists.
    #[error("no critical coupling: eta = {eta} below eta_critical = {eta_critical}")]
    NoCriticalCoupling { eta: f64, eta_critical: f64 },

    /// Requested quantity is undefined in this parameter limit.
    #[error("unsupported limit: {0}")]
    Unsupported(String),

    /// Drive above critical: the discrete quasienergy spectrum gives way to
    /// a continuous one and no level list can be produced.
    #[error("discrete spectrum undefined: capital Lambda = {0} < 0 (supercritical drive)")]
    Supercritical(f64),

    /// Fock truncation escalation hit its cap without passing the adequacy
    /// check.
    #[error("truncation infeasible: n_fock = {reached} reached cap {cap} with top-level population {population:.3e}")]
    TruncationInfeasible {
        reached: usize,
        cap: usize,
        population: f64,
    },

    /// The solver produced fewer roots or larger residuals than the equation
    /// of state guarantees; indicates an internal accuracy failure.
    #[error("internal accuracy failure: {0}")]
    InternalAccuracy(String),

    /// A numerical subroutine (factorization, integration) failed.
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
