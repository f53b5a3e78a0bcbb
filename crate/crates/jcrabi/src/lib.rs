//! Simulation library for a driven, dissipative Jaynes-Cummings-Rabi model:
//! N two-state systems coupled to one cavity mode through rotating and
//! counter-rotating interactions of independently adjustable strength, with
//! coherent driving of the mode and cavity loss.
//!
//! The crate is organized around three layers:
//!
//! - [`params`]: the six physical controls (λ, η, Δ, Δ₀, κ, ε) plus the
//!   system count N, together with every closed-form critical quantity
//!   (critical drive, critical counter-rotating ratio, critical couplings).
//! - [`meanfield`]: Maxwell-Bloch steady states. The inversion satisfies a
//!   degree-6 polynomial equation of state; this module builds and solves it,
//!   reconstructs field and polarization per root, classifies local
//!   stability, labels phase-diagram regions, and continues branches along
//!   detuning sweeps.
//! - [`quasienergy`] and [`quantum`]: the full quantum treatment for N = 1.
//!   Analytic quasienergies at zero detuning via a Bogoliubov construction,
//!   numerically verified in a truncated Fock basis; Lindblad steady states;
//!   quantum-jump trajectories under scanned detuning; Husimi Q functions.

pub mod error;
pub mod meanfield;
pub mod params;
pub mod poly;
pub mod quantum;
pub mod quasienergy;

pub use error::{Error, Result};
pub use params::{ModelParams, ScaledParams};

/// Complex double, the scalar type used throughout.
pub type C64 = num_complex::Complex64;
