//! Link-level performance analysis of power-domain NOMA over Nakagami-m fading.
//!
//! The crate evaluates closed-form SINR, sum-rate, outage-probability, and
//! ergodic-rate expressions for three downlink scenarios and cross-validates
//! every closed form against a seeded, reproducible Monte Carlo engine:
//!
//! - [`rates`] — downlink/uplink NOMA sum rates and the OMA baseline
//! - [`simo`] — SIMO-NOMA with maximal ratio combining: outage probability
//!   and the asymptotic ergodic sum rate
//! - [`coop`] — dual-hop AF-relay NOMA without direct links: outage
//!   probability in closed form and by direct quadrature
//! - [`channel`] — Nakagami-m squared-envelope (Gamma) distributions,
//!   order statistics, and random sampling
//! - [`specfun`] — the special-function kernel (gamma, incomplete gamma,
//!   power-series multinomial coefficients, modified Bessel K)
//! - [`mc`] — the Monte Carlo engine (deterministic per-trial substreams,
//!   parallel or sequential execution)
//! - [`sweep`] — experiment sweeps producing CSV tables for the
//!   figure-reproduction CLI
//! - [`validate`] — the cross-validation suite behind `noma-bench validate`
//!
//! All closed-form evaluation is pure and thread-safe. Monte Carlo results
//! are a pure function of `(scenario, master_seed, trials)` — independent of
//! worker count, chunk scheduling, and the `parallel` feature flag.

pub mod channel;
pub mod coop;
pub mod mc;
pub mod rates;
pub mod simo;
pub mod specfun;
pub mod sweep;
pub mod validate;

mod quad;
mod sum;

/// Crate-wide error type.
///
/// `Config` maps to CLI exit code 2, `Numerical` to exit code 3.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// An argument violated an operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A scenario or experiment description violated a type invariant.
    #[error("invalid configuration: {0}")]
    Config(String),
    /// A numerical diagnostic fired (catastrophic cancellation, quadrature
    /// non-convergence) — the result would be silent garbage.
    #[error("numerical diagnostic: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
