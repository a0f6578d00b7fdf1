//! Time integration of the mild formulation
//! u(t) = E_α(t^αΔ)u₀ + ∫₀ᵗ (t−τ)^{α−1} E_{α,α}((t−τ)^αΔ) F(u(τ)) dτ,
//! F(u) = −ℙ∇·(u⊗u), with viscosity 1.
//!
//! The kernel is integrated exactly per Fourier mode through
//! ∫₀ˢ r^{α−1}E_{α,α}(−λr^α) dr = s^α E_{α,α+1}(−λs^α). On each subinterval
//! [t_k, t_{k+1}] the density F is frozen at its right end point, so every
//! step solves a small implicit problem by Picard iteration. Cost is O(n²)
//! in the number of steps since the whole history is revisited.

mod kernel;
mod march;
mod propagator;

pub use march::{
    classical_reference, picard_pair, solve_forced, solve_mild, solve_mild_with_diagnostics,
    write_diagnostics_csv, PicardInit, Solution, StepDiagnostics,
};
pub use kernel::{kernel_via_fourier, kernel_via_mainardi};
pub use propagator::{
    integrated_free, linear_propagate, linear_propagate_with, memory_weights, PropagatorTable,
};

use crate::error::{Error, Result};
use crate::fracops::TimeGrid;
use crate::specfun::EvalPolicy;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverConfig {
    pub alpha: f64,
    pub time: TimeGrid,
    pub picard_tol: f64,
    pub picard_max_iters: usize,
    pub ml_policy: EvalPolicy,
    /// When false the nonlinear term is dropped (Stokes problem).
    pub nonlinear: bool,
}

impl SolverConfig {
    pub fn new(alpha: f64, time: TimeGrid) -> Result<Self> {
        let cfg = SolverConfig {
            alpha,
            time,
            picard_tol: 1e-12,
            picard_max_iters: 200,
            ml_policy: EvalPolicy::default(),
            nonlinear: true,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn linear(mut self) -> Self {
        self.nonlinear = false;
        self
    }

    pub fn with_picard(mut self, tol: f64, max_iters: usize) -> Self {
        self.picard_tol = tol;
        self.picard_max_iters = max_iters;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(Error::domain(format!("alpha must lie in (0, 1], got {}", self.alpha)));
        }
        if !(self.picard_tol > 0.0) {
            return Err(Error::domain(format!("picard_tol must be positive, got {}", self.picard_tol)));
        }
        if self.picard_max_iters == 0 {
            return Err(Error::domain("picard_max_iters must be at least 1"));
        }
        self.ml_policy.validate()
    }
}
