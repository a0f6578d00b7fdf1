use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fracops::TimeGrid;
use crate::specfun::{gamma_fn, EvalPolicy, MLParams, MittagLeffler};
use crate::spectral::{SpectralField, TorusGrid};

/// E_{α,1}(−λt^α) and W(λ, s) = s^α E_{α,α+1}(−λ s^α) for a fixed λ.
struct Symbols {
    e1: MittagLeffler,
    e2: MittagLeffler,
    alpha: f64,
}

impl Symbols {
    fn new(alpha: f64, policy: EvalPolicy) -> Result<Self> {
        Ok(Symbols {
            e1: MittagLeffler::new(MLParams::new(alpha, 1.0)?, policy)?,
            e2: MittagLeffler::new(MLParams::new(alpha, alpha + 1.0)?, policy)?,
            alpha,
        })
    }

    fn propagator(&self, lambda: f64, t: f64) -> Result<f64> {
        if t == 0.0 {
            return Ok(1.0);
        }
        self.e1.eval(-lambda * t.powf(self.alpha))
    }

    fn integrated(&self, lambda: f64, s: f64) -> Result<f64> {
        if s == 0.0 {
            return Ok(0.0);
        }
        let sa = s.powf(self.alpha);
        Ok(sa * self.e2.eval(-lambda * sa)?)
    }
}

/// Per-wavenumber tables of the fractional propagator E_α(−λt_n^α) and of the
/// integrated memory kernel W(λ, t_n), λ = |ξ|², on a uniform time grid.
///
/// Only distinct values of λ are stored; `lambda_index` maps grid modes to
/// table rows.
#[derive(Clone, Debug)]
pub struct PropagatorTable {
    alpha: f64,
    times: TimeGrid,
    lambdas: Vec<f64>,
    mode_lambda: Vec<usize>,
    prop: Vec<Vec<f64>>,
    integ: Vec<Vec<f64>>,
}

impl PropagatorTable {
    pub fn new(grid: &TorusGrid, alpha: f64, times: TimeGrid, policy: EvalPolicy) -> Result<Self> {
        let mut lambdas: Vec<f64> = (0..grid.modes()).map(|i| grid.wavenumber_sq(i)).collect();
        lambdas.sort_by(f64::total_cmp);
        lambdas.dedup();
        let mode_lambda = (0..grid.modes())
            .map(|i| {
                let l = grid.wavenumber_sq(i);
                lambdas.binary_search_by(|x| x.total_cmp(&l)).expect("λ present")
            })
            .collect();
        let sym = Symbols::new(alpha, policy)?;
        let t = times.times();
        let rows: Vec<(Vec<f64>, Vec<f64>)> = lambdas
            .par_iter()
            .map(|&l| {
                let p = t.iter().map(|&s| sym.propagator(l, s)).collect::<Result<Vec<_>>>()?;
                let w = t.iter().map(|&s| sym.integrated(l, s)).collect::<Result<Vec<_>>>()?;
                Ok((p, w))
            })
            .collect::<Result<_>>()?;
        let (prop, integ) = rows.into_iter().unzip();
        Ok(PropagatorTable { alpha, times, lambdas, mode_lambda, prop, integ })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn times(&self) -> TimeGrid {
        self.times
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    /// Table row of grid mode `mode`.
    pub fn lambda_index(&self, mode: usize) -> usize {
        self.mode_lambda[mode]
    }

    /// E_α(−λ t_n^α).
    pub fn propagator(&self, row: usize, n: usize) -> f64 {
        self.prop[row][n]
    }

    /// W(λ, t_n).
    pub fn integrated(&self, row: usize, n: usize) -> f64 {
        self.integ[row][n]
    }

    /// Weight of the subinterval lying `lag` steps back: W(λ, t_lag) − W(λ, t_{lag−1}).
    pub fn lag_weight(&self, row: usize, lag: usize) -> f64 {
        // W is non-decreasing in s; clamp roundoff once it has saturated at 1/λ
        (self.integ[row][lag] - self.integ[row][lag - 1]).max(0.0)
    }

    /// E_α(t_n^α Δ) u₀.
    pub fn propagate(&self, u0: &SpectralField, n: usize) -> SpectralField {
        u0.map_modes(|i| self.prop[self.mode_lambda[i]][n])
    }
}

/// E_α(t^αΔ)u₀ applied mode by mode.
pub fn linear_propagate(u0: &SpectralField, alpha: f64, t: f64) -> Result<SpectralField> {
    linear_propagate_with(u0, alpha, t, EvalPolicy::default())
}

pub fn linear_propagate_with(u0: &SpectralField, alpha: f64, t: f64, policy: EvalPolicy) -> Result<SpectralField> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::domain(format!("propagation time must be non-negative, got {t}")));
    }
    if t == 0.0 {
        return Ok(u0.clone());
    }
    let times = TimeGrid::new(t, 1)?;
    let table = PropagatorTable::new(u0.grid(), alpha, times, policy)?;
    Ok(table.propagate(u0, 1))
}

/// Weights of the n subintervals [t_k, t_{k+1}], k < n, in the memory
/// integral at t_n: W(λ, t_n − t_k) − W(λ, t_n − t_{k+1}).
pub fn memory_weights(alpha: f64, lambda: f64, time: TimeGrid, n: usize) -> Result<Vec<f64>> {
    if n > time.steps() {
        return Err(Error::domain(format!("step {n} beyond grid of {} steps", time.steps())));
    }
    if !(lambda >= 0.0 && lambda.is_finite()) {
        return Err(Error::domain(format!("λ must be non-negative, got {lambda}")));
    }
    let sym = Symbols::new(alpha, EvalPolicy::default())?;
    let tn = time.time(n);
    let w: Vec<f64> = (0..=n)
        .map(|k| sym.integrated(lambda, tn - time.time(k)))
        .collect::<Result<_>>()?;
    Ok((0..n).map(|k| (w[k] - w[k + 1]).max(0.0)).collect())
}

/// W(0, s) = s^α/Γ(α+1).
pub fn integrated_free(alpha: f64, s: f64) -> Result<f64> {
    Ok(s.powf(alpha) / gamma_fn(alpha + 1.0)?)
}
