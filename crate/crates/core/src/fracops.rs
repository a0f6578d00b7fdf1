//! Fractional calculus on uniformly sampled signals and the fractional
//! Laplacian as a Fourier multiplier.
//!
//! The Riemann–Liouville integral uses product integration: the signal is
//! interpolated linearly between nodes and the kernel (t−τ)^{α−1} is
//! integrated exactly against each hat function. The Caputo derivative is
//! the L1 scheme (same interpolation applied to h before differentiating).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::gamma_fn;
use crate::spectral::SpectralField;

/// Uniform time grid t_k = k·T/n, k = 0..=n.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TimeGrid {
    t_end: f64,
    steps: usize,
}

impl TimeGrid {
    pub fn new(t_end: f64, steps: usize) -> Result<Self> {
        if !(t_end.is_finite() && t_end > 0.0) {
            return Err(Error::domain(format!("t_end must be positive and finite, got {t_end}")));
        }
        if steps < 1 {
            return Err(Error::domain("a time grid needs at least one step"));
        }
        Ok(TimeGrid { t_end, steps })
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn dt(&self) -> f64 {
        self.t_end / self.steps as f64
    }

    pub fn len(&self) -> usize {
        self.steps + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn time(&self, k: usize) -> f64 {
        if k == self.steps {
            self.t_end
        } else {
            k as f64 * self.dt()
        }
    }

    pub fn times(&self) -> Vec<f64> {
        (0..=self.steps).map(|k| self.time(k)).collect()
    }
}

/// Values of a scalar signal at the nodes of a [`TimeGrid`].
#[derive(Clone, Debug, PartialEq)]
pub struct SampledSignal {
    grid: TimeGrid,
    values: Vec<f64>,
}

impl SampledSignal {
    pub fn new(grid: TimeGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::shape(format!(
                "signal has {} samples but the grid has {} nodes",
                values.len(),
                grid.len()
            )));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::domain(format!("signal contains non-finite sample {bad}")));
        }
        Ok(SampledSignal { grid, values })
    }

    pub fn from_fn(grid: TimeGrid, f: impl Fn(f64) -> f64) -> Result<Self> {
        SampledSignal::new(grid, grid.times().into_iter().map(f).collect())
    }

    pub fn grid(&self) -> TimeGrid {
        self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

/// Riemann–Liouville integral I^α h at every node.
pub fn rl_integral(h: &SampledSignal, alpha: f64) -> Result<SampledSignal> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::domain(format!("RL integral order must lie in (0, 1], got {alpha}")));
    }
    let grid = h.grid;
    let v = &h.values;
    let n_steps = grid.steps;
    let scale = grid.dt().powf(alpha) / gamma_fn(alpha + 2.0)?;
    let ap1 = alpha + 1.0;
    // p[m] = m^{α+1}
    let p: Vec<f64> = (0..=n_steps).map(|m| (m as f64).powf(ap1)).collect();
    let mut out = vec![0.0; n_steps + 1];
    for n in 1..=n_steps {
        let nf = n as f64;
        let mut acc = (p[n - 1] - (nf - alpha - 1.0) * nf.powf(alpha)) * v[0] + v[n];
        for j in 1..n {
            let m = n - j;
            acc += (p[m + 1] + p[m - 1] - 2.0 * p[m]) * v[j];
        }
        out[n] = scale * acc;
    }
    SampledSignal::new(grid, out)
}

/// Caputo derivative ^C D^α h by the L1 scheme; the value at t = 0 is 0.
pub fn caputo_derivative(h: &SampledSignal, alpha: f64) -> Result<SampledSignal> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!("Caputo order must lie in (0, 1), got {alpha}")));
    }
    if h.values.len() < 2 {
        return Err(Error::shape("Caputo derivative needs at least two samples"));
    }
    let grid = h.grid;
    let v = &h.values;
    let n_steps = grid.steps;
    let scale = grid.dt().powf(-alpha) / gamma_fn(2.0 - alpha)?;
    let e = 1.0 - alpha;
    let b: Vec<f64> = (0..n_steps)
        .map(|j| ((j + 1) as f64).powf(e) - (j as f64).powf(e))
        .collect();
    let diffs: Vec<f64> = v.windows(2).map(|w| w[1] - w[0]).collect();
    let mut out = vec![0.0; n_steps + 1];
    for n in 1..=n_steps {
        let acc: f64 = (0..n).map(|k| b[n - k - 1] * diffs[k]).sum();
        out[n] = scale * acc;
    }
    SampledSignal::new(grid, out)
}

/// Product-integration weights for ∫_{σ_0}^{σ_n} (σ_n − σ)^{α−1} v(σ) dσ on a
/// possibly non-uniform increasing grid, with `v` linear between nodes.
/// Returns one weight per node `0..=n`.
pub fn product_weights(nodes: &[f64], n: usize, alpha: f64) -> Vec<f64> {
    let mut w = vec![0.0; n + 1];
    let s = nodes[n];
    for k in 0..n {
        let b = s - nodes[k];
        let a = s - nodes[k + 1];
        let h = b - a;
        if h <= 0.0 {
            continue;
        }
        let i0 = (b.powf(alpha) - a.powf(alpha)) / alpha;
        let i1 = (b.powf(alpha + 1.0) - a.powf(alpha + 1.0)) / (alpha + 1.0);
        // ∫_a^b r^{α-1} [v_k (r-a) + v_{k+1} (b-r)] / h dr
        w[k] += (i1 - a * i0) / h;
        w[k + 1] += (b * i0 - i1) / h;
    }
    w
}

/// C(N, s) = 2^{2s} s Γ(s + N/2) / (π^{N/2} Γ(1 − s)).
pub fn frac_laplacian_constant(dim: usize, s: f64) -> Result<f64> {
    if dim < 1 {
        return Err(Error::domain("dimension must be at least 1"));
    }
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::domain(format!("fractional order s must lie in (0, 1), got {s}")));
    }
    let half_n = dim as f64 / 2.0;
    // assemble in logs so that Γ(1-s) → ∞ as s → 1 cannot overflow early
    let ln_c = 2.0 * s * 2f64.ln() + s.ln() + crate::specfun::ln_gamma_abs(s + half_n)
        - half_n * std::f64::consts::PI.ln()
        - crate::specfun::ln_gamma_abs(1.0 - s);
    Ok(ln_c.exp())
}

/// (−Δ)^s as the Fourier multiplier |ξ|^{2s}; s = 1 gives −Δ.
pub fn frac_laplacian_apply(u: &SpectralField, s: f64) -> Result<SpectralField> {
    if !(s > 0.0 && s <= 1.0) {
        return Err(Error::domain(format!("fractional order s must lie in (0, 1], got {s}")));
    }
    let grid = u.grid().clone();
    let symbol: Vec<f64> = (0..grid.modes())
        .map(|i| {
            let k2 = grid.wavenumber_sq(i);
            if k2 == 0.0 {
                0.0
            } else {
                k2.powf(s)
            }
        })
        .collect();
    let comps = u
        .components()
        .iter()
        .map(|c| c.iter().zip(&symbol).map(|(z, &m)| z * m).collect::<Vec<Complex64>>())
        .collect();
    SpectralField::from_components(grid, comps, u.is_div_free())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: usize, t: f64) -> TimeGrid {
        TimeGrid::new(t, n).unwrap()
    }

    #[test]
    fn time_grid_validation() {
        assert!(TimeGrid::new(0.0, 4).is_err());
        assert!(TimeGrid::new(1.0, 0).is_err());
        let g = grid(4, 2.0);
        assert_eq!(g.times(), vec![0.0, 0.5, 1.0, 1.5, 2.0]);
    }

    #[test]
    fn signal_validation() {
        let g = grid(2, 1.0);
        assert!(SampledSignal::new(g, vec![0.0, 1.0]).is_err());
        assert!(SampledSignal::new(g, vec![0.0, f64::NAN, 1.0]).is_err());
    }

    #[test]
    fn rl_of_zero_is_zero() {
        let h = SampledSignal::new(grid(8, 1.0), vec![0.0; 9]).unwrap();
        assert!(rl_integral(&h, 0.5).unwrap().values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn rl_order_one_integrates_t() {
        let h = SampledSignal::from_fn(grid(16, 2.0), |t| t).unwrap();
        let i = rl_integral(&h, 1.0).unwrap();
        assert!((i.values()[16] - 2.0).abs() < 1e-13);
    }

    #[test]
    fn rl_order_one_is_trapezoid() {
        let g = grid(10, 1.0);
        let h = SampledSignal::from_fn(g, |t| (3.0 * t).sin() + t * t).unwrap();
        let i = rl_integral(&h, 1.0).unwrap();
        let dt = g.dt();
        let mut trap = 0.0;
        for n in 1..=10 {
            trap += 0.5 * dt * (h.values()[n - 1] + h.values()[n]);
            assert!((i.values()[n] - trap).abs() < 1e-14);
        }
    }

    #[test]
    fn rl_rejects_bad_order() {
        let h = SampledSignal::new(grid(2, 1.0), vec![0.0; 3]).unwrap();
        assert!(rl_integral(&h, 0.0).is_err());
        assert!(rl_integral(&h, 1.5).is_err());
    }

    #[test]
    fn caputo_of_constant_vanishes() {
        let h = SampledSignal::new(grid(20, 1.0), vec![3.5; 21]).unwrap();
        let d = caputo_derivative(&h, 0.4).unwrap();
        assert!(d.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn caputo_rejects_bad_input() {
        let h = SampledSignal::new(grid(2, 1.0), vec![0.0; 3]).unwrap();
        assert!(caputo_derivative(&h, 1.0).is_err());
        assert!(caputo_derivative(&h, 0.0).is_err());
    }

    #[test]
    fn product_weights_match_uniform_rule() {
        let g = grid(12, 1.5);
        let alpha = 0.35;
        let h = SampledSignal::from_fn(g, |t| (t + 0.3).ln()).unwrap();
        let i = rl_integral(&h, alpha).unwrap();
        let nodes = g.times();
        let w = product_weights(&nodes, 12, alpha);
        let direct: f64 = w.iter().zip(h.values()).map(|(a, b)| a * b).sum::<f64>() / gamma_fn(alpha).unwrap();
        assert!((direct - i.values()[12]).abs() < 1e-12);
    }

    #[test]
    fn laplacian_constant_values() {
        let c3 = frac_laplacian_constant(3, 0.5).unwrap();
        assert!((c3 - 1.0 / std::f64::consts::PI.powi(2)).abs() < 1e-15);
        let c1 = frac_laplacian_constant(1, 0.5).unwrap();
        assert!((c1 - 1.0 / std::f64::consts::PI).abs() < 1e-15);
        assert!(frac_laplacian_constant(0, 0.5).is_err());
        assert!(frac_laplacian_constant(2, 1.0).is_err());
    }
}
