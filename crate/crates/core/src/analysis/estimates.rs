use num_complex::Complex64;
use rand::Rng;

use super::EstimateReport;
use crate::error::{Error, Result};
use crate::fracops::TimeGrid;
use crate::solver::{solve_forced, SolverConfig};
use crate::spectral::{
    gradient_magnitude, norm_pqt, norm_pqt_samples, physical_magnitude, random_bandlimited,
    spatial_lp, NormSpec, ScalarField, SpectralField, TorusGrid, Trajectory,
};

/// (a+b)^β ≤ 2^{β−1}(a^β + b^β) for a, b ≥ 0 and β ≥ 1.
pub fn power_inequality_check(a: f64, b: f64, beta: f64) -> Result<EstimateReport> {
    if !(beta >= 1.0) {
        return Err(Error::domain(format!("power inequality needs β ≥ 1, got {beta}")));
    }
    if !(a >= 0.0 && b >= 0.0) {
        return Err(Error::domain(format!("power inequality needs a, b ≥ 0, got {a}, {b}")));
    }
    Ok(power_inequality_unchecked(a, b, beta))
}

/// Same comparison without the β ≥ 1 precondition.
pub fn power_inequality_unchecked(a: f64, b: f64, beta: f64) -> EstimateReport {
    let lhs = (a + b).powf(beta);
    let rhs = 2f64.powf(beta - 1.0) * (a.powf(beta) + b.powf(beta));
    EstimateReport::new(lhs, rhs, format!("power a={a} b={b} beta={beta}"))
}

/// ‖u‖_{L^{pN/(N−p)}} / ‖∇u‖_{L^p} for physical samples of a scalar (one
/// component) or vector field. The mean of every component is removed first.
pub fn gns_ratio(u: &[Vec<f64>], p: f64, grid: &TorusGrid) -> Result<EstimateReport> {
    let n = grid.dim() as f64;
    if !(p >= 1.0 && p < n) {
        return Err(Error::domain(format!("GNS exponent must lie in [1, {n}), got {p}")));
    }
    if u.is_empty() {
        return Err(Error::shape("field has no components"));
    }
    let mut means = Vec::with_capacity(u.len());
    let mut comps = Vec::with_capacity(u.len());
    for c in u {
        let s = ScalarField::from_physical(grid, c)?;
        means.push(s.coeffs()[0].re);
        let mut k = s.coeffs().to_vec();
        k[0] = Complex64::default();
        comps.push(k);
    }
    let pstar = p * n / (n - p);
    let cell = grid.cell_volume();
    let mut mag = vec![0.0; grid.modes()];
    let mut grad = vec![0.0; grid.modes()];
    for k in comps {
        let s = ScalarField::new(grid.clone(), k)?;
        mag.iter_mut().zip(s.to_physical()).for_each(|(a, x)| *a += x * x);
        for d in s.gradient().to_physical() {
            grad.iter_mut().zip(&d).for_each(|(a, x)| *a += x * x);
        }
    }
    let mag: Vec<f64> = mag.into_iter().map(f64::sqrt).collect();
    let grad: Vec<f64> = grad.into_iter().map(f64::sqrt).collect();
    let lhs = spatial_lp(&mag, pstar, cell);
    let rhs = spatial_lp(&grad, p, cell);
    if rhs == 0.0 {
        return Err(Error::Degenerate("∇u vanishes; GNS ratio undefined".into()));
    }
    Ok(EstimateReport::new(lhs, rhs, format!("gns p={p} p*={pstar} means={means:?}")))
}

fn check_forcing(h: &Trajectory, cfg: &SolverConfig) -> Result<NormSpec> {
    if h.times() != cfg.time {
        return Err(Error::shape("forcing must be sampled on the solver's time grid"));
    }
    NormSpec::new(2.0, 2.0, cfg.time.t_end())
}

fn linear_response(h: &Trajectory, cfg: &SolverConfig) -> Result<Trajectory> {
    let cfg = cfg.linear();
    solve_forced(&SpectralField::zeros(h.grid()), h, &cfg)
}

/// ‖Δu‖_{p,q,T}/‖h‖_{p,q,T} for the linear problem driven by ℙh with u(0) = 0.
pub fn maximal_regularity_ratio(h: &Trajectory, cfg: &SolverConfig, spec: NormSpec) -> Result<EstimateReport> {
    check_forcing(h, cfg)?;
    let hn = norm_pqt(h, spec)?;
    if hn == 0.0 {
        return Err(Error::Degenerate("zero forcing".into()));
    }
    let u = linear_response(h, cfg)?;
    let g = u.grid().clone();
    let lap = u.map(|f| f.map_modes(|i| -g.wavenumber_sq(i)));
    let ln = norm_pqt(&lap, spec)?;
    Ok(EstimateReport::new(ln, hn, format!("maximal regularity p={} q={} T={}", spec.p, spec.q, spec.t_end)))
}

/// Ratios ‖∇u‖_{p,q,T}/‖h‖_{p,q,T} and ‖u‖_{pN/(N−p),q,T}/‖h‖_{p,q,T} for
/// the linear problem driven by ℙ∇·h, u(0) = 0. The tensor h is given by
/// rows: `rows[j]` holds (h_{j1}, …, h_{jN}).
pub fn lemma2_ratios(rows: &[Trajectory], cfg: &SolverConfig, p: f64, q: f64) -> Result<(EstimateReport, EstimateReport)> {
    let first = rows.first().ok_or_else(|| Error::shape("tensor forcing has no rows"))?;
    let grid = first.grid().clone();
    let d = grid.dim();
    if rows.len() != d {
        return Err(Error::shape(format!("tensor forcing needs {d} rows, got {}", rows.len())));
    }
    let n = d as f64;
    if !(p > 1.0 && p < n) {
        return Err(Error::domain(format!("Sobolev exponent must lie in (1, {n}), got {p}")));
    }
    let spec = NormSpec::new(p, q, cfg.time.t_end())?;
    for r in rows {
        check_forcing(r, cfg)?;
        r.fields()[0].check_grid(&first.fields()[0])?;
    }
    let times = cfg.time;
    // pointwise Frobenius norm of h and the vector forcing (∇·h)_j = Σ_k ∂_k h_{jk}
    let mut hmag = Vec::with_capacity(times.len());
    let mut forcing = Vec::with_capacity(times.len());
    for n_ in 0..times.len() {
        let mut m = vec![0.0; grid.modes()];
        let mut comps = Vec::with_capacity(d);
        for r in rows {
            let f = &r.fields()[n_];
            physical_magnitude(f).iter().zip(m.iter_mut()).for_each(|(x, a)| *a += x * x);
            let div = crate::spectral::divergence(f);
            comps.push(div.coeffs().to_vec());
        }
        hmag.push(m.into_iter().map(f64::sqrt).collect::<Vec<_>>());
        forcing.push(SpectralField::from_components(grid.clone(), comps, false)?);
    }
    let hn = norm_pqt_samples(times, &hmag, grid.cell_volume(), spec)?;
    if hn == 0.0 {
        return Err(Error::Degenerate("zero forcing".into()));
    }
    let u = linear_response(&Trajectory::new(times, forcing)?, cfg)?;
    let grads: Vec<Vec<f64>> = u.fields().iter().map(gradient_magnitude).collect();
    let gn = norm_pqt_samples(times, &grads, grid.cell_volume(), spec)?;
    let pstar = p * n / (n - p);
    let un = norm_pqt(&u, NormSpec::new(pstar, q, times.t_end())?)?;
    Ok((
        EstimateReport::new(gn, hn, format!("lemma2 grad p={p} q={q}")),
        EstimateReport::new(un, hn, format!("lemma2 sobolev p*={pstar} q={q}")),
    ))
}

/// ∫₀ᵀ ‖a(t) − b(t)‖⁴_{L^N} dt by the trapezoid rule.
pub fn uniqueness_metric(a: &Trajectory, b: &Trajectory, t_end: f64) -> Result<f64> {
    a.check_compatible(b)?;
    let diff = Trajectory::new(
        a.times(),
        a.fields().iter().zip(b.fields()).map(|(x, y)| x.sub(y)).collect::<Result<_>>()?,
    )?;
    let n = a.grid().dim() as f64;
    Ok(norm_pqt(&diff, NormSpec::new(n, 4.0, t_end)?)?.powi(4))
}

/// Band-limited forcing h(t) = A + cos(ωt + φ)B with random spatial fields
/// A, B of unit L² norm and random ω ∈ [0, 2π/T·3], φ ∈ [0, 2π).
pub fn random_forcing<R: Rng + ?Sized>(grid: &TorusGrid, times: TimeGrid, band: usize, rng: &mut R) -> Result<Trajectory> {
    let a = random_bandlimited(grid, band, 1.0, false, rng)?;
    let b = random_bandlimited(grid, band, 1.0, false, rng)?;
    let omega = rng.gen_range(0.0..3.0) * 2.0 * std::f64::consts::PI / times.t_end();
    let phase = rng.gen_range(0.0..2.0 * std::f64::consts::PI);
    let fields = times
        .times()
        .into_iter()
        .map(|t| a.axpy((omega * t + phase).cos(), &b))
        .collect::<Result<_>>()?;
    Trajectory::new(times, fields)
}
