use super::{ScalarField, SpectralField, TorusGrid};
use crate::error::{Error, Result};
use crate::fracops::TimeGrid;

/// Exponents and horizon of the mixed norm ‖h‖_{p,q,T} = ‖ ‖h(t)‖_{L^p} ‖_{L^q(0,T)}.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormSpec {
    pub p: f64,
    pub q: f64,
    pub t_end: f64,
}

impl NormSpec {
    pub fn new(p: f64, q: f64, t_end: f64) -> Result<Self> {
        if !(p >= 1.0) || !(q >= 1.0) {
            return Err(Error::domain(format!("norm exponents must be ≥ 1, got p={p}, q={q}")));
        }
        if !(t_end > 0.0 && t_end.is_finite()) {
            return Err(Error::domain(format!("norm horizon must be positive, got {t_end}")));
        }
        Ok(NormSpec { p, q, t_end })
    }
}

/// A field at every node of a time grid.
#[derive(Clone, Debug)]
pub struct Trajectory {
    times: TimeGrid,
    fields: Vec<SpectralField>,
}

impl Trajectory {
    pub fn new(times: TimeGrid, fields: Vec<SpectralField>) -> Result<Self> {
        if fields.len() != times.len() {
            return Err(Error::shape(format!(
                "trajectory has {} fields for {} time nodes",
                fields.len(),
                times.len()
            )));
        }
        for f in &fields[1..] {
            fields[0].check_grid(f)?;
        }
        Ok(Trajectory { times, fields })
    }

    pub fn grid(&self) -> &TorusGrid {
        self.fields[0].grid()
    }

    pub fn times(&self) -> TimeGrid {
        self.times
    }

    pub fn fields(&self) -> &[SpectralField] {
        &self.fields
    }

    pub fn last(&self) -> &SpectralField {
        self.fields.last().expect("trajectory is never empty")
    }

    /// Largest |ξ·û_n| over all nodes.
    pub fn max_divergence(&self) -> f64 {
        self.fields.iter().map(SpectralField::max_divergence).fold(0.0, f64::max)
    }

    /// Largest L² distance between matching nodes.
    pub fn sup_l2_distance(&self, other: &Trajectory) -> Result<f64> {
        self.check_compatible(other)?;
        let mut m: f64 = 0.0;
        for (a, b) in self.fields.iter().zip(&other.fields) {
            m = m.max(a.sub(b)?.l2_norm());
        }
        Ok(m)
    }

    pub fn check_compatible(&self, other: &Trajectory) -> Result<()> {
        if self.times != other.times {
            return Err(Error::shape("trajectories live on different time grids"));
        }
        self.fields[0].check_grid(&other.fields[0])
    }

    pub fn map(&self, f: impl Fn(&SpectralField) -> SpectralField) -> Trajectory {
        Trajectory { times: self.times, fields: self.fields.iter().map(f).collect() }
    }
}

/// Pointwise Euclidean magnitude |u(x)| on the physical grid.
pub fn physical_magnitude(u: &SpectralField) -> Vec<f64> {
    let phys = u.to_physical();
    (0..u.grid().modes())
        .map(|p| phys.iter().map(|c| c[p] * c[p]).sum::<f64>().sqrt())
        .collect()
}

/// Pointwise Frobenius norm of the Jacobian, (Σ_{c,j} (∂_j u_c)²)^{1/2}.
pub fn gradient_magnitude(u: &SpectralField) -> Vec<f64> {
    let g = u.grid();
    let mut acc = vec![0.0; g.modes()];
    for c in u.components() {
        let s = ScalarField::new(g.clone(), c.clone()).expect("component matches grid");
        for d in s.gradient().to_physical() {
            acc.iter_mut().zip(&d).for_each(|(a, x)| *a += x * x);
        }
    }
    acc.into_iter().map(f64::sqrt).collect()
}

/// L^p norm of physical samples with uniform cell weights; p = ∞ is the max.
pub fn spatial_lp(samples: &[f64], p: f64, cell_volume: f64) -> f64 {
    if p.is_infinite() {
        return samples.iter().fold(0.0, |m, v| m.max(v.abs()));
    }
    let s: f64 = samples.iter().map(|v| v.abs().powf(p)).sum();
    (cell_volume * s).powf(1.0 / p)
}

/// Mixed norm of a trajectory: spatial L^p on the grid, temporal L^q by trapezoid.
pub fn norm_pqt(traj: &Trajectory, spec: NormSpec) -> Result<f64> {
    let mags: Vec<Vec<f64>> = traj.fields().iter().map(physical_magnitude).collect();
    norm_pqt_samples(traj.times(), &mags, traj.grid().cell_volume(), spec)
}

/// Mixed norm from pointwise magnitudes sampled at every time node.
pub fn norm_pqt_samples(times: TimeGrid, magnitudes: &[Vec<f64>], cell_volume: f64, spec: NormSpec) -> Result<f64> {
    let spec = NormSpec::new(spec.p, spec.q, spec.t_end)?;
    if magnitudes.len() != times.len() {
        return Err(Error::shape(format!(
            "{} samples for {} time nodes",
            magnitudes.len(),
            times.len()
        )));
    }
    if spec.t_end > times.t_end() * (1.0 + 1e-12) {
        return Err(Error::domain(format!(
            "norm horizon {} exceeds trajectory end {}",
            spec.t_end,
            times.t_end()
        )));
    }
    let g: Vec<f64> = magnitudes.iter().map(|m| spatial_lp(m, spec.p, cell_volume)).collect();
    let t = times.times();
    // values of g at nodes inside [0, T], plus an interpolated end point
    let mut pts: Vec<(f64, f64)> = Vec::new();
    for k in 0..t.len() {
        if t[k] <= spec.t_end {
            pts.push((t[k], g[k]));
        } else {
            let (t0, g0) = (t[k - 1], g[k - 1]);
            let w = (spec.t_end - t0) / (t[k] - t0);
            if w > 0.0 {
                pts.push((spec.t_end, g0 + w * (g[k] - g0)));
            }
            break;
        }
    }
    if spec.q.is_infinite() {
        return Ok(pts.iter().fold(0.0, |m, &(_, v)| m.max(v)));
    }
    let q = spec.q;
    let integral: f64 = pts
        .windows(2)
        .map(|w| 0.5 * (w[1].0 - w[0].0) * (w[0].1.powf(q) + w[1].1.powf(q)))
        .sum();
    Ok(integral.powf(1.0 / q))
}
