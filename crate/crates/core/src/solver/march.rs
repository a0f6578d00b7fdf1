use std::io::Write;

use num_complex::Complex64;

use super::{PropagatorTable, SolverConfig};
use crate::error::{Error, Result};
use crate::spectral::{leray_project, nonlinear_term, SpectralField, Trajectory};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StepDiagnostics {
    pub time: f64,
    pub energy: f64,
    pub max_divergence: f64,
    pub picard_iterations: usize,
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub trajectory: Trajectory,
    pub diagnostics: Vec<StepDiagnostics>,
}

/// Starting trajectory for a global Picard solve.
#[derive(Clone, Debug)]
pub enum PicardInit {
    Zero,
    LinearOnly,
    Custom(Trajectory),
}

/// Subset of modes carried by the memory integral, stored component-major.
struct Packed {
    modes: Vec<usize>,
    rows: Vec<usize>,
    dim: usize,
    volume: f64,
}

impl Packed {
    fn new(table: &PropagatorTable, u0: &SpectralField, kept_only: bool) -> Self {
        let g = u0.grid();
        let modes: Vec<usize> = (0..g.modes()).filter(|&i| !kept_only || g.is_kept(i)).collect();
        let rows = modes.iter().map(|&i| table.lambda_index(i)).collect();
        Packed { modes, rows, dim: g.dim(), volume: g.volume() }
    }

    fn len(&self) -> usize {
        self.modes.len()
    }

    fn pack(&self, f: &SpectralField) -> Vec<Complex64> {
        f.components()
            .iter()
            .flat_map(|c| self.modes.iter().map(move |&i| c[i]))
            .collect()
    }

    /// base + unpacked(data)
    fn add_to(&self, base: &SpectralField, data: &[Complex64]) -> SpectralField {
        let nk = self.len();
        let mut comps = base.components().to_vec();
        for (c, comp) in comps.iter_mut().enumerate() {
            for (p, &i) in self.modes.iter().enumerate() {
                comp[i] += data[c * nk + p];
            }
        }
        SpectralField::from_parts(base.grid().clone(), comps, base.is_div_free())
    }

    /// acc += Σ_k w[lag(k)][row] · hist[k]
    fn accumulate(&self, acc: &mut [Complex64], weights: &[f64], hist: &[Complex64]) {
        let nk = self.len();
        for c in 0..self.dim {
            let a = &mut acc[c * nk..(c + 1) * nk];
            let h = &hist[c * nk..(c + 1) * nk];
            for p in 0..nk {
                a[p] += h[p] * weights[self.rows[p]];
            }
        }
    }

    fn l2(&self, data: &[Complex64]) -> f64 {
        (self.volume * data.iter().map(|z| z.norm_sqr()).sum::<f64>()).sqrt()
    }
}

/// lag_weights[j][row] = W(λ_row, t_j) − W(λ_row, t_{j−1}), j ≥ 1.
fn lag_weights(table: &PropagatorTable) -> Vec<Vec<f64>> {
    let n = table.times().steps();
    let rows = table.lambdas().len();
    let mut out = vec![Vec::new()];
    for j in 1..=n {
        out.push((0..rows).map(|r| table.lag_weight(r, j)).collect());
    }
    out
}

enum Density<'a> {
    Zero,
    Nonlinear,
    Forcing(&'a Trajectory),
}

fn diag(t: f64, u: &SpectralField, iters: usize) -> StepDiagnostics {
    StepDiagnostics {
        time: t,
        energy: u.energy(),
        max_divergence: u.max_divergence(),
        picard_iterations: iters,
    }
}

fn check_initial(u0: &SpectralField, cfg: &SolverConfig) -> Result<()> {
    cfg.validate()?;
    if cfg.nonlinear {
        if !u0.is_div_free() {
            return Err(Error::domain("initial data must be tagged divergence-free"));
        }
        if !u0.is_dealiased() {
            return Err(Error::domain("initial data must be dealiased"));
        }
    }
    Ok(())
}

fn march(u0: &SpectralField, cfg: &SolverConfig, density: Density<'_>) -> Result<Solution> {
    let table = PropagatorTable::new(u0.grid(), cfg.alpha, cfg.time, cfg.ml_policy)?;
    let steps = cfg.time.steps();
    let mut fields = vec![u0.clone()];
    let mut diags = vec![diag(0.0, u0, 0)];
    if let Density::Zero = density {
        for n in 1..=steps {
            let u = table.propagate(u0, n);
            diags.push(diag(cfg.time.time(n), &u, 0));
            fields.push(u);
        }
        return Ok(Solution { trajectory: Trajectory::new(cfg.time, fields)?, diagnostics: diags });
    }
    let packed = Packed::new(&table, u0, matches!(density, Density::Nonlinear));
    let lagw = lag_weights(&table);
    let size = packed.dim * packed.len();
    // hist[k] = density on [t_k, t_{k+1}]
    let mut hist: Vec<Vec<Complex64>> = Vec::with_capacity(steps);
    for n in 1..=steps {
        let mut acc = vec![Complex64::default(); size];
        for (k, h) in hist.iter().enumerate() {
            packed.accumulate(&mut acc, &lagw[n - k], h);
        }
        let base = packed.add_to(&table.propagate(u0, n), &acc);
        let w1: Vec<f64> = packed.rows.iter().map(|&r| lagw[1][r]).collect();
        let scale = |f: &[Complex64]| -> Vec<Complex64> {
            let nk = packed.len();
            f.iter().enumerate().map(|(i, z)| z * w1[i % nk]).collect()
        };
        let (u, d, iters) = match density {
            Density::Forcing(h) => {
                let fk = &h.fields()[n - 1];
                let fk1 = &h.fields()[n];
                let mid = leray_project(&fk.add(fk1)?.scale(0.5));
                let d = packed.pack(&mid);
                (packed.add_to(&base, &scale(&d)), d, 0)
            }
            Density::Nonlinear => {
                let mut f = match hist.last() {
                    Some(prev) => prev.clone(),
                    None => packed.pack(&nonlinear_term(u0)),
                };
                let mut v = packed.add_to(&base, &scale(&f));
                let mut done = None;
                for it in 1..=cfg.picard_max_iters {
                    let fnew = packed.pack(&nonlinear_term(&v));
                    let diff: Vec<Complex64> = fnew.iter().zip(&f).map(|(a, b)| a - b).collect();
                    let res = packed.l2(&scale(&diff));
                    v = packed.add_to(&base, &scale(&fnew));
                    f = fnew;
                    if !res.is_finite() {
                        return Err(Error::PicardDivergence { step: n, iterations: it, residual: res });
                    }
                    if res <= cfg.picard_tol {
                        done = Some(it);
                        break;
                    }
                    if it == cfg.picard_max_iters {
                        return Err(Error::PicardDivergence { step: n, iterations: it, residual: res });
                    }
                }
                (v, f, done.expect("loop exits through break or error"))
            }
            Density::Zero => unreachable!(),
        };
        hist.push(d);
        diags.push(diag(cfg.time.time(n), &u, iters));
        fields.push(u);
    }
    Ok(Solution { trajectory: Trajectory::new(cfg.time, fields)?, diagnostics: diags })
}

/// Marches the mild formulation; see the module documentation.
pub fn solve_mild(u0: &SpectralField, cfg: &SolverConfig) -> Result<Trajectory> {
    Ok(solve_mild_with_diagnostics(u0, cfg)?.trajectory)
}

pub fn solve_mild_with_diagnostics(u0: &SpectralField, cfg: &SolverConfig) -> Result<Solution> {
    check_initial(u0, cfg)?;
    march(u0, cfg, if cfg.nonlinear { Density::Nonlinear } else { Density::Zero })
}

/// Linear problem driven by ℙh: the nonlinear density is replaced by the
/// projected forcing, averaged over each subinterval.
pub fn solve_forced(u0: &SpectralField, forcing: &Trajectory, cfg: &SolverConfig) -> Result<Trajectory> {
    cfg.validate()?;
    if forcing.times() != cfg.time {
        return Err(Error::shape("forcing must be sampled on the solver's time grid"));
    }
    u0.check_grid(&forcing.fields()[0])?;
    Ok(march(u0, cfg, Density::Forcing(forcing))?.trajectory)
}

/// Classical (α = 1) pseudospectral solver: exponential Euler with the
/// nonlinear term at the new time level, u_n = e^{dtΔ}u_{n−1} + φ(dtΔ)dt F(u_n),
/// φ(z) = (e^z − 1)/z. `cfg.alpha` is ignored.
pub fn classical_reference(u0: &SpectralField, cfg: &SolverConfig) -> Result<Trajectory> {
    check_initial(u0, cfg)?;
    let g = u0.grid().clone();
    let dt = cfg.time.dt();
    let decay: Vec<f64> = (0..g.modes()).map(|i| (-g.wavenumber_sq(i) * dt).exp()).collect();
    let phi: Vec<f64> = (0..g.modes())
        .map(|i| {
            let l = g.wavenumber_sq(i);
            if l == 0.0 {
                dt
            } else {
                -(-l * dt).exp_m1() / l
            }
        })
        .collect();
    let mut fields = vec![u0.clone()];
    let mut f = if cfg.nonlinear { nonlinear_term(u0) } else { SpectralField::zeros(&g) };
    for n in 1..=cfg.time.steps() {
        let base = fields[n - 1].map_modes(|i| decay[i]);
        let mut v = base.axpy(1.0, &f.map_modes(|i| phi[i]))?;
        if cfg.nonlinear {
            let mut converged = false;
            for it in 1..=cfg.picard_max_iters {
                let fnew = nonlinear_term(&v);
                let res = fnew.sub(&f)?.map_modes(|i| phi[i]).l2_norm();
                v = base.axpy(1.0, &fnew.map_modes(|i| phi[i]))?;
                f = fnew;
                if !res.is_finite() || (it == cfg.picard_max_iters && res > cfg.picard_tol) {
                    return Err(Error::PicardDivergence { step: n, iterations: it, residual: res });
                }
                if res <= cfg.picard_tol {
                    converged = true;
                    break;
                }
            }
            debug_assert!(converged);
        }
        fields.push(v);
    }
    Trajectory::new(cfg.time, fields)
}

/// One application of the discrete mild map
/// Φ(v)_n = E_α(t_n^αΔ)u₀ + Σ_{k<n} ω_{n−k} F(v_{k+1}).
fn mild_map(
    u0: &SpectralField,
    table: &PropagatorTable,
    packed: &Packed,
    lagw: &[Vec<f64>],
    v: &Trajectory,
) -> Result<Trajectory> {
    let steps = table.times().steps();
    let hist: Vec<Vec<Complex64>> = v.fields()[1..].iter().map(|f| packed.pack(&nonlinear_term(f))).collect();
    let size = packed.dim * packed.len();
    let mut fields = vec![u0.clone()];
    for n in 1..=steps {
        let mut acc = vec![Complex64::default(); size];
        for (k, h) in hist[..n].iter().enumerate() {
            packed.accumulate(&mut acc, &lagw[n - k], h);
        }
        fields.push(packed.add_to(&table.propagate(u0, n), &acc));
    }
    Trajectory::new(table.times(), fields)
}

fn global_picard(
    u0: &SpectralField,
    cfg: &SolverConfig,
    table: &PropagatorTable,
    init: &PicardInit,
) -> Result<Trajectory> {
    let packed = Packed::new(table, u0, true);
    let lagw = lag_weights(table);
    let mut v = match init {
        PicardInit::Zero => Trajectory::new(cfg.time, vec![SpectralField::zeros(u0.grid()); cfg.time.len()])?,
        PicardInit::LinearOnly => {
            Trajectory::new(cfg.time, (0..=cfg.time.steps()).map(|n| table.propagate(u0, n)).collect())?
        }
        PicardInit::Custom(t) => {
            t.check_compatible(&Trajectory::new(cfg.time, vec![u0.clone(); cfg.time.len()])?)?;
            t.clone()
        }
    };
    for it in 1..=cfg.picard_max_iters {
        let next = mild_map(u0, table, &packed, &lagw, &v)?;
        let res = next.sup_l2_distance(&v)?;
        v = next;
        if !res.is_finite() {
            return Err(Error::PicardDivergence { step: 0, iterations: it, residual: res });
        }
        if res <= cfg.picard_tol {
            return Ok(v);
        }
        if it == cfg.picard_max_iters {
            return Err(Error::PicardDivergence { step: 0, iterations: it, residual: res });
        }
    }
    unreachable!("picard_max_iters ≥ 1 is validated")
}

/// Solves the discrete mild equation twice by global Picard iteration from
/// two starting trajectories.
pub fn picard_pair(
    u0: &SpectralField,
    cfg: &SolverConfig,
    init_a: &PicardInit,
    init_b: &PicardInit,
) -> Result<(Trajectory, Trajectory)> {
    check_initial(u0, cfg)?;
    let table = PropagatorTable::new(u0.grid(), cfg.alpha, cfg.time, cfg.ml_policy)?;
    let a = global_picard(u0, cfg, &table, init_a)?;
    let b = global_picard(u0, cfg, &table, init_b)?;
    Ok((a, b))
}

/// CSV with columns time, energy, max_divergence, picard_iterations.
pub fn write_diagnostics_csv<W: Write>(mut w: W, diags: &[StepDiagnostics]) -> Result<()> {
    writeln!(w, "time,energy,max_divergence,picard_iterations")?;
    for d in diags {
        writeln!(w, "{:.17e},{:.17e},{:.17e},{}", d.time, d.energy, d.max_divergence, d.picard_iterations)?;
    }
    Ok(())
}
