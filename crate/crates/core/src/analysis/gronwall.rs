use std::io::Write;

use super::EstimateReport;
use crate::error::{Error, Result};
use crate::fracops::{product_weights, SampledSignal};
use crate::specfun::{gamma_fn, EvalPolicy, MLParams, MittagLeffler};

/// Data of the ψ-fractional Gronwall inequality. All signals share a grid.
#[derive(Clone, Debug)]
pub struct GronwallInput {
    pub u: SampledSignal,
    pub v: SampledSignal,
    pub g: SampledSignal,
    pub alpha: f64,
    pub psi: SampledSignal,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GronwallRow {
    pub t: f64,
    pub u: f64,
    /// v(t) + g(t) ∫₀ᵗ ψ'(τ)(ψ(t)−ψ(τ))^{α−1} u(τ) dτ
    pub hypothesis_rhs: f64,
    /// v(t) E_α(g(t)Γ(α)[ψ(T)−ψ(0)]^α)
    pub conclusion_rhs: f64,
    /// v(t) E_α(g(t)Γ(α)[ψ(t)−ψ(0)]^α), reported for information
    pub tight_rhs: f64,
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
}

#[derive(Clone, Debug)]
pub struct GronwallReport {
    pub rows: Vec<GronwallRow>,
    /// Worst conclusion ratio over nodes where the hypothesis holds.
    pub summary: EstimateReport,
}

impl GronwallReport {
    /// CSV with columns t, lhs, rhs, ratio, holds for the conclusion, plus
    /// the hypothesis and tight envelope.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "t,lhs,rhs,ratio,holds,hypothesis_rhs,hypothesis_holds,tight_rhs")?;
        for r in &self.rows {
            let ratio = if r.conclusion_rhs > 0.0 { r.u / r.conclusion_rhs } else { 0.0 };
            writeln!(
                w,
                "{:.17e},{:.17e},{:.17e},{:.17e},{},{:.17e},{},{:.17e}",
                r.t,
                r.u,
                r.conclusion_rhs,
                ratio,
                r.conclusion_holds,
                r.hypothesis_rhs,
                r.hypothesis_holds,
                r.tight_rhs
            )?;
        }
        Ok(())
    }
}

const SLACK: f64 = 1.0 + 1e-9;

fn validate(input: &GronwallInput) -> Result<()> {
    let grid = input.u.grid();
    for (name, s) in [("v", &input.v), ("g", &input.g), ("psi", &input.psi)] {
        if s.grid() != grid {
            return Err(Error::shape(format!("signal {name} lives on a different grid")));
        }
    }
    if !(input.alpha > 0.0 && input.alpha < 1.0) {
        return Err(Error::domain(format!("alpha must lie in (0, 1), got {}", input.alpha)));
    }
    for (name, s) in [("u", &input.u), ("v", &input.v), ("g", &input.g)] {
        if s.values().iter().any(|&x| x < 0.0) {
            return Err(Error::domain(format!("{name} must be non-negative")));
        }
    }
    if input.g.values().windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::domain("g must be non-decreasing"));
    }
    if input.psi.values().windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::domain("psi must be strictly increasing"));
    }
    Ok(())
}

/// ∫₀^{t_n} ψ'(τ)(ψ(t_n)−ψ(τ))^{α−1} u(τ) dτ for every node, by product
/// integration in σ = ψ(τ) with u linear in σ between nodes.
fn psi_integrals(u: &[f64], psi: &[f64], alpha: f64) -> Vec<f64> {
    (0..u.len())
        .map(|n| {
            product_weights(psi, n, alpha)
                .iter()
                .zip(u)
                .map(|(w, x)| w * x)
                .sum()
        })
        .collect()
}

/// Evaluates hypothesis and conclusion of the Gronwall inequality at every
/// node t_k ≤ T.
pub fn gronwall_check(input: &GronwallInput, t_end: f64) -> Result<GronwallReport> {
    validate(input)?;
    let grid = input.u.grid();
    if !(t_end > 0.0 && t_end <= grid.t_end() * (1.0 + 1e-12)) {
        return Err(Error::domain(format!("T = {t_end} outside (0, {}]", grid.t_end())));
    }
    let a = input.alpha;
    let times = grid.times();
    let psi = input.psi.values();
    // ψ(T) by linear interpolation between nodes
    let psi_t = {
        let k = times.iter().position(|&t| t >= t_end * (1.0 - 1e-12)).unwrap_or(times.len() - 1);
        if k == 0 || (times[k] - t_end).abs() <= 1e-12 * t_end {
            psi[k]
        } else {
            let w = (t_end - times[k - 1]) / (times[k] - times[k - 1]);
            psi[k - 1] + w * (psi[k] - psi[k - 1])
        }
    };
    let span = psi_t - psi[0];
    let ml = MittagLeffler::new(MLParams::new(a, 1.0)?, EvalPolicy { z_max: f64::INFINITY, ..EvalPolicy::default() })?;
    let ga = gamma_fn(a)?;
    let integrals = psi_integrals(input.u.values(), psi, a);
    let mut rows = Vec::new();
    let mut worst: Option<(f64, f64, f64)> = None;
    for k in 0..times.len() {
        if times[k] > t_end * (1.0 + 1e-12) {
            break;
        }
        let (u, v, g) = (input.u.values()[k], input.v.values()[k], input.g.values()[k]);
        let hypothesis_rhs = v + g * integrals[k];
        let conclusion_rhs = v * ml.eval(g * ga * span.powf(a))?;
        let tight_rhs = v * ml.eval(g * ga * (psi[k] - psi[0]).powf(a))?;
        let hypothesis_holds = u <= hypothesis_rhs * SLACK;
        let conclusion_holds = u <= conclusion_rhs * SLACK;
        if hypothesis_holds {
            let ratio = if conclusion_rhs > 0.0 {
                u / conclusion_rhs
            } else if u == 0.0 {
                0.0
            } else {
                f64::INFINITY
            };
            if worst.map_or(true, |w| ratio > w.0) {
                worst = Some((ratio, u, conclusion_rhs));
            }
        }
        rows.push(GronwallRow {
            t: times[k],
            u,
            hypothesis_rhs,
            conclusion_rhs,
            tight_rhs,
            hypothesis_holds,
            conclusion_holds,
        });
    }
    let summary = match worst {
        Some((_, u, r)) => {
            let mut rep = EstimateReport::new(u, r, "gronwall conclusion, worst node");
            rep.holds = rows.iter().all(|r| !r.hypothesis_holds || r.conclusion_holds);
            rep
        }
        None => EstimateReport {
            lhs: 0.0,
            rhs: 0.0,
            ratio: 0.0,
            holds: true,
            context: "gronwall hypothesis fails at every node".into(),
        },
    };
    Ok(GronwallReport { rows, summary })
}

/// Smallest constant c ≥ 0 such that u ≤ v + c ∫ψ'(ψ(t)−ψ)^{α−1}u holds at
/// every node.
pub fn fit_gronwall_coefficient(u: &SampledSignal, v: &SampledSignal, psi: &SampledSignal, alpha: f64) -> Result<f64> {
    let integrals = psi_integrals(u.values(), psi.values(), alpha);
    let mut c: f64 = 0.0;
    for k in 0..integrals.len() {
        let excess = u.values()[k] - v.values()[k];
        if excess > 0.0 {
            if integrals[k] <= 0.0 {
                return Err(Error::Degenerate(format!("u exceeds v at t_{k} where the memory integral vanishes")));
            }
            c = c.max(excess / integrals[k]);
        }
    }
    Ok(c)
}
