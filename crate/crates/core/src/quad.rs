//! Adaptive Gauss–Legendre quadrature.
//!
//! Each panel is integrated with a 15-point rule and compared against the
//! sum over its two halves; panels that disagree are bisected.

use std::sync::OnceLock;

use crate::error::{Error, Result};

const ORDER: usize = 15;

fn nodes() -> &'static [(f64, f64); ORDER] {
    static NODES: OnceLock<[(f64, f64); ORDER]> = OnceLock::new();
    NODES.get_or_init(|| {
        let n = ORDER;
        let mut out = [(0.0, 0.0); ORDER];
        for (i, slot) in out.iter_mut().enumerate() {
            // Chebyshev-like initial guess, then Newton on P_n.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-17 {
                    break;
                }
            }
            *slot = (x, 2.0 / ((1.0 - x * x) * dp * dp));
        }
        out
    })
}

fn panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    nodes().iter().map(|&(x, w)| w * f(c + h * x)).sum::<f64>() * h
}

/// Tolerances and panel budget for [`integrate`].
#[derive(Clone, Copy, Debug)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_panels: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions {
            abs_tol: 1e-15,
            rel_tol: 1e-13,
            max_panels: 20_000,
        }
    }
}

/// Integrates `f` over `[a, b]` adaptively.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, opts: QuadOptions) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Quadrature(format!("non-finite interval [{a}, {b}]")));
    }
    let whole = panel(&f, a, b);
    let mut stack = vec![(a, b, whole)];
    let mut total = 0.0;
    let mut comp = 0.0;
    let mut panels = 0usize;
    let width = (b - a).abs();
    while let Some((lo, hi, est)) = stack.pop() {
        panels += 1;
        if panels > opts.max_panels {
            return Err(Error::Quadrature(format!(
                "panel budget of {} exhausted on [{a}, {b}]",
                opts.max_panels
            )));
        }
        let mid = 0.5 * (lo + hi);
        let left = panel(&f, lo, mid);
        let right = panel(&f, mid, hi);
        let refined = left + right;
        if !refined.is_finite() {
            return Err(Error::Quadrature(format!("non-finite integrand on [{lo}, {hi}]")));
        }
        let share = (hi - lo).abs() / width;
        let tol = (opts.abs_tol * share).max(opts.rel_tol * refined.abs());
        if (refined - est).abs() <= tol || (hi - lo).abs() < 1e-12 * width {
            // Neumaier-compensated accumulation of accepted panels
            let t = total + refined;
            if total.abs() >= refined.abs() {
                comp += (total - t) + refined;
            } else {
                comp += (refined - t) + total;
            }
            total = t;
        } else {
            stack.push((mid, hi, right));
            stack.push((lo, mid, left));
        }
    }
    Ok(total + comp)
}

/// Integrates a rapidly decaying `f` over `[a, ∞)`.
///
/// The domain is split into doubling panels `[a, a+1], [a+1, a+3], ...` and
/// summation stops once a panel's contribution stays below the absolute
/// tolerance for two consecutive panels.
pub fn integrate_to_infinity<F: Fn(f64) -> f64>(f: F, a: f64, opts: QuadOptions) -> Result<f64> {
    let mut total = 0.0;
    let mut lo = a;
    let mut width = 1.0;
    let mut quiet = 0;
    for _ in 0..200 {
        let part = integrate(&f, lo, lo + width, opts)?;
        total += part;
        if part.abs() <= opts.abs_tol.max(1e-300) + 1e-18 * total.abs() {
            quiet += 1;
            if quiet >= 2 {
                return Ok(total);
            }
        } else {
            quiet = 0;
        }
        lo += width;
        width *= 2.0;
    }
    Err(Error::Quadrature("tail did not decay".into()))
}
