//! Mainardi function M_α(θ) = Σ_n (-θ)^n / (n! Γ(1 - α(1+n))) on θ ≥ 0.
//!
//! For θ ≤ 1 the series is summed directly (its terms stay O(1) there).
//! Beyond that the series cancels catastrophically, so the evaluator
//! switches to the positive integral representation obtained from the
//! one-sided stable density,
//!
//!   M_α(θ) = θ^{α/(1-α)} / ((1-α)π) ∫_0^π a(φ) exp(-a(φ) θ^{1/(1-α)}) dφ,
//!   a(φ)  = (sin αφ / sin φ)^{1/(1-α)} · sin((1-α)φ) / sin αφ,
//!
//! which is non-negative by construction.

use std::f64::consts::PI;

use super::gamma::{gamma_fn, rgamma_ln_sign};
use super::mittag_leffler::EvalPolicy;
use super::sum::CompensatedSum;
use crate::error::{Error, Result};
use crate::quad::{integrate, integrate_to_infinity, QuadOptions};

const SERIES_LIMIT: f64 = 1.0;

#[derive(Clone, Debug)]
pub struct Mainardi {
    alpha: f64,
    /// 1/(n! Γ(1-α(1+n))), multiplying (-θ)^n
    coeffs: Vec<f64>,
    complete: bool,
}

impl Mainardi {
    pub fn new(alpha: f64, policy: EvalPolicy) -> Result<Self> {
        policy.validate()?;
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::domain(format!("Mainardi alpha must lie in (0, 1), got {alpha}")));
        }
        let mut coeffs = Vec::new();
        let mut complete = false;
        let mut ln_fact = 0.0;
        let mut small_run = 0;
        for n in 0..policy.max_terms {
            if n > 0 {
                ln_fact += (n as f64).ln();
            }
            let (ln_r, sign) = rgamma_ln_sign(1.0 - alpha * (n as f64 + 1.0));
            let c = if sign == 0.0 { 0.0 } else { sign * (ln_r - ln_fact).exp() };
            coeffs.push(c);
            // the sine factor makes isolated coefficients tiny, so require a run
            if c.abs() < 1e-20 * policy.target_abs_tol.min(1.0) {
                small_run += 1;
                if small_run >= 4 {
                    complete = true;
                    break;
                }
            } else {
                small_run = 0;
            }
        }
        Ok(Mainardi { alpha, coeffs, complete })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn eval(&self, theta: f64) -> Result<f64> {
        if !(theta >= 0.0) || !theta.is_finite() {
            return Err(Error::domain(format!("Mainardi argument must be finite and >= 0, got {theta}")));
        }
        if theta <= SERIES_LIMIT {
            self.eval_series(theta)
        } else {
            self.eval_integral(theta)
        }
    }

    /// Direct compensated summation of the defining series.
    pub fn eval_series(&self, theta: f64) -> Result<f64> {
        if !self.complete && theta > 0.0 {
            return Err(Error::NonConvergence {
                what: "Mainardi series",
                iterations: self.coeffs.len(),
            });
        }
        let mut sum = CompensatedSum::new();
        let mut pow = 1.0;
        for &c in &self.coeffs {
            sum.add(c * pow);
            pow *= -theta;
            if pow == 0.0 {
                break;
            }
        }
        Ok(sum.value())
    }

    /// Integral representation, valid for every θ > 0.
    pub fn eval_integral(&self, theta: f64) -> Result<f64> {
        if theta == 0.0 {
            return Ok(self.coeffs[0]);
        }
        let a = self.alpha;
        let inv = 1.0 / (1.0 - a);
        let scale = theta.powf(inv);
        let ln_pref = a * inv * theta.ln() - ((1.0 - a) * PI).ln();
        let integrand = |phi: f64| {
            let sin_phi = if phi > 0.5 * PI { (PI - phi).sin() } else { phi.sin() };
            let sin_a = (a * phi).sin();
            let sin_b = ((1.0 - a) * phi).sin();
            let ln_a = inv * (sin_a.ln() - sin_phi.ln()) + sin_b.ln() - sin_a.ln();
            let av = ln_a.exp();
            let e = ln_pref + ln_a - av * scale;
            if e < -745.0 {
                0.0
            } else {
                e.exp()
            }
        };
        integrate(
            integrand,
            0.0,
            PI,
            QuadOptions {
                abs_tol: 1e-17,
                rel_tol: 1e-13,
                max_panels: 50_000,
            },
        )
    }
}

/// M_α(θ) with a one-off evaluator.
pub fn mainardi(alpha: f64, theta: f64, policy: EvalPolicy) -> Result<f64> {
    Mainardi::new(alpha, policy)?.eval(theta)
}

/// ∫_0^∞ t^r M_α(t) dt by adaptive quadrature, paired with the closed form
/// Γ(r+1)/Γ(αr+1).
pub fn mainardi_moment(alpha: f64, r: f64) -> Result<(f64, f64)> {
    if !(r > -1.0) || !r.is_finite() {
        return Err(Error::domain(format!("moment order must be finite and > -1, got {r}")));
    }
    let m = Mainardi::new(alpha, EvalPolicy::default())?;
    let opts = QuadOptions {
        abs_tol: 1e-16,
        rel_tol: 1e-12,
        max_panels: 20_000,
    };
    // ∫_0^1 t^r M(t) dt with t = u^{1/(1+r)} to absorb the power at 0
    let p = 1.0 / (1.0 + r);
    let head = integrate(
        |u: f64| {
            let t = u.powf(p);
            m.eval(t).unwrap_or(f64::NAN)
        },
        0.0,
        1.0,
        opts,
    )? * p;
    let tail = integrate_to_infinity(|t: f64| t.powf(r) * m.eval(t).unwrap_or(f64::NAN), 1.0, opts)?;
    let numeric = head + tail;
    if !numeric.is_finite() {
        return Err(Error::Quadrature("Mainardi moment integrand was not finite".into()));
    }
    let closed = gamma_fn(r + 1.0)? / gamma_fn(alpha * r + 1.0)?;
    Ok((numeric, closed))
}
