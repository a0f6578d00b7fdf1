//! The 1D fundamental solution of the fractional heat equation on the
//! 2π-periodic line, computed two independent ways.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quad::{integrate_to_infinity, QuadOptions};
use crate::specfun::{gamma_fn, EvalPolicy, MLParams, Mainardi, MittagLeffler};

fn check(alpha: f64, t: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!("kernel needs alpha in (0, 1), got {alpha}")));
    }
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::domain(format!("kernel needs t > 0, got {t}")));
    }
    Ok(())
}

/// Subordination form on ℝ, periodized over `images` copies either side:
/// G(x) = Σ_m ∫₀^∞ M_α(θ)(4πθt^α)^{−1/2} exp(−(x+2πm)²/(4θt^α)) dθ.
pub fn kernel_via_mainardi(alpha: f64, t: f64, x: f64, images: usize) -> Result<f64> {
    check(alpha, t)?;
    let m = Mainardi::new(alpha, EvalPolicy::default())?;
    let ta = t.powf(alpha);
    let opts = QuadOptions { abs_tol: 1e-14, rel_tol: 1e-12, ..QuadOptions::default() };
    let mut total = 0.0;
    let images = images as i64;
    for k in -images..=images {
        let y = x + 2.0 * PI * k as f64;
        // θ = s² removes the θ^{−1/2} endpoint singularity
        let f = |s: f64| -> f64 {
            if s == 0.0 {
                return 0.0;
            }
            let theta = s * s;
            let mv = m.eval(theta).unwrap_or(f64::NAN);
            2.0 * mv * (-y * y / (4.0 * theta * ta)).exp() / (4.0 * PI * ta).sqrt()
        };
        let v = integrate_to_infinity(f, 0.0, opts)?;
        if !v.is_finite() {
            return Err(Error::Quadrature("kernel integrand not finite".into()));
        }
        total += v;
    }
    Ok(total)
}

/// Fourier form G(x) = (1/2π) Σ_k E_α(−t^α k²) e^{ikx} with `modes` terms
/// per sign. The algebraic tail E_α(−z) ≈ z^{−1}/Γ(1−α) is summed in closed
/// form through Σ_{k≥1} cos(kx)/k² = π²/6 − πx/2 + x²/4 on [0, 2π].
pub fn kernel_via_fourier(alpha: f64, t: f64, x: f64, modes: usize) -> Result<f64> {
    check(alpha, t)?;
    let e = MittagLeffler::new(MLParams::new(alpha, 1.0)?, EvalPolicy::default())?;
    let ta = t.powf(alpha);
    let c1 = 1.0 / (ta * gamma_fn(1.0 - alpha)?);
    let xr = x.rem_euclid(2.0 * PI);
    let s2 = PI * PI / 6.0 - PI * xr / 2.0 + xr * xr / 4.0;
    let mut sum = 0.0;
    for k in 1..=modes {
        let kf = k as f64;
        sum += (e.eval(-ta * kf * kf)? - c1 / (kf * kf)) * (kf * xr).cos();
    }
    Ok((1.0 + 2.0 * (sum + c1 * s2)) / (2.0 * PI))
}
