//! Gamma and reciprocal Gamma on the real line.
//!
//! Everything is built on a double-double `ln Γ` (upward recurrence to
//! x >= 25 followed by the Stirling series), so the `f64` wrappers are
//! correctly rounded in practice.

use super::dd::Dd;
use crate::error::{Error, Result};

const HALF_LN_2PI: Dd = Dd::new(0.9189385332046728, -3.8782941580672414e-17);
const LN_PI: Dd = Dd::new(1.1447298858494002, 1.0265951162707826e-17);

/// Bernoulli numbers B_2 .. B_32 as exact (numerator, denominator) pairs.
const BERNOULLI: [(f64, f64); 16] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
    (8615841276005.0, 14322.0),
    (-7709321041217.0, 510.0),
];

const STIRLING_MIN: f64 = 25.0;

/// `ln Γ(x)` in double-double for `x > 0`.
pub fn ln_gamma_dd(x: Dd) -> Dd {
    debug_assert!(x.hi > 0.0);
    if x.hi < STIRLING_MIN {
        let mut prod = Dd::ONE;
        let mut y = x;
        while y.hi < STIRLING_MIN {
            prod = prod * y;
            y = y.add_f64(1.0);
        }
        return stirling(y) - prod.ln();
    }
    stirling(x)
}

fn stirling(x: Dd) -> Dd {
    let inv = Dd::ONE / x;
    let inv2 = inv.sqr();
    // Horner in 1/x^2 over B_{2j} / (2j (2j-1)).
    let mut acc = Dd::ZERO;
    for (j, &(num, den)) in BERNOULLI.iter().enumerate().rev() {
        let two_j = 2.0 * (j as f64 + 1.0);
        let c = Dd::from_f64(num) / Dd::from_f64(den * two_j * (two_j - 1.0));
        acc = acc * inv2 + c;
    }
    let series = acc * inv;
    (x.add_f64(-0.5)) * x.ln() - x + HALF_LN_2PI + series
}

/// `ln |Γ(x)|` for any real `x` that is not a non-positive integer.
pub fn ln_gamma_abs(x: f64) -> f64 {
    if x > 0.0 {
        ln_gamma_dd(Dd::from_f64(x)).to_f64()
    } else {
        // Γ(x) Γ(1-x) = π / sin(πx)
        let s = sin_pi(x).abs();
        (LN_PI - ln_gamma_dd(Dd::from_f64(1.0 - x))).to_f64() - s.ln()
    }
}

/// Γ(x) for `x > 0`. Overflows to `+inf` beyond x ≈ 171.6.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(format!("gamma requires finite x > 0, got {x}")));
    }
    if x > 171.7 {
        return Ok(f64::INFINITY);
    }
    Ok(ln_gamma_dd(Dd::from_f64(x)).exp().to_f64())
}

/// 1/Γ(x) for every finite real `x`; exactly zero at the poles of Γ.
pub fn rgamma(x: f64) -> f64 {
    rgamma_dd(Dd::from_f64(x)).to_f64()
}

/// 1/Γ(x) in double-double, with `x` itself given in double-double so that
/// arguments like `αk + β` need not be rounded first.
pub fn rgamma_dd(x: Dd) -> Dd {
    if x.hi > 0.0 {
        return (-ln_gamma_dd(x)).exp();
    }
    let xf = x.to_f64();
    if xf == xf.floor() && x.lo == 0.0 {
        return Dd::ZERO;
    }
    // 1/Γ(x) = sin(πx) Γ(1-x) / π
    let s = sin_pi(xf);
    if s == 0.0 {
        return Dd::ZERO;
    }
    let lg = ln_gamma_dd(Dd::ONE - x) - LN_PI;
    let mag = (lg + Dd::from_f64(s.abs()).ln()).exp();
    if s < 0.0 {
        -mag
    } else {
        mag
    }
}

/// `(ln |1/Γ(x)|, sign(1/Γ(x)))`; the sign is 0 at the poles of Γ.
///
/// Stays finite where 1/Γ itself would overflow (large negative x).
pub fn rgamma_ln_sign(x: f64) -> (f64, f64) {
    if x > 0.0 {
        return (-ln_gamma_dd(Dd::from_f64(x)).to_f64(), 1.0);
    }
    let s = sin_pi(x);
    if s == 0.0 {
        return (f64::NEG_INFINITY, 0.0);
    }
    (-ln_gamma_abs(x), s.signum())
}

/// sin(πx) with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    if x == x.floor() {
        return 0.0;
    }
    // reduce to r in [-1, 1], sin(πx) = sin(πr)
    let r = x - 2.0 * (x / 2.0).round();
    let (r, sign) = if r < 0.0 { (-r, -1.0) } else { (r, 1.0) };
    let r = if r > 0.5 { 1.0 - r } else { r };
    sign * (std::f64::consts::PI * r).sin()
}
