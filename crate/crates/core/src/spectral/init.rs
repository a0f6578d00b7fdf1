use num_complex::Complex64;
use rand::Rng;

use super::{leray_project, SpectralField, TorusGrid};
use crate::error::{Error, Result};

/// Taylor–Green vortex of the given amplitude: (sin x₁ cos x₂, −cos x₁ sin x₂)
/// in 2D, with an extra cos x₃ factor and zero third component in 3D.
pub fn taylor_green(grid: &TorusGrid, amplitude: f64) -> Result<SpectralField> {
    taylor_green_perturbed(grid, amplitude, 0.0)
}

/// Taylor–Green plus the shear ε(cos 2x₂, 0, …). Pure Taylor–Green makes the
/// nonlinear term vanish; the shear switches it on.
pub fn taylor_green_perturbed(grid: &TorusGrid, amplitude: f64, perturbation: f64) -> Result<SpectralField> {
    let d = grid.dim();
    if d < 2 {
        return Err(Error::domain("Taylor–Green data needs a 2D or 3D torus"));
    }
    let f = SpectralField::from_fn(grid, |x| {
        let z = if d == 3 { x[2].cos() } else { 1.0 };
        let mut v = vec![
            amplitude * x[0].sin() * x[1].cos() * z + perturbation * (2.0 * x[1]).cos(),
            -amplitude * x[0].cos() * x[1].sin() * z,
        ];
        if d == 3 {
            v.push(0.0);
        }
        v
    })?;
    Ok(leray_project(&f.dealiased()))
}

/// Random real field supported on |ξ_j| ≤ band, mean zero, scaled to the
/// given L² norm. Divergence-free when `project` is set.
pub fn random_bandlimited<R: Rng + ?Sized>(
    grid: &TorusGrid,
    band: usize,
    l2_norm: f64,
    project: bool,
    rng: &mut R,
) -> Result<SpectralField> {
    if band == 0 || band as i64 > grid.dealias_kmax() {
        return Err(Error::domain(format!(
            "band must lie in 1..={}, got {band}",
            grid.dealias_kmax()
        )));
    }
    let b = band as i64;
    let n = grid.modes();
    let mut comps = Vec::with_capacity(grid.dim());
    for _ in 0..grid.dim() {
        let mut c = vec![Complex64::default(); n];
        for (i, z) in c.iter_mut().enumerate() {
            if grid.wavenumber(i).iter().all(|k| k.abs() <= b) {
                *z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
        }
        let sym: Vec<Complex64> = (0..n).map(|i| 0.5 * (c[i] + c[grid.conjugate_index(i)].conj())).collect();
        comps.push(sym);
    }
    for c in comps.iter_mut() {
        c[0] = Complex64::default();
    }
    let mut f = SpectralField::from_components(grid.clone(), comps, false)?;
    if project {
        f = leray_project(&f);
    }
    let norm = f.l2_norm();
    if norm == 0.0 {
        return Err(Error::Degenerate("random field came out identically zero".into()));
    }
    Ok(f.scale(l2_norm / norm))
}
