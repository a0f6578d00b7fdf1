use num_complex::Complex64;

use super::{ScalarField, SpectralField, TorusGrid};
use crate::error::Result;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Forward transform: û(ξ) = M^{−N} Σ_x u(x) e^{−iξ·x}.
pub fn transform_forward(grid: &TorusGrid, samples: &[Vec<f64>]) -> Result<SpectralField> {
    SpectralField::from_physical(grid, samples)
}

/// Inverse of [`transform_forward`]; returns the real part of the synthesis.
pub fn transform_inverse(u: &SpectralField) -> Vec<Vec<f64>> {
    u.to_physical()
}

fn kd2(k: &[f64]) -> f64 {
    k.iter().map(|x| x * x).sum()
}

/// Helmholtz–Leray projection with symbol δ_jk − ξ_jξ_k/|ξ|² (identity at ξ = 0).
pub fn leray_project(u: &SpectralField) -> SpectralField {
    let g = u.grid().clone();
    let d = g.dim();
    let src = u.components();
    let mut out = src.to_vec();
    for i in 0..g.modes() {
        let k = g.deriv_wavevector(i);
        let k2 = kd2(k);
        if k2 == 0.0 {
            continue;
        }
        let kdotu: Complex64 = (0..d).map(|j| src[j][i] * k[j]).sum();
        let r = kdotu / k2;
        for j in 0..d {
            out[j][i] = src[j][i] - r * k[j];
        }
    }
    SpectralField::from_components(g, out, false)
        .expect("projection preserves shape")
        .with_tag(true)
}

/// i ξ·û.
pub fn divergence(u: &SpectralField) -> ScalarField {
    let g = u.grid();
    let c = u.components();
    let coeffs = (0..g.modes())
        .map(|i| {
            let k = g.deriv_wavevector(i);
            I * k.iter().zip(c).map(|(&kj, cj)| cj[i] * kj).sum::<Complex64>()
        })
        .collect();
    ScalarField::new(g.clone(), coeffs).expect("divergence preserves shape")
}

/// Dealiased coefficients of u^j u^k for j ≤ k, indexed by `pair(j, k)`.
fn products(u: &SpectralField) -> Vec<Vec<Complex64>> {
    let g = u.grid();
    let d = g.dim();
    let phys = u.to_physical();
    let mut out = Vec::with_capacity(d * (d + 1) / 2);
    let inv_n = 1.0 / g.modes() as f64;
    for j in 0..d {
        for k in j..d {
            let mut buf: Vec<Complex64> = phys[j]
                .iter()
                .zip(&phys[k])
                .map(|(a, b)| Complex64::new(a * b, 0.0))
                .collect();
            g.fft(&mut buf, false);
            for (i, z) in buf.iter_mut().enumerate() {
                *z = if g.is_kept(i) { *z * inv_n } else { Complex64::default() };
            }
            out.push(buf);
        }
    }
    out
}

fn pair(d: usize, j: usize, k: usize) -> usize {
    let (j, k) = if j <= k { (j, k) } else { (k, j) };
    j * d - j * (j + 1) / 2 + k
}

/// ∇·(u⊗u), dealiased, not projected.
pub fn advection_divergence(u: &SpectralField) -> SpectralField {
    let g = u.grid().clone();
    let d = g.dim();
    let t = products(u);
    let comps = (0..d)
        .map(|j| {
            (0..g.modes())
                .map(|i| {
                    let kv = g.deriv_wavevector(i);
                    I * (0..d).map(|k| t[pair(d, j, k)][i] * kv[k]).sum::<Complex64>()
                })
                .collect()
        })
        .collect();
    SpectralField::from_components(g, comps, false).expect("shape preserved")
}

/// F(u) = −ℙ∇·(u⊗u), evaluated pseudospectrally with the 2/3 rule.
pub fn nonlinear_term(u: &SpectralField) -> SpectralField {
    leray_project(&advection_divergence(u).scale(-1.0))
}

/// p = (−Δ)^{−1} Σ ∂_j∂_k(u^j u^k) with p̂(0) = 0.
pub fn pressure_recover(u: &SpectralField) -> ScalarField {
    let g = u.grid().clone();
    let d = g.dim();
    let t = products(u);
    let coeffs = (0..g.modes())
        .map(|i| {
            let kv = g.deriv_wavevector(i);
            let k2 = kd2(kv);
            if k2 == 0.0 {
                return Complex64::default();
            }
            let mut s = Complex64::default();
            for j in 0..d {
                for k in 0..d {
                    s += t[pair(d, j, k)][i] * (kv[j] * kv[k]);
                }
            }
            -s / k2
        })
        .collect();
    ScalarField::new(g, coeffs).expect("shape preserved")
}

/// Physical-space inner product ⟨u, v⟩ over the torus.
pub fn inner_product(u: &SpectralField, v: &SpectralField) -> Result<f64> {
    u.check_grid(v)?;
    let s: f64 = u
        .components()
        .iter()
        .zip(v.components())
        .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x * y.conj()).re))
        .sum();
    Ok(u.grid().volume() * s)
}
