use num_complex::Complex64;

use super::TorusGrid;
use crate::error::{Error, Result};

/// Fourier coefficients of a real vector field with `dim` components.
#[derive(Clone, Debug)]
pub struct SpectralField {
    grid: TorusGrid,
    comps: Vec<Vec<Complex64>>,
    div_free: bool,
}

/// Fourier coefficients of a real scalar field.
#[derive(Clone, Debug)]
pub struct ScalarField {
    grid: TorusGrid,
    coeffs: Vec<Complex64>,
}

fn check_len(grid: &TorusGrid, len: usize, what: &str) -> Result<()> {
    if len != grid.modes() {
        return Err(Error::shape(format!("{what} has {len} entries, grid has {}", grid.modes())));
    }
    Ok(())
}

fn forward(grid: &TorusGrid, samples: &[f64]) -> Vec<Complex64> {
    let mut buf: Vec<Complex64> = samples.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    grid.fft(&mut buf, false);
    let s = 1.0 / grid.modes() as f64;
    buf.iter_mut().for_each(|z| *z *= s);
    buf
}

fn inverse(grid: &TorusGrid, coeffs: &[Complex64]) -> Vec<f64> {
    let mut buf = coeffs.to_vec();
    grid.fft(&mut buf, true);
    buf.into_iter().map(|z| z.re).collect()
}

impl SpectralField {
    /// Builds a field from coefficient arrays. With `div_free` set the
    /// divergence invariant is verified.
    pub fn from_components(grid: TorusGrid, comps: Vec<Vec<Complex64>>, div_free: bool) -> Result<Self> {
        if comps.len() != grid.dim() {
            return Err(Error::shape(format!(
                "vector field needs {} components, got {}",
                grid.dim(),
                comps.len()
            )));
        }
        for c in &comps {
            check_len(&grid, c.len(), "component")?;
        }
        let f = SpectralField { grid, comps, div_free: false };
        if div_free {
            let scale = f.max_abs().max(f64::MIN_POSITIVE);
            let div = f.max_divergence();
            if div > 1e-12 * scale.max(1.0) {
                return Err(Error::domain(format!("field tagged divergence-free has max |ξ·û| = {div:e}")));
            }
        }
        Ok(SpectralField { div_free, ..f })
    }

    pub fn zeros(grid: &TorusGrid) -> Self {
        SpectralField {
            grid: grid.clone(),
            comps: vec![vec![Complex64::default(); grid.modes()]; grid.dim()],
            div_free: true,
        }
    }

    /// Forward transform of physical samples, one array per component.
    pub fn from_physical(grid: &TorusGrid, samples: &[Vec<f64>]) -> Result<Self> {
        if samples.len() != grid.dim() {
            return Err(Error::shape(format!(
                "vector field needs {} components, got {}",
                grid.dim(),
                samples.len()
            )));
        }
        let mut comps = Vec::with_capacity(samples.len());
        for s in samples {
            check_len(grid, s.len(), "sample array")?;
            comps.push(forward(grid, s));
        }
        Ok(SpectralField { grid: grid.clone(), comps, div_free: false })
    }

    /// Samples `f(x)` at every grid point.
    pub fn from_fn(grid: &TorusGrid, f: impl Fn(&[f64]) -> Vec<f64>) -> Result<Self> {
        let d = grid.dim();
        let mut samples = vec![Vec::with_capacity(grid.modes()); d];
        for p in 0..grid.modes() {
            let v = f(&grid.point(p)[..d]);
            if v.len() != d {
                return Err(Error::shape(format!("field function returned {} components", v.len())));
            }
            for (s, x) in samples.iter_mut().zip(v) {
                s.push(x);
            }
        }
        SpectralField::from_physical(grid, &samples)
    }

    pub fn to_physical(&self) -> Vec<Vec<f64>> {
        self.comps.iter().map(|c| inverse(&self.grid, c)).collect()
    }

    pub fn grid(&self) -> &TorusGrid {
        &self.grid
    }

    pub fn components(&self) -> &[Vec<Complex64>] {
        &self.comps
    }

    pub fn into_components(self) -> Vec<Vec<Complex64>> {
        self.comps
    }

    pub fn is_div_free(&self) -> bool {
        self.div_free
    }

    /// Re-evaluates the divergence tag from the data.
    pub fn retag(mut self) -> Self {
        let scale = self.max_abs().max(1.0);
        self.div_free = self.max_divergence() <= 1e-12 * scale;
        self
    }

    pub(crate) fn from_parts(grid: TorusGrid, comps: Vec<Vec<Complex64>>, div_free: bool) -> Self {
        debug_assert!(comps.len() == grid.dim() && comps.iter().all(|c| c.len() == grid.modes()));
        SpectralField { grid, comps, div_free }
    }

    pub(crate) fn with_tag(mut self, div_free: bool) -> Self {
        self.div_free = div_free;
        self
    }

    pub fn max_abs(&self) -> f64 {
        self.comps.iter().flatten().fold(0.0, |m, z| m.max(z.norm()))
    }

    /// max over modes of |ξ·û(ξ)|.
    pub fn max_divergence(&self) -> f64 {
        (0..self.grid.modes())
            .map(|i| {
                let k = self.grid.deriv_wavevector(i);
                k.iter().zip(&self.comps).map(|(&kj, c)| c[i] * kj).sum::<Complex64>().norm()
            })
            .fold(0.0, f64::max)
    }

    /// L² norm over the torus, (2π)^{N/2}(Σ|û|²)^{1/2}.
    pub fn l2_norm(&self) -> f64 {
        let s: f64 = self.comps.iter().flatten().map(|z| z.norm_sqr()).sum();
        (self.grid.volume() * s).sqrt()
    }

    /// Kinetic energy ½‖u‖².
    pub fn energy(&self) -> f64 {
        0.5 * self.l2_norm().powi(2)
    }

    /// Largest |û(ξ) − conj(û(−ξ))| over all modes and components.
    pub fn conjugate_symmetry_error(&self) -> f64 {
        let g = &self.grid;
        self.comps
            .iter()
            .flat_map(|c| (0..g.modes()).map(move |i| (c[i] - c[g.conjugate_index(i)].conj()).norm()))
            .fold(0.0, f64::max)
    }

    /// Applies a real per-mode multiplier to every component.
    pub fn map_modes(&self, symbol: impl Fn(usize) -> f64) -> SpectralField {
        let s: Vec<f64> = (0..self.grid.modes()).map(symbol).collect();
        let comps = self
            .comps
            .iter()
            .map(|c| c.iter().zip(&s).map(|(z, &m)| z * m).collect())
            .collect();
        SpectralField { grid: self.grid.clone(), comps, div_free: self.div_free }
    }

    /// Zeroes modes outside the 2/3-rule mask.
    pub fn dealiased(&self) -> SpectralField {
        let g = self.grid.clone();
        self.map_modes(|i| if g.is_kept(i) { 1.0 } else { 0.0 })
    }

    pub fn is_dealiased(&self) -> bool {
        (0..self.grid.modes()).all(|i| self.grid.is_kept(i) || self.comps.iter().all(|c| c[i] == Complex64::default()))
    }

    pub fn scale(&self, a: f64) -> SpectralField {
        self.map_modes(|_| a)
    }

    /// `self + a·other`.
    pub fn axpy(&self, a: f64, other: &SpectralField) -> Result<SpectralField> {
        self.check_grid(other)?;
        let comps = self
            .comps
            .iter()
            .zip(&other.comps)
            .map(|(x, y)| x.iter().zip(y).map(|(u, v)| u + v * a).collect())
            .collect();
        Ok(SpectralField {
            grid: self.grid.clone(),
            comps,
            div_free: self.div_free && other.div_free,
        })
    }

    pub fn add(&self, other: &SpectralField) -> Result<SpectralField> {
        self.axpy(1.0, other)
    }

    pub fn sub(&self, other: &SpectralField) -> Result<SpectralField> {
        self.axpy(-1.0, other)
    }

    pub fn check_grid(&self, other: &SpectralField) -> Result<()> {
        if !self.grid.same_as(&other.grid) {
            return Err(Error::shape(format!("grid mismatch: {:?} vs {:?}", self.grid, other.grid)));
        }
        Ok(())
    }
}

impl ScalarField {
    pub fn new(grid: TorusGrid, coeffs: Vec<Complex64>) -> Result<Self> {
        check_len(&grid, coeffs.len(), "scalar field")?;
        Ok(ScalarField { grid, coeffs })
    }

    pub fn from_physical(grid: &TorusGrid, samples: &[f64]) -> Result<Self> {
        check_len(grid, samples.len(), "sample array")?;
        Ok(ScalarField { grid: grid.clone(), coeffs: forward(grid, samples) })
    }

    pub fn from_fn(grid: &TorusGrid, f: impl Fn(&[f64]) -> f64) -> Result<Self> {
        let d = grid.dim();
        let samples: Vec<f64> = (0..grid.modes()).map(|p| f(&grid.point(p)[..d])).collect();
        ScalarField::from_physical(grid, &samples)
    }

    pub fn to_physical(&self) -> Vec<f64> {
        inverse(&self.grid, &self.coeffs)
    }

    pub fn grid(&self) -> &TorusGrid {
        &self.grid
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// ∇φ as a vector field.
    pub fn gradient(&self) -> SpectralField {
        let g = &self.grid;
        let comps = (0..g.dim())
            .map(|j| {
                (0..g.modes())
                    .map(|i| Complex64::new(0.0, g.deriv_wavevector(i)[j]) * self.coeffs[i])
                    .collect()
            })
            .collect();
        SpectralField { grid: g.clone(), comps, div_free: false }
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, z| m.max(z.norm()))
    }
}
