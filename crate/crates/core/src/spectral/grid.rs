use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

/// 2π-periodic torus sampled with `M` points per axis.
///
/// Modes are stored in FFT order with the last axis contiguous: the flat
/// index of `(i_0, …, i_{N−1})` is `((i_0·M + i_1)·M + …)`, and index `i`
/// on an axis carries wavenumber `i` for `i < M/2`, `i − M` otherwise.
#[derive(Clone)]
pub struct TorusGrid {
    inner: Arc<Inner>,
}

struct Inner {
    dim: usize,
    m: usize,
    modes: usize,
    kmax: i64,
    // integer wavenumbers per mode
    ints: Vec<[i64; 3]>,
    // derivative wavevector, Nyquist component set to 0
    kd: Vec<[f64; 3]>,
    k2: Vec<f64>,
    mask: Vec<bool>,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

impl TorusGrid {
    /// `dim` ∈ {1, 2, 3}; `m` even and at least 4.
    pub fn new(dim: usize, m: usize) -> Result<Self> {
        if !(1..=3).contains(&dim) {
            return Err(Error::domain(format!("torus dimension must be 1, 2 or 3, got {dim}")));
        }
        if m < 4 || m % 2 != 0 {
            return Err(Error::domain(format!("points per axis must be even and ≥ 4, got {m}")));
        }
        let modes = m.pow(dim as u32);
        let kmax = ((m - 1) / 3) as i64;
        let half = (m / 2) as i64;
        let wn = |i: usize| -> i64 {
            let i = i as i64;
            if i < half {
                i
            } else {
                i - m as i64
            }
        };
        let mut ints = Vec::with_capacity(modes);
        for flat in 0..modes {
            let mut k = [0i64; 3];
            let mut rem = flat;
            for axis in (0..dim).rev() {
                k[axis] = wn(rem % m);
                rem /= m;
            }
            ints.push(k);
        }
        let kd = ints
            .iter()
            .map(|k| {
                let mut v = [0.0; 3];
                for a in 0..dim {
                    if k[a] != -half {
                        v[a] = k[a] as f64;
                    }
                }
                v
            })
            .collect();
        let k2 = ints
            .iter()
            .map(|k| k[..dim].iter().map(|&x| (x * x) as f64).sum())
            .collect();
        let mask = ints.iter().map(|k| k[..dim].iter().all(|x| x.abs() <= kmax)).collect();
        let mut planner = FftPlanner::new();
        let fwd = planner.plan_fft_forward(m);
        let inv = planner.plan_fft_inverse(m);
        Ok(TorusGrid {
            inner: Arc::new(Inner { dim, m, modes, kmax, ints, kd, k2, mask, fwd, inv }),
        })
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn points_per_axis(&self) -> usize {
        self.inner.m
    }

    /// Number of modes (equal to the number of physical points).
    pub fn modes(&self) -> usize {
        self.inner.modes
    }

    /// (2π)^N.
    pub fn volume(&self) -> f64 {
        (2.0 * std::f64::consts::PI).powi(self.inner.dim as i32)
    }

    /// Physical cell volume (2π/M)^N.
    pub fn cell_volume(&self) -> f64 {
        self.volume() / self.inner.modes as f64
    }

    /// Largest retained wavenumber per axis under the 2/3 rule.
    pub fn dealias_kmax(&self) -> i64 {
        self.inner.kmax
    }

    pub fn wavenumber(&self, mode: usize) -> &[i64] {
        &self.inner.ints[mode][..self.inner.dim]
    }

    /// Wavevector used for derivatives; Nyquist components are zero.
    pub fn deriv_wavevector(&self, mode: usize) -> &[f64] {
        &self.inner.kd[mode][..self.inner.dim]
    }

    /// |ξ|² with the Nyquist wavenumber taken as M/2.
    pub fn wavenumber_sq(&self, mode: usize) -> f64 {
        self.inner.k2[mode]
    }

    pub fn is_kept(&self, mode: usize) -> bool {
        self.inner.mask[mode]
    }

    /// Flat index of the mode −ξ.
    pub fn conjugate_index(&self, mode: usize) -> usize {
        let m = self.inner.m;
        let mut idx = 0;
        for &k in self.wavenumber(mode) {
            idx = idx * m + ((-k).rem_euclid(m as i64) as usize);
        }
        idx
    }

    /// Flat index of an integer wavevector, which is reduced modulo M.
    pub fn index_of(&self, k: &[i64]) -> usize {
        let m = self.inner.m as i64;
        k.iter().fold(0usize, |acc, &x| acc * m as usize + x.rem_euclid(m) as usize)
    }

    /// Physical coordinates of grid point `flat`.
    pub fn point(&self, flat: usize) -> [f64; 3] {
        let m = self.inner.m;
        let h = 2.0 * std::f64::consts::PI / m as f64;
        let mut x = [0.0; 3];
        let mut rem = flat;
        for axis in (0..self.inner.dim).rev() {
            x[axis] = (rem % m) as f64 * h;
            rem /= m;
        }
        x
    }

    pub fn same_as(&self, other: &TorusGrid) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self == other
    }

    /// Unnormalized in-place N-dimensional DFT.
    pub(crate) fn fft(&self, data: &mut [Complex64], inverse: bool) {
        let inner = &*self.inner;
        let plan = if inverse { &inner.inv } else { &inner.fwd };
        let m = inner.m;
        let mut scratch = vec![Complex64::default(); plan.get_inplace_scratch_len()];
        plan.process_with_scratch(data, &mut scratch);
        if inner.dim == 1 {
            return;
        }
        let mut lines = vec![Complex64::default(); 0];
        for axis in 0..inner.dim - 1 {
            let stride = m.pow((inner.dim - 1 - axis) as u32);
            let block = m * stride;
            lines.resize(block, Complex64::default());
            for chunk in data.chunks_mut(block) {
                for j in 0..m {
                    for r in 0..stride {
                        lines[r * m + j] = chunk[j * stride + r];
                    }
                }
                plan.process_with_scratch(&mut lines, &mut scratch);
                for j in 0..m {
                    for r in 0..stride {
                        chunk[j * stride + r] = lines[r * m + j];
                    }
                }
            }
        }
    }
}

impl PartialEq for TorusGrid {
    fn eq(&self, other: &Self) -> bool {
        self.inner.dim == other.inner.dim && self.inner.m == other.inner.m
    }
}

impl fmt::Debug for TorusGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TorusGrid")
            .field("dim", &self.inner.dim)
            .field("points_per_axis", &self.inner.m)
            .finish()
    }
}
