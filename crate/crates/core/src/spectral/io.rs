//! Binary field snapshots.
//!
//! Layout, all little-endian: 8-byte magic `TFNSFLD\0`, `u32` version,
//! `u32` dimension N, `u32` points per axis M, `f64` time, then for each of
//! the N components the M^N coefficients in FFT order as `(re, im)` pairs of
//! `f64`.

use std::io::{Read, Write};

use num_complex::Complex64;

use super::{SpectralField, TorusGrid};
use crate::error::{Error, Result};

pub const FIELD_MAGIC: [u8; 8] = *b"TFNSFLD\0";
pub const FIELD_VERSION: u32 = 1;

pub fn write_field<W: Write>(mut w: W, u: &SpectralField, time: f64) -> Result<()> {
    let g = u.grid();
    w.write_all(&FIELD_MAGIC)?;
    w.write_all(&FIELD_VERSION.to_le_bytes())?;
    w.write_all(&(g.dim() as u32).to_le_bytes())?;
    w.write_all(&(g.points_per_axis() as u32).to_le_bytes())?;
    w.write_all(&time.to_le_bytes())?;
    for c in u.components() {
        for z in c {
            w.write_all(&z.re.to_le_bytes())?;
            w.write_all(&z.im.to_le_bytes())?;
        }
    }
    Ok(())
}

fn read_u32<R: Read>(r: &mut R) -> Result<u32> {
    let mut b = [0u8; 4];
    r.read_exact(&mut b)?;
    Ok(u32::from_le_bytes(b))
}

fn read_f64<R: Read>(r: &mut R) -> Result<f64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b)?;
    Ok(f64::from_le_bytes(b))
}

/// Reads a snapshot; the divergence-free tag is recomputed from the data.
pub fn read_field<R: Read>(mut r: R) -> Result<(SpectralField, f64)> {
    let mut magic = [0u8; 8];
    r.read_exact(&mut magic)?;
    if magic != FIELD_MAGIC {
        return Err(Error::Format("not a field snapshot (bad magic)".into()));
    }
    let version = read_u32(&mut r)?;
    if version != FIELD_VERSION {
        return Err(Error::Format(format!("unsupported snapshot version {version}")));
    }
    let dim = read_u32(&mut r)? as usize;
    let m = read_u32(&mut r)? as usize;
    let grid = TorusGrid::new(dim, m).map_err(|e| Error::Format(format!("bad snapshot header: {e}")))?;
    let time = read_f64(&mut r)?;
    let mut comps = Vec::with_capacity(dim);
    for _ in 0..dim {
        let mut c = Vec::with_capacity(grid.modes());
        for _ in 0..grid.modes() {
            let re = read_f64(&mut r)?;
            let im = read_f64(&mut r)?;
            c.push(Complex64::new(re, im));
        }
        comps.push(c);
    }
    Ok((SpectralField::from_components(grid, comps, false)?.retag(), time))
}
