//! Pseudospectral solver and verification toolkit for the time-fractional
//! incompressible Navier–Stokes equations written in mild (integral) form
//! on a periodic torus.

pub mod analysis;
pub mod cli;
pub mod error;
pub mod fracops;
pub mod quad;
pub mod solver;
pub mod specfun;
pub mod spectral;

pub use error::{Error, Result};
