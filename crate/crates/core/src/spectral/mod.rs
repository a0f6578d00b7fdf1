//! Field algebra on the periodic torus.

mod field;
mod grid;
mod init;
mod io;
mod norms;
mod ops;

pub use field::{ScalarField, SpectralField};
pub use grid::TorusGrid;
pub use init::{random_bandlimited, taylor_green, taylor_green_perturbed};
pub use io::{read_field, write_field, FIELD_MAGIC, FIELD_VERSION};
pub use norms::{gradient_magnitude, norm_pqt, norm_pqt_samples, physical_magnitude, spatial_lp, NormSpec, Trajectory};
pub use ops::{
    advection_divergence, divergence, inner_product, leray_project, nonlinear_term,
    pressure_recover, transform_forward, transform_inverse,
};
