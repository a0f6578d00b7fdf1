//! Scalar special functions: Gamma, Mittag-Leffler, Mainardi.

pub mod dd;
mod gamma;
mod mainardi;
mod mittag_leffler;
mod sum;

pub use gamma::{gamma_fn, ln_gamma_abs, rgamma, rgamma_ln_sign, sin_pi};
pub use mainardi::{mainardi, mainardi_moment, Mainardi};
pub use mittag_leffler::{mittag_leffler, EvalPolicy, MLParams, MittagLeffler};
pub use sum::CompensatedSum;
