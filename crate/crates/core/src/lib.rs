//! Discrete fractional calculus on sequences over ℤ, Cesàro sums and means of
//! dense complex matrices, and the fractional functional calculus built from
//! them.
//!
//! Module map:
//!
//! * [`kernels`]: the Cesàro kernel `k^α(n)` for every real order.
//! * [`fracdiff`]: finitely supported sequences, convolution, Weyl sums and
//!   differences.
//! * [`algebras`]: the weighted norms `q_α`, `q̄_α` and the fractional Wiener
//!   algebra norms.
//! * [`operators`]: matrices, operator norm, spectra, Cesàro sums and means.
//! * [`calculus`]: the functional calculus `θ_α`, resolvent series and the decay
//!   experiment drivers.
//! * [`cli`]: the batch runner behind the `cesaro-lab` binary.

pub mod algebras;
pub mod calculus;
pub mod cli;
pub mod error;
pub mod fracdiff;
pub mod kernels;
pub mod operators;

pub use num_complex::Complex64;

pub use crate::algebras::PeriodicFn;
pub use crate::calculus::DecayCurve;
pub use crate::error::{Error, Result};
pub use crate::fracdiff::ZSeq;
pub use crate::kernels::CesaroKernelTable;
pub use crate::operators::{CMatrix, CesaroTransform};
