//! Spectral analysis of Boolean functions under product-distributed inputs.
//!
//! A function `f: {-1,+1}^n -> {-1,+1}` is a [`TruthTable`]; inputs follow a
//! [`ProductDistribution`] with per-variable means `mu_i`. The crate computes
//! biased Fourier spectra ([`fourier`]), canalizing structure ([`canalize`]),
//! mutual information between one input and the output by two independent
//! routes ([`infomeasure`]), and checks exhaustively that canalizing
//! functions maximize that mutual information ([`verify`]).
//!
//! The crate is `no_std` and needs only `alloc`.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod canalize;
mod distribution;
mod error;
pub mod fourier;
pub mod infomeasure;
mod math;
mod spectrum;
mod table;
pub mod verify;

pub use canalize::{CanalizingReport, VariableCanalization, Witness};
pub use distribution::{marginal, standardized, ProductDistribution};
pub use error::{Error, Result};
pub use infomeasure::{MiMethod, MiResult};
pub use spectrum::{FourierSpectrum, SpectrumKind};
pub use table::{AssignmentIndex, Sign, SubsetMask, TruthTable, MAX_ARITY};
