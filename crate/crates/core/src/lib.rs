//! Exact design of dual lowpass filters and non-redundant FIR wavelet filter
//! banks from a Laplacian-pyramid compression filter.
//!
//! The pipeline is: pick a lowpass `h` ([`filterkit`]), find a cofilter `f`
//! biorthogonal to it ([`bezout`]), combine `h`, `f` and an accuracy
//! supplier `g` into the dual `d` ([`committee`]), and complete the pair into
//! a perfect-reconstruction wavelet filter bank ([`completion`]). All of it
//! runs over exact rationals and Q(√q); only [`cascade`] uses floats.

pub mod algebra;
pub mod bezout;
pub mod cascade;
pub mod committee;
pub mod completion;
mod error;
pub mod filterkit;
pub mod pyramid;

pub use error::{Error, Result, Slot};
