//! Semifast Fourier transforms over GF(2^m).
//!
//! The transform of length `n = 2^m - 1` evaluates `f(x) = Σ f_j x^j` at every
//! power of a primitive element `α`, i.e. it multiplies by the Vandermonde
//! matrix `W = (α^{ij})`. This crate provides:
//!
//! * [`field`]: table-driven GF(2^m) arithmetic with caller-owned operation
//!   counters.
//! * [`structure`]: cyclotomic cosets, minimal polynomials, normal bases and
//!   coordinate expansion in GF(2)-bases.
//! * [`reference`]: the Horner-based oracle transform and dense products.
//! * [`binmat`]: binary matrices and the naive / Four Russians products of a
//!   binary matrix with a vector of field elements.
//! * [`algorithms`]: six plans (`goertzel`, `blahut2008`, `ft2002`, `tf2003`,
//!   `fed2006a`, `fed2006b`): a remainder-based one, a coset-split one and four
//!   factorizations `W = P A_e D_e Q` with binary `A_e` and block-diagonal `D_e`.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use gfft_core::{algorithms::{Algorithm, Plan}, field::FieldContext, reference};
//!
//! let ctx = FieldContext::with_degree(3).unwrap();
//! let plan = Plan::build(Algorithm::Tf2003, &ctx).unwrap();
//! let f = ctx.elements_from_values(&[1, 0, 3, 0, 0, 7, 2]).unwrap();
//! let out = plan.apply(&f, &Default::default()).unwrap();
//! assert_eq!(out.values, reference::naive_dft(&f, &ctx, None).unwrap());
//! ```
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algorithms;
pub mod binmat;
pub mod complexity;
mod error;
pub mod field;
pub mod reference;
pub mod structure;

pub use error::Error;
pub use field::{CountPolicy, Element, FieldContext, FieldSpec, OpCount, OpCounter};

/// Result alias used across the crate.
pub type Result<T> = core::result::Result<T, Error>;
