//! Frame-based quasi-probability representations of finite-dimensional
//! quantum theory.
//!
//! A representation is a pair of operator families `F(λ)` and `D(λ)` over a
//! finite outcome set. States map to `μ(λ) = Tr[ρ F(λ)]`, effects to
//! `ξ(λ) = Tr[E D(λ)]`, and the Born rule becomes the dot product `Σ μ ξ`.
//! Every discrete Wigner function, the MUB and SIC tables, and the spherical
//! kernels of spin systems fit this pattern; the factories in [`reps`] build
//! them and [`frame`] supplies the shared machinery.
//!
//! The crate is `no_std` with `alloc`. Enable the `std` feature for
//! `std::error::Error` impls.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod analysis;
pub mod error;
pub mod field;
pub mod frame;
pub mod geometry;
pub mod operator;
pub mod quadrature;
pub mod reps;
pub mod verify;

pub use error::{Error, Result};
