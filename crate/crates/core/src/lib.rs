//! Numerical radius toolkit for dense complex matrices.
//!
//! The crate computes the numerical radius `ω(T) = max |⟨Tx, x⟩|` and the
//! boundary of the numerical range `W(T)`, decides the numerical-radius
//! versions of Birkhoff and Pythagorean orthogonality and of parallelism,
//! and ships a seeded falsification harness ([`claims`]) that replays a set
//! of worked examples and property-tests the known implications between
//! these relations on random matrix ensembles.
//!
//! Everything here is pure computation over `alloc`; file formats, output
//! rendering and the command line live in the companion `omegaorth` crate.
//!
//! ```
//! use omegaorth_core::linalg::DenseMatrix;
//! use omegaorth_core::radius::numerical_radius;
//!
//! let s = DenseMatrix::from_real_rows(&[&[0.0, -1.0], &[0.0, 1.0]]).unwrap();
//! let cert = numerical_radius(&s).unwrap();
//! assert!((cert.omega - (1.0 + 2f64.sqrt()) / 2.0).abs() < 1e-9);
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod claims;
mod error;
pub mod linalg;
pub mod optimize;
pub mod orthogonality;
pub mod parallelism;
pub mod radius;
mod settings;

pub use error::{Error, Result};
pub use linalg::{ComplexScalar, DenseMatrix, EigenDecomposition, UnitVector};
pub use orthogonality::{Status, Verdict, Witness};
pub use parallelism::ParallelWitness;
pub use radius::{AttainmentSample, RadiusCertificate};
pub use settings::Settings;
