//! Exact construction of orthogonal bases for Hermitean monogenic polynomials.

pub mod ck;
pub mod dimensions;
pub mod error;
pub mod export;
pub mod fischer;
pub mod fock;
pub mod gt;
pub mod operators;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};
pub use fock::{SpinorIndex, SpinorVector};
pub use poly::{Homogeneity, Monomial, SpaceDescriptor, SpinorPolynomial};
pub use scalar::{GaussianRational, Rational};
