//! Exact invariants of links of isolated hypersurface singularities.
//!
//! - [`pham`]: Brieskorn–Pham links `K(a₀,…,aₙ)`: Milnor number, monodromy
//!   spectrum, characteristic polynomial, signature, exotic-sphere and
//!   homology-sphere classification, Casson invariant.
//! - [`curve`]: plane-curve branches as iterated torus knots, their Alexander
//!   polynomials, and linking numbers as intersection multiplicities.
//! - [`plumbing`]: intersection matrices of plumbing graphs and the homology of
//!   their boundaries.
//!
//! All arithmetic is exact.

pub mod arith;
pub mod curve;
pub mod error;
pub mod pham;
pub mod plumbing;
pub mod poly;

pub use error::{Error, Result};
pub use pham::Exponents;
pub use poly::IntegerPolynomial;
