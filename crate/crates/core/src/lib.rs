//! Exact rational analysis of polynomials in the basis {x^i (x+1)^(d-i)},
//! aimed at Ehrhart polynomials of dilated lattice polytopes.
//!
//! The crate decides *magic positivity* (all coefficients non-negative in
//! that basis), computes the least integer dilation making a family's
//! Ehrhart polynomial magic positive (the m-index), converts between the
//! monomial, h*, and magic encodings of a polynomial, certifies
//! real-rootedness and the CL root-line property with Sturm chains, and
//! validates every closed-form family formula against a brute-force
//! lattice-point enumerator. All arithmetic is exact; no floating point
//! appears on any computation path.

pub mod cl;
pub mod error;
pub mod families;
pub mod hstar;
pub mod magic;
pub mod poly;
mod sturm;

pub use error::{Error, Result};
pub use poly::{binomial_poly, rat, rat_int, Polynomial, Rat};
