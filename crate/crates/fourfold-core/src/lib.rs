//! Exact computational kernels for special cubic fourfolds.
//!
//! This crate classifies the irreducible components of the intersections
//! `C8 ∩ C12` and `C8 ∩ C20` of Hassett divisors by exact integer lattice
//! arithmetic, evaluates the excess-intersection and secant-count formulas
//! that govern the geometry of the generic members, and provides a small
//! Gröbner engine over a prime field together with a verification harness
//! for explicit cubic hypersurfaces containing a plane and a second surface
//! (Veronese or cubic scroll).
//!
//! Everything in here is `no_std` + `alloc`: all arithmetic is exact
//! (arbitrary precision where intermediate growth demands it, checked
//! fixed-width elsewhere), all functions are pure, and every emptiness or
//! irreducibility verdict is backed by a machine-checkable witness.
//!
//! IO, the polynomial text grammar and the command-line surface live in the
//! companion crate `fourfold-cli`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod classify;
pub mod excess;
pub mod field;
pub mod geom;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod lattice;
pub mod poly;
pub mod rng;

pub use classify::{ComponentReport, Family};
pub use lattice::{GramMatrix, LatticeVector};
pub use poly::{Ideal, Monomial, MonomialOrder, Poly, RingSpec};
