//! Exact commutative algebra for parity binomial edge ideals and
//! permanental ideals of graphs.
//!
//! The crate builds the ideal families (parity, permanental,
//! determinantal, the saturation, component primes and the chain ideals
//! obtained by adding 2x2 minors), computes reduced Groebner bases, ideal
//! intersections, colons, saturations and eliminations, Hilbert-Poincare
//! numerators and graded Betti numbers, and checks the closed-form
//! predictions for complete graphs against all of these.

pub mod betti;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod formulas;
pub mod graph_ideals;
pub mod groebner;
pub mod hilbert;
pub mod ideal_ops;
pub mod intpoly;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use field::Field;
pub use groebner::{GroebnerBasis, Ideal};
pub use poly::{Monomial, Polynomial, Ring, RingMap, RingRef, TermOrder};
