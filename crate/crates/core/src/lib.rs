//! Exact computations for toric geometry: integer lattices, rational polyhedral
//! cones, lattice polytopes, fans, toric ideals, torus-invariant divisors, Cox
//! rings and sparse root counts. All arithmetic is exact.

pub mod error;
pub mod zlattice;
pub mod cones;
pub mod polytopes;
pub mod fans;
pub mod ideals;
pub mod divisors;
pub mod cox;
pub mod counting;

pub use error::{Error, Result};
