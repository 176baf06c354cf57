//! Computations in the mod-2 surjection operad.
//!
//! The crate is organised bottom-up:
//!
//! - [`f2`]: formal sums and bit matrices over the two-element field.
//! - [`surjection`]: the operad itself (basis strings, differential, partial
//!   composition, value relabelling, complexity).
//! - [`generators`]: admissible tables and the multioperations `E^k_{p,q}`.
//! - [`relations`]: assembly and exact verification of the operadic identities
//!   satisfied by the generators.
//! - [`simplicial`]: the interval-cut action on cochains of ordered simplicial
//!   complexes, cup-i products, cohomology and Steenrod squares.
//! - [`bar`]: truncated bar constructions with the induced product and cup-i
//!   products.

pub mod bar;
pub mod error;
pub mod f2;
pub mod fixtures;
pub mod generators;
pub mod relations;
pub mod report;
pub mod simplicial;
pub mod surjection;

pub use error::{Error, Result};
pub use f2::{BitMatrix, BitVector, FormalSum};
pub use surjection::{SurjChain, Surjection, ValuePermutation};
