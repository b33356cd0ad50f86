//! Crystal combinatorics for the Mullineux involution.
//!
//! The crate is organised bottom-up:
//!
//! - [`partition`]: partitions, β-sets, e-regularity, e-cores and enumeration.
//! - [`level1`]: the level-1 Fock space crystal and Kleshchev's description of
//!   the Mullineux map `m_e`, used as the reference oracle.
//! - [`level2`]: the level-2 crystal of bipartitions for a bicharge `(s1, s2)`.
//! - [`isomorphism`]: the β-set bijection `Ψ`, the bipartition crystal
//!   isomorphism `ψ` it induces, and the stabilised composite `ψ̃`.
//! - [`engine`]: the inclusion conjecture on `Ψ` towers, exhaustive sweeps and
//!   the recursive-in-e Mullineux algorithm with cross-validation.

pub mod engine;
pub mod error;
pub mod isomorphism;
pub mod level1;
pub mod level2;
pub mod partition;
pub mod signature;

pub use error::{Error, Result};
pub use partition::{BetaSet, Modulus, Node, Partition};
