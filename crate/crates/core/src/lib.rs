//! Finite permutation groups, congruence lattices of unary algebras, and
//! exhaustive sweeps that check when the lattice `M_n` can be represented as
//! a congruence lattice on a small carrier.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`]: permutations, closure, subgroup enumeration, cosets, cores,
//!   quotients and structural predicates.
//! * [`constructions`]: named groups, regular and coset actions, and the
//!   sweep catalog.
//! * [`congruence`]: partitions, unary algebras, congruence generation and
//!   the Galois closure of a partition system.
//! * [`lattice`]: finite lattices, shape detection, isomorphism and DOT
//!   output.
//! * [`verify`]: the interval, transitive-action and partition-system sweeps
//!   plus the minimal witness constructor.
//! * [`cli`]: the `mnlab` command line.
//!
//! With the default `parallel` feature the sweeps run on rayon; building
//! with `--no-default-features` swaps in a sequential shim with the same
//! iterator surface. Output is identical either way.

pub mod bitset;
pub mod cli;
pub mod congruence;
pub mod constructions;
mod error;
pub mod io;
pub mod lattice;
pub mod par;
pub mod perm;
pub mod verify;

pub use congruence::{Partition, UnaryAlgebra};
pub use error::{Error, Result};
pub use lattice::FinLattice;
pub use perm::{Perm, PermGroup};
