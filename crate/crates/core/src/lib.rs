//! Linear codes over Z4: structure, expansion to self-dual codes, exhaustive
//! weight analysis, and Construction A4 unimodular lattices.
//!
//! The crate is organized around a small set of exact-arithmetic types:
//!
//! * [`z4`] - vectors and matrices over Z4 stored as parallel bit planes,
//!   with Lee/Euclidean weights;
//! * [`binary`] - GF(2) codes: duals, doubly-even tests, maximal doubly-even
//!   extensions, dual bases;
//! * [`codes`] - standard form, type `4^k1 2^k2`, residue/torsion codes,
//!   duals, self-orthogonality, codeword enumeration;
//! * [`expand`] - expansion of a self-orthogonal code into one or many
//!   self-dual codes containing it;
//! * [`analyze`] - exhaustive Lee/Euclidean weight distributions, symmetric
//!   weight enumerators, permutation equivalence;
//! * [`lattice`] - minimum norm and kissing number of the Construction A4
//!   lattice of a self-dual code;
//! * [`catalog`] - embedded generator matrices and their published invariants.
//!
//! The crate is `no_std` (with `alloc`). Everything is deterministic and
//! single-threaded; the enumeration entry points accept coefficient
//! sub-ranges so callers can fan the work out across threads and merge the
//! resulting histograms.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analyze;
pub mod binary;
pub mod catalog;
pub mod codes;
mod error;
pub mod expand;
pub mod lattice;
pub mod z4;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
