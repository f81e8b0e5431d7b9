//! Cyclic numbers and the finite permutation groups behind them.
//!
//! Every group of order `n` is cyclic exactly when `gcd(n, φ(n)) = 1`. This
//! crate decides that criterion, builds explicit non-cyclic permutation
//! groups of order `n` when it fails, and carries enough finite group
//! machinery (closure, cosets, center, conjugacy, normalizers, subgroup
//! inventories) plus an exhaustive Cayley-table enumerator to check the
//! surrounding facts by brute force.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the
//! command-line front end live in the `cyclic-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod group;
pub mod numtheory;
pub mod oracle;
pub mod perm;
pub mod witness;

pub use error::{Error, Result};
pub use group::{FiniteGroup, Subgroup, DEFAULT_CLOSURE_CAP, DEFAULT_SUBGROUP_BOUND};
pub use numtheory::{Factorization, StarReport};
pub use oracle::CayleyTable;
pub use perm::Permutation;
pub use witness::{VerificationReport, WitnessCertificate, WitnessParams};
