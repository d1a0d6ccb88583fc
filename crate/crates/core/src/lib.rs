//! Clustering of incomplete Boolean matrices under a cluster budget `k` and a
//! distance bound `r`.
//!
//! Rows are tri-state vectors over `{0, 1, MISSING}`; the distance between two
//! rows counts only coordinates where both are known and differ. Three
//! problems are covered, each asking for a completion of the MISSING entries
//! and a partition into at most `k` clusters:
//!
//! * [`Variant::In`]: every cluster is within `r` of one of its own rows;
//! * [`Variant::Any`]: every cluster is within `r` of an arbitrary vector;
//! * [`Variant::Diam`]: every cluster has pairwise distances at most `r`.
//!
//! The crate offers kernelization ([`kernelize`]), exact solvers and an
//! exhaustive completion oracle ([`solve`]), q-ary block encodings
//! ([`encode`]) and instance generators ([`gen`]). It is `no_std` and needs
//! only `alloc`.
//!
//! ```
//! use inclust_core::{solve, Instance, TriVector, Variant};
//!
//! let rows = ["00?", "011", "?11"].iter().map(|s| TriVector::parse(s).unwrap()).collect();
//! let inst = Instance::new(rows, 1, 1, Variant::Diam).unwrap();
//! let d = solve::solve_via_kernel(&inst, &solve::SolverBudget::default());
//! assert_eq!(d.answer, solve::Answer::Yes);
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod compat;
pub mod covering;
pub mod encode;
pub mod error;
pub mod gen;
pub mod instance;
pub mod kernelize;
pub mod solution;
pub mod solve;
pub mod sunflower;
pub mod tri;

pub use covering::{covering_certificate, verify_certificate, CoverCertificate};
pub use error::{DimensionMismatch, IndexOutOfRange, InstanceError};
pub use instance::{dedupe, Instance, Variant};
pub use solution::{verify_solution, Center, ClusteringSolution, Violation};
pub use tri::{delta_set, hamming_delta, Symbol, TriVector};
