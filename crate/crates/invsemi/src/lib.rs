//! Computational toolkit for finite inverse semigroups.
//!
//! The crate centers on the kernel/trace description of congruences: every
//! congruence on an inverse semigroup is determined by its restriction to the
//! idempotents (the *trace*) together with the union of the classes that
//! contain an idempotent (the *kernel*). From the four extremal operators
//! (least/greatest congruence with a given trace or kernel) one obtains the
//! descending chains
//!
//! ```text
//! alpha_0 = omega,  alpha_n = min_trace(beta_{n-1})
//! beta_0  = omega,  beta_n  = min_kernel(alpha_{n-1})
//! ```
//!
//! which stabilize on any finite semigroup and pass through the classical
//! least group / least semilattice / least Clifford / least E-unitary /
//! least E-reflexive congruences. [`network`] computes the chains,
//! [`lattice`] enumerates the full congruence lattice, and [`verify`] checks
//! the structural equivalences these objects satisfy, condition by condition.
//!
//! Everything is exact integer computation on dense Cayley tables; the
//! intended scale is "desk size" (orders in the hundreds, lattice enumeration
//! up to a configurable cap). With the default `parallel` feature the
//! embarrassingly parallel inner loops (principal-congruence enumeration,
//! verification fan-out) run on rayon; disabling default features yields a
//! fully sequential build with identical output.

pub mod catalog;
pub mod congruence;
pub mod formats;
pub mod lattice;
pub mod network;
pub mod partition;
pub mod relations;
pub mod report;
pub mod semigroup;
pub mod verify;

pub use congruence::Congruence;
pub use lattice::CongruenceLattice;
pub use network::MinNetwork;
pub use partition::{DisjointSets, Partition};
pub use semigroup::{InverseSemigroup, PartialBijection};
