//! Congruences of twisted partition monoids.
//!
//! Diagram arithmetic on `P_n`, the infinite twisted monoid `P^Φ_n` with its symbolic
//! congruences (C-pairs), the finite quotients `P^Φ_{n,d}` with fC-matrices, lattice
//! analysis, exact enumeration and a brute-force closure oracle.

pub mod entry;
pub mod enumeration;
pub mod error;
pub mod finite;
pub mod infinite;
pub mod lattice;
pub mod natcong;
pub mod oracle;
pub mod partition;
pub mod twisted;

pub use entry::CEntry;
pub use error::{Error, Result};
pub use natcong::NatCong;
pub use partition::{NormalSubgroup, NsLabel, Partition, Permutation};
pub use twisted::TwistedElement;
