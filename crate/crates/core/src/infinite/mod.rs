//! Congruences of the infinite twisted partition monoid `P^Φ_n`, encoded symbolically
//! by C-pairs: a chain of congruences on `ℕ` plus an eventually constant symbol matrix.

pub(crate) mod generators;
mod membership;
mod order;
mod principal;
mod structure;
mod types;

pub use generators::{generating_set, verify_generators, ElementPair, GeneratorCheck};
pub use membership::{cg_contains, cgx_contains, cong_contains};
pub use order::{cong_leq, pair_leq_c};
pub use principal::{principal_cpair, principal_case};
pub use structure::{antichain_member, coatom, diamond_witness, pentagon_witness, strictly_smaller};
pub use types::{classify_high, classify_low, exceptional_row, validate_cpair, CPair, CRow, HighType, InfiniteCong, LowType, Violation};
