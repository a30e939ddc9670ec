//! Congruences of the finite quotients `P^Φ_{n,d}`, encoded by finitary C-matrices.

mod column;
mod enumerate;
mod generators;
mod lattice;
mod matrix;
mod membership;
mod order;
mod principal;

pub use column::{label_column, label_d0, D0Label};
pub use enumerate::{count_fc, enumerate_fc, low_row_types, ENUMERATION_CAP};
pub use generators::{fc_generated, fc_generating_set, minimal_generator_count, principal_generator};
pub use lattice::{build_lattice, build_lattice_capped};
pub use matrix::{classify_rows, validate_fc, FCMatrix, FRowType};
pub use membership::fcg_contains;
pub use order::{fc_join, fc_join_rule, fc_meet, fc_meet_rule, fcong_leq, matched_pairs, unmatched_mus};
pub use principal::principal_fc;
