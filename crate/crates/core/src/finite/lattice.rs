use crate::error::Result;
use crate::lattice::FiniteLattice;

use super::enumerate::{enumerate_fc, ENUMERATION_CAP};
use super::order::fcong_leq;

/// `Cong(P^Φ_{n,d})` with elements in enumeration order.
pub fn build_lattice(n: usize, d: usize) -> Result<FiniteLattice> {
    build_lattice_capped(n, d, ENUMERATION_CAP)
}

pub fn build_lattice_capped(n: usize, d: usize, cap: usize) -> Result<FiniteLattice> {
    if n == 0 {
        // Rees congruences of the ideals {i, …, d, 0}, smallest first.
        return Ok(FiniteLattice::chain((0..=d + 1).rev().map(|i| format!("R[{i}..]")).collect()));
    }
    let ms = enumerate_fc(n, d, cap)?;
    let leq = ms.iter().map(|a| ms.iter().map(|b| fcong_leq(a, b)).collect()).collect();
    FiniteLattice::from_order(ms.iter().map(|m| m.label()).collect(), ms, leq)
}
