use crate::entry::CEntry::{self, *};
use crate::error::{Error, Result};
use crate::partition::NormalSubgroup;

use super::matrix::{FCMatrix, FRowType};

/// Default cap on the number of matrices [`enumerate_fc`] will produce.
pub const ENUMERATION_CAP: usize = 10_000_000;

/// All row-0/1 shapes for `P^Φ_{n,d}`, in a fixed order.
pub fn low_row_types(n: usize, d: usize) -> Vec<FRowType> {
    let zetas: &[CEntry] = if n >= 2 { &[Delta, MuUp, MuDown, Mu] } else { &[Delta] };
    let mut out = Vec::new();
    for k in 0..=d + 1 {
        out.push(FRowType::T1 { k });
    }
    for i in 0..=d {
        for k in i + 1..=d {
            out.extend(zetas.iter().map(|&zeta| FRowType::T2 { i, k, zeta }));
        }
    }
    for k in 0..=d + 1 {
        for l in k + 1..=d + 1 {
            out.extend(zetas.iter().map(|&zeta| FRowType::T3 { k, l, zeta }));
        }
    }
    for k in 1..=d + 1 {
        for l in k + 2..=d + 1 {
            out.push(FRowType::T4 { k, l });
        }
    }
    debug_assert!(out.iter().all(|t| t.params_ok(n, d)));
    out
}

/// Rows of shape `Δ… N_i ≤ … ≤ N_{k-1} R…` for row `q`, compatible with the row below.
fn high_rows(q: usize, below: &[CEntry]) -> Vec<Vec<CEntry>> {
    let w = below.len();
    let subgroups = NormalSubgroup::nontrivial(q);
    let mut out = Vec::new();
    for k in 0..=w {
        if below[k..].iter().any(|e| *e != R) {
            continue;
        }
        for i in 0..=k {
            let n_ok = below[i..k].iter().all(|e| matches!(e, Mu | Lambda | Rho | R));
            if !n_ok {
                continue;
            }
            let mut row = vec![Delta; w];
            for x in row.iter_mut().skip(k) {
                *x = R;
            }
            chains(&subgroups, i, k, 0, &mut row, &mut out);
        }
    }
    out
}

fn chains(subgroups: &[NormalSubgroup], c: usize, k: usize, lo: usize, row: &mut Vec<CEntry>, out: &mut Vec<Vec<CEntry>>) {
    if c == k {
        out.push(row.clone());
        return;
    }
    for (s, g) in subgroups.iter().enumerate().skip(lo) {
        row[c] = N(*g);
        chains(subgroups, c + 1, k, s, row, out);
    }
    row[c] = Delta;
}

/// Every fC-matrix for `P^Φ_{n,d}`, in a deterministic order; errors once more than `cap`
/// matrices have been produced.
pub fn enumerate_fc(n: usize, d: usize, cap: usize) -> Result<Vec<FCMatrix>> {
    if n == 0 {
        return Err(Error::Invalid("P^Φ_{0,d} has no fC-matrices; its congruences form a chain".into()));
    }
    let mut out = Vec::new();
    for t in low_row_types(n, d) {
        let (r0, r1) = t.rows(d);
        let mut grid = vec![r0, r1];
        grid.resize(n + 1, Vec::new());
        extend(n, d, 2, &mut grid, &mut out, cap)?;
    }
    Ok(out)
}

fn extend(n: usize, d: usize, q: usize, grid: &mut Vec<Vec<CEntry>>, out: &mut Vec<FCMatrix>, cap: usize) -> Result<()> {
    if q > n {
        if out.len() >= cap {
            return Err(Error::CapExceeded { what: "fC-matrices", size: out.len() as u128 + 1, cap: cap as u128 });
        }
        out.push(FCMatrix { n, d, grid: grid.clone() });
        return Ok(());
    }
    for row in high_rows(q, &grid[q - 1]) {
        grid[q] = row;
        extend(n, d, q + 1, grid, out, cap)?;
    }
    Ok(())
}

/// Number of fC-matrices, by the same sweep without storing them.
pub fn count_fc(n: usize, d: usize) -> Result<u128> {
    fn go(n: usize, q: usize, below: &[CEntry]) -> u128 {
        if q > n {
            return 1;
        }
        high_rows(q, below).iter().map(|r| go(n, q + 1, r)).sum()
    }
    if n == 0 {
        return Ok(d as u128 + 2);
    }
    Ok(low_row_types(n, d).iter().map(|t| go(n, 2, &t.rows(d).1)).sum())
}
