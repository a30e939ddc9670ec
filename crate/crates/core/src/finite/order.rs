use crate::entry::CEntry::{self, *};
use crate::error::{Error, Result};

use super::lattice::build_lattice;
use super::matrix::{validate_fc, FCMatrix};

fn same_shape(m1: &FCMatrix, m2: &FCMatrix) -> bool {
    m1.n == m2.n && m1.d == m2.d
}

fn offset(m: &FCMatrix) -> isize {
    m.min_row(1) as isize - m.min_row(0) as isize
}

/// Inclusion `cg(M1) ⊆ cg(M2)`.
pub fn fcong_leq(m1: &FCMatrix, m2: &FCMatrix) -> bool {
    if !same_shape(m1, m2) {
        return false;
    }
    let entrywise = m1.grid.iter().zip(&m2.grid).all(|(r1, r2)| r1.iter().zip(r2).all(|(a, b)| a.leq(b)));
    if !entrywise {
        return false;
    }
    let Some((a0, a1)) = m1.row_type().and_then(|t| t.mu_in()) else {
        return true;
    };
    let b1 = m2.min_row(0) <= a0 && m2.min_row(1) <= a1;
    let b2 = m2.row_type().and_then(|t| t.mu_in()).is_some() && offset(m2) == offset(m1);
    b1 || b2
}

/// Matched `μ` positions `((0, i), (1, j))`.
pub fn matched_pairs(m: &FCMatrix) -> Vec<((usize, usize), (usize, usize))> {
    let off = offset(m);
    (0..=m.d)
        .filter(|&i| m.get(0, i) == Mu)
        .filter_map(|i| {
            let j = i as isize + off;
            (0..=m.d as isize).contains(&j).then_some(j as usize).filter(|&j| m.get(1, j) == Mu).map(|j| ((0, i), (1, j)))
        })
        .collect()
}

/// Row-1 `μ` entries that are not matched.
pub fn unmatched_mus(m: &FCMatrix) -> Vec<(usize, usize)> {
    let matched: Vec<usize> = matched_pairs(m).into_iter().map(|(_, (_, j))| j).collect();
    (0..=m.d).filter(|j| m.get(1, *j) == Mu && !matched.contains(j)).map(|j| (1, j)).collect()
}

/// Row-1 columns whose `D`-classes `cg(M)` relates to `D_{0i}`.
fn row1_partners(m: &FCMatrix, i: usize) -> Vec<usize> {
    match m.get(0, i) {
        R => (0..=m.d).filter(|&j| m.get(1, j) == R).collect(),
        Mu => {
            let j = i as isize + offset(m);
            (0..=m.d as isize).contains(&j).then_some(j as usize).filter(|&j| m.get(1, j) == Mu).into_iter().collect()
        }
        _ => Vec::new(),
    }
}

/// Entrywise meet, with a row-0 `μ` dropped to `Δ` unless both congruences relate its class to a
/// common row-1 class; for `n = 1` unmatched row-1 `μ`s are written as `Δ`.
pub fn fc_meet_rule(m1: &FCMatrix, m2: &FCMatrix) -> Option<FCMatrix> {
    if !same_shape(m1, m2) {
        return None;
    }
    let mut m = m1.clone();
    for q in 0..=m.n {
        for i in 0..=m.d {
            let e = m1.get(q, i).meet(&m2.get(q, i));
            let shared = || row1_partners(m1, i).iter().any(|j| row1_partners(m2, i).contains(j));
            m.grid[q][i] = if q == 0 && e == Mu && !shared() { Delta } else { e };
        }
    }
    if m.n == 1 {
        for (_, j) in unmatched_mus(&m) {
            m.grid[1][j] = Delta;
        }
    }
    (validate_fc(&m).is_ok() && fcong_leq(&m, m1) && fcong_leq(&m, m2)).then_some(m)
}

/// Entrywise join, escalating flagged low entries to `R` where needed: the least valid upper
/// bound among the candidates that differ from the entrywise join only in such places.
pub fn fc_join_rule(m1: &FCMatrix, m2: &FCMatrix) -> Option<FCMatrix> {
    if !same_shape(m1, m2) {
        return None;
    }
    let mut base = m1.clone();
    for q in 0..=base.n {
        for i in 0..=base.d {
            base.grid[q][i] = m1.get(q, i).join(&m2.get(q, i));
        }
    }
    let low = |e: CEntry| matches!(e, Delta | MuUp | MuDown | Mu);
    let flagged = |q: usize, i: usize| {
        let (a, b) = (m1.get(q, i), m2.get(q, i));
        low(a) && low(b) && (a == Mu || b == Mu)
    };
    let mut cands = Vec::new();
    for k0 in 0..=base.d + 1 {
        for k1 in 0..=base.d + 1 {
            let mut c = base.clone();
            let mut ok = true;
            for (q, k) in [(0, k0), (1, k1)] {
                for i in k..=base.d {
                    if c.grid[q][i] != R {
                        ok &= flagged(q, i);
                        c.grid[q][i] = R;
                    }
                }
            }
            if ok && !cands.contains(&c) && validate_fc(&c).is_ok() && fcong_leq(m1, &c) && fcong_leq(m2, &c) {
                cands.push(c);
            }
        }
    }
    cands.iter().find(|c| cands.iter().all(|o| fcong_leq(c, o))).cloned()
}

fn lattice_op(m1: &FCMatrix, m2: &FCMatrix, meet: bool) -> Result<FCMatrix> {
    let l = build_lattice(m1.n, m1.d)?;
    let find = |m: &FCMatrix| {
        l.matrices.iter().position(|x| x == m).ok_or_else(|| Error::Invalid(format!("not an fC-matrix: {}", m.label())))
    };
    let (a, b) = (find(m1)?, find(m2)?);
    let c = if meet { l.meet[a][b] } else { l.join[a][b] };
    Ok(l.matrices[c].clone())
}

/// Matrix of `cg(M1) ∩ cg(M2)`.
pub fn fc_meet(m1: &FCMatrix, m2: &FCMatrix) -> Result<FCMatrix> {
    if !same_shape(m1, m2) {
        return Err(Error::Invalid("matrices have different shapes".into()));
    }
    match fc_meet_rule(m1, m2) {
        Some(m) => Ok(m),
        None => lattice_op(m1, m2, true),
    }
}

/// Matrix of `cg(M1) ∨ cg(M2)`.
pub fn fc_join(m1: &FCMatrix, m2: &FCMatrix) -> Result<FCMatrix> {
    if !same_shape(m1, m2) {
        return Err(Error::Invalid("matrices have different shapes".into()));
    }
    match fc_join_rule(m1, m2) {
        Some(m) => Ok(m),
        None => lattice_op(m1, m2, false),
    }
}
