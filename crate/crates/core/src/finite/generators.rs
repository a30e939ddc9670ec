use std::collections::HashSet;

use crate::entry::CEntry::*;
use crate::error::{Error, Result};
use crate::infinite::generators::{rank0_partner, rank1_partner, rank_q, rank_q_twisted};
use crate::infinite::ElementPair;
use crate::partition::{NormalSubgroup, Permutation};
use crate::twisted::TwistedElement::{self, Pair, Zero};

use super::matrix::{validate_fc, FCMatrix, FRowType};
use super::membership::fcg_contains;
use super::order::fc_join;
use super::principal::principal_fc;

/// Matrix of the congruence generated by `pairs`.
pub fn fc_generated(pairs: &[ElementPair], n: usize, d: usize) -> Result<FCMatrix> {
    let mut m = FCMatrix::delta(n, d);
    for (a, b) in pairs {
        m = fc_join(&m, &principal_fc(a, b, n, d)?)?;
    }
    Ok(m)
}

/// Corners `(q, i)` of the ideal class: the maximal D-classes whose entry is `R`, top row first.
fn corners(m: &FCMatrix) -> Vec<(usize, usize)> {
    let firsts: Vec<usize> = (0..=m.n).map(|q| m.min_row(q)).collect();
    (0..=m.n).rev().filter(|&q| firsts[q] <= m.d && (q == m.n || firsts[q + 1] > firsts[q])).map(|q| (q, firsts[q])).collect()
}

fn rees_pairs(m: &FCMatrix) -> Vec<ElementPair> {
    let n = m.n;
    let single = |(q, i): (usize, usize)| (Pair(i, rank_q(n, q)), Zero(n));
    let mut out = Vec::new();
    for chunk in corners(m).chunks(2) {
        match *chunk {
            [(q, i), (r, j)] if n >= 2 => {
                let b = if r == 0 && q == 1 { rank0_partner(n, R) } else { rank_q(n, r) };
                out.push((Pair(i, rank_q(n, q)), Pair(j, b)));
            }
            _ => out.extend(chunk.iter().copied().map(single)),
        }
    }
    out
}

fn low_pairs(m: &FCMatrix, t: FRowType) -> Vec<ElementPair> {
    let n = m.n;
    let zeta_pair = |i: usize, zeta| (Pair(i, rank_q(n, 1)), Pair(i, rank1_partner(n, zeta)));
    match t {
        FRowType::T2 { i, zeta: Delta, .. } => vec![(Pair(i + 1, rank_q(n, 1)), Pair(i, rank_q(n, 0)))],
        FRowType::T2 { i, zeta, .. } => vec![zeta_pair(i, zeta)],
        FRowType::T3 { l, zeta, .. } if zeta != Delta => vec![zeta_pair(l - 1, zeta)],
        FRowType::T4 { k, l } => vec![(Pair(l - 1, rank_q(n, 1)), Pair(k - 1, rank_q(n, 0)))],
        _ => Vec::new(),
    }
}

/// One pair per distinct `N`-symbol, at the first column where it appears.
fn n_pairs(m: &FCMatrix) -> Vec<ElementPair> {
    let mut out = Vec::new();
    for q in 2..=m.n {
        let mut seen: Vec<NormalSubgroup> = Vec::new();
        for (c, e) in m.grid[q].iter().enumerate() {
            if let N(g) = e {
                if !seen.contains(g) {
                    seen.push(*g);
                    out.push((Pair(c, rank_q(m.n, q)), Pair(c, rank_q_twisted(m.n, *g))));
                }
            }
        }
    }
    out
}

/// A generating set for `cg(M)`: one pair per pair of ideal corners, one for the low rows,
/// one per distinct `N`-symbol, then pruned while the generated congruence is unchanged.
pub fn fc_generating_set(m: &FCMatrix) -> Result<Vec<ElementPair>> {
    validate_fc(m).map_err(|v| Error::Invalid(format!("not an fC-matrix: {}", v[0])))?;
    let t = m.row_type().expect("validated");
    let mut pairs = rees_pairs(m);
    pairs.extend(low_pairs(m, t));
    pairs.extend(n_pairs(m));
    if fc_generated(&pairs, m.n, m.d)? != *m {
        return Err(Error::Invalid(format!("construction does not generate {}", m.label())));
    }
    let mut k = 0;
    while k < pairs.len() {
        let mut rest = pairs.clone();
        rest.remove(k);
        if fc_generated(&rest, m.n, m.d)? == *m {
            pairs = rest;
        } else {
            k += 1;
        }
    }
    Ok(pairs)
}

/// Elements of `elements` that are first in their orbit under `a ↦ g a h` for units `g, h`.
fn unit_orbit_representatives(elements: &[TwistedElement]) -> Vec<&TwistedElement> {
    let perms = elements.first().map_or(Vec::new(), |e| Permutation::all(e.n()));
    let mut seen: HashSet<&TwistedElement> = HashSet::new();
    let mut reps = Vec::new();
    for a in elements {
        if seen.contains(a) {
            continue;
        }
        reps.push(a);
        let Pair(i, alpha) = a else { continue };
        let orbit: HashSet<TwistedElement> =
            perms.iter().flat_map(|g| perms.iter().map(move |h| Pair(*i, alpha.relabel(g, h)))).collect();
        seen.extend(elements.iter().filter(|e| orbit.contains(*e)));
    }
    reps
}

/// A single pair generating `cg(M)`, searched over the member pairs of `cg(M)` among `elements`.
/// Pairs `(a, b)` and `(gah, gbh)` for units `g, h` generate the same congruence, so `a` runs
/// over unit-orbit representatives only; `elements` should be closed under the unit action.
pub fn principal_generator(m: &FCMatrix, elements: &[TwistedElement]) -> Result<Option<ElementPair>> {
    for a in unit_orbit_representatives(elements) {
        for b in elements {
            if a != b && fcg_contains(m, a, b) && principal_fc(a, b, m.n, m.d)? == *m {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}

/// Least number of pairs generating `cg(M)`, when it is at most 2: `0` for `Δ`, `1` if a
/// principal generator exists among `elements`, `2` if the pruned generating set has two pairs.
pub fn minimal_generator_count(m: &FCMatrix, elements: &[TwistedElement]) -> Result<Option<usize>> {
    if *m == FCMatrix::delta(m.n, m.d) {
        return Ok(Some(0));
    }
    if principal_generator(m, elements)?.is_some() {
        return Ok(Some(1));
    }
    Ok((fc_generating_set(m)?.len() == 2).then_some(2))
}
