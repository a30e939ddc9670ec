use crate::entry::CEntry::*;
use crate::partition::NormalSubgroup;

use super::types::{classify_low, exceptional_row, CPair, InfiniteCong};

/// Entrywise comparison `Π1 ≤_C Π2` of chains and matrices.
pub fn pair_leq_c(p1: &CPair, p2: &CPair) -> bool {
    if p1.n != p2.n {
        return false;
    }
    let w = p1.width().max(p2.width());
    (0..=p1.n).all(|q| {
        p1.theta[q].leq(&p2.theta[q]) && (0..=w).all(|i| p1.entry(q, i).leq(&p2.entry(q, i)))
    })
}

fn cg_leq(p1: &CPair, p2: &CPair) -> bool {
    if !pair_leq_c(p1, p2) {
        return false;
    }
    let Ok(t1) = classify_low(p1) else { return false };
    let Some((a0, a1)) = t1.mu_in() else { return true };
    let le = |m: Option<usize>, a: usize| m.is_some_and(|m| m <= a);
    let b1 = le(p2.theta[0].least(), a0) && le(p2.theta[1].least(), a1);
    let b2 = classify_low(p2)
        .ok()
        .and_then(|t| t.mu_in())
        .is_some_and(|(c0, c1)| c1 as isize - c0 as isize == a1 as isize - a0 as isize);
    b1 || b2
}

/// Inclusion between congruences of `P^Φ_n`, covering plain and exceptional operands.
pub fn cong_leq(s1: &InfiniteCong, s2: &InfiniteCong) -> bool {
    let (p1, p2) = (&s1.pair.canonical(), &s2.pair.canonical());
    if !cg_leq(p1, p2) {
        return false;
    }
    match (s1.exceptional, s2.exceptional) {
        (false, _) => true,
        (true, false) => {
            let Some((q, _)) = exceptional_row(p1) else { return false };
            let (Some(per1), Some(per2), Some(min2)) = (p1.theta[q].per(), p2.theta[q].per(), p2.theta[q].least()) else {
                return false;
            };
            let top = min2.max(p2.width());
            per1 % (2 * per2) == 0
                && (min2..=top).all(|i| matches!(p2.entry(q, i), R) || p2.entry(q, i) == N(NormalSubgroup::full(q)))
        }
        (true, true) => {
            let (Some((x1, _)), Some((x2, _))) = (exceptional_row(p1), exceptional_row(p2)) else {
                return false;
            };
            if x1 != x2 {
                return true;
            }
            match (p1.theta[x1].per(), p2.theta[x1].per()) {
                (Some(a), Some(b)) => a % b == 0 && (a / b) % 2 == 1,
                _ => false,
            }
        }
    }
}
