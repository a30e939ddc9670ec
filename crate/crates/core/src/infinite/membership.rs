use crate::entry::CEntry::*;
use crate::error::{Error, Result};
use crate::partition::{green, pd, Green, NormalSubgroup, Partition};
use crate::twisted::TwistedElement;

use super::types::{exceptional_row, CPair, InfiniteCong};

fn split(x: &TwistedElement) -> Option<(usize, &Partition)> {
    match x {
        TwistedElement::Pair(i, a) => Some((*i, a)),
        TwistedElement::Zero(_) => None,
    }
}

fn lt_min(i: usize, min: Option<usize>) -> bool {
    min.is_none_or(|m| i < m)
}

/// Membership of `(a, b)` in `cg(p)`.
pub fn cg_contains(p: &CPair, a: &TwistedElement, b: &TwistedElement) -> bool {
    let (Some((i, alpha)), Some((j, beta))) = (split(a), split(b)) else {
        return false;
    };
    if alpha.n() != p.n || beta.n() != p.n {
        return false;
    }
    let (q, r) = (alpha.rank(), beta.rank());
    let (e1, e2) = (p.entry(q, i), p.entry(r, j));
    if e1 != e2 {
        return false;
    }
    let hats_equal = || alpha.hat() == beta.hat();
    match e1 {
        Delta => alpha == beta && p.theta[q].contains(i, j),
        R => true,
        N(g) => {
            p.theta[q].contains(i, j)
                && green(Green::H, alpha, beta)
                && pd(alpha, beta).is_ok_and(|s| g.contains(&s))
        }
        Lambda => green(Green::L, &alpha.hat(), &beta.hat()),
        Rho => green(Green::R, &alpha.hat(), &beta.hat()),
        MuDown => hats_equal() && green(Green::L, alpha, beta),
        MuUp => hats_equal() && green(Green::R, alpha, beta),
        Mu => {
            if !hats_equal() {
                return false;
            }
            if q == r {
                return p.theta[q].contains(i, j);
            }
            let (mq, mr) = (p.theta[q].least(), p.theta[r].least());
            p.theta[0].contains(i + r, j + q)
                && ((lt_min(i, mq) && lt_min(j, mr)) || (!lt_min(i, mq) && !lt_min(j, mr)))
        }
    }
}

/// Membership of `(a, b)` in the exceptional congruence `cgx(p)`.
pub fn cgx_contains(p: &CPair, a: &TwistedElement, b: &TwistedElement) -> Result<bool> {
    let (x, half) = exceptional_row(p).ok_or_else(|| Error::Invalid("C-pair is not exceptional".into()))?;
    if cg_contains(p, a, b) {
        return Ok(true);
    }
    let (Some((i, alpha)), Some((j, beta))) = (split(a), split(b)) else {
        return Ok(false);
    };
    Ok(alpha.rank() == x
        && half.contains(i, j)
        && !p.theta[x].contains(i, j)
        && green(Green::H, alpha, beta)
        && pd(alpha, beta).is_ok_and(|s| !NormalSubgroup::alternating(x).contains(&s)))
}

/// Membership of `(a, b)` in `cg(Π)` or `cgx(Π)` as flagged.
pub fn cong_contains(s: &InfiniteCong, a: &TwistedElement, b: &TwistedElement) -> bool {
    if s.exceptional {
        cgx_contains(&s.pair, a, b).unwrap_or(false)
    } else {
        cg_contains(&s.pair, a, b)
    }
}
