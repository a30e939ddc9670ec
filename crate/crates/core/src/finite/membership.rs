use crate::entry::CEntry::*;
use crate::partition::{green, pd, Green};
use crate::twisted::TwistedElement::{self, Pair, Zero};

use super::matrix::FCMatrix;

/// Membership of `(a, b)` in `cg(M)`.
pub fn fcg_contains(m: &FCMatrix, a: &TwistedElement, b: &TwistedElement) -> bool {
    let in_range = |x: &TwistedElement| match x {
        Pair(i, alpha) => *i <= m.d && alpha.n() == m.n,
        Zero(k) => *k == m.n,
    };
    if !in_range(a) || !in_range(b) {
        return false;
    }
    match (a, b) {
        (Zero(_), Zero(_)) => true,
        (Pair(i, alpha), Zero(_)) | (Zero(_), Pair(i, alpha)) => m.get(alpha.rank(), *i) == R,
        (Pair(i, alpha), Pair(j, beta)) => {
            let (q, r) = (alpha.rank(), beta.rank());
            let e = m.get(q, *i);
            if e != m.get(r, *j) {
                return false;
            }
            let hats = || alpha.hat() == beta.hat();
            match e {
                Delta => i == j && alpha == beta,
                R => true,
                N(g) => i == j && green(Green::H, alpha, beta) && pd(alpha, beta).is_ok_and(|s| g.contains(&s)),
                MuDown => hats() && green(Green::L, alpha, beta),
                MuUp => hats() && green(Green::R, alpha, beta),
                Mu => {
                    hats()
                        && ((q, i) == (r, j)
                            || *i as isize - *j as isize == m.min_row(q) as isize - m.min_row(r) as isize)
                }
                Lambda | Rho => false,
            }
        }
    }
}
