use crate::entry::CEntry::{self, *};
use crate::error::{Error, Result};
use crate::natcong::NatCong;
use crate::partition::{green, normal_closure, pd, Green, NormalSubgroup, Partition};
use crate::twisted::TwistedElement;

use super::types::{CPair, CRow, InfiniteCong};

struct Normalized<'a> {
    i: usize,
    alpha: &'a Partition,
    q: usize,
    j: usize,
    beta: &'a Partition,
    r: usize,
}

fn normalize<'a>(a: &'a TwistedElement, b: &'a TwistedElement) -> Result<Normalized<'a>> {
    let (TwistedElement::Pair(i, alpha), TwistedElement::Pair(j, beta)) = (a, b) else {
        return Err(Error::ZeroOperand);
    };
    if alpha.n() != beta.n() {
        return Err(Error::SizeMismatch(alpha.n(), beta.n()));
    }
    let (q, r) = (alpha.rank(), beta.rank());
    Ok(if q < r || (q == r && i > j) {
        Normalized { i: *j, alpha: beta, q: r, j: *i, beta: alpha, r: q }
    } else {
        Normalized { i: *i, alpha, q, j: *j, beta, r }
    })
}

/// Symbol attached to a pair of low-rank partitions outside `μ_1`.
fn low_class(alpha: &Partition, beta: &Partition) -> CEntry {
    let (ha, hb) = (alpha.hat(), beta.hat());
    if green(Green::L, &ha, &hb) {
        Lambda
    } else if green(Green::R, &ha, &hb) {
        Rho
    } else {
        R
    }
}

fn ray(from: usize, e: CEntry) -> CRow {
    CRow::from_fn(from, |c| if c < from { Delta } else { e })
}

/// Which of the sixteen shapes of principal congruence `(a, b)^♯` falls into.
pub fn principal_case(a: &TwistedElement, b: &TwistedElement) -> Result<u8> {
    let Normalized { i, alpha, q, j, beta, r } = normalize(a, b)?;
    let same = alpha == beta;
    Ok(match () {
        _ if same && i == j => 1,
        _ if same => 2,
        _ if q >= 2 && !green(Green::H, alpha, beta) => 3,
        _ if q >= 3 && i == j => 4,
        _ if q >= 3 => {
            if pd(alpha, beta)?.is_even() {
                5
            } else {
                6
            }
        }
        _ if q == 2 && i == j => 7,
        _ if q == 2 => 8,
        _ if q == 0 => 11,
        _ => {
            let mu = alpha.hat() == beta.hat();
            match (r, mu) {
                (1, true) if i == j => 12,
                (1, true) => 13,
                (0, true) if i <= j => 14,
                (0, true) if i == j + 1 => 15,
                (0, true) => 16,
                (0, false) if i > j => 10,
                _ => 9,
            }
        }
    })
}

/// The principal congruence generated by `(a, b)` in `P^Φ_n`.
pub fn principal_cpair(a: &TwistedElement, b: &TwistedElement) -> Result<InfiniteCong> {
    let case = principal_case(a, b)?;
    let Normalized { i, alpha, q, j, beta, r } = normalize(a, b)?;
    let n = alpha.n();
    let mut p = CPair::delta(n);
    let mut exceptional = false;
    match case {
        1 => {}
        2 => {
            for s in 0..=q {
                p.theta[s] = NatCong::generated(i, j);
            }
        }
        3 => {
            for s in 0..=q {
                let m = if s <= r { i.min(j) } else { i };
                p.rows[s] = ray(m, R);
                p.theta[s] = NatCong::arith(m, 1);
            }
        }
        4..=6 => {
            for s in 0..q {
                p.rows[s] = ray(i, R);
                p.theta[s] = NatCong::arith(i, 1);
            }
            match case {
                4 => p.rows[q] = ray(i, N(normal_closure(&pd(alpha, beta)?))),
                5 => {
                    p.rows[q] = ray(i, N(normal_closure(&pd(alpha, beta)?)));
                    p.theta[q] = NatCong::generated(i, j);
                }
                _ => {
                    p.rows[q] = ray(i, N(NormalSubgroup::alternating(q)));
                    p.theta[q] = NatCong::arith(i, 2 * (j - i));
                    exceptional = true;
                }
            }
        }
        7 => {
            p.rows[2] = ray(i, N(NormalSubgroup::full(2)));
            p.rows[1] = ray(i, Mu);
            p.rows[0] = ray(i, Mu);
        }
        8 => {
            let d = j - i;
            p.rows[1] = ray(i, Mu);
            p.rows[0] = ray(i, Mu);
            p.theta[2] = NatCong::arith(i, 2 * d);
            p.theta[1] = NatCong::arith(i, d);
            p.theta[0] = NatCong::arith(i, d);
            exceptional = true;
        }
        9 => {
            let xi = low_class(alpha, beta);
            for s in 0..=1 {
                p.rows[s] = ray(i, xi);
                p.theta[s] = NatCong::arith(i, 1);
            }
        }
        10 => {
            let xi = low_class(alpha, beta);
            p.rows[1] = ray(i, xi);
            p.theta[1] = NatCong::arith(i, 1);
            p.rows[0] = ray(j, xi);
            p.theta[0] = NatCong::arith(j, 1);
        }
        11 => {
            p.rows[0] = ray(i, low_class(alpha, beta));
            p.theta[0] = NatCong::arith(i, 1);
        }
        12 => {
            let zeta = match (green(Green::R, alpha, beta), green(Green::L, alpha, beta)) {
                (true, false) => MuUp,
                (false, true) => MuDown,
                _ => Mu,
            };
            p.rows[1] = CRow::from_fn(i + 1, |c| match c.cmp(&i) {
                std::cmp::Ordering::Less => Delta,
                std::cmp::Ordering::Equal => zeta,
                std::cmp::Ordering::Greater => Mu,
            });
            p.rows[0] = ray(i, Mu);
        }
        13 | 14 => {
            let top = if case == 13 { j } else { j + 1 };
            for s in 0..=1 {
                p.rows[s] = ray(i, Mu);
                p.theta[s] = NatCong::generated(i, top);
            }
        }
        15 => {
            p.rows[1] = ray(i, Mu);
            p.rows[0] = ray(j, Mu);
        }
        _ => {
            let d = i - j - 1;
            p.rows[1] = ray(i, Mu);
            p.rows[0] = ray(j, Mu);
            p.theta[1] = NatCong::arith(i + 1, d);
            p.theta[0] = NatCong::arith(j + 1, d);
        }
    }
    Ok(InfiniteCong { pair: p.canonical(), exceptional })
}
