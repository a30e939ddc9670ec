use crate::entry::CEntry::{self, *};
use crate::error::{Error, Result};
use crate::partition::{green, normal_closure, pd, Green, NormalSubgroup, Partition};
use crate::twisted::TwistedElement::{self, Pair, Zero};

use super::matrix::{FCMatrix, FRowType};

fn check(x: &TwistedElement, n: usize, d: usize) -> Result<()> {
    match x {
        Pair(_, a) if a.n() != n => Err(Error::SizeMismatch(a.n(), n)),
        Pair(i, _) if *i > d => Err(Error::ColumnOutOfRange { column: *i, d }),
        Zero(m) if *m != n => Err(Error::SizeMismatch(*m, n)),
        _ => Ok(()),
    }
}

fn with_low(n: usize, d: usize, t: FRowType) -> FCMatrix {
    let mut m = FCMatrix::delta(n, d);
    let (r0, r1) = t.rows(d);
    m.grid[0] = r0;
    m.grid[1] = r1;
    m
}

/// `μ`-start rows with `ζ` at column `i` running to the last column.
fn mu_start(n: usize, d: usize, i: usize, zeta: CEntry) -> FCMatrix {
    if i < d {
        with_low(n, d, FRowType::T2 { i, k: d, zeta })
    } else {
        with_low(n, d, FRowType::T3 { k: d, l: d + 1, zeta })
    }
}

/// The principal congruence `(a, b)^♯` on `P^Φ_{n,d}`.
pub fn principal_fc(a: &TwistedElement, b: &TwistedElement, n: usize, d: usize) -> Result<FCMatrix> {
    if n == 0 {
        return Err(Error::Invalid("principal congruences on P^Φ_{0,d} are not matrix-encoded".into()));
    }
    check(a, n, d)?;
    check(b, n, d)?;
    let ((i, alpha), (j, beta)) = match (a, b) {
        (Zero(_), Zero(_)) => return Ok(FCMatrix::delta(n, d)),
        (Pair(i, x), Zero(_)) | (Zero(_), Pair(i, x)) => return Ok(FCMatrix::rees(n, d, &[(x.rank(), *i)])),
        (Pair(i, x), Pair(j, y)) => normalize((*i, x), (*j, y)),
    };
    let (q, r) = (alpha.rank(), beta.rank());
    if i == j && alpha == beta {
        return Ok(FCMatrix::delta(n, d));
    }
    let rees = || FCMatrix::rees(n, d, &[(q, i), (r, j)]);
    let h = i == j && green(Green::H, alpha, beta);
    if q >= 2 {
        if !h {
            return Ok(rees());
        }
        if q == 2 {
            let mut m = mu_start(n, d, i, Mu);
            for c in i..=d {
                m.grid[2][c] = N(NormalSubgroup::full(2));
            }
            return Ok(m);
        }
        let g = normal_closure(&pd(alpha, beta)?);
        let mut m = FCMatrix::rees(n, d, &[(q - 1, i)]);
        for c in i..=d {
            m.grid[q][c] = N(g);
        }
        return Ok(m);
    }
    let (ha, hb) = (alpha.hat(), beta.hat());
    if q == r {
        if i != j || ha != hb {
            return Ok(rees());
        }
        let zeta = match (green(Green::R, alpha, beta), green(Green::L, alpha, beta)) {
            (true, _) => MuUp,
            (_, true) => MuDown,
            _ => Mu,
        };
        return Ok(mu_start(n, d, i, zeta));
    }
    if j >= i || ha != *beta {
        return Ok(rees());
    }
    if i == j + 1 {
        return Ok(with_low(n, d, FRowType::T2 { i: j, k: d, zeta: Delta }));
    }
    Ok(with_low(n, d, FRowType::T4 { k: j + 1, l: i + 1 }))
}

fn normalize<'a>(a: (usize, &'a Partition), b: (usize, &'a Partition)) -> ((usize, &'a Partition), (usize, &'a Partition)) {
    let (q, r) = (a.1.rank(), b.1.rank());
    if q < r || (q == r && a.0 > b.0) {
        (b, a)
    } else {
        (a, b)
    }
}
