use crate::entry::CEntry::{self, *};
use crate::error::{Error, Result};
use crate::natcong::NatCong;
use crate::partition::NormalSubgroup;

use super::types::{classify_low, CPair, CRow, InfiniteCong, LowType};

fn row(prefix: &[CEntry], limit: CEntry) -> CRow {
    CRow::new(prefix.to_vec(), limit)
}

/// C-pair on `n` from its lowest rows; higher rows are all `Δ` with trivial chain.
fn padded(n: usize, low: Vec<(CRow, NatCong)>) -> CPair {
    let mut p = CPair::delta(n);
    for (q, (r, t)) in low.into_iter().enumerate() {
        p.rows[q] = r;
        p.theta[q] = t;
    }
    p
}

fn nabla() -> NatCong {
    NatCong::universal()
}

/// The unique coatom of the congruence lattice of `P^Φ_n`.
pub fn coatom(n: usize) -> Result<CPair> {
    if n == 0 {
        return Err(Error::Invalid("coatom needs n ≥ 1".into()));
    }
    let top = if n >= 2 { N(NormalSubgroup::full(n)) } else { Delta };
    let mut p = CPair::delta(n);
    for q in 0..n {
        p.rows[q] = CRow::constant(R);
        p.theta[q] = nabla();
    }
    p.rows[n] = row(&[top], R);
    p.theta[n] = NatCong::arith(1, 1);
    Ok(p)
}

/// Member `Π^l` (`l ≥ 2`) of an infinite antichain: `μ` across row 0 with `θ_0 = (1,2)♯`,
/// `μ` from column `l-1` in row 1 with `θ_1 = (l, l+1)♯`.
pub fn antichain_member(n: usize, l: usize) -> Result<CPair> {
    if l < 2 || n == 0 {
        return Err(Error::Invalid(format!("antichain member needs l ≥ 2 and n ≥ 1, got l = {l}, n = {n}")));
    }
    let r1 = CRow::from_fn(l - 1, |c| if c + 1 < l { Delta } else { Mu });
    Ok(padded(n, vec![(CRow::constant(Mu), NatCong::arith(1, 1)), (r1, NatCong::arith(l, 1))]).canonical())
}

/// Five congruences forming a diamond, listed bottom, the three middles, top.
pub fn diamond_witness(n: usize) -> Result<Vec<InfiniteCong>> {
    match n {
        0 => Err(Error::Invalid("no diamond witness for n = 0".into())),
        1 => {
            let b = padded(1, vec![(row(&[Delta], R), NatCong::arith(1, 1)), (row(&[Delta, Delta], R), NatCong::arith(2, 1))]);
            let l = padded(1, vec![(row(&[Mu], R), NatCong::arith(1, 1)), (row(&[Delta, Mu], R), NatCong::arith(2, 1))]);
            let m = padded(1, vec![(row(&[Delta], R), NatCong::arith(1, 1)), (row(&[Delta], R), NatCong::arith(1, 1))]);
            let r = padded(1, vec![(CRow::constant(R), nabla()), (row(&[Delta, Delta], R), NatCong::arith(2, 1))]);
            Ok([b, l, m, r, coatom(1)?].into_iter().map(InfiniteCong::cg).collect())
        }
        _ => {
            let [t1, t2, _, _] = chains();
            let (m1, m2) = (s2_matrix(n, None), s2_matrix(n, Some(0)));
            Ok(vec![
                InfiniteCong::cg(with_chain(&m1, t1)),
                InfiniteCong::cg(with_chain(&m1, t2)),
                InfiniteCong::cgx(with_chain(&m1, t1)),
                InfiniteCong::cg(with_chain(&m2, t1)),
                InfiniteCong::cg(with_chain(&m2, t2)),
            ])
        }
    }
}

/// Five congruences forming a pentagon, listed bottom, the lone side, the lower and upper
/// elements of the two-step side, top.
pub fn pentagon_witness(n: usize) -> Result<Vec<InfiniteCong>> {
    match n {
        0 => Err(Error::Invalid("no pentagon witness for n = 0".into())),
        1 => {
            let b = padded(1, vec![(CRow::constant(Delta), NatCong::arith(0, 2)), (CRow::constant(Delta), NatCong::arith(1, 2))]);
            let l = padded(1, vec![(CRow::constant(Mu), NatCong::arith(0, 2)), (row(&[Delta], Mu), NatCong::arith(1, 2))]);
            let lo = padded(1, vec![(CRow::constant(R), nabla()), (CRow::constant(Delta), NatCong::arith(1, 2))]);
            let hi = padded(1, vec![(CRow::constant(R), nabla()), (CRow::constant(Delta), NatCong::arith(1, 1))]);
            Ok([b, l, lo, hi, coatom(1)?].into_iter().map(InfiniteCong::cg).collect())
        }
        _ => {
            let [t1, t2, t3, t4] = chains();
            let (m1, m2, m3) = (s2_matrix(n, None), s2_matrix(n, Some(0)), s2_matrix(n, Some(1)));
            Ok(vec![
                InfiniteCong::cgx(with_chain(&m1, t4)),
                InfiniteCong::cgx(with_chain(&m1, t1)),
                InfiniteCong::cg(with_chain(&m3, t3)),
                InfiniteCong::cg(with_chain(&m2, t3)),
                InfiniteCong::cg(with_chain(&m2, t2)),
            ])
        }
    }
}

/// `θ_2` for the four chains `(∇, ∇, θ_2, Δ, …)` used by the `n ≥ 2` witnesses.
fn chains() -> [NatCong; 4] {
    [NatCong::arith(0, 2), nabla(), NatCong::arith(1, 1), NatCong::arith(1, 2)]
}

/// Rows 0 and 1 all `R`; row 2 is `S_2` from column `s2_from`, else all `Δ`.
fn s2_matrix(n: usize, s2_from: Option<usize>) -> CPair {
    let mut p = CPair::delta(n);
    p.rows[0] = CRow::constant(R);
    p.rows[1] = CRow::constant(R);
    p.theta[0] = nabla();
    p.theta[1] = nabla();
    if let Some(f) = s2_from {
        p.rows[2] = CRow::from_fn(f, |c| if c < f { Delta } else { N(NormalSubgroup::full(2)) });
    }
    p
}

fn with_chain(p: &CPair, theta2: NatCong) -> CPair {
    let mut p = p.clone();
    p.theta[2] = theta2;
    p
}

/// A nontrivial congruence strictly below `s`.
pub fn strictly_smaller(s: &InfiniteCong) -> Result<InfiniteCong> {
    let p = s.pair.canonical();
    if s.exceptional {
        return Ok(InfiniteCong::cg(p));
    }
    if p.is_delta() {
        return Err(Error::Invalid("the trivial congruence has nothing below it".into()));
    }
    if let Some(q) = (0..=p.n).rev().find(|&q| !p.theta[q].is_trivial()) {
        let mut t = p.clone();
        for r in t.rows.iter_mut() {
            *r = CRow::constant(Delta);
        }
        if t.canonical() == p {
            let (m, d) = (p.theta[q].least().unwrap(), p.theta[q].per().unwrap());
            t.theta[q] = NatCong::arith(m, 2 * d);
        }
        return Ok(InfiniteCong::cg(t.canonical()));
    }
    match classify_low(&p) {
        Ok(LowType::Rt2 { i, zeta }) => {
            let (r0, r1) = LowType::Rt2 { i: i + 1, zeta }.rows();
            let mut t = p.clone();
            t.rows[0] = r0;
            t.rows[1] = r1;
            if t.n >= 2 {
                t.rows[2] = CRow::constant(Delta);
            }
            Ok(InfiniteCong::cg(t))
        }
        _ => Err(Error::Invalid("nontrivial congruence with trivial chain must have rows 0 and 1 of the μ-start type".into())),
    }
}
