use serde::Serialize;

use crate::entry::CEntry::{self, *};
use crate::natcong::NatCong;
use crate::partition::{NormalSubgroup, NsLabel, Partition, Permutation};
use crate::twisted::TwistedElement;

use super::membership::{cg_contains, cgx_contains};
use super::order::pair_leq_c;
use super::principal::principal_cpair;
use super::types::{classify_low, exceptional_row, CPair, CRow, InfiniteCong, LowType};

pub type ElementPair = (TwistedElement, TwistedElement);

fn el(i: usize, a: Partition) -> TwistedElement {
    TwistedElement::Pair(i, a)
}

fn part(n: usize, blocks: &[Vec<i32>]) -> Partition {
    Partition::new(n, blocks).expect("sample partition")
}

fn filled(n: usize, mut blocks: Vec<Vec<i32>>) -> Partition {
    for k in 1..=n as i32 {
        for p in [k, -k] {
            if !blocks.iter().any(|b| b.contains(&p)) {
                blocks.push(vec![p]);
            }
        }
    }
    part(n, &blocks)
}

/// Rank-0 partition whose `hat`-class relation to the all-singletons partition is `xi`
/// (`λ`, `ρ` or `R`); needs `n ≥ 2`.
pub(crate) fn rank0_partner(n: usize, xi: CEntry) -> Partition {
    match xi {
        Lambda => filled(n, vec![vec![1, 2]]),
        Rho => filled(n, vec![vec![-1, -2]]),
        _ => filled(n, vec![vec![1, 2], vec![-1, -2]]),
    }
}

/// Rank-1 partition `β ≠ {1,1'}` with the same hat, realising `ζ ∈ {μ↑, μ↓, μ}`; needs `n ≥ 2`.
pub(crate) fn rank1_partner(n: usize, zeta: CEntry) -> Partition {
    match zeta {
        MuUp => filled(n, vec![vec![1, -2]]),
        MuDown => filled(n, vec![vec![2, -1]]),
        _ => filled(n, vec![vec![2, -2]]),
    }
}

pub(crate) fn rank_q(n: usize, q: usize) -> Partition {
    Partition::partial_identity(n, q)
}

/// Rank-`q` partition `H`-related to the partial identity whose difference generates `g`.
pub(crate) fn rank_q_twisted(n: usize, g: NormalSubgroup) -> Partition {
    let q = g.q;
    let perm = match g.label {
        NsLabel::Klein4 => Permutation::from_cycles(q, &[&[1, 2], &[3, 4]]),
        NsLabel::Alternating => Permutation::from_cycles(q, &[&[1, 2, 3]]),
        _ => Permutation::from_cycles(q, &[&[1, 2]]),
    }
    .expect("sample permutation");
    Partition::from_permutation(n, &perm)
}

fn theta_pair(n: usize, q: usize, t: NatCong) -> Option<ElementPair> {
    let (m, d) = (t.least()?, t.per()?);
    Some((el(m, rank_q(n, q)), el(m + d, rank_q(n, q))))
}

/// Pair generating the Rees congruence of `I_{q1 i1} ∪ I_{q2 i2}` (or of one ideal).
fn rees_pairs(n: usize, a: (usize, usize), b: Option<(usize, usize)>) -> Vec<ElementPair> {
    let (q1, i1) = a;
    match b {
        Some((q2, i2)) if q1 >= 2 => vec![(el(i1, rank_q(n, q1)), el(i2, rank_q(n, q2)))],
        Some((_, i2)) if n >= 2 => vec![(el(i1, rank_q(n, 1)), el(i2, rank0_partner(n, R)))],
        Some(b) => [rees_pairs(n, a, None), rees_pairs(n, b, None)].concat(),
        None if q1 >= 2 => vec![(el(i1, rank_q(n, q1)), el(i1, rank_q(n, q1 - 1)))],
        None if n >= 2 && q1 == 1 => vec![(el(i1, rank_q(n, 1)), el(i1, rank0_partner(n, R)))],
        None if n >= 2 => vec![(el(i1, rank_q(n, 0)), el(i1, rank0_partner(n, R)))],
        None if q1 == 1 => vec![(el(i1, rank_q(n, 1)), el(i1, rank_q(n, 0)))],
        None => vec![(el(i1, rank_q(n, 0)), el(i1 + 1, rank_q(n, 0)))],
    }
}

/// Fixer for a row-2-style start: `ζ` at column `i` of row 1 over `μ` in row 0.
fn zeta_pair(n: usize, i: usize, zeta: CEntry) -> ElementPair {
    if zeta == Delta {
        (el(i + 1, rank_q(n, 1)), el(i, rank_q(n, 0)))
    } else {
        (el(i, rank_q(n, 1)), el(i, rank1_partner(n, zeta)))
    }
}

fn rank0_pair(n: usize, m: usize, xi: CEntry) -> ElementPair {
    (el(m, rank_q(n, 0)), el(m, rank0_partner(n, xi)))
}

fn low_pairs(n: usize, t: LowType) -> Vec<ElementPair> {
    let soft = |xi: CEntry| matches!(xi, Lambda | Rho);
    let mut out = Vec::new();
    match t {
        LowType::Rt1 => {}
        LowType::Rt2 { i, zeta } => out.push(zeta_pair(n, i, zeta)),
        LowType::Rt3 { m, xi } => {
            if soft(xi) {
                out.push(rank0_pair(n, m, xi));
            }
        }
        LowType::Rt4 { m, d, xi } => {
            if soft(xi) {
                out.push((el(m, rank_q(n, 1)), el(m, rank0_partner(n, xi))));
            } else if xi == Mu && n >= 2 {
                out.push((el(m, rank_q(n, 1)), el(m + d, rank1_partner(n, Mu))));
            } else if xi == Mu {
                out.push((el(m, rank_q(n, 1)), el(m + d - 1, rank_q(n, 0))));
            }
        }
        LowType::Rt5 { i, m, zeta, xi, .. } => {
            out.push(zeta_pair(n, i, zeta));
            if soft(xi) {
                out.push(rank0_pair(n, m, xi));
            }
        }
        LowType::Rt6 { m, l, zeta, xi, .. } => {
            if zeta != Delta {
                out.push(zeta_pair(n, l - 1, zeta));
                if soft(xi) {
                    out.push(rank0_pair(n, m, xi));
                }
            } else if xi == Mu {
                out.push(zeta_pair(n, l - 1, Delta));
            } else if soft(xi) {
                out.push((el(l, rank_q(n, 1)), el(m, rank0_partner(n, xi))));
            }
        }
        LowType::Rt7 { m, l, xi, .. } => {
            out.push((el(l - 1, rank_q(n, 1)), el(m - 1, rank_q(n, 0))));
            if soft(xi) {
                out.push(rank0_pair(n, m, xi));
            }
        }
    }
    out
}

/// Generating pairs for a congruence, assembled from Rees corners, chain fixers, row-0/1
/// fixers and `N`-symbol fixers, then thinned while the result still verifies.
pub fn generating_set(s: &InfiniteCong) -> Vec<ElementPair> {
    let p = &s.pair;
    let n = p.n;
    let mut omega = Vec::new();

    let firsts: Vec<Option<usize>> = p.rows.iter().map(|r| r.first(R)).collect();
    let top_r = firsts.iter().rposition(Option::is_some);
    let mut corners = Vec::new();
    if let Some(top) = top_r {
        for q in (0..=top).rev() {
            let f = firsts[q].expect("R below R");
            if q == top || firsts[q + 1] != Some(f) {
                corners.push((q, f));
            }
        }
    }
    for c in corners.chunks(2) {
        omega.extend(rees_pairs(n, c[0], c.get(1).copied()));
    }

    let x = if s.exceptional { exceptional_row(p) } else { None };
    let from = top_r.map_or(0, |t| t + 1);
    for q in from..=n {
        match x {
            Some((xq, half)) if xq == q => {
                let (m, d) = (half.least().unwrap(), half.per().unwrap());
                omega.push((el(m, rank_q(n, q)), el(m + d, rank_q_twisted(n, NormalSubgroup::full(q)))));
            }
            _ => omega.extend(theta_pair(n, q, p.theta[q])),
        }
    }

    if let Ok(t) = classify_low(p) {
        omega.extend(low_pairs(n, t));
    }

    for q in 2..=n {
        let mut seen: Vec<NormalSubgroup> = Vec::new();
        let row = &p.rows[q];
        for c in 0..=row.prefix.len() {
            if let N(g) = row.get(c) {
                if !seen.contains(&g) {
                    seen.push(g);
                    omega.push((el(c, rank_q(n, q)), el(c, rank_q_twisted(n, g))));
                }
            }
        }
    }

    let mut dedup: Vec<ElementPair> = Vec::new();
    for pr in omega {
        if !dedup.contains(&pr) {
            dedup.push(pr);
        }
    }
    if verify_generators(s, &dedup).verified {
        let mut k = dedup.len();
        while k > 0 {
            k -= 1;
            let mut trial = dedup.clone();
            trial.remove(k);
            if verify_generators(s, &trial).verified {
                dedup = trial;
            }
        }
    }
    dedup
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorCheck {
    pub verified: bool,
    pub all_members: bool,
    pub escapes_cg: bool,
    pub dominated: bool,
}

fn contains(s: &InfiniteCong, a: &TwistedElement, b: &TwistedElement) -> bool {
    if s.exceptional {
        cgx_contains(&s.pair, a, b).unwrap_or(false)
    } else {
        cg_contains(&s.pair, a, b)
    }
}

/// Entrywise supremum of C-pairs, with the chain closed downwards.
fn supremum(n: usize, pairs: &[CPair]) -> CPair {
    let w = pairs.iter().map(CPair::width).max().unwrap_or(0) + 1;
    let mut theta = vec![NatCong::Trivial; n + 1];
    let mut rows = Vec::with_capacity(n + 1);
    for q in 0..=n {
        for p in pairs {
            theta[q] = theta[q].join(&p.theta[q]);
        }
        let row = CRow::from_fn(w, |c| pairs.iter().fold(Delta, |acc, p| acc.join(&p.entry(q, c))));
        rows.push(row);
    }
    for q in (1..=n).rev() {
        theta[q - 1] = theta[q - 1].join(&theta[q]);
    }
    CPair::new(theta, rows)
}

/// Congruences on `ℕ` between `lo` and `hi`, when `lo` is nontrivial.
fn nat_interval(lo: NatCong, hi: NatCong) -> Vec<NatCong> {
    let (Some(m_lo), Some(d_lo)) = (lo.least(), lo.per()) else { return vec![] };
    let (Some(m_hi), Some(d_hi)) = (hi.least(), hi.per()) else { return vec![] };
    let mut out = Vec::new();
    for m in m_hi..=m_lo {
        for d in (1..=d_lo).filter(|d| d_lo % d == 0 && d % d_hi == 0) {
            out.push(NatCong::arith(m, d));
        }
    }
    out
}

/// Raises rows 0 and 1 and `θ_0, θ_1` of `lower` to the meet of every row-type
/// configuration lying between `lower` and `upper`.
fn refine_low(lower: &CPair, upper: &CPair) -> Option<CPair> {
    if lower.n < 1 {
        return None;
    }
    let t0 = nat_interval(lower.theta[0], upper.theta[0]);
    let t1 = nat_interval(lower.theta[1], upper.theta[1]);
    if t0.is_empty() || t1.is_empty() {
        return None;
    }
    let w = lower.width().max(upper.width()) + 2;
    let zetas: &[CEntry] = &[Delta, MuUp, MuDown, Mu];
    let xis: &[CEntry] = &[Mu, Lambda, Rho, R];
    let mut best: Option<CPair> = None;
    for &a in &t0 {
        for &b in &t1 {
            let (m, d) = (a.least().unwrap(), a.per().unwrap());
            let (l, d1) = (b.least().unwrap(), b.per().unwrap());
            let mut cands = vec![LowType::Rt1];
            if d == 1 {
                cands.extend([Lambda, Rho, R].map(|xi| LowType::Rt3 { m, xi }));
            }
            if d == d1 {
                for &xi in xis {
                    if l == m {
                        cands.push(LowType::Rt4 { m, d, xi });
                    }
                    if l > m {
                        cands.push(LowType::Rt7 { m, l, d, xi });
                        for &zeta in zetas {
                            cands.push(LowType::Rt6 { m, l, d, zeta, xi });
                            if l == m + 1 {
                                for i in 0..m {
                                    cands.push(LowType::Rt5 { i, m, d, zeta, xi });
                                }
                            }
                        }
                    }
                }
            }
            for t in cands {
                let mut c = lower.clone();
                let (r0, r1) = t.rows();
                c.rows[0] = r0;
                c.rows[1] = r1;
                c.theta[0] = a;
                c.theta[1] = b;
                if classify_low(&c) != Ok(t) {
                    continue;
                }
                let within = (0..=1).all(|q| {
                    (0..=w).all(|i| lower.entry(q, i).leq(&c.entry(q, i)) && c.entry(q, i).leq(&upper.entry(q, i)))
                });
                if !within {
                    continue;
                }
                best = Some(match best {
                    None => c,
                    Some(prev) => {
                        let mut m = prev.clone();
                        for q in 0..=1 {
                            m.theta[q] = prev.theta[q].meet(&c.theta[q]);
                            m.rows[q] = CRow::from_fn(w, |i| prev.entry(q, i).meet(&c.entry(q, i)));
                        }
                        m
                    }
                });
            }
        }
    }
    best
}

/// Sound check that `pairs` generate `s`: every pair lies in `s` (one outside `cg` when
/// `s` is exceptional), and the C-pair of `s` is dominated by the supremum of the
/// principal C-pairs of the pairs, after forcing rows 0 and 1 into a row type.
pub fn verify_generators(s: &InfiniteCong, pairs: &[ElementPair]) -> GeneratorCheck {
    let p = s.pair.canonical();
    let all_members = pairs.iter().all(|(a, b)| contains(s, a, b));
    let escapes_cg = !s.exceptional || pairs.iter().any(|(a, b)| !cg_contains(&s.pair, a, b));
    let mut dominated = false;
    if all_members {
        let principals: Option<Vec<CPair>> =
            pairs.iter().map(|(a, b)| principal_cpair(a, b).ok().map(|c| c.pair)).collect();
        if let Some(principals) = principals {
            let mut sup = supremum(p.n, &principals).canonical();
            dominated = pair_leq_c(&p, &sup);
            if !dominated {
                if let Some(r) = refine_low(&sup, &p) {
                    sup = r;
                    dominated = pair_leq_c(&p, &sup);
                }
            }
        }
    }
    GeneratorCheck { verified: all_members && escapes_cg && dominated, all_members, escapes_cg, dominated }
}
