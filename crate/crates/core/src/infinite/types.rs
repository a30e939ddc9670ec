use std::fmt;

use serde::{Deserialize, Serialize};

use crate::entry::CEntry::{self, *};
use crate::error::{Error, Result};
use crate::natcong::NatCong;
use crate::partition::NsLabel;

/// An eventually constant row: `prefix` followed by `limit` forever.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CRow {
    pub prefix: Vec<CEntry>,
    pub limit: CEntry,
}

impl CRow {
    pub fn new(mut prefix: Vec<CEntry>, limit: CEntry) -> Self {
        while prefix.last() == Some(&limit) {
            prefix.pop();
        }
        CRow { prefix, limit }
    }

    pub fn constant(e: CEntry) -> Self {
        CRow { prefix: vec![], limit: e }
    }

    /// Row whose entry at column `c` is `f(c)`, constant from column `len` on.
    pub fn from_fn(len: usize, f: impl Fn(usize) -> CEntry) -> Self {
        let prefix = (0..len).map(&f).collect();
        CRow::new(prefix, f(len))
    }

    pub fn get(&self, i: usize) -> CEntry {
        self.prefix.get(i).copied().unwrap_or(self.limit)
    }

    /// First column holding `e`, if any.
    pub fn first(&self, e: CEntry) -> Option<usize> {
        self.prefix
            .iter()
            .position(|&x| x == e)
            .or(if self.limit == e { Some(self.prefix.len()) } else { None })
    }

    /// First column holding a symbol other than `Δ`.
    pub fn first_non_delta(&self) -> Option<usize> {
        self.prefix
            .iter()
            .position(|&x| x != Delta)
            .or(if self.limit != Delta { Some(self.prefix.len()) } else { None })
    }

    pub fn is_all(&self, e: CEntry) -> bool {
        self.prefix.is_empty() && self.limit == e
    }
}

/// A C-pair `(Θ, M)`; row 0 is the bottom row.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CPair {
    pub n: usize,
    pub theta: Vec<NatCong>,
    pub rows: Vec<CRow>,
}

impl CPair {
    pub fn new(theta: Vec<NatCong>, rows: Vec<CRow>) -> Self {
        assert_eq!(theta.len(), rows.len());
        assert!(!rows.is_empty());
        CPair { n: rows.len() - 1, theta, rows }
    }

    /// All-`Δ` matrix with trivial chain.
    pub fn delta(n: usize) -> Self {
        CPair::new(vec![NatCong::Trivial; n + 1], vec![CRow::constant(Delta); n + 1])
    }

    pub fn entry(&self, q: usize, i: usize) -> CEntry {
        self.rows[q].get(i)
    }

    /// Number of columns after which every row is constant.
    pub fn width(&self) -> usize {
        self.rows.iter().map(|r| r.prefix.len()).max().unwrap_or(0)
    }

    pub fn is_delta(&self) -> bool {
        self.theta.iter().all(NatCong::is_trivial) && self.rows.iter().all(|r| r.is_all(Delta))
    }

    /// Representative used for equality and order when `n = 1`, where a few row types
    /// describe the same congruence: an all-`R` tail in row 0 replaces an all-`Δ` low part with
    /// `θ_0 = (m, m+1)♯`, and `ξ = R` replaces `ξ = μ` at period 1.
    pub fn canonical(&self) -> CPair {
        let mut p = self.clone();
        if p.n != 1 {
            return p;
        }
        let Ok(t) = classify_low(&p) else { return p };
        let lifted = match t {
            LowType::Rt1 => match p.theta[0] {
                NatCong::Arith { min, per: 1 } => Some(LowType::Rt3 { m: min, xi: R }),
                _ => None,
            },
            LowType::Rt4 { m, d: 1, xi: Mu } => Some(LowType::Rt4 { m, d: 1, xi: R }),
            LowType::Rt5 { i, m, d: 1, zeta, xi: Mu } => Some(LowType::Rt5 { i, m, d: 1, zeta, xi: R }),
            LowType::Rt6 { m, l, d: 1, zeta, xi: Mu } => Some(LowType::Rt6 { m, l, d: 1, zeta, xi: R }),
            LowType::Rt7 { m, l, d: 1, xi: Mu } => Some(LowType::Rt7 { m, l, d: 1, xi: R }),
            _ => None,
        };
        if let Some(t) = lifted {
            let (r0, r1) = t.rows();
            p.rows[0] = r0;
            p.rows[1] = r1;
        }
        p
    }

    pub fn low_type(&self) -> Result<LowType> {
        classify_low(self).map_err(|v| Error::Invalid(v.to_string()))
    }
}

impl fmt::Display for CPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.width() + 1;
        for q in (0..=self.n).rev() {
            let cells: Vec<String> = (0..w).map(|i| format!("{:>3}", self.entry(q, i).glyph())).collect();
            writeln!(f, "{q:>2} |{} … | {}", cells.join(" "), self.theta[q])?;
        }
        Ok(())
    }
}

/// A congruence of `P^Φ_n`: `cg(Π)`, or `cgx(Π)` when `exceptional` is set.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct InfiniteCong {
    #[serde(flatten)]
    pub pair: CPair,
    pub exceptional: bool,
}

impl InfiniteCong {
    pub fn cg(pair: CPair) -> Self {
        InfiniteCong { pair, exceptional: false }
    }

    pub fn cgx(pair: CPair) -> Self {
        InfiniteCong { pair, exceptional: true }
    }
}

/// Row types of rows 0 and 1, with their parameters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LowType {
    Rt1,
    Rt2 { i: usize, zeta: CEntry },
    Rt3 { m: usize, xi: CEntry },
    Rt4 { m: usize, d: usize, xi: CEntry },
    Rt5 { i: usize, m: usize, d: usize, zeta: CEntry, xi: CEntry },
    Rt6 { m: usize, l: usize, d: usize, zeta: CEntry, xi: CEntry },
    Rt7 { m: usize, l: usize, d: usize, xi: CEntry },
}

impl LowType {
    /// `(μin_0, μin_1)` for the types with matched `μ`s that start at a fixed offset.
    pub fn mu_in(&self) -> Option<(usize, usize)> {
        match *self {
            LowType::Rt2 { i, .. } | LowType::Rt5 { i, .. } => Some((i, i + 1)),
            LowType::Rt7 { m, l, .. } => Some((m - 1, l - 1)),
            _ => None,
        }
    }

    /// Rows 0 and 1 described by this type.
    pub fn rows(&self) -> (CRow, CRow) {
        match *self {
            LowType::Rt1 => (CRow::constant(Delta), CRow::constant(Delta)),
            LowType::Rt2 { i, zeta } => (
                CRow::from_fn(i, |c| if c < i { Delta } else { Mu }),
                CRow::from_fn(i + 1, |c| match c.cmp(&i) {
                    std::cmp::Ordering::Less => Delta,
                    std::cmp::Ordering::Equal => zeta,
                    std::cmp::Ordering::Greater => Mu,
                }),
            ),
            LowType::Rt3 { m, xi } => {
                (CRow::from_fn(m, |c| if c < m { Delta } else { xi }), CRow::constant(Delta))
            }
            LowType::Rt4 { m, xi, .. } => {
                let r = CRow::from_fn(m, |c| if c < m { Delta } else { xi });
                (r.clone(), r)
            }
            LowType::Rt5 { i, m, zeta, xi, .. } => (
                CRow::from_fn(m, |c| if c < i { Delta } else if c < m { Mu } else { xi }),
                CRow::from_fn(m + 1, |c| {
                    if c < i {
                        Delta
                    } else if c == i {
                        zeta
                    } else if c <= m {
                        Mu
                    } else {
                        xi
                    }
                }),
            ),
            LowType::Rt6 { m, l, zeta, xi, .. } => (
                CRow::from_fn(m, |c| if c < m { Delta } else { xi }),
                CRow::from_fn(l, |c| {
                    if c + 1 < l {
                        Delta
                    } else if c + 1 == l {
                        zeta
                    } else {
                        xi
                    }
                }),
            ),
            LowType::Rt7 { m, l, xi, .. } => (
                CRow::from_fn(m, |c| {
                    if c + 1 < m {
                        Delta
                    } else if c + 1 == m {
                        Mu
                    } else {
                        xi
                    }
                }),
                CRow::from_fn(l, |c| {
                    if c + 1 < l {
                        Delta
                    } else if c + 1 == l {
                        Mu
                    } else {
                        xi
                    }
                }),
            ),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            LowType::Rt1 => "RT1",
            LowType::Rt2 { .. } => "RT2",
            LowType::Rt3 { .. } => "RT3",
            LowType::Rt4 { .. } => "RT4",
            LowType::Rt5 { .. } => "RT5",
            LowType::Rt6 { .. } => "RT6",
            LowType::Rt7 { .. } => "RT7",
        }
    }

    fn params_ok(&self, n: usize) -> bool {
        let zeta_ok = |z: CEntry| matches!(z, Delta | MuUp | MuDown | Mu) && (n >= 2 || z == Delta);
        let xi_ok = |x: CEntry, d: usize| {
            let allowed = if d == 1 { matches!(x, Mu | Rho | Lambda | R) } else { x == Mu };
            allowed && (n >= 2 || matches!(x, Mu | R))
        };
        match *self {
            LowType::Rt1 => true,
            LowType::Rt2 { zeta, .. } => zeta_ok(zeta),
            LowType::Rt3 { xi, .. } => matches!(xi, Rho | Lambda | R) && (n >= 2 || xi == R),
            LowType::Rt4 { d, xi, .. } => xi_ok(xi, d),
            LowType::Rt5 { i, m, d, zeta, xi } => i < m && zeta_ok(zeta) && xi_ok(xi, d),
            LowType::Rt6 { m, l, d, zeta, xi } => m < l && zeta_ok(zeta) && xi_ok(xi, d),
            LowType::Rt7 { m, l, d, xi } => 0 < m && m + 1 < l && (l - 1 - m) % d == 0 && xi_ok(xi, d),
        }
    }
}

/// Row types of rows `q ≥ 2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HighType {
    Rt8,
    /// `Δ` before `i`, `N`-symbols from `i`, constant from `k`.
    Rt9 { i: usize, k: usize },
    /// `Δ` before `i`, `N`-symbols on `[i, m)`, `R` from `m`.
    Rt10 { i: usize, m: usize },
}

/// A failed clause of the C-pair definition.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    pub row: Option<usize>,
    pub column: Option<usize>,
    pub clause: String,
}

impl Violation {
    pub(crate) fn new(row: Option<usize>, column: Option<usize>, clause: impl Into<String>) -> Self {
        Violation { row, column, clause: clause.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.row, self.column) {
            (Some(q), Some(i)) => write!(f, "row {q}, column {i}: {}", self.clause),
            (Some(q), None) => write!(f, "row {q}: {}", self.clause),
            _ => write!(f, "{}", self.clause),
        }
    }
}

/// Identifies the type of rows 0 and 1 together with its parameters.
pub fn classify_low(p: &CPair) -> std::result::Result<LowType, Violation> {
    let (r0, r1) = (&p.rows[0], p.rows.get(1).cloned().unwrap_or(CRow::constant(Delta)));
    let (t0, t1) = (p.theta[0], p.theta.get(1).copied().unwrap_or(NatCong::Trivial));
    let mut cands = Vec::new();
    if r0.is_all(Delta) && r1.is_all(Delta) {
        cands.push(LowType::Rt1);
    }
    let xi = r0.limit;
    match (t0, t1) {
        (NatCong::Trivial, NatCong::Trivial) => {
            if let Some(i) = r0.first_non_delta() {
                cands.push(LowType::Rt2 { i, zeta: r1.get(i) });
            }
        }
        (NatCong::Arith { min: m, per: d }, t1) => {
            if d == 1 {
                cands.push(LowType::Rt3 { m, xi });
            }
            let NatCong::Arith { min: l, per: d1 } = t1 else { return finish(p, cands) };
            if d != d1 {
                return finish(p, cands);
            }
            if l == m {
                cands.push(LowType::Rt4 { m, d, xi });
            }
            if l > m {
                if l == m + 1 {
                    if let Some(i) = r0.first_non_delta() {
                        cands.push(LowType::Rt5 { i, m, d, zeta: r1.get(i), xi });
                    }
                }
                cands.push(LowType::Rt6 { m, l, d, zeta: r1.get(l - 1), xi });
                cands.push(LowType::Rt7 { m, l, d, xi });
            }
        }
        _ => {}
    }
    finish(p, cands)
}

fn finish(p: &CPair, cands: Vec<LowType>) -> std::result::Result<LowType, Violation> {
    let (r0, r1) = (&p.rows[0], p.rows.get(1).cloned().unwrap_or(CRow::constant(Delta)));
    let n = p.n;
    let hit: Vec<LowType> = cands
        .into_iter()
        .filter(|t| t.params_ok(n))
        .filter(|t| {
            let (a, b) = t.rows();
            &a == r0 && b == r1
        })
        .collect();
    debug_assert!(hit.len() <= 1, "row types overlap: {hit:?}");
    hit.first()
        .copied()
        .ok_or_else(|| Violation::new(None, None, "rows 0 and 1 match none of the row types RT1-RT7 for the given θ0, θ1"))
}

/// Identifies the type of row `q ≥ 2`.
pub fn classify_high(p: &CPair, q: usize) -> std::result::Result<HighType, Violation> {
    let row = &p.rows[q];
    let bad = |c: Option<usize>, s: &str| Violation::new(Some(q), c, s);
    for c in 0..=row.prefix.len() {
        let e = row.get(c);
        match e {
            Delta | R => {}
            N(g) if g.q == q => {}
            _ => return Err(bad(Some(c), "symbol not allowed in this row")),
        }
    }
    if row.is_all(Delta) {
        return Ok(HighType::Rt8);
    }
    let i = row.first_non_delta().unwrap();
    let m = row.first(R);
    let end = m.unwrap_or(row.prefix.len());
    for c in i..end {
        let (a, b) = (row.get(c), row.get(c + 1));
        if !a.is_n() {
            return Err(bad(Some(c), "Δ after an N-symbol"));
        }
        if b.is_n() && !a.leq(&b) {
            return Err(bad(Some(c + 1), "N-symbols not increasing"));
        }
    }
    match m {
        Some(m) => {
            if (m..=row.prefix.len()).any(|c| row.get(c) != R) {
                return Err(bad(Some(m), "symbol after R"));
            }
            if p.theta[q] != NatCong::arith(m, 1) {
                return Err(bad(None, "R from column m needs θ_q = (m, m+1)♯"));
            }
            Ok(HighType::Rt10 { i, m })
        }
        None => {
            let k = row.prefix.len();
            if p.theta[q].least().is_some_and(|mq| mq < k) {
                return Err(bad(None, "min θ_q is smaller than the column where the row becomes constant"));
            }
            Ok(HighType::Rt9 { i, k })
        }
    }
}

pub fn validate_cpair(p: &CPair) -> std::result::Result<(), Vec<Violation>> {
    let mut v = Vec::new();
    if p.rows.len() != p.n + 1 || p.theta.len() != p.n + 1 || p.n == 0 {
        return Err(vec![Violation::new(None, None, "need n ≥ 1 and n+1 rows and congruences")]);
    }
    for (q, row) in p.rows.iter().enumerate() {
        if row.prefix.last() == Some(&row.limit) {
            v.push(Violation::new(Some(q), None, "row not in canonical form"));
        }
    }
    for q in 1..=p.n {
        if !p.theta[q].leq(&p.theta[q - 1]) {
            v.push(Violation::new(Some(q), None, "θ_q not contained in θ_{q-1}"));
        }
    }
    if let Err(e) = classify_low(p) {
        v.push(e);
    }
    for q in 2..=p.n {
        if let Err(e) = classify_high(p, q) {
            v.push(e);
        }
    }
    let w = p.width();
    for q in 0..=p.n {
        for c in 0..=w {
            let e = p.entry(q, c);
            if p.n == 1 && !matches!(e, Delta | Mu | R) {
                v.push(Violation::new(Some(q), Some(c), "only Δ, μ, R allowed when n = 1"));
            }
            if c < w && !e.leq(&p.entry(q, c + 1)) {
                v.push(Violation::new(Some(q), Some(c), "row not weakly increasing"));
            }
            if q >= 1 {
                let below = p.entry(q - 1, c);
                if e.is_n() && matches!(below, Delta | MuUp | MuDown | N(_)) {
                    v.push(Violation::new(Some(q), Some(c), "N-symbol above Δ, μ↑, μ↓ or N"));
                }
                if e == R && below != R {
                    v.push(Violation::new(Some(q), Some(c), "R not above R"));
                }
            }
        }
    }
    if v.is_empty() {
        Ok(())
    } else {
        Err(v)
    }
}

/// The exceptional row `x(M)` of a valid C-pair, with `θ̃_q`.
pub fn exceptional_row(p: &CPair) -> Option<(usize, NatCong)> {
    for q in 2..=p.n {
        if let NatCong::Arith { min: m, per } = p.theta[q] {
            if per % 2 != 0 {
                continue;
            }
            let half = NatCong::arith(m, per / 2);
            let ok = if q > 2 {
                p.entry(q, m) == N(crate::partition::NormalSubgroup { q, label: NsLabel::Alternating })
            } else {
                p.entry(2, m) == Delta && matches!(p.entry(1, m), Mu | Rho | Lambda | R) && half.leq(&p.theta[1])
            };
            if ok {
                return Some((q, half));
            }
        }
    }
    None
}
