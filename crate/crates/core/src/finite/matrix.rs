use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};

use crate::entry::CEntry::{self, *};
use crate::error::{Error, Result};
use crate::infinite::Violation;
use crate::partition::NormalSubgroup;

/// A finitary C-matrix: `(n+1) × (d+1)` symbols, row 0 first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct FCMatrix {
    pub n: usize,
    pub d: usize,
    pub grid: Vec<Vec<CEntry>>,
}

impl FCMatrix {
    /// Checks the shape only; use [`validate_fc`] for the full definition.
    pub fn new(n: usize, d: usize, grid: Vec<Vec<CEntry>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("fC-matrices need n ≥ 1".into()));
        }
        if grid.len() != n + 1 || grid.iter().any(|r| r.len() != d + 1) {
            return Err(Error::Invalid(format!("grid must be {} × {}", n + 1, d + 1)));
        }
        Ok(FCMatrix { n, d, grid })
    }

    pub fn filled(n: usize, d: usize, e: CEntry) -> Self {
        FCMatrix { n, d, grid: vec![vec![e; d + 1]; n + 1] }
    }

    /// The matrix of the diagonal congruence.
    pub fn delta(n: usize, d: usize) -> Self {
        Self::filled(n, d, Delta)
    }

    pub fn universal(n: usize, d: usize) -> Self {
        Self::filled(n, d, R)
    }

    /// The Rees congruence of the union of the principal ideals `I_{qi}` at `corners`.
    pub fn rees(n: usize, d: usize, corners: &[(usize, usize)]) -> Self {
        let mut m = Self::delta(n, d);
        for &(q, i) in corners {
            for s in 0..=q.min(n) {
                for c in i..=d {
                    m.grid[s][c] = R;
                }
            }
        }
        m
    }

    pub fn get(&self, q: usize, i: usize) -> CEntry {
        self.grid[q][i]
    }

    /// First column holding `R` in row `q`, or `d + 1`.
    pub fn min_row(&self, q: usize) -> usize {
        self.grid[q].iter().position(|e| *e == R).unwrap_or(self.d + 1)
    }

    /// Type of rows 0 and 1, if they match one.
    pub fn row_type(&self) -> Option<FRowType> {
        classify_rows(self).ok()
    }

    /// One-line rendering, rows from top to bottom separated by `/`.
    pub fn label(&self) -> String {
        self.grid
            .iter()
            .rev()
            .map(|r| r.iter().map(|e| e.glyph()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" / ")
    }
}

impl fmt::Display for FCMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self.grid.iter().map(|r| r.iter().map(|e| e.glyph()).collect()).collect();
        let w = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        for (q, row) in cells.iter().enumerate().rev() {
            write!(f, "{q:>2} |")?;
            for c in row {
                write!(f, " {c:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Deserialize)]
struct FCMatrixRepr {
    n: usize,
    d: usize,
    grid: Vec<Vec<CEntry>>,
}

impl<'de> Deserialize<'de> for FCMatrix {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let r = FCMatrixRepr::deserialize(de)?;
        FCMatrix::new(r.n, r.d, r.grid).map_err(serde::de::Error::custom)
    }
}

/// Shapes allowed for rows 0 and 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum FRowType {
    /// Both rows `Δ` before `k`, `R` from `k`.
    T1 { k: usize },
    /// Row 0: `μ` on `[i, k)`, `R` from `k`. Row 1: `ζ` at `i`, `μ` on `(i, k]`, `R` after.
    T2 { i: usize, k: usize, zeta: CEntry },
    /// Row 0: `R` from `k`. Row 1: `ζ` at `l - 1`, `R` from `l`.
    T3 { k: usize, l: usize, zeta: CEntry },
    /// Row 0: `μ` at `k - 1`, `R` from `k`. Row 1: `μ` at `l - 1`, `R` from `l`.
    T4 { k: usize, l: usize },
}

impl FRowType {
    pub fn name(&self) -> &'static str {
        match self {
            FRowType::T1 { .. } => "fRT1",
            FRowType::T2 { .. } => "fRT2",
            FRowType::T3 { .. } => "fRT3",
            FRowType::T4 { .. } => "fRT4",
        }
    }

    /// Whether the parameters are in range for `P^Φ_{n,d}`.
    pub fn params_ok(&self, n: usize, d: usize) -> bool {
        let zeta_ok = |z: &CEntry| match z {
            Delta => true,
            MuUp | MuDown | Mu => n >= 2,
            _ => false,
        };
        match self {
            FRowType::T1 { k } => *k <= d + 1,
            FRowType::T2 { i, k, zeta } => i < k && *k <= d && zeta_ok(zeta),
            FRowType::T3 { k, l, zeta } => k < l && *l <= d + 1 && zeta_ok(zeta),
            FRowType::T4 { k, l } => 0 < *k && k + 1 < *l && *l <= d + 1,
        }
    }

    /// Rows 0 and 1 spelled out over `d + 1` columns.
    pub fn rows(&self, d: usize) -> (Vec<CEntry>, Vec<CEntry>) {
        let w = d + 1;
        let mut r0 = vec![Delta; w];
        let mut r1 = vec![Delta; w];
        let fill = |r: &mut Vec<CEntry>, from: usize, e: CEntry| {
            for x in r.iter_mut().skip(from) {
                *x = e;
            }
        };
        match *self {
            FRowType::T1 { k } => {
                fill(&mut r0, k, R);
                fill(&mut r1, k, R);
            }
            FRowType::T2 { i, k, zeta } => {
                fill(&mut r0, i, Mu);
                fill(&mut r0, k, R);
                fill(&mut r1, i, Mu);
                r1[i] = zeta;
                fill(&mut r1, k + 1, R);
            }
            FRowType::T3 { k, l, zeta } => {
                fill(&mut r0, k, R);
                r1[l - 1] = zeta;
                fill(&mut r1, l, R);
            }
            FRowType::T4 { k, l } => {
                r0[k - 1] = Mu;
                fill(&mut r0, k, R);
                r1[l - 1] = Mu;
                fill(&mut r1, l, R);
            }
        }
        (r0, r1)
    }

    /// Columns of the first matched `μ` in rows 0 and 1, for the types that have one.
    pub fn mu_in(&self) -> Option<(usize, usize)> {
        match *self {
            FRowType::T2 { i, .. } => Some((i, i + 1)),
            FRowType::T4 { k, l } => Some((k - 1, l - 1)),
            _ => None,
        }
    }
}

/// Identifies the type of rows 0 and 1.
pub fn classify_rows(m: &FCMatrix) -> std::result::Result<FRowType, Violation> {
    let (r0, r1) = (&m.grid[0], &m.grid[1]);
    let (k0, k1) = (m.min_row(0), m.min_row(1));
    let first = r0.iter().position(|e| *e != Delta).unwrap_or(m.d + 1);
    let mut cands = vec![FRowType::T1 { k: k0 }, FRowType::T4 { k: k0, l: k1 }];
    if first <= m.d {
        cands.push(FRowType::T2 { i: first, k: k0, zeta: r1[first] });
    }
    if k1 >= 1 {
        cands.push(FRowType::T3 { k: k0, l: k1, zeta: r1[k1 - 1] });
    }
    cands
        .into_iter()
        .find(|t| t.params_ok(m.n, m.d) && t.rows(m.d) == (r0.clone(), r1.clone()))
        .ok_or_else(|| Violation::new(None, None, "rows 0 and 1 match none of the finitary row types"))
}

/// Checks every clause of the definition of a finitary C-matrix.
pub fn validate_fc(m: &FCMatrix) -> std::result::Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    if m.grid.len() != m.n + 1 || m.grid.iter().any(|r| r.len() != m.d + 1) {
        return Err(vec![Violation::new(None, None, "grid has the wrong shape")]);
    }
    if let Err(v) = classify_rows(m) {
        out.push(v);
    }
    for q in 2..=m.n {
        check_high_row(m, q, &mut out);
    }
    for q in 1..=m.n {
        for i in 0..=m.d {
            let (e, below) = (m.grid[q][i], m.grid[q - 1][i]);
            if e.is_n() && matches!(below, Delta | MuUp | MuDown | N(_)) {
                out.push(Violation::new(Some(q), Some(i), format!("N-symbol above {}", below.glyph())));
            }
            if e == R && below != R {
                out.push(Violation::new(Some(q), Some(i), "R not above R"));
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

fn check_high_row(m: &FCMatrix, q: usize, out: &mut Vec<Violation>) {
    let row = &m.grid[q];
    let k = m.min_row(q);
    if row[k.min(m.d + 1)..].iter().any(|e| *e != R) {
        out.push(Violation::new(Some(q), None, "R must fill the row from its first occurrence"));
    }
    let i = row.iter().position(|e| *e != Delta).unwrap_or(m.d + 1).min(k);
    if row[..i].iter().any(|e| *e != Delta) {
        out.push(Violation::new(Some(q), None, "entries before the first N-symbol must be Δ"));
    }
    let mut prev: Option<NormalSubgroup> = None;
    for (c, e) in row.iter().enumerate().take(k).skip(i) {
        match e {
            N(g) if g.q == q => {
                if prev.is_some_and(|p| !p.leq(g)) {
                    out.push(Violation::new(Some(q), Some(c), "N-symbols must increase along the row"));
                }
                prev = Some(*g);
            }
            _ => out.push(Violation::new(Some(q), Some(c), format!("{} is not a nontrivial normal subgroup of S_{q}", e.glyph()))),
        }
    }
}
