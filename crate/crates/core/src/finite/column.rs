use std::fmt;

use serde::{Serialize, Serializer};

use crate::entry::CEntry::{self, *};
use crate::partition::NormalSubgroup;

use super::matrix::FCMatrix;

/// Names of the congruences of `P^Φ_{n,0}`, which are single fC-columns.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum D0Label {
    Delta,
    MuUp,
    MuDown,
    Mu,
    /// `μ` in row 1 under `S_2` in row 2.
    MuS2,
    /// Rees congruence of the ideal of ranks `≤ q`.
    Rees(usize),
    /// `R` below row `q`, the normal subgroup `N ⊴ S_q` in row `q`.
    ReesN(NormalSubgroup),
}

impl fmt::Display for D0Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            D0Label::Delta => write!(f, "Δ"),
            D0Label::MuUp => write!(f, "μ↑"),
            D0Label::MuDown => write!(f, "μ↓"),
            D0Label::Mu => write!(f, "μ"),
            D0Label::MuS2 => write!(f, "μ_S2"),
            D0Label::Rees(q) => write!(f, "R_{q}"),
            D0Label::ReesN(g) => write!(f, "R_{}", g.symbol()),
        }
    }
}

impl Serialize for D0Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Name of a single column (any column of an fC-matrix read with `d = 0`).
pub fn label_column(col: &[CEntry]) -> Option<D0Label> {
    let n = col.len() - 1;
    let top_r = col.iter().take_while(|e| **e == R).count();
    let rest_delta = |from: usize| col.iter().skip(from).all(|e| *e == Delta);
    if top_r == 0 {
        return rest_delta(0).then_some(D0Label::Delta);
    }
    if rest_delta(top_r) {
        return Some(D0Label::Rees(top_r - 1));
    }
    match (top_r, col[top_r]) {
        (1, MuUp) if rest_delta(2) => Some(D0Label::MuUp),
        (1, MuDown) if rest_delta(2) => Some(D0Label::MuDown),
        (1, Mu) if rest_delta(2) => Some(D0Label::Mu),
        (1, Mu) if n >= 2 && col[2] == N(NormalSubgroup::full(2)) && rest_delta(3) => Some(D0Label::MuS2),
        (q, N(g)) if q >= 2 && g.q == q && rest_delta(q + 1) => Some(D0Label::ReesN(g)),
        _ => None,
    }
}

/// Name of a congruence of `P^Φ_{n,0}`.
pub fn label_d0(m: &FCMatrix) -> Option<D0Label> {
    if m.d != 0 {
        return None;
    }
    label_column(&m.grid.iter().map(|r| r[0]).collect::<Vec<_>>())
}
