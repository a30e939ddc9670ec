//! Matrix symbols shared by C-pairs and finitary C-matrices, with their partial order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{NormalSubgroup, NsLabel};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum CEntry {
    Delta,
    MuUp,
    MuDown,
    Mu,
    Lambda,
    Rho,
    R,
    /// A nontrivial normal subgroup of `S_q`, `q ≥ 2`.
    N(NormalSubgroup),
}

use CEntry::*;

impl CEntry {
    pub fn n_symbol(q: usize, label: NsLabel) -> Result<CEntry> {
        if label == NsLabel::Trivial || q < 2 {
            return Err(Error::Invalid(format!("no N-symbol {label:?} in degree {q}")));
        }
        Ok(N(NormalSubgroup::new(q, label)?))
    }

    pub fn is_n(&self) -> bool {
        matches!(self, N(_))
    }

    pub fn is_mu_family(&self) -> bool {
        matches!(self, MuUp | MuDown | Mu | Lambda | Rho)
    }

    /// Upper covers in the symbol order, for symbols available when the base size is `n`.
    pub fn upper_covers(&self, n: usize) -> Vec<CEntry> {
        match self {
            Delta => {
                let mut v = vec![MuUp, MuDown];
                for q in 2..=n {
                    v.push(N(NormalSubgroup::nontrivial(q)[0]));
                }
                v
            }
            MuUp | MuDown => vec![Mu],
            Mu => vec![Lambda, Rho],
            Lambda | Rho => vec![R],
            R => vec![],
            N(g) => {
                let all = NormalSubgroup::nontrivial(g.q);
                match all.iter().position(|h| h == g) {
                    Some(p) if p + 1 < all.len() => vec![N(all[p + 1])],
                    _ => vec![R],
                }
            }
        }
    }

    pub fn leq(&self, other: &CEntry) -> bool {
        match (self, other) {
            _ if self == other => true,
            (Delta, _) | (_, R) => true,
            (MuUp | MuDown, Mu | Lambda | Rho) => true,
            (Mu, Lambda | Rho) => true,
            (N(a), N(b)) => a.leq(b),
            _ => false,
        }
    }

    pub fn join(&self, other: &CEntry) -> CEntry {
        if self.leq(other) {
            return *other;
        }
        if other.leq(self) {
            return *self;
        }
        match (self, other) {
            (MuUp, MuDown) | (MuDown, MuUp) => Mu,
            _ => R,
        }
    }

    pub fn meet(&self, other: &CEntry) -> CEntry {
        if self.leq(other) {
            return *self;
        }
        if other.leq(self) {
            return *other;
        }
        match (self, other) {
            (Lambda, Rho) | (Rho, Lambda) => Mu,
            _ => Delta,
        }
    }

    pub fn code(&self) -> String {
        match self {
            Delta => "D".into(),
            MuUp => "mu_up".into(),
            MuDown => "mu_down".into(),
            Mu => "mu".into(),
            Lambda => "lam".into(),
            Rho => "rho".into(),
            R => "R".into(),
            N(g) => format!("N:{}", g.symbol()),
        }
    }

    /// Compact symbol used in grid displays.
    pub fn glyph(&self) -> String {
        match self {
            Delta => "Δ".into(),
            MuUp => "μ↑".into(),
            MuDown => "μ↓".into(),
            Mu => "μ".into(),
            Lambda => "λ".into(),
            Rho => "ρ".into(),
            R => "R".into(),
            N(g) => g.symbol(),
        }
    }
}

impl fmt::Display for CEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.glyph())
    }
}

impl FromStr for CEntry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "D" => Delta,
            "mu_up" => MuUp,
            "mu_down" => MuDown,
            "mu" => Mu,
            "lam" => Lambda,
            "rho" => Rho,
            "R" => R,
            _ => match s.strip_prefix("N:") {
                Some(g) => {
                    let g = NormalSubgroup::parse(g)?;
                    CEntry::n_symbol(g.q, g.label)?
                }
                None => return Err(Error::Invalid(format!("unknown entry {s:?}"))),
            },
        })
    }
}

impl Serialize for CEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.code())
    }
}

impl<'de> Deserialize<'de> for CEntry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Every symbol available when the base size is `n`.
pub fn all_entries(n: usize) -> Vec<CEntry> {
    let mut v = vec![Delta, MuUp, MuDown, Mu, Lambda, Rho, R];
    for q in 2..=n {
        v.extend(NormalSubgroup::nontrivial(q).into_iter().map(N));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn closure_leq(a: CEntry, b: CEntry, n: usize) -> bool {
        let mut stack = vec![a];
        let mut seen = vec![];
        while let Some(x) = stack.pop() {
            if x == b {
                return true;
            }
            if !seen.contains(&x) {
                seen.push(x);
                stack.extend(x.upper_covers(n));
            }
        }
        false
    }

    #[test]
    fn leq_matches_cover_closure() {
        let n = 5;
        for a in all_entries(n) {
            for b in all_entries(n) {
                assert_eq!(a.leq(&b), closure_leq(a, b, n), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn join_and_meet_are_bounds() {
        let all = all_entries(5);
        for a in &all {
            for b in &all {
                let j = a.join(b);
                let m = a.meet(b);
                assert!(a.leq(&j) && b.leq(&j));
                assert!(m.leq(a) && m.leq(b));
                for c in &all {
                    if a.leq(c) && b.leq(c) {
                        assert!(j.leq(c));
                    }
                    if c.leq(a) && c.leq(b) {
                        assert!(c.leq(&m));
                    }
                }
            }
        }
    }

    #[test]
    fn codes_round_trip() {
        for a in all_entries(5) {
            assert_eq!(a.code().parse::<CEntry>().unwrap(), a);
        }
        assert_eq!("N:K4".parse::<CEntry>().unwrap().code(), "N:K4");
        assert!("N:K5".parse::<CEntry>().is_err());
    }
}
