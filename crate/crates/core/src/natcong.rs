//! Congruences on the additive monoid `(ℕ, +)`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `Trivial` is `Δ_ℕ`; `Arith { min, per }` is `(min, min+per)♯`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum NatCong {
    Trivial,
    Arith { min: usize, per: usize },
}

impl NatCong {
    pub fn arith(min: usize, per: usize) -> Self {
        assert!(per >= 1, "period must be positive");
        NatCong::Arith { min, per }
    }

    pub fn universal() -> Self {
        NatCong::Arith { min: 0, per: 1 }
    }

    /// The congruence generated by the single pair `(i, j)`.
    pub fn generated(i: usize, j: usize) -> Self {
        if i == j {
            NatCong::Trivial
        } else {
            NatCong::arith(i.min(j), i.abs_diff(j))
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, NatCong::Trivial)
    }

    /// `None` stands for `∞`.
    pub fn least(&self) -> Option<usize> {
        match self {
            NatCong::Trivial => None,
            NatCong::Arith { min, .. } => Some(*min),
        }
    }

    pub fn per(&self) -> Option<usize> {
        match self {
            NatCong::Trivial => None,
            NatCong::Arith { per, .. } => Some(*per),
        }
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i == j
            || match self {
                NatCong::Trivial => false,
                NatCong::Arith { min, per } => i >= *min && j >= *min && i.abs_diff(j).is_multiple_of(*per),
            }
    }

    pub fn leq(&self, other: &NatCong) -> bool {
        match (self, other) {
            (NatCong::Trivial, _) => true,
            (_, NatCong::Trivial) => false,
            (NatCong::Arith { min: m1, per: d1 }, NatCong::Arith { min: m2, per: d2 }) => {
                m1 >= m2 && d1 % d2 == 0
            }
        }
    }

    pub fn meet(&self, other: &NatCong) -> NatCong {
        match (self, other) {
            (NatCong::Arith { min: m1, per: d1 }, NatCong::Arith { min: m2, per: d2 }) => {
                NatCong::arith(*m1.max(m2), d1.lcm(d2))
            }
            _ => NatCong::Trivial,
        }
    }

    pub fn join(&self, other: &NatCong) -> NatCong {
        match (self, other) {
            (NatCong::Arith { min: m1, per: d1 }, NatCong::Arith { min: m2, per: d2 }) => {
                NatCong::arith(*m1.min(m2), d1.gcd(d2))
            }
            (NatCong::Trivial, x) | (x, NatCong::Trivial) => *x,
        }
    }
}

pub fn nc_contains(t: &NatCong, i: usize, j: usize) -> bool {
    t.contains(i, j)
}

pub fn nc_leq(a: &NatCong, b: &NatCong) -> bool {
    a.leq(b)
}

pub fn nc_meet(a: &NatCong, b: &NatCong) -> NatCong {
    a.meet(b)
}

pub fn nc_join(a: &NatCong, b: &NatCong) -> NatCong {
    a.join(b)
}

impl fmt::Display for NatCong {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NatCong::Trivial => write!(f, "Δ"),
            NatCong::Arith { min: 0, per: 1 } => write!(f, "∇"),
            NatCong::Arith { min, per } => write!(f, "({min},{})♯", min + per),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Trivial { trivial: bool },
    Arith { min: usize, per: usize },
}

impl Serialize for NatCong {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match *self {
            NatCong::Trivial => Repr::Trivial { trivial: true },
            NatCong::Arith { min, per } => Repr::Arith { min, per },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for NatCong {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Trivial { trivial: true } => Ok(NatCong::Trivial),
            Repr::Arith { min, per } if per >= 1 => Ok(NatCong::Arith { min, per }),
            _ => Err(serde::de::Error::custom("bad congruence on ℕ")),
        }
    }
}
