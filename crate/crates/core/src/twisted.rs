//! The twisted partition monoid `P^Φ_n = ℕ × P_n` and its finite quotients `P^Φ_{n,d}`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{green, Green, Partition};

/// Default cap on the number of elements listed by [`elements_of`].
pub const ELEMENT_CAP: usize = 2500;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum TwistedElement {
    Pair(usize, Partition),
    /// The zero of `P^Φ_{n,d}`, tagged with `n`.
    Zero(usize),
}

pub use TwistedElement::{Pair, Zero};

impl TwistedElement {
    pub fn pair(i: usize, alpha: Partition) -> Self {
        Pair(i, alpha)
    }

    pub fn n(&self) -> usize {
        match self {
            Pair(_, a) => a.n(),
            Zero(n) => *n,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Zero(_))
    }

    pub fn column(&self) -> Option<usize> {
        match self {
            Pair(i, _) => Some(*i),
            Zero(_) => None,
        }
    }

    pub fn partition(&self) -> Option<&Partition> {
        match self {
            Pair(_, a) => Some(a),
            Zero(_) => None,
        }
    }

    pub fn rank(&self) -> Option<usize> {
        self.partition().map(Partition::rank)
    }
}

impl std::fmt::Display for TwistedElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Pair(i, a) => write!(f, "({i}, {a})"),
            Zero(_) => write!(f, "0"),
        }
    }
}

/// Position `(q, i)` of the D-class `D_{qi} = {i} × D_q`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct GridIndex {
    pub q: usize,
    pub i: usize,
}

/// Where an element lives: the infinite monoid, or the quotient with parameter `d`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Context {
    Infinite,
    Finitary(usize),
}

pub fn t_mul_infinite(a: &TwistedElement, b: &TwistedElement) -> Result<TwistedElement> {
    match (a, b) {
        (Pair(i, x), Pair(j, y)) => {
            let (xy, phi) = x.multiply(y)?;
            Ok(Pair(i + j + phi, xy))
        }
        _ => Err(Error::ZeroOperand),
    }
}

pub fn t_mul_d(a: &TwistedElement, b: &TwistedElement, d: usize) -> Result<TwistedElement> {
    for x in [a, b] {
        if let Pair(i, _) = x {
            if *i > d {
                return Err(Error::ColumnOutOfRange { column: *i, d });
            }
        }
    }
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(a.n(), b.n()));
    }
    match (a, b) {
        (Pair(i, x), Pair(j, y)) => {
            let (xy, phi) = x.multiply_unchecked(y);
            let k = i + j + phi;
            Ok(if k <= d { Pair(k, xy) } else { Zero(a.n()) })
        }
        _ => Ok(Zero(a.n())),
    }
}

pub fn t_green(rel: Green, a: &TwistedElement, b: &TwistedElement) -> bool {
    match (a, b) {
        (Pair(i, x), Pair(j, y)) => i == j && green(rel, x, y),
        (Zero(m), Zero(n)) => m == n,
        _ => false,
    }
}

pub fn grid_index(a: &TwistedElement) -> Result<GridIndex> {
    match a {
        Pair(i, x) => Ok(GridIndex { q: x.rank(), i: *i }),
        Zero(_) => Err(Error::Invalid("zero has no grid index".into())),
    }
}

/// Membership in the principal ideal `I_{qi}`; the zero lies in every finitary ideal.
pub fn in_ideal(a: &TwistedElement, q: usize, i: usize, ctx: Context) -> bool {
    match a {
        Pair(j, x) => x.rank() <= q && *j >= i,
        Zero(_) => matches!(ctx, Context::Finitary(_)),
    }
}

/// All elements of `P^Φ_{n,d}`: columns ascending, partitions in canonical order, zero last.
pub fn elements_of(n: usize, d: usize, cap: usize) -> Result<Vec<TwistedElement>> {
    if n == 0 {
        return Err(Error::Invalid("elements are listed for n ≥ 1 only".into()));
    }
    if n > 4 {
        return Err(Error::CapExceeded { what: "base size", size: n as u128, cap: 4 });
    }
    let bell = [1u128, 2, 15, 203, 4140][n];
    let size = (d as u128 + 1) * bell;
    if size > cap as u128 {
        return Err(Error::CapExceeded { what: "elements", size, cap: cap as u128 });
    }
    let parts = Partition::all(n);
    let mut out = Vec::with_capacity(size as usize + 1);
    for i in 0..=d {
        out.extend(parts.iter().map(|a| Pair(i, a.clone())));
    }
    out.push(Zero(n));
    Ok(out)
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ElementRepr {
    Pair { i: usize, alpha: Partition },
    Zero { zero: bool, n: Option<usize> },
}

impl Serialize for TwistedElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Pair(i, a) => ElementRepr::Pair { i: *i, alpha: a.clone() }.serialize(s),
            Zero(_) => {
                #[derive(Serialize)]
                struct Z {
                    zero: bool,
                }
                Z { zero: true }.serialize(s)
            }
        }
    }
}

impl<'de> Deserialize<'de> for TwistedElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match ElementRepr::deserialize(d)? {
            ElementRepr::Pair { i, alpha } => Ok(Pair(i, alpha)),
            ElementRepr::Zero { zero: true, n } => Ok(Zero(n.unwrap_or(0))),
            ElementRepr::Zero { .. } => Err(D::Error::custom("expected {\"zero\": true}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_absorbs() {
        let a = Pair(0, Partition::identity(2));
        assert_eq!(t_mul_d(&a, &Zero(2), 1).unwrap(), Zero(2));
        assert_eq!(t_mul_d(&Zero(2), &a, 1).unwrap(), Zero(2));
        assert!(t_mul_infinite(&a, &Zero(2)).is_err());
    }

    #[test]
    fn column_overflow() {
        let a = Pair(1, Partition::identity(2));
        assert_eq!(t_mul_d(&a, &a, 1).unwrap(), Zero(2));
        assert!(t_mul_d(&Pair(2, Partition::identity(2)), &a, 1).is_err());
    }

    #[test]
    fn sizes() {
        assert_eq!(elements_of(1, 1, ELEMENT_CAP).unwrap().len(), 5);
        assert_eq!(elements_of(2, 1, ELEMENT_CAP).unwrap().len(), 31);
        assert_eq!(elements_of(2, 2, ELEMENT_CAP).unwrap().len(), 46);
        assert!(elements_of(3, 20, ELEMENT_CAP).is_err());
    }
}
