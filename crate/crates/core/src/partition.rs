//! Set partitions of `{1..n} ∪ {1'..n'}`, the diagram product, Green's relations,
//! permutational differences and normal subgroups of symmetric groups.

use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of the partition monoid `P_n`.
///
/// Stored as a restricted growth string over the points in the order
/// `1 < … < n < 1' < … < n'`, so equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    labels: Vec<u8>,
}

fn canonical_labels<T: Copy + Eq>(raw: &[T]) -> Vec<u8> {
    let mut seen: Vec<T> = Vec::new();
    raw.iter()
        .map(|x| match seen.iter().position(|y| y == x) {
            Some(p) => p as u8,
            None => {
                seen.push(*x);
                (seen.len() - 1) as u8
            }
        })
        .collect()
}

impl Partition {
    pub const MAX_N: usize = 100;

    /// Builds a partition from blocks of signed point codes (`+k` upper, `-k` lower).
    pub fn new(n: usize, blocks: &[Vec<i32>]) -> Result<Self> {
        if n == 0 || n > Self::MAX_N {
            return Err(Error::InvalidPartition(format!("n = {n} out of range")));
        }
        let mut raw = vec![usize::MAX; 2 * n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &code in block {
                let k = code.unsigned_abs() as usize;
                if code == 0 || k > n {
                    return Err(Error::InvalidPartition(format!("point code {code} out of range")));
                }
                let idx = if code > 0 { k - 1 } else { n + k - 1 };
                if raw[idx] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("point code {code} repeated")));
                }
                raw[idx] = b;
            }
        }
        if let Some(p) = raw.iter().position(|&x| x == usize::MAX) {
            return Err(Error::InvalidPartition(format!("point {} missing", point_code(n, p))));
        }
        Ok(Self::from_raw(n, &raw))
    }

    /// Canonicalizes an arbitrary block labelling of the `2n` points.
    pub(crate) fn from_raw<T: Copy + Eq>(n: usize, raw: &[T]) -> Self {
        debug_assert_eq!(raw.len(), 2 * n);
        Partition { n, labels: canonical_labels(raw) }
    }

    pub fn identity(n: usize) -> Self {
        let raw: Vec<usize> = (0..2 * n).map(|p| p % n).collect();
        Self::from_raw(n, &raw)
    }

    /// The partition with every point in its own block.
    pub fn singletons(n: usize) -> Self {
        let raw: Vec<usize> = (0..2 * n).collect();
        Self::from_raw(n, &raw)
    }

    /// Partial identity of rank `q`: `{k, k'}` for `k ≤ q`, singletons elsewhere.
    pub fn partial_identity(n: usize, q: usize) -> Self {
        assert!(q <= n);
        let raw: Vec<usize> = (0..2 * n)
            .map(|p| if p >= n && p - n < q { p - n } else { p })
            .collect();
        Self::from_raw(n, &raw)
    }

    /// Rank-`q` partition with transversals `{k, π(k)'}` for `k ≤ q`, singletons elsewhere.
    pub fn from_permutation(n: usize, perm: &Permutation) -> Self {
        let q = perm.degree();
        assert!(q <= n);
        let mut raw: Vec<usize> = (0..2 * n).collect();
        for k in 0..q {
            raw[n + perm.images[k]] = k;
        }
        Self::from_raw(n, &raw)
    }

    /// All partitions of `P_n` in canonical order.
    pub fn all(n: usize) -> Vec<Partition> {
        let len = 2 * n;
        let mut out = Vec::new();
        let mut labels = vec![0u8; len];
        fn rec(pos: usize, max: u8, labels: &mut Vec<u8>, n: usize, out: &mut Vec<Partition>) {
            if pos == labels.len() {
                out.push(Partition { n, labels: labels.clone() });
                return;
            }
            for l in 0..=max + 1 {
                labels[pos] = l;
                rec(pos + 1, max.max(l), labels, n, out);
            }
        }
        if len == 0 {
            return out;
        }
        labels[0] = 0;
        rec(1, 0, &mut labels, n, &mut out);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `α` with upper points renamed by `upper` and lower points by `lower`: a product of `α`
    /// with units on both sides.
    pub fn relabel(&self, upper: &Permutation, lower: &Permutation) -> Partition {
        let n = self.n;
        let mut moved = vec![0u8; 2 * n];
        for (p, &l) in self.labels.iter().enumerate() {
            let to = if p < n { upper.images[p] } else { n + lower.images[p - n] };
            moved[to] = l;
        }
        let mut fresh: Vec<Option<u8>> = vec![None; 2 * n];
        let mut next = 0u8;
        let labels = moved
            .iter()
            .map(|&l| {
                *fresh[l as usize].get_or_insert_with(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect();
        Partition { n, labels }
    }

    fn block_count(&self) -> usize {
        self.labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    /// Blocks as signed point codes, in canonical order.
    pub fn blocks(&self) -> Vec<Vec<i32>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (p, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(point_code(self.n, p));
        }
        blocks
    }

    fn transversal_flags(&self) -> Vec<bool> {
        let k = self.block_count();
        let mut up = vec![false; k];
        let mut down = vec![false; k];
        for (p, &l) in self.labels.iter().enumerate() {
            if p < self.n {
                up[l as usize] = true;
            } else {
                down[l as usize] = true;
            }
        }
        up.iter().zip(&down).map(|(a, b)| *a && *b).collect()
    }

    pub fn rank(&self) -> usize {
        self.transversal_flags().iter().filter(|&&t| t).count()
    }

    /// Splits every transversal into its upper and lower parts.
    pub fn hat(&self) -> Partition {
        let k = self.block_count();
        let tr = self.transversal_flags();
        let raw: Vec<usize> = self
            .labels
            .iter()
            .enumerate()
            .map(|(p, &l)| {
                let l = l as usize;
                if p >= self.n && tr[l] {
                    l + k
                } else {
                    l
                }
            })
            .collect();
        Self::from_raw(self.n, &raw)
    }

    /// Upside-down reflection `α ↦ α*`.
    pub fn flip(&self) -> Partition {
        let n = self.n;
        let raw: Vec<u8> = (0..2 * n).map(|p| self.labels[(p + n) % (2 * n)]).collect();
        Self::from_raw(n, &raw)
    }

    /// Upper points lying in transversals.
    pub fn dom(&self) -> Vec<usize> {
        let tr = self.transversal_flags();
        (0..self.n).filter(|&p| tr[self.labels[p] as usize]).map(|p| p + 1).collect()
    }

    /// Lower points lying in transversals.
    pub fn codom(&self) -> Vec<usize> {
        let tr = self.transversal_flags();
        (self.n..2 * self.n)
            .filter(|&p| tr[self.labels[p] as usize])
            .map(|p| p - self.n + 1)
            .collect()
    }

    /// Kernel: the block structure induced on the upper points.
    pub fn ker(&self) -> Vec<u8> {
        canonical_labels(&self.labels[..self.n])
    }

    /// Cokernel: the block structure induced on the lower points.
    pub fn coker(&self) -> Vec<u8> {
        canonical_labels(&self.labels[self.n..])
    }

    /// Diagram product together with the number of floating components.
    pub fn multiply(&self, other: &Partition) -> Result<(Partition, usize)> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        Ok(self.multiply_unchecked(other))
    }

    pub(crate) fn multiply_unchecked(&self, other: &Partition) -> (Partition, usize) {
        let n = self.n;
        let mut uf = UnionFind::<usize>::new(3 * n);
        link_blocks(&mut uf, &self.labels, n, 0, n);
        link_blocks(&mut uf, &other.labels, n, n, 2 * n);
        let outer: Vec<usize> = (0..n).chain(2 * n..3 * n).map(|v| uf.find(v)).collect();
        let mut floating: Vec<usize> = (n..2 * n)
            .map(|v| uf.find(v))
            .filter(|r| !outer.contains(r))
            .collect();
        floating.sort_unstable();
        floating.dedup();
        (Self::from_raw(n, &outer), floating.len())
    }
}

fn link_blocks(uf: &mut UnionFind<usize>, labels: &[u8], n: usize, upper: usize, lower: usize) {
    let mut first = [usize::MAX; 256];
    for (p, &l) in labels.iter().enumerate() {
        let v = if p < n { upper + p } else { lower + p - n };
        let f = &mut first[l as usize];
        if *f == usize::MAX {
            *f = v;
        } else {
            uf.union(*f, v);
        }
    }
}

fn point_code(n: usize, p: usize) -> i32 {
    if p < n {
        (p + 1) as i32
    } else {
        -((p - n + 1) as i32)
    }
}

pub fn make_partition(n: usize, blocks: &[Vec<i32>]) -> Result<Partition> {
    Partition::new(n, blocks)
}

pub fn multiply(a: &Partition, b: &Partition) -> Result<(Partition, usize)> {
    a.multiply(b)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                let pts: Vec<String> = b
                    .iter()
                    .map(|&c| if c > 0 { c.to_string() } else { format!("{}'", -c) })
                    .collect();
                format!("{{{}}}", pts.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}[{}]", self.n, self)
    }
}

#[derive(Serialize, Deserialize)]
struct PartitionRepr {
    n: usize,
    blocks: Vec<Vec<i32>>,
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PartitionRepr { n: self.n, blocks: self.blocks() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PartitionRepr::deserialize(d)?;
        Partition::new(r.n, &r.blocks).map_err(serde::de::Error::custom)
    }
}

/// Green's relations on `P_n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Green {
    R,
    L,
    H,
    D,
}

pub fn green(rel: Green, a: &Partition, b: &Partition) -> bool {
    if a.n != b.n {
        return false;
    }
    let r = || a.dom() == b.dom() && a.ker() == b.ker();
    let l = || a.codom() == b.codom() && a.coker() == b.coker();
    match rel {
        Green::R => r(),
        Green::L => l(),
        Green::H => r() && l(),
        Green::D => a.rank() == b.rank(),
    }
}

/// A permutation of `{1..q}`, stored zero-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds `π` from one-based images `[1π, 2π, …]`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let q = images.len();
        let mut seen = vec![false; q];
        for &x in images {
            if x == 0 || x > q || seen[x - 1] {
                return Err(Error::Invalid(format!("not a permutation: {images:?}")));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|x| x - 1).collect() })
    }

    pub fn identity(q: usize) -> Self {
        Permutation { images: (0..q).collect() }
    }

    /// Product of one-based cycles.
    pub fn from_cycles(q: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..q).collect();
        let mut touched = vec![false; q];
        for c in cycles {
            for (t, &x) in c.iter().enumerate() {
                let y = c[(t + 1) % c.len()];
                if x == 0 || x > q || y == 0 || y > q || touched[x - 1] {
                    return Err(Error::Invalid(format!("bad cycle {c:?}")));
                }
                touched[x - 1] = true;
                images[x - 1] = y - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// All of `S_q`, in lexicographic order of image lists.
    pub fn all(q: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation { images: prefix.clone() });
                return;
            }
            for x in 0..used.len() {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::with_capacity(q), &mut vec![false; q], &mut out);
        out
    }

    /// One-based image of the one-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// Left-to-right composition: `x(πσ) = (xπ)σ`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&x| other.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycle lengths, sorted descending, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let q = self.images.len();
        let mut seen = vec![false; q];
        let mut lens = Vec::new();
        for s in 0..q {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn is_even(&self) -> bool {
        self.cycle_type().iter().filter(|&&l| l % 2 == 0).count() % 2 == 0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.images.len();
        let mut seen = vec![false; q];
        let mut out = String::new();
        for s in 0..q {
            if seen[s] || self.images[s] == s {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push((x + 1).to_string());
                x = self.images[x];
            }
            out.push_str(&format!("({})", c.join(" ")));
        }
        if out.is_empty() {
            out.push_str("id");
        }
        write!(f, "{out}")
    }
}

/// Permutational difference of two H-related partitions.
///
/// Transversals of `a` are ordered by least upper point, `A_1 ∪ B_1', …`; then `b`
/// has transversals `A_i ∪ B_{iπ}'`.
pub fn pd(a: &Partition, b: &Partition) -> Result<Permutation> {
    if a.n != b.n {
        return Err(Error::SizeMismatch(a.n, b.n));
    }
    if !green(Green::H, a, b) {
        return Err(Error::NotHRelated);
    }
    let n = a.n;
    let tr_a = a.transversal_flags();
    let tr_b = b.transversal_flags();
    let mut order: Vec<u8> = Vec::new();
    for p in 0..n {
        let l = a.labels[p];
        if tr_a[l as usize] && !order.contains(&l) {
            order.push(l);
        }
    }
    let min_lower = |lab: &[u8], l: u8| (n..2 * n).find(|&p| lab[p] == l).unwrap();
    let a_lower: Vec<usize> = order.iter().map(|&l| min_lower(&a.labels, l)).collect();
    let mut images = Vec::with_capacity(order.len());
    for &l in &order {
        let p = (0..n).find(|&p| a.labels[p] == l).unwrap();
        let lb = b.labels[p];
        debug_assert!(tr_b[lb as usize]);
        let m = min_lower(&b.labels, lb);
        images.push(a_lower.iter().position(|&x| x == m).ok_or(Error::NotHRelated)?);
    }
    Ok(Permutation::from_zero_based(images))
}

/// Normal subgroup labels, listed in containment order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum NsLabel {
    Trivial,
    Klein4,
    Alternating,
    Full,
}

/// A normal subgroup of `S_q`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct NormalSubgroup {
    pub q: usize,
    pub label: NsLabel,
}

impl NormalSubgroup {
    pub fn new(q: usize, label: NsLabel) -> Result<Self> {
        let ok = match label {
            NsLabel::Trivial => true,
            NsLabel::Klein4 => q == 4,
            NsLabel::Alternating => q >= 3,
            NsLabel::Full => q >= 2,
        };
        if ok {
            Ok(NormalSubgroup { q, label })
        } else {
            Err(Error::Invalid(format!("no normal subgroup {label:?} of S_{q}")))
        }
    }

    pub fn full(q: usize) -> Self {
        NormalSubgroup { q, label: NsLabel::Full }
    }

    pub fn alternating(q: usize) -> Self {
        NormalSubgroup { q, label: NsLabel::Alternating }
    }

    pub fn klein(q: usize) -> Self {
        NormalSubgroup { q, label: NsLabel::Klein4 }
    }

    /// Nontrivial normal subgroups of `S_q` in containment order.
    pub fn nontrivial(q: usize) -> Vec<NormalSubgroup> {
        [NsLabel::Klein4, NsLabel::Alternating, NsLabel::Full]
            .into_iter()
            .filter_map(|l| NormalSubgroup::new(q, l).ok())
            .collect()
    }

    pub fn leq(&self, other: &NormalSubgroup) -> bool {
        self.q == other.q && self.label <= other.label
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.q {
            return false;
        }
        match self.label {
            NsLabel::Trivial => p.is_identity(),
            NsLabel::Klein4 => p.is_identity() || p.cycle_type() == [2, 2],
            NsLabel::Alternating => p.is_even(),
            NsLabel::Full => true,
        }
    }

    pub fn symbol(&self) -> String {
        match self.label {
            NsLabel::Trivial => format!("1_{}", self.q),
            NsLabel::Klein4 => "K4".to_string(),
            NsLabel::Alternating => format!("A{}", self.q),
            NsLabel::Full => format!("S{}", self.q),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("unknown normal subgroup {s:?}"));
        if s == "K4" {
            return Ok(NormalSubgroup::klein(4));
        }
        let (label, rest) = match s.split_at_checked(1).ok_or_else(bad)? {
            ("A", r) => (NsLabel::Alternating, r),
            ("S", r) => (NsLabel::Full, r),
            _ => return Err(bad()),
        };
        let q: usize = rest.parse().map_err(|_| bad())?;
        NormalSubgroup::new(q, label)
    }
}

/// Smallest normal subgroup of `S_q` containing `p`.
pub fn normal_closure(p: &Permutation) -> NormalSubgroup {
    let q = p.degree();
    let label = if p.is_identity() {
        NsLabel::Trivial
    } else if !p.is_even() {
        NsLabel::Full
    } else if q == 4 && p.cycle_type() == [2, 2] {
        NsLabel::Klein4
    } else {
        NsLabel::Alternating
    };
    NormalSubgroup { q, label }
}

pub fn subgroup_contains(n: &NormalSubgroup, p: &Permutation) -> bool {
    n.contains(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_singletons() {
        let id = Partition::identity(3);
        assert_eq!(id.rank(), 3);
        assert_eq!(Partition::singletons(3).rank(), 0);
        assert_eq!(id.hat(), Partition::singletons(3));
        assert_eq!(Partition::partial_identity(3, 3), id);
    }

    #[test]
    fn rejects_bad_blocks() {
        assert!(Partition::new(2, &[vec![1, -1], vec![2]]).is_err());
        assert!(Partition::new(2, &[vec![1, -1], vec![2, -2, 2]]).is_err());
        assert!(Partition::new(2, &[vec![1, -1], vec![2, -3]]).is_err());
        assert!(Partition::new(2, &[vec![1, -1], vec![], vec![2, -2]]).is_err());
    }

    #[test]
    fn flip_is_involution() {
        for a in Partition::all(2) {
            assert_eq!(a.flip().flip(), a);
            assert_eq!(a.flip().dom(), a.codom());
        }
    }

    #[test]
    fn permutation_display() {
        let p = Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert_eq!(p.cycle_type(), vec![2, 2]);
        assert!(p.is_even());
        assert_eq!(Permutation::identity(3).to_string(), "id");
    }
}
