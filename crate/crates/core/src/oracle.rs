//! Brute-force ground truth on a materialised `P^Φ_{n,d}`: multiplication table, congruence
//! closure of seed pairs, the full congruence lattice, and conversion of extensional
//! congruences back to fC-matrices.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::entry::CEntry::{self, *};
use crate::error::{Error, Result};
use crate::finite::{fcg_contains, validate_fc, FCMatrix};
use crate::lattice::FiniteLattice;
use crate::partition::{green, normal_closure, pd, Green, NormalSubgroup, NsLabel};
use crate::twisted::{elements_of, t_mul_d, TwistedElement};

/// Default cap on the monoid size the oracle will materialise.
pub const ORACLE_CAP: usize = 250;

/// `P^Φ_{n,d}` with its elements listed and its multiplication tabulated.
pub struct Monoid {
    pub n: usize,
    pub d: usize,
    pub elements: Vec<TwistedElement>,
    index: HashMap<TwistedElement, usize>,
    table: Vec<Vec<usize>>,
    generators: Vec<usize>,
}

impl Monoid {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        Self::with_cap(n, d, ORACLE_CAP)
    }

    pub fn with_cap(n: usize, d: usize, cap: usize) -> Result<Self> {
        let elements = elements_of(n, d, cap)?;
        let index: HashMap<TwistedElement, usize> = elements.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let table = elements
            .iter()
            .map(|a| elements.iter().map(|b| t_mul_d(a, b, d).map(|p| index[&p])).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut m = Monoid { n, d, elements, index, table, generators: Vec::new() };
        m.generators = m.greedy_generators();
        Ok(m)
    }

    /// Greedy generating set: high-rank elements in low columns first, each added only when
    /// not already in the submonoid generated so far.
    fn greedy_generators(&self) -> Vec<usize> {
        let identity = self.index[&TwistedElement::Pair(0, crate::partition::Partition::identity(self.n))];
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.elements[x].column(), std::cmp::Reverse(self.elements[x].rank())));
        let mut inside = vec![false; self.len()];
        inside[identity] = true;
        let mut gens = Vec::new();
        for x in order {
            if inside[x] {
                continue;
            }
            gens.push(x);
            let mut stack: Vec<usize> = (0..self.len()).filter(|&y| inside[y]).collect();
            while let Some(y) = stack.pop() {
                for &g in &gens {
                    for z in [self.mul(y, g), self.mul(g, y)] {
                        if !inside[z] {
                            inside[z] = true;
                            stack.push(z);
                        }
                    }
                }
            }
        }
        gens
    }

    /// A generating set of the monoid, as element indices.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, x: &TwistedElement) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn zero(&self) -> usize {
        self.len() - 1
    }

    /// Whether the multiplication table is associative.
    pub fn is_associative(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))))
    }
}

/// A congruence given by its classes: `class[x]` is the least element index in the class of `x`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ExtensionalCongruence {
    pub class: Vec<usize>,
}

impl ExtensionalCongruence {
    pub fn diagonal(size: usize) -> Self {
        ExtensionalCongruence { class: (0..size).collect() }
    }

    fn from_union_find(uf: &mut UnionFind<usize>, size: usize) -> Self {
        let mut least: HashMap<usize, usize> = HashMap::new();
        let class = (0..size).map(|x| *least.entry(uf.find_mut(x)).or_insert(x)).collect();
        ExtensionalCongruence { class }
    }

    /// The relation `cg(M)` on the elements of `m`.
    pub fn from_matrix(m: &Monoid, mat: &FCMatrix) -> Self {
        let mut class: Vec<usize> = Vec::with_capacity(m.len());
        for x in 0..m.len() {
            let rep = (0..x).find(|&y| class[y] == y && fcg_contains(mat, &m.elements[x], &m.elements[y]));
            class.push(rep.unwrap_or(x));
        }
        ExtensionalCongruence { class }
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class[x] == self.class[y]
    }

    pub fn class_count(&self) -> usize {
        self.class.iter().enumerate().filter(|(x, c)| *x == **c).count()
    }

    /// Containment `self ⊆ other`.
    pub fn leq(&self, other: &Self) -> bool {
        self.class.iter().enumerate().all(|(x, &c)| other.class[x] == other.class[c])
    }

    /// The classes as lists of element indices, ordered by least element.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for (x, &c) in self.class.iter().enumerate() {
            let s = *slot.entry(c).or_insert_with(|| {
                out.push(Vec::new());
                out.len() - 1
            });
            out[s].push(x);
        }
        out
    }

    /// Compatibility with left and right multiplication by every element.
    pub fn is_compatible(&self, m: &Monoid) -> bool {
        (0..m.len()).all(|x| {
            let r = self.class[x];
            (0..m.len()).all(|a| self.related(m.mul(a, x), m.mul(a, r)) && self.related(m.mul(x, a), m.mul(r, a)))
        })
    }

    /// The relation as a boolean matrix.
    pub fn relation(&self) -> Vec<Vec<bool>> {
        let n = self.class.len();
        (0..n).map(|x| (0..n).map(|y| self.related(x, y)).collect()).collect()
    }
}

impl fmt::Display for ExtensionalCongruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .classes()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| format!("{{{}}}", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        if parts.is_empty() {
            write!(f, "Δ")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl Serialize for ExtensionalCongruence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.classes().serialize(s)
    }
}

/// The least congruence containing the seed pairs (element indices).
pub fn congruence_closure(m: &Monoid, seeds: &[(usize, usize)]) -> ExtensionalCongruence {
    let size = m.len();
    let mut uf = UnionFind::new(size);
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for &(x, y) in seeds {
        if uf.union(x, y) {
            queue.push_back((x, y));
        }
    }
    while let Some((x, y)) = queue.pop_front() {
        for &a in m.generators() {
            for (p, q) in [(m.mul(a, x), m.mul(a, y)), (m.mul(x, a), m.mul(y, a))] {
                if uf.union(p, q) {
                    queue.push_back((p, q));
                }
            }
        }
    }
    ExtensionalCongruence::from_union_find(&mut uf, size)
}

/// Congruence generated by pairs of elements.
pub fn closure_of_elements(m: &Monoid, pairs: &[(TwistedElement, TwistedElement)]) -> Result<ExtensionalCongruence> {
    let idx = |x: &TwistedElement| m.index_of(x).ok_or_else(|| Error::Invalid(format!("{x} is not an element of P^Φ_{{{},{}}}", m.n, m.d)));
    let seeds = pairs.iter().map(|(a, b)| Ok((idx(a)?, idx(b)?))).collect::<Result<Vec<_>>>()?;
    Ok(congruence_closure(m, &seeds))
}

/// Join of two congruences.
pub fn join(m: &Monoid, a: &ExtensionalCongruence, b: &ExtensionalCongruence) -> ExtensionalCongruence {
    let seeds: Vec<(usize, usize)> = (0..m.len()).flat_map(|x| [(x, a.class[x]), (x, b.class[x])]).collect();
    congruence_closure(m, &seeds)
}

/// Every congruence of the monoid: principal closures, closed under joins; sorted.
pub fn all_congruences(m: &Monoid) -> Vec<ExtensionalCongruence> {
    let size = m.len();
    let mut found: BTreeSet<ExtensionalCongruence> = BTreeSet::new();
    found.insert(ExtensionalCongruence::diagonal(size));
    for x in 0..size {
        for y in x + 1..size {
            found.insert(congruence_closure(m, &[(x, y)]));
        }
    }
    let mut frontier: Vec<ExtensionalCongruence> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let current: Vec<ExtensionalCongruence> = found.iter().cloned().collect();
        let mut next = Vec::new();
        for a in &frontier {
            for b in &current {
                let j = join(m, a, b);
                if !found.contains(&j) {
                    found.insert(j.clone());
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<ExtensionalCongruence> = found.into_iter().collect();
    out.sort_by_key(|c| std::cmp::Reverse(c.class_count()));
    out
}

/// The lattice of all congruences, ordered by containment.
pub fn congruence_lattice(m: &Monoid) -> Result<(Vec<ExtensionalCongruence>, FiniteLattice)> {
    let cs = all_congruences(m);
    let leq = cs.iter().map(|a| cs.iter().map(|b| a.leq(b)).collect()).collect();
    let lattice = FiniteLattice::from_order(cs.iter().map(|c| c.to_string()).collect(), Vec::new(), leq)?;
    Ok((cs, lattice))
}

/// The fC-matrix whose congruence is `c`, read off class by class and confirmed by re-expansion.
pub fn match_to_fc(m: &Monoid, c: &ExtensionalCongruence) -> Result<FCMatrix> {
    let zero = m.zero();
    let mut grid = vec![vec![Delta; m.d + 1]; m.n + 1];
    let mut cells: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (x, e) in m.elements.iter().enumerate() {
        if let TwistedElement::Pair(i, a) = e {
            cells.entry((a.rank(), *i)).or_default().push(x);
        }
    }
    for ((q, i), members) in &cells {
        grid[*q][*i] = cell_entry(m, c, *q, members, zero)?;
    }
    let mat = FCMatrix::new(m.n, m.d, grid)?;
    if let Err(v) = validate_fc(&mat) {
        return Err(Error::Invalid(format!("read-off matrix is invalid ({}): {}", v[0], mat.label())));
    }
    for x in 0..m.len() {
        for y in 0..m.len() {
            if fcg_contains(&mat, &m.elements[x], &m.elements[y]) != c.related(x, y) {
                return Err(Error::Invalid(format!(
                    "matrix {} disagrees with the congruence on ({}, {})",
                    mat.label(),
                    m.elements[x],
                    m.elements[y]
                )));
            }
        }
    }
    Ok(mat)
}

fn cell_entry(m: &Monoid, c: &ExtensionalCongruence, q: usize, members: &[usize], zero: usize) -> Result<CEntry> {
    if c.related(members[0], zero) {
        return Ok(R);
    }
    let part = |x: usize| m.elements[x].partition().expect("non-zero element");
    let inside: Vec<(usize, usize)> = members
        .iter()
        .flat_map(|&x| members.iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| x < y && c.related(x, y))
        .collect();
    if q >= 2 {
        let mut top: Option<NormalSubgroup> = None;
        for &(x, y) in &inside {
            if !green(Green::H, part(x), part(y)) {
                return Err(Error::Invalid("related pair in a high D-class is not H-related".into()));
            }
            let g = normal_closure(&pd(part(x), part(y))?);
            top = Some(top.map_or(g, |t| if t.leq(&g) { g } else { t }));
        }
        return Ok(top.filter(|g| g.label != NsLabel::Trivial).map_or(Delta, N));
    }
    let cross = members.iter().any(|&x| (0..m.len()).any(|y| y != zero && c.related(x, y) && !members.contains(&y)));
    if cross {
        return Ok(Mu);
    }
    if inside.is_empty() {
        return Ok(Delta);
    }
    let all = |rel: Green| inside.iter().all(|&(x, y)| green(rel, part(x), part(y)));
    Ok(if all(Green::R) {
        MuUp
    } else if all(Green::L) {
        MuDown
    } else {
        Mu
    })
}

/// Relational composition `r ∘ s`: `x (r∘s) y` iff `x r z` and `z s y` for some `z`.
pub fn compose(r: &[Vec<bool>], s: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = r.len();
    let mut out = vec![vec![false; n]; n];
    for x in 0..n {
        for z in (0..n).filter(|&z| r[x][z]) {
            for y in 0..n {
                out[x][y] |= s[z][y];
            }
        }
    }
    out
}

/// Whether `σ∘τ∘σ = τ∘σ∘τ`.
pub fn compose3(sigma: &ExtensionalCongruence, tau: &ExtensionalCongruence) -> bool {
    let (s, t) = (sigma.relation(), tau.relation());
    compose(&compose(&s, &t), &s) == compose(&compose(&t, &s), &t)
}
