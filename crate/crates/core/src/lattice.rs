//! Finite lattices given by an order relation: meet and join tables, Hasse covers, and the
//! usual structural tests (pentagon and diamond sublattices, modularity, distributivity,
//! semimodularity, atoms and coatoms), plus DOT, JSON and CSV export.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite::FCMatrix;

#[derive(Clone, Debug, Serialize)]
pub struct FiniteLattice {
    pub labels: Vec<String>,
    /// The fC-matrix behind each element, when the lattice comes from one.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub matrices: Vec<FCMatrix>,
    #[serde(skip)]
    pub leq: Vec<Vec<bool>>,
    /// Hasse edges `(lower, upper)`.
    pub covers: Vec<(usize, usize)>,
    #[serde(skip)]
    pub meet: Vec<Vec<usize>>,
    #[serde(skip)]
    pub join: Vec<Vec<usize>>,
}

impl FiniteLattice {
    /// Builds the lattice from a partial order, failing if the order is not a lattice order.
    pub fn from_order(labels: Vec<String>, matrices: Vec<FCMatrix>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = labels.len();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("order relation has the wrong shape".into()));
        }
        for x in 0..n {
            if !leq[x][x] {
                return Err(Error::Invalid(format!("order is not reflexive at {}", labels[x])));
            }
            for y in 0..n {
                if x != y && leq[x][y] && leq[y][x] {
                    return Err(Error::Invalid(format!("{} and {} are equivalent", labels[x], labels[y])));
                }
                if leq[x][y] && (0..n).any(|z| leq[y][z] && !leq[x][z]) {
                    return Err(Error::Invalid("order is not transitive".into()));
                }
            }
        }
        let covers = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && leq[x][y] && !(0..n).any(|z| z != x && z != y && leq[x][z] && leq[z][y]))
            .collect();
        let bound = |x: usize, y: usize, below: bool| -> Result<usize> {
            let rel = |a: usize, b: usize| if below { leq[a][b] } else { leq[b][a] };
            let bounds: Vec<usize> = (0..n).filter(|&z| rel(z, x) && rel(z, y)).collect();
            bounds
                .iter()
                .copied()
                .find(|&z| bounds.iter().all(|&w| rel(w, z)))
                .ok_or_else(|| Error::Invalid(format!("{} and {} have no {}", labels[x], labels[y], if below { "meet" } else { "join" })))
        };
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for x in 0..n {
            for y in x..n {
                meet[x][y] = bound(x, y, true)?;
                meet[y][x] = meet[x][y];
                join[x][y] = bound(x, y, false)?;
                join[y][x] = join[x][y];
            }
        }
        Ok(FiniteLattice { labels, matrices, leq, covers, meet, join })
    }

    /// A chain with the given labels, bottom first.
    pub fn chain(labels: Vec<String>) -> Self {
        let n = labels.len();
        let leq = (0..n).map(|x| (0..n).map(|y| x <= y).collect()).collect();
        Self::from_order(labels, Vec::new(), leq).expect("a chain is a lattice")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn bottom(&self) -> usize {
        (0..self.len()).find(|&x| (0..self.len()).all(|y| self.leq[x][y])).unwrap_or(0)
    }

    pub fn top(&self) -> usize {
        (0..self.len()).find(|&x| (0..self.len()).all(|y| self.leq[y][x])).unwrap_or(0)
    }

    pub fn covers_of(&self, x: usize) -> Vec<usize> {
        self.covers.iter().filter(|(a, _)| *a == x).map(|(_, b)| *b).collect()
    }

    fn is_cover(&self, x: usize, y: usize) -> bool {
        self.covers.contains(&(x, y))
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.covers_of(self.bottom())
    }

    pub fn coatoms(&self) -> Vec<usize> {
        let t = self.top();
        self.covers.iter().filter(|(_, b)| *b == t).map(|(a, _)| *a).collect()
    }

    /// A pentagon sublattice `[bottom, lone side, lower, upper, top]`, if one exists.
    pub fn find_pentagon(&self) -> Option<[usize; 5]> {
        let n = self.len();
        for a in 0..n {
            for c in 0..n {
                if a == c || !self.leq[a][c] {
                    continue;
                }
                for b in 0..n {
                    let incomparable = |x: usize| !self.leq[x][b] && !self.leq[b][x];
                    if incomparable(a)
                        && incomparable(c)
                        && self.meet[a][b] == self.meet[c][b]
                        && self.join[a][b] == self.join[c][b]
                    {
                        return Some([self.meet[a][b], b, a, c, self.join[a][b]]);
                    }
                }
            }
        }
        None
    }

    /// A diamond sublattice `[bottom, x, y, z, top]`, if one exists.
    pub fn find_diamond(&self) -> Option<[usize; 5]> {
        let n = self.len();
        let inc = |x: usize, y: usize| !self.leq[x][y] && !self.leq[y][x];
        for x in 0..n {
            for y in x + 1..n {
                if !inc(x, y) {
                    continue;
                }
                let (o, i) = (self.meet[x][y], self.join[x][y]);
                for z in y + 1..n {
                    if inc(x, z)
                        && inc(y, z)
                        && self.meet[x][z] == o
                        && self.meet[y][z] == o
                        && self.join[x][z] == i
                        && self.join[y][z] == i
                    {
                        return Some([o, x, y, z, i]);
                    }
                }
            }
        }
        None
    }

    pub fn is_modular(&self) -> bool {
        self.find_pentagon().is_none()
    }

    pub fn is_distributive(&self) -> bool {
        self.find_pentagon().is_none() && self.find_diamond().is_none()
    }

    /// `x ≤ z ⟹ x ∨ (y ∧ z) = (x ∨ y) ∧ z`, checked directly.
    pub fn modular_law_holds(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).filter(|&z| self.leq[x][z]).all(|z| {
                (0..n).all(|y| self.join[x][self.meet[y][z]] == self.meet[self.join[x][y]][z])
            })
        })
    }

    /// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`, checked directly.
    pub fn distributive_law_holds(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| self.meet[x][self.join[y][z]] == self.join[self.meet[x][y]][self.meet[x][z]]))
        })
    }

    /// `a ∧ b ≺ a ⟹ b ≺ a ∨ b`.
    pub fn is_upper_semimodular(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| !self.is_cover(self.meet[a][b], a) || self.is_cover(b, self.join[a][b])))
    }

    /// `a ≺ a ∨ b ⟹ a ∧ b ≺ b`.
    pub fn is_lower_semimodular(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| !self.is_cover(a, self.join[a][b]) || self.is_cover(self.meet[a][b], b)))
    }

    pub fn report(&self) -> LatticeReport {
        let pentagon = self.find_pentagon();
        let diamond = self.find_diamond();
        LatticeReport {
            size: self.len(),
            covers: self.covers.len(),
            atoms: self.atoms().len(),
            coatoms: self.coatoms().len(),
            modular: pentagon.is_none(),
            distributive: pentagon.is_none() && diamond.is_none(),
            upper_semimodular: self.is_upper_semimodular(),
            lower_semimodular: self.is_lower_semimodular(),
            pentagon,
            diamond,
        }
    }

    /// Hasse diagram in DOT, bottom at the bottom.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", l.replace('"', "\\\""));
        }
        for (a, b) in &self.covers {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("lattice serializes")
    }

    /// Meet and join tables as CSV: one row per ordered pair.
    pub fn tables_csv(&self) -> String {
        let mut s = String::from("x,y,meet,join\n");
        for x in 0..self.len() {
            for y in 0..self.len() {
                let _ = writeln!(s, "{x},{y},{},{}", self.meet[x][y], self.join[x][y]);
            }
        }
        s
    }

    /// Whether `f` (an index map from `self` to `other`) is an order isomorphism.
    pub fn is_isomorphism(&self, other: &FiniteLattice, f: &[usize]) -> bool {
        let n = self.len();
        if other.len() != n || f.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &y in f {
            if y >= n || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        (0..n).all(|x| (0..n).all(|y| self.leq[x][y] == other.leq[f[x]][f[y]]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub size: usize,
    pub covers: usize,
    pub atoms: usize,
    pub coatoms: usize,
    pub modular: bool,
    pub distributive: bool,
    pub upper_semimodular: bool,
    pub lower_semimodular: bool,
    pub pentagon: Option<[usize; 5]>,
    pub diamond: Option<[usize; 5]>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_covers(n: usize, covers: &[(usize, usize)]) -> FiniteLattice {
        let mut leq = vec![vec![false; n]; n];
        for (x, row) in leq.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(a, b) in covers {
            leq[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i][k] && leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        FiniteLattice::from_order((0..n).map(|i| i.to_string()).collect(), Vec::new(), leq).unwrap()
    }

    #[test]
    fn pentagon_shape() {
        let l = from_covers(5, &[(0, 1), (0, 2), (2, 3), (1, 4), (3, 4)]);
        assert_eq!(l.find_pentagon(), Some([0, 1, 2, 3, 4]));
        assert!(l.find_diamond().is_none());
        assert!(!l.modular_law_holds());
        assert!(!l.is_upper_semimodular());
        assert!(!l.is_lower_semimodular());
    }

    #[test]
    fn diamond_shape() {
        let l = from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]);
        assert!(l.find_pentagon().is_none());
        assert_eq!(l.find_diamond(), Some([0, 1, 2, 3, 4]));
        assert!(l.modular_law_holds());
        assert!(!l.distributive_law_holds());
        assert!(l.is_upper_semimodular() && l.is_lower_semimodular());
    }

    #[test]
    fn chains() {
        for n in 1..=3 {
            let l = FiniteLattice::chain((0..n).map(|i| i.to_string()).collect());
            assert!(l.is_distributive() && l.distributive_law_holds());
            assert!(l.is_upper_semimodular() && l.is_lower_semimodular());
            if n > 1 {
                assert_eq!(l.atoms(), vec![1]);
                assert_eq!(l.coatoms(), vec![n - 2]);
            }
        }
    }

    #[test]
    fn rejects_non_lattice() {
        let leq = vec![vec![true, false, true, true], vec![false, true, true, true], vec![false, false, true, false], vec![false, false, false, true]];
        assert!(FiniteLattice::from_order((0..4).map(|i| i.to_string()).collect(), Vec::new(), leq).is_err());
    }
}
