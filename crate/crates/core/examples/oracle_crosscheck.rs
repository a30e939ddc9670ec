//! Brute-force congruence lattices of small `P^Φ_{n,d}` from multiplication tables, matched
//! to fC-matrices and compared with the symbolic lattice.

use twistcong::error::Result;
use twistcong::finite::build_lattice;
use twistcong::oracle::{congruence_lattice, match_to_fc, Monoid};

fn main() -> Result<()> {
    for (n, d) in [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1)] {
        let m = Monoid::new(n, d)?;
        let (cs, l) = congruence_lattice(&m)?;
        let built = build_lattice(n, d)?;
        let f = cs.iter().map(|c| match_to_fc(&m, c).map(|mat| built.matrices.iter().position(|x| *x == mat).unwrap_or(usize::MAX))).collect::<Result<Vec<_>>>()?;
        println!(
            "({n},{d}): {} elements, {} generators, {} congruences, isomorphic to the fC lattice: {}",
            m.len(),
            m.generators().len(),
            cs.len(),
            l.is_isomorphism(&built, &f)
        );
    }
    Ok(())
}
