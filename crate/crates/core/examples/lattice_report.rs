//! `Cong(P^Φ_{n,d})` from its fC-matrices: size, atoms, coatoms, modularity, distributivity,
//! the sublattice witnesses, and the Hasse diagram as DOT.

use twistcong::error::Result;
use twistcong::finite::{build_lattice, label_d0};

fn main() -> Result<()> {
    for (n, d) in [(2, 0), (1, 2), (2, 1), (2, 2), (3, 1)] {
        let l = build_lattice(n, d)?;
        let r = l.report();
        println!(
            "({n},{d}): size {}, atoms {}, coatoms {}, modular {}, distributive {}, diamond {:?}",
            r.size, r.atoms, r.coatoms, r.modular, r.distributive, r.diamond
        );
    }
    let l = build_lattice(3, 0)?;
    for (a, b) in &l.covers {
        let name = |x: usize| label_d0(&l.matrices[x]).map_or_else(|| l.labels[x].clone(), |z| z.to_string());
        println!("  {} ≺ {}", name(*a), name(*b));
    }
    print!("{}", build_lattice(1, 1)?.to_dot());
    Ok(())
}
