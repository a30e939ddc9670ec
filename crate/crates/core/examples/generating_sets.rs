//! Generating sets: constructed for every congruence of `P^Φ_{2,1}`, minimal for
//! `Cong(P^Φ_{n,0})`, and for a few congruences of `P^Φ_n`.

use twistcong::error::Result;
use twistcong::finite::{build_lattice, enumerate_fc, fc_generating_set, label_d0, minimal_generator_count, ENUMERATION_CAP};
use twistcong::infinite::{antichain_member, coatom, generating_set, verify_generators, InfiniteCong};
use twistcong::twisted::elements_of;

fn main() -> Result<()> {
    let mut sizes = [0usize; 6];
    for m in enumerate_fc(2, 1, ENUMERATION_CAP)? {
        sizes[fc_generating_set(&m)?.len()] += 1;
    }
    println!("P^Φ_{{2,1}}: congruences by generating-set size {sizes:?}");

    let n = 3;
    let els = elements_of(n, 0, 5000)?;
    for m in build_lattice(n, 0)?.matrices {
        let name = label_d0(&m).map_or_else(|| m.label(), |l| l.to_string());
        println!("  {name}: {:?} pair(s)", minimal_generator_count(&m, &els)?);
    }

    for s in [InfiniteCong::cg(coatom(2)?), InfiniteCong::cg(antichain_member(2, 3)?)] {
        let pairs = generating_set(&s);
        print!("{}", s.pair);
        println!("  {} pair(s), verified {}", pairs.len(), verify_generators(&s, &pairs).verified);
    }
    Ok(())
}
