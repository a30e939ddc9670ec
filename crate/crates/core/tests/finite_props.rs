//! Congruences of `P^Φ_{n,d}` as fC-matrices: atom and coatom, principal congruences,
//! and constructed generating sets.

use twistcong::entry::CEntry::{Delta, N, R};
use twistcong::finite::{build_lattice, enumerate_fc, fc_generated, fc_generating_set, fcg_contains, fcong_leq, principal_fc, validate_fc, FCMatrix, ENUMERATION_CAP};
use twistcong::partition::NormalSubgroup;
use twistcong::twisted::{elements_of, ELEMENT_CAP};

const SHAPES: [(usize, usize); 9] = [(1, 0), (1, 1), (1, 3), (2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (4, 1)];

fn expected_atom(n: usize, d: usize) -> FCMatrix {
    let mut m = FCMatrix::delta(n, d);
    m.grid[0][d] = R;
    m
}

fn expected_coatom(n: usize, d: usize) -> FCMatrix {
    let mut m = FCMatrix::rees(n, d, &[(n - 1, 0), (n, 1)]);
    m.grid[n][0] = if n >= 2 { N(NormalSubgroup::full(n)) } else { Delta };
    m
}

#[test]
fn unique_atom_and_coatom() {
    for (n, d) in SHAPES {
        let l = build_lattice(n, d).unwrap();
        let (atoms, coatoms) = (l.atoms(), l.coatoms());
        assert_eq!(atoms.len(), 1, "({n}, {d})");
        assert_eq!(coatoms.len(), 1, "({n}, {d})");
        assert_eq!(l.matrices[atoms[0]], expected_atom(n, d), "({n}, {d})");
        assert_eq!(l.matrices[coatoms[0]], expected_coatom(n, d), "({n}, {d})");
    }
}

#[test]
fn principal_congruences_are_valid_and_contain_their_pair() {
    for (n, d) in [(1, 2), (2, 1), (2, 2), (3, 0)] {
        let els = elements_of(n, d, ELEMENT_CAP).unwrap();
        for a in &els {
            for b in &els {
                let m = principal_fc(a, b, n, d).unwrap();
                assert!(validate_fc(&m).is_ok(), "({a}, {b}) on ({n}, {d}): {}", m.label());
                assert!(fcg_contains(&m, a, b) && fcg_contains(&m, b, a));
                assert_eq!(m, principal_fc(b, a, n, d).unwrap());
            }
        }
    }
}

#[test]
fn generating_sets_are_small_and_generate() {
    for (n, d) in SHAPES {
        let bound = (5 * n).div_ceil(2);
        for m in enumerate_fc(n, d, ENUMERATION_CAP).unwrap() {
            let gens = fc_generating_set(&m).unwrap();
            assert!(gens.len() <= bound, "({n}, {d}) {}: {} pairs", m.label(), gens.len());
            assert_eq!(fc_generated(&gens, n, d).unwrap(), m);
            for (a, b) in &gens {
                assert!(fcg_contains(&m, a, b));
                assert!(fcong_leq(&principal_fc(a, b, n, d).unwrap(), &m));
            }
        }
    }
}
