//! fC-matrix machinery against brute-force closure on small `P^Φ_{n,d}`.

use std::collections::HashMap;

use twistcong::finite::{enumerate_fc, fcong_leq, principal_fc, ENUMERATION_CAP};
use twistcong::oracle::{all_congruences, congruence_closure, match_to_fc, ExtensionalCongruence, Monoid};

const SMALL: [(usize, usize); 7] = [(1, 0), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1), (3, 0)];

#[test]
fn multiplication_is_associative() {
    for (n, d) in SMALL {
        assert!(Monoid::new(n, d).unwrap().is_associative(), "({n},{d})");
    }
}

#[test]
fn enumeration_matches_oracle_congruences() {
    for (n, d) in SMALL {
        let m = Monoid::new(n, d).unwrap();
        let cs = all_congruences(&m);
        let ms = enumerate_fc(n, d, ENUMERATION_CAP).unwrap();
        assert_eq!(cs.len(), ms.len(), "({n},{d})");
        let mut matched: Vec<_> = cs.iter().map(|c| match_to_fc(&m, c).unwrap()).collect();
        let mut listed = ms.clone();
        matched.sort_by_key(|x| x.label());
        listed.sort_by_key(|x| x.label());
        assert_eq!(matched, listed, "({n},{d})");
        for a in &ms {
            let ea = ExtensionalCongruence::from_matrix(&m, a);
            assert!(ea.is_compatible(&m), "{}", a.label());
            for b in &ms {
                let eb = ExtensionalCongruence::from_matrix(&m, b);
                assert_eq!(fcong_leq(a, b), ea.leq(&eb), "{} vs {}", a.label(), b.label());
            }
        }
    }
}

#[test]
fn principal_matches_oracle_closure() {
    for (n, d) in SMALL {
        let m = Monoid::new(n, d).unwrap();
        let mut expanded: HashMap<String, ExtensionalCongruence> = HashMap::new();
        for x in 0..m.len() {
            for y in x..m.len() {
                let closure = congruence_closure(&m, &[(x, y)]);
                for (a, b) in [(&m.elements[x], &m.elements[y]), (&m.elements[y], &m.elements[x])] {
                    let p = principal_fc(a, b, n, d).unwrap();
                    let e = expanded.entry(p.label()).or_insert_with(|| ExtensionalCongruence::from_matrix(&m, &p));
                    assert_eq!(*e, closure, "({n},{d}) {a} {b} -> {}", p.label());
                }
            }
        }
    }
}
