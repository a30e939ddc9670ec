//! Congruences on `(ℕ, +)`: order, meets and joins against their relation tables.

use twistcong::natcong::{nc_contains, nc_join, nc_leq, nc_meet, NatCong};

const WINDOW: usize = 60;

fn corpus() -> Vec<NatCong> {
    let mut out = vec![NatCong::Trivial];
    for m in 0..=6 {
        for d in 1..=6 {
            out.push(NatCong::arith(m, d));
        }
    }
    out
}

fn relation_leq(a: &NatCong, b: &NatCong) -> bool {
    (0..WINDOW).all(|i| (0..WINDOW).all(|j| !nc_contains(a, i, j) || nc_contains(b, i, j)))
}

#[test]
fn order_matches_relation_inclusion() {
    let c = corpus();
    for a in &c {
        for b in &c {
            assert_eq!(nc_leq(a, b), relation_leq(a, b), "{a} {b}");
        }
    }
}

#[test]
fn meet_and_join_are_bounds() {
    let c = corpus();
    for a in &c {
        for b in &c {
            let (m, j) = (nc_meet(a, b), nc_join(a, b));
            assert!(nc_leq(&m, a) && nc_leq(&m, b) && nc_leq(a, &j) && nc_leq(b, &j));
            for x in &c {
                if nc_leq(x, a) && nc_leq(x, b) {
                    assert!(nc_leq(x, &m), "meet {a} {b} misses {x}");
                }
                if nc_leq(a, x) && nc_leq(b, x) {
                    assert!(nc_leq(&j, x), "join {a} {b} misses {x}");
                }
            }
            for i in 0..=40 {
                for k in 0..=40 {
                    assert_eq!(nc_contains(&m, i, k), nc_contains(a, i, k) && nc_contains(b, i, k));
                }
            }
        }
    }
}

#[test]
fn sample_values() {
    assert_eq!(nc_meet(&NatCong::arith(0, 2), &NatCong::arith(0, 3)), NatCong::arith(0, 6));
    assert_eq!(nc_join(&NatCong::arith(0, 2), &NatCong::arith(0, 3)), NatCong::universal());
    assert_eq!(NatCong::generated(3, 7), NatCong::arith(3, 4));
    assert_eq!(NatCong::generated(5, 5), NatCong::Trivial);
}
