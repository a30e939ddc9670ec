//! Principal congruences of `P^Φ_n` against closure in the quotients `P^Φ_{n,d}`.
//!
//! Joining a congruence with the Rees congruence of the ideal of columns `> d` merges exactly
//! the classes meeting that ideal, so away from the zero class the finite closure of `(a, b)`
//! and the infinite principal congruence `(a, b)^♯` must agree.

use twistcong::infinite::{cong_contains, principal_cpair};
use twistcong::oracle::{congruence_closure, Monoid};

fn check(n: usize, d: usize, stride: (usize, usize)) {
    let m = Monoid::new(n, d).unwrap();
    let zero = m.zero();
    for x in (0..zero).step_by(stride.0) {
        for y in (0..zero).step_by(stride.1) {
            let s = principal_cpair(&m.elements[x], &m.elements[y]).unwrap();
            let c = congruence_closure(&m, &[(x, y)]);
            for u in 0..zero {
                for v in 0..zero {
                    let inside = cong_contains(&s, &m.elements[u], &m.elements[v]);
                    if c.related(u, zero) {
                        assert!(!inside || c.related(v, zero), "({n},{d}) {} {}: {} {}", m.elements[x], m.elements[y], m.elements[u], m.elements[v]);
                    } else {
                        assert_eq!(inside, c.related(u, v), "({n},{d}) {} {}: {} {}", m.elements[x], m.elements[y], m.elements[u], m.elements[v]);
                    }
                }
            }
        }
    }
}

#[test]
fn rank_one_quotients() {
    check(1, 4, (1, 1));
}

#[test]
fn rank_two_quotients() {
    check(2, 2, (1, 1));
}

#[test]
fn rank_three_quotient_sampled() {
    check(3, 0, (13, 5));
}
