//! Congruences of `P^Φ_n` as C-pairs: order axioms, agreement of order and membership,
//! principal congruences, exceptional congruences and the structural witnesses.

mod common;

use rand::Rng;
use twistcong::infinite::{
    antichain_member, coatom, cong_contains, cong_leq, generating_set, verify_generators, diamond_witness, pentagon_witness, principal_cpair, strictly_smaller, validate_cpair,
    CPair, InfiniteCong,
};
use twistcong::partition::Partition;
use twistcong::twisted::{t_mul_infinite, TwistedElement::{self, Pair}};

fn corpus(seed: u64, size: usize, max_n: usize) -> Vec<InfiniteCong> {
    let mut rng = common::rng(seed);
    let mut out = Vec::new();
    while out.len() < size {
        let s = common::nontrivial_congruence(&mut rng);
        if s.pair.n <= max_n {
            out.push(s);
        }
    }
    out
}

/// Elements with columns `≤ max_col`.
fn window(n: usize, max_col: usize) -> Vec<TwistedElement> {
    let parts = Partition::all(n);
    (0..=max_col).flat_map(|i| parts.iter().map(move |a| Pair(i, a.clone()))).collect()
}

fn is_delta(s: &InfiniteCong) -> bool {
    !s.exceptional && s.pair.is_delta()
}

fn same(a: &InfiniteCong, b: &InfiniteCong) -> bool {
    a.exceptional == b.exceptional && a.pair.canonical() == b.pair.canonical()
}

#[test]
fn generated_congruences_are_valid() {
    for s in corpus(1, 500, 4) {
        assert!(validate_cpair(&s.pair).is_ok(), "{}", s.pair);
    }
}

#[test]
fn order_axioms() {
    let c = corpus(2, 500, 4);
    for a in &c {
        assert!(cong_leq(a, a));
    }
    for a in &c {
        for b in &c {
            if cong_leq(a, b) && cong_leq(b, a) {
                assert!(same(a, b), "{}{}", a.pair, b.pair);
            }
        }
    }
    let small: Vec<&InfiniteCong> = c.iter().filter(|s| s.pair.n == 2).take(150).collect();
    for a in &small {
        for b in small.iter().filter(|b| cong_leq(a, b)) {
            for x in small.iter().filter(|x| cong_leq(b, x)) {
                assert!(cong_leq(a, x));
            }
        }
    }
}

#[test]
fn order_agrees_with_membership_on_a_window() {
    let c = corpus(3, 120, 2);
    for n in 1..=2 {
        let els = window(n, 6);
        let of_n: Vec<&InfiniteCong> = c.iter().filter(|s| s.pair.n == n).collect();
        let members: Vec<Vec<(usize, usize)>> = of_n
            .iter()
            .map(|s| {
                (0..els.len())
                    .flat_map(|x| (0..els.len()).map(move |y| (x, y)))
                    .filter(|&(x, y)| x != y && cong_contains(s, &els[x], &els[y]))
                    .collect()
            })
            .collect();
        for (a, ma) in of_n.iter().zip(&members) {
            for (b, mb) in of_n.iter().zip(&members) {
                let included = ma.iter().all(|p| mb.binary_search(p).is_ok());
                if cong_leq(a, b) {
                    assert!(included, "leq but a member escapes\n{}\n{}", a.pair, b.pair);
                }
            }
        }
    }
}

#[test]
fn principal_congruences_are_least() {
    let mut rng = common::rng(4);
    for _ in 0..300 {
        let n = rng.gen_range(1..=3);
        let (a, b) = (common::random_element(&mut rng, n, 4), common::random_element(&mut rng, n, 4));
        let s = principal_cpair(&a, &b).unwrap();
        assert!(validate_cpair(&s.pair).is_ok());
        assert!(cong_contains(&s, &a, &b) && cong_contains(&s, &b, &a));
        for _ in 0..5 {
            let (u, v) = (common::random_element(&mut rng, n, 2), common::random_element(&mut rng, n, 2));
            let (x, y) = (t_mul_infinite(&t_mul_infinite(&u, &a).unwrap(), &v).unwrap(), t_mul_infinite(&t_mul_infinite(&u, &b).unwrap(), &v).unwrap());
            assert!(cong_contains(&s, &x, &y), "translate of the generator escapes: {a} {b} by {u} {v}");
            assert!(cong_leq(&principal_cpair(&x, &y).unwrap(), &s), "({x}, {y})♯ not below ({a}, {b})♯");
        }
    }
}

#[test]
fn exceptional_congruences_are_strictly_larger() {
    let mut rng = common::rng(5);
    for _ in 0..100 {
        let (p, a, b) = common::exceptional_pair(&mut rng);
        let (plain, ext) = (InfiniteCong::cg(p.clone()), InfiniteCong::cgx(p));
        assert!(cong_contains(&ext, &a, &b) && !cong_contains(&plain, &a, &b));
        assert!(cong_leq(&plain, &ext) && !cong_leq(&ext, &plain));
    }
}

fn assert_pattern(s: &[InfiniteCong], below: &[(usize, usize)], apart: &[(usize, usize)]) {
    for &(x, y) in below {
        assert!(cong_leq(&s[x], &s[y]) && !cong_leq(&s[y], &s[x]), "{x} < {y}");
    }
    for &(x, y) in apart {
        assert!(!cong_leq(&s[x], &s[y]) && !cong_leq(&s[y], &s[x]), "{x} ∥ {y}");
    }
}

#[test]
fn diamond_and_pentagon_patterns() {
    for n in 1..=4 {
        let d = diamond_witness(n).unwrap();
        assert_pattern(&d, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], &[(1, 2), (1, 3), (2, 3)]);
        let p = pentagon_witness(n).unwrap();
        assert_pattern(&p, &[(0, 1), (0, 2), (2, 3), (1, 4), (3, 4)], &[(1, 2), (1, 3)]);
    }
}

#[test]
fn antichain_is_pairwise_incomparable() {
    for n in 1..=4 {
        let members: Vec<InfiniteCong> = (2..=8).map(|l| InfiniteCong::cg(antichain_member(n, l).unwrap())).collect();
        for (x, a) in members.iter().enumerate() {
            for b in &members[x + 1..] {
                assert!(!cong_leq(a, b) && !cong_leq(b, a));
            }
        }
    }
}

#[test]
fn strictly_smaller_is_strict_and_nontrivial() {
    for s in corpus(6, 200, 4) {
        let t = strictly_smaller(&s).unwrap();
        let delta = InfiniteCong::cg(CPair::delta(s.pair.n));
        assert!(!is_delta(&t) && cong_leq(&delta, &t), "{}", s.pair);
        assert!(cong_leq(&t, &s) && !cong_leq(&s, &t), "{}\n{}", s.pair, t.pair);
    }
}

fn units(n: usize, max_col: usize) -> Vec<TwistedElement> {
    let perms: Vec<Partition> = Partition::all(n).into_iter().filter(|a| a.rank() == n).collect();
    (0..=max_col).flat_map(|i| perms.iter().map(move |a| Pair(i, a.clone()))).collect()
}

/// The displayed coatom has two classes: the units in column 0, and everything else.
/// A congruence lies below it iff the class of the identity holds column-0 units only.
fn identity_class_escapes(s: &InfiniteCong, n: usize) -> Option<TwistedElement> {
    let one = Pair(0, Partition::identity(n));
    let low = window(n, 3).into_iter().filter(|x| x.rank() != Some(n));
    units(n, 60).into_iter().filter(|x| x.column() != Some(0)).chain(low).find(|x| cong_contains(s, &one, x))
}

#[test]
fn forgetting_the_column_is_a_homomorphism() {
    for n in 1..=3 {
        let els = window(n, 3);
        for x in &els {
            for y in &els {
                let xy = t_mul_infinite(x, y).unwrap();
                let (a, b) = (x.partition().unwrap(), y.partition().unwrap());
                assert_eq!(xy.partition().unwrap(), &a.multiply(b).unwrap().0);
                assert_eq!(xy.rank() == Some(n), a.rank() == n && b.rank() == n);
            }
        }
        let id = Partition::identity(n);
        let kernel = principal_cpair(&Pair(0, id.clone()), &Pair(1, id.clone())).unwrap();
        for x in &els {
            for y in &els {
                assert_eq!(cong_contains(&kernel, x, y), x.partition() == y.partition(), "{x} {y}");
            }
        }
        let top = InfiniteCong::cg(coatom(n).unwrap());
        assert!(!cong_leq(&kernel, &top) && !cong_leq(&top, &kernel));
        assert!(identity_class_escapes(&kernel, n).is_some());
        assert!(identity_class_escapes(&top, n).is_none());
    }
}

#[test]
fn coatom_order_matches_the_identity_class() {
    let mut rng = common::rng(7);
    let mut escapes = 0;
    for _ in 0..400 {
        let n = rng.gen_range(1..=3);
        let (a, b) = (common::random_element(&mut rng, n, 5), common::random_element(&mut rng, n, 5));
        let s = principal_cpair(&a, &b).unwrap();
        let top = InfiniteCong::cg(coatom(n).unwrap());
        let below = cong_leq(&s, &top);
        assert_eq!(below, identity_class_escapes(&s, n).is_none(), "({a}, {b})♯");
        escapes += usize::from(!below && !cong_leq(&top, &s));
    }
    assert!(escapes > 0);
}

/// `(i, α) ↦ i + 1 − rank α` is a homomorphism from `P^Φ_1` onto `(ℕ, +)`.
fn weight(x: &TwistedElement) -> usize {
    match x {
        Pair(i, a) => i + 1 - a.rank(),
        _ => unreachable!(),
    }
}

/// For `n = 1` the displayed coatom is one of many maximal congruences: the kernels of
/// `weight mod p` onto `ℤ_p` and of `rank` onto the two-element semilattice escape it.
#[test]
fn maximal_congruences_beside_the_coatom_for_n_1() {
    let (id, e) = (Partition::identity(1), Partition::identity(1).hat());
    let els = window(1, 8);
    for x in &els {
        for y in &els {
            let xy = t_mul_infinite(x, y).unwrap();
            assert_eq!(weight(&xy), weight(x) + weight(y));
            assert_eq!(xy.rank(), x.rank().min(y.rank()));
        }
    }
    let top = InfiniteCong::cg(coatom(1).unwrap());
    let primes = [2, 3, 5, 7];
    let mut maximal: Vec<InfiniteCong> = primes.iter().map(|&p| principal_cpair(&Pair(0, id.clone()), &Pair(p - 1, e.clone())).unwrap()).collect();
    for (&p, k) in primes.iter().zip(&maximal) {
        for x in &els {
            for y in &els {
                assert_eq!(cong_contains(k, x, y), weight(x) % p == weight(y) % p, "mod {p}: {x} {y}");
            }
        }
    }
    let by_rank = principal_cpair(&Pair(0, id.clone()), &Pair(1, id.clone())).unwrap();
    for x in &els {
        for y in &els {
            assert_eq!(cong_contains(&by_rank, x, y), x.rank() == y.rank(), "{x} {y}");
        }
    }
    maximal.push(by_rank);
    for (x, k) in maximal.iter().enumerate() {
        assert!(!cong_leq(k, &top) && !cong_leq(&top, k));
        for (y, other) in maximal.iter().enumerate() {
            assert_eq!(cong_leq(k, other), x == y);
        }
    }
    maximal.push(top);

    let mut rng = common::rng(8);
    let mut escaped = 0;
    for _ in 0..300 {
        let (a, b) = (common::random_element(&mut rng, 1, 6), common::random_element(&mut rng, 1, 6));
        let s = principal_cpair(&a, &b).unwrap();
        if maximal.iter().all(|m| !cong_leq(&s, m)) {
            assert!(cong_leq(&maximal[maximal.len() - 1], &s) && cong_leq(&maximal[0], &s), "({a}, {b})♯ is below no candidate");
            continue;
        }
        escaped += usize::from(!cong_leq(&s, &maximal[maximal.len() - 1]));
    }
    assert!(escaped > 0);
}

#[test]
fn generating_sets_verify_within_the_bound() {
    let mut sizes = [0usize; 11];
    for s in corpus(9, 300, 4) {
        let pairs = generating_set(&s);
        let check = verify_generators(&s, &pairs);
        assert!(check.verified, "{}{check:?}", s.pair);
        assert!(pairs.len() <= (5 * s.pair.n).div_ceil(2), "{} pairs for\n{}", pairs.len(), s.pair);
        for (a, b) in &pairs {
            assert!(cong_contains(&s, a, b));
            assert!(cong_leq(&principal_cpair(a, b).unwrap(), &s));
        }
        sizes[pairs.len()] += 1;
    }
    assert!(sizes[1] > 0 && sizes[2..].iter().sum::<usize>() > 0, "{sizes:?}");
}

#[test]
fn rows_weakly_increase() {
    for s in corpus(10, 500, 4) {
        for row in &s.pair.rows {
            for c in 0..=row.prefix.len() {
                assert!(row.get(c).leq(&row.get(c + 1)), "{}", s.pair);
            }
        }
    }
    for (n, d) in [(2, 2), (3, 1)] {
        for m in twistcong::finite::enumerate_fc(n, d, twistcong::finite::ENUMERATION_CAP).unwrap() {
            assert!(m.grid.iter().all(|r| r.windows(2).all(|w| w[0].leq(&w[1]))), "{}", m.label());
        }
    }
}
