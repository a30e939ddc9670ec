//! Shared fixtures: the published count grid and seeded generators for random elements and
//! congruences of `P^Φ_n`.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use twistcong::entry::CEntry::*;
use twistcong::infinite::{exceptional_row, principal_cpair, validate_cpair, CPair, CRow, InfiniteCong};
use twistcong::natcong::NatCong;
use twistcong::partition::{NormalSubgroup, Partition, Permutation};
use twistcong::twisted::TwistedElement::{self, Pair};

/// Published counts `|Cong(P^Φ_{n,d})|`, rows `n = 0..=10`, columns `d = 0..=10`.
pub const TABLE: [[u64; 11]; 11] = [
    [2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12],
    [3, 7, 14, 24, 37, 53, 72, 94, 119, 147, 178],
    [9, 43, 136, 334, 696, 1294, 2213, 3551, 5419, 7941, 11254],
    [12, 76, 329, 1105, 3100, 7608, 16842, 34353, 65560, 118404, 204139],
    [16, 134, 773, 3456, 12806, 41054, 117273, 304889, 732888, 1648660, 3503734],
    [19, 188, 1281, 6754, 29413, 110312, 366724, 1103538, 3053642, 7865696, 19043434],
    [22, 251, 1969, 11930, 59547, 255132, 965409, 3293916, 10294295, 29832242, 80951191],
    [25, 323, 2864, 19578, 110012, 529298, 2242845, 8544569, 29728765, 95627675, 287192490],
    [28, 404, 3993, 30373, 189556, 1010840, 4737070, 19912815, 76266840, 269426820, 886585245],
    [31, 494, 5383, 45071, 309114, 1808352, 9279855, 42636438, 178144941, 685232184, 2450483412],
    [34, 593, 7061, 64509, 482051, 3068039, 17102328, 85221356, 385570064, 1603380636, 6189136484],
];

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Uniform partition of `P_n`, from a list cached per `n ≤ 4`.
pub fn random_partition(rng: &mut ChaCha8Rng, n: usize) -> Partition {
    use std::sync::OnceLock;
    static ALL: [OnceLock<Vec<Partition>>; 5] = [const { OnceLock::new() }; 5];
    ALL[n].get_or_init(|| Partition::all(n)).choose(rng).unwrap().clone()
}

pub fn random_element(rng: &mut ChaCha8Rng, n: usize, max_col: usize) -> TwistedElement {
    Pair(rng.gen_range(0..=max_col), random_partition(rng, n))
}

/// An exceptional C-pair together with a pair in `cgx` but not in `cg`.
pub fn exceptional_pair(rng: &mut ChaCha8Rng) -> (CPair, TwistedElement, TwistedElement) {
    loop {
        let n = rng.gen_range(2..=5);
        let x = rng.gen_range(2..=n.min(4));
        let m = rng.gen_range(0..5);
        let half = rng.gen_range(1..4);
        let mut p = CPair::delta(n);
        for q in 0..x {
            p.rows[q] = CRow::constant(R);
            p.theta[q] = NatCong::universal();
        }
        if x > 2 {
            let from = rng.gen_range(0..=m);
            p.rows[x] = CRow::from_fn(from, |c| if c < from { Delta } else { N(NormalSubgroup::alternating(x)) });
        }
        p.theta[x] = NatCong::arith(m, 2 * half);
        if validate_cpair(&p).is_err() || exceptional_row(&p).map(|e| e.0) != Some(x) {
            continue;
        }
        let alpha = Partition::partial_identity(n, x);
        let swap = Permutation::from_cycles(n, &[&[1, 2]]).unwrap();
        let beta = alpha.relabel(&swap, &Permutation::identity(n));
        return (p, Pair(m, alpha), Pair(m + half, beta));
    }
}

/// A nontrivial congruence of `P^Φ_n`: a principal congruence of a random pair, or the
/// exceptional congruence of a random exceptional C-pair.
pub fn nontrivial_congruence(rng: &mut ChaCha8Rng) -> InfiniteCong {
    if rng.gen_bool(0.2) {
        return InfiniteCong::cgx(exceptional_pair(rng).0);
    }
    let n = rng.gen_range(1..=4);
    loop {
        let (a, b) = (random_element(rng, n, 5), random_element(rng, n, 5));
        if a != b {
            return principal_cpair(&a, &b).unwrap();
        }
    }
}
