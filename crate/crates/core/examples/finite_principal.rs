//! Principal congruences of `P^Φ_{n,d}` as fC-matrices, checked against the brute-force closure.

use twistcong::error::Result;
use twistcong::finite::principal_fc;
use twistcong::oracle::{closure_of_elements, ExtensionalCongruence, Monoid};
use twistcong::partition::Partition;
use twistcong::twisted::{Pair, Zero};

fn main() -> Result<()> {
    let (n, d) = (2, 1);
    let m = Monoid::new(n, d)?;
    let a = Partition::new(2, &[vec![1, -1], vec![2], vec![-2]])?;
    let t = Partition::new(2, &[vec![1, -2], vec![2, -1]])?;
    let pairs = [
        (Pair(0, Partition::identity(2)), Pair(0, t)),
        (Pair(1, a.clone()), Pair(0, a.hat())),
        (Pair(0, a.clone()), Zero(2)),
        (Pair(0, a.clone()), Pair(1, a)),
    ];
    for (x, y) in pairs {
        let fc = principal_fc(&x, &y, n, d)?;
        let agrees = ExtensionalCongruence::from_matrix(&m, &fc) == closure_of_elements(&m, &[(x.clone(), y.clone())])?;
        println!("({x}, {y})♯ = {}    closure agrees: {agrees}", fc.label());
    }
    Ok(())
}
