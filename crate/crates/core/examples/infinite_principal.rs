//! Principal congruences of `P^Φ_n` as C-pairs, with their shape and membership tests.

use twistcong::error::Result;
use twistcong::infinite::{cong_contains, principal_case, principal_cpair};
use twistcong::partition::Partition;
use twistcong::twisted::{t_mul_infinite, Pair};

fn main() -> Result<()> {
    let id = Partition::identity(2);
    let t = Partition::new(2, &[vec![1, -2], vec![2, -1]])?;
    let a = Partition::new(2, &[vec![1, -1], vec![2], vec![-2]])?;
    let pairs = [
        (Pair(0, id.clone()), Pair(1, id.clone())),
        (Pair(0, id.clone()), Pair(2, t.clone())),
        (Pair(1, a.clone()), Pair(0, a.hat())),
        (Pair(0, a.clone()), Pair(0, Partition::singletons(2))),
    ];
    for (x, y) in &pairs {
        let s = principal_cpair(x, y)?;
        println!("({x}, {y})♯, case {}{}", principal_case(x, y)?, if s.exceptional { ", exceptional" } else { "" });
        print!("{}", s.pair);
        let (u, v) = (t_mul_infinite(x, &Pair(1, a.clone()))?, t_mul_infinite(y, &Pair(1, a.clone()))?);
        println!("  contains ({u}, {v}): {}\n", cong_contains(&s, &u, &v));
    }
    Ok(())
}
