//! Partition products with their floating-component count, hats, Green's relations and the
//! permutation comparing two H-related partitions.

use twistcong::error::Result;
use twistcong::partition::{green, pd, Green, Partition};

fn main() -> Result<()> {
    let a = Partition::new(6, &[vec![1, 4], vec![2, 3, -4, -5], vec![5, 6], vec![-1, -2, -6], vec![-3]])?;
    let b = Partition::new(6, &[vec![1, 2], vec![3, 4, -1], vec![5, -4, -5, -6], vec![6], vec![-2, -3]])?;
    let (ab, phi) = a.multiply(&b)?;
    println!("α      = {a}  (rank {})", a.rank());
    println!("β      = {b}  (rank {})", b.rank());
    println!("αβ     = {ab}  (rank {})", ab.rank());
    println!("Φ(α,β) = {phi}");
    println!("α̂      = {}", a.hat());
    println!("α*     = {}", a.flip());

    let t = Partition::new(2, &[vec![1, -2], vec![2, -1]])?;
    let id = Partition::identity(2);
    for rel in [Green::R, Green::L, Green::H, Green::D] {
        println!("{rel:?}-related (id, (12)): {}", green(rel, &id, &t));
    }
    println!("pd(id, (12)) = {}", pd(&id, &t)?);
    for n in 1..=3 {
        println!("|P_{n}| = {}", Partition::all(n).len());
    }
    Ok(())
}
