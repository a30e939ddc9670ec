//! Two congruences of `P^Φ_{2,1}` whose threefold compositions differ.

use twistcong::entry::CEntry::{Delta, Mu, R};
use twistcong::error::Result;
use twistcong::finite::FCMatrix;
use twistcong::oracle::{compose, compose3, ExtensionalCongruence, Monoid};
use twistcong::partition::Partition;
use twistcong::twisted::Pair;

fn main() -> Result<()> {
    let m = Monoid::new(2, 1)?;
    let sigma = FCMatrix::new(2, 1, vec![vec![Delta, R], vec![Delta, R], vec![Delta, Delta]])?;
    let tau = FCMatrix::new(2, 1, vec![vec![Mu, R], vec![Delta, Mu], vec![Delta, Delta]])?;
    let (s, t) = (ExtensionalCongruence::from_matrix(&m, &sigma), ExtensionalCongruence::from_matrix(&m, &tau));
    println!("σ = {}\nτ = {}", sigma.label(), tau.label());
    println!("σ∘τ∘σ = τ∘σ∘τ: {}", compose3(&s, &t));

    let alpha = Partition::new(2, &[vec![1, -1], vec![2], vec![-2]])?;
    let beta = Partition::new(2, &[vec![1, 2, -1], vec![-2]])?;
    let (x, y) = (Pair(0, alpha.hat()), Pair(0, beta.hat()));
    let (i, j) = (m.index_of(&x).unwrap(), m.index_of(&y).unwrap());
    let (rs, rt) = (s.relation(), t.relation());
    println!("({x}, {y}) ∈ σ∘τ∘σ: {}", compose(&compose(&rs, &rt), &rs)[i][j]);
    println!("({x}, {y}) ∈ τ∘σ∘τ: {}", compose(&compose(&rt, &rs), &rt)[i][j]);
    Ok(())
}
