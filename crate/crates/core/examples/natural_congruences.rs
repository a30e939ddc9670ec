//! Congruences on `(ℕ, +)`: `Δ` and `(m, m+p)♯`, with order, meet and join.

use twistcong::natcong::NatCong;

fn main() {
    let a = NatCong::generated(2, 6);
    let b = NatCong::generated(3, 9);
    println!("a = {a}, b = {b}");
    println!("a ∧ b = {}", a.meet(&b));
    println!("a ∨ b = {}", a.join(&b));
    println!("a ≤ a ∨ b: {}", a.leq(&a.join(&b)));
    println!("(7, 11) ∈ a: {}", a.contains(7, 11));
    println!("Δ = {}, ∇ = {}", NatCong::generated(4, 4), NatCong::universal());
}
