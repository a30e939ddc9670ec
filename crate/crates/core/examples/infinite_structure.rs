//! Shape of `Cong(P^Φ_n)`: the displayed coatom, an infinite antichain, diamond and
//! pentagon sublattices, strict shrinking, and a proper congruence outside the coatom.

use twistcong::error::Result;
use twistcong::infinite::{antichain_member, coatom, cong_leq, diamond_witness, pentagon_witness, principal_cpair, strictly_smaller, InfiniteCong};
use twistcong::partition::Partition;
use twistcong::twisted::Pair;

fn main() -> Result<()> {
    let n = 2;
    let top = InfiniteCong::cg(coatom(n)?);
    println!("coatom:\n{}", top.pair);

    let chain: Vec<InfiniteCong> = (2..=5).map(|l| antichain_member(n, l).map(InfiniteCong::cg)).collect::<Result<_>>()?;
    let comparable = (0..chain.len()).any(|x| (0..chain.len()).any(|y| x != y && cong_leq(&chain[x], &chain[y])));
    println!("Π² … Π⁵ comparable pairs: {comparable}");

    for (name, w) in [("diamond", diamond_witness(n)?), ("pentagon", pentagon_witness(n)?)] {
        let order: Vec<String> = (0..5).flat_map(|x| (0..5).map(move |y| (x, y))).filter(|&(x, y)| x < y && cong_leq(&w[x], &w[y])).map(|(x, y)| format!("{x}<{y}")).collect();
        println!("{name}: {}", order.join(" "));
    }

    let smaller = strictly_smaller(&top)?;
    println!("strictly below the coatom:\n{}", smaller.pair);

    let id = Partition::identity(n);
    let forget = principal_cpair(&Pair(0, id.clone()), &Pair(1, id))?;
    println!("kernel of forgetting the column:\n{}", forget.pair);
    println!("below the coatom: {}, above it: {}", cong_leq(&forget, &top), cong_leq(&top, &forget));
    Ok(())
}
