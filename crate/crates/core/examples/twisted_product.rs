//! Products in `P^Φ_n` and in the finite quotients `P^Φ_{n,d}`, and the D-class grid.

use twistcong::error::Result;
use twistcong::partition::Partition;
use twistcong::twisted::{elements_of, grid_index, t_mul_d, t_mul_infinite, Pair, ELEMENT_CAP};

fn main() -> Result<()> {
    let e = Pair(1, Partition::singletons(2));
    let t = Pair(0, Partition::new(2, &[vec![1, -2], vec![2, -1]])?);
    println!("{e} · {e} = {}", t_mul_infinite(&e, &e)?);
    println!("{t} · {t} = {}", t_mul_infinite(&t, &t)?);
    for d in [3, 4] {
        println!("in P^Φ_{{2,{d}}}: {e} · {e} = {}", t_mul_d(&e, &e, d)?);
    }
    println!("grid index of {e}: {:?}", grid_index(&e)?);
    for (n, d) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
        println!("|P^Φ_{{{n},{d}}}| = {}", elements_of(n, d, ELEMENT_CAP)?.len());
    }
    Ok(())
}
