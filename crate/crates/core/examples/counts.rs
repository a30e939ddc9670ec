//! Exact counts `|Cong(P^Φ_{n,d})|` by closed form, recursion, generating function and
//! enumeration, and the count grid as CSV.

use twistcong::enumeration::{count, count_closed, table, table_csv, CountMethod};
use twistcong::error::Result;
use twistcong::finite::count_fc;

fn main() -> Result<()> {
    for (n, d) in [(2, 3), (3, 2), (4, 4)] {
        println!(
            "({n},{d}): closed {}, recursion {}, gf {}, enumerated {}",
            count(n, d, CountMethod::Closed)?,
            count(n, d, CountMethod::Recursion)?,
            count(n, d, CountMethod::Gf)?,
            count_fc(n, d)?
        );
    }
    println!("(40,40): {}", count_closed(40, 40));
    print!("{}", table_csv(&table(10, 10)));
    Ok(())
}
