// Limit points of the scaled error sequence u_n = 2^n (2cos(qπ) - r_n).

use radical_forge::codec::{decode, SignWord};
use radical_forge::limits::limit_points;
use radical_forge::radical::u_sequence;

pub fn run_example() -> radical_forge::Result<()> {
    for block in ["-", "+-", "-+-"] {
        let word = SignWord::parse(&format!("|{block}"))?;
        let lp = limit_points(word.block())?;
        let classes = lp.class_count();
        let us = u_sequence(&word, 16 * classes, 256)?;
        println!("block {block}  q = {}", decode(&word)?);
        for (j, (c, value)) in lp.coefficients.iter().zip(lp.values(256)).enumerate() {
            let u = us[15 * classes + j - 1].clone()?;
            println!(
                "  j = {j}  c = {c:>6}  limit {}  u_{} = {}",
                value.mid_decimal(15),
                15 * classes + j,
                u.mid_decimal(15)
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> radical_forge::Result<()> {
    run_example()
}
