// Rigorous enclosures of a radical tower at growing precision.

use radical_forge::codec::SignWord;
use radical_forge::radical::{eval_tower, RadicalTower};

pub fn run_example() -> radical_forge::Result<()> {
    let word = SignWord::parse("|-+-")?;
    let tower = RadicalTower::prefix(&word, 30);
    let mut previous = None;
    for prec in [64, 128, 256, 512] {
        let x = eval_tower(&tower, prec)?;
        println!(
            "{prec:>4} bits  {}  width {:.1e}",
            x.mid_decimal(30),
            x.width_f64()
        );
        if let Some(p) = previous.replace(x.clone()) {
            assert!(x.overlaps(&p));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> radical_forge::Result<()> {
    run_example()
}
