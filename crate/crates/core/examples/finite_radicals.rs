// Every nested radical of depth 3 is 2cos(βπ/32) for an odd β.

use radical_forge::codec::{finite_closed_form, render_signs};
use radical_forge::exact::Sign;
use radical_forge::radical::{eval_tower, RadicalTower};
use radical_forge::trig::two_cos_pi;

pub fn run_example() -> radical_forge::Result<()> {
    let k = 3;
    for bits in 0..(1u32 << k) {
        let signs: Vec<Sign> = (0..k)
            .map(|i| {
                if bits >> i & 1 == 1 {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            })
            .collect();
        let form = finite_closed_form(&signs);
        let value = eval_tower(&RadicalTower::plain(signs.clone()), 128)?;
        assert!(value.overlaps(&two_cos_pi(&form.angle(), 128)));
        println!(
            "{:<4} β = {:>2}  {}",
            render_signs(&signs),
            form.beta,
            value.mid_decimal(25)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> radical_forge::Result<()> {
    run_example()
}
