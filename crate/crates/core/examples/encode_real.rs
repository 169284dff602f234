// Reading signs off an enclosure instead of an exact angle.

use radical_forge::codec::{encode_rational, encode_real, render_signs};
use radical_forge::exact::ratio;
use radical_forge::trig::two_cos_pi;

pub fn run_example() -> radical_forge::Result<()> {
    let q = ratio(3, 7);
    let exact = encode_rational(&q)?.prefix(48);
    for prec in [32, 64, 256] {
        let x = two_cos_pi(&q, prec);
        let got = encode_real(&x, 48, prec)?;
        assert_eq!(got.signs[..], exact[..got.signs.len()]);
        println!(
            "{prec:>3} bits: {} signs {}  stopped at {:?}",
            got.signs.len(),
            render_signs(&got.signs),
            got.undecidable_at
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> radical_forge::Result<()> {
    run_example()
}
