// Sign words of rational angles, and back.

use radical_forge::codec::{classify, decode, encode_rational};
use radical_forge::exact::parse_rational;

pub fn run_example() -> radical_forge::Result<()> {
    for text in ["1/3", "1/5", "3/7", "5/17", "21/136", "3/8"] {
        let q = parse_rational(text)?;
        let word = encode_rational(&q)?;
        let info = classify(&q)?;
        assert_eq!(decode(&word)?, q);
        println!(
            "2cos({text}·π)  word {:<12} kind {:?}  period {:?}",
            word.render(),
            info.kind,
            info.period
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> radical_forge::Result<()> {
    run_example()
}
