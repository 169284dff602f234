// Vieta-like products for 2cos(2qπ)/((1-4q)π sin qπ).

use radical_forge::exact::ratio;
use radical_forge::vieta::latex::render_latex;
use radical_forge::vieta::{telescoping_checks, verify_product};

pub fn run_example() -> radical_forge::Result<()> {
    for (t, s) in [(1, 3), (1, 5), (3, 7)] {
        let q = ratio(t, s);
        let report = verify_product(&q, 42, 256)?;
        let telescoping = telescoping_checks(&q, 10, 256)?;
        assert!(telescoping.iter().all(|c| c.holds));
        println!(
            "q = {t}/{s}  target {}  after 42 factors off by {:.1e}",
            report.target.mid_decimal(20),
            report.final_distance()
        );
    }
    println!("{}", render_latex(&ratio(1, 3), 2)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> radical_forge::Result<()> {
    run_example()
}
