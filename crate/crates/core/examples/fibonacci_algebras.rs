//! The Fibonacci algebras F_n: words, relations, atoms and the checks that
//! tie them together.
//!
//! cargo run --example fibonacci_algebras -- [MAX_N]

use lyndon_algebra::fibonacci::fib_len;
use lyndon_algebra::prelude::*;

fn main() -> Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .map_or(7, |s| s.parse().expect("MAX_N is a number"));
    let alpha = Alphabet::parse("xy")?;

    for (k, f) in fib_words(max_n.min(8)).iter().enumerate() {
        println!("f_{k:<2} {:>3}  {}", fib_len(k), alpha.render(f));
    }
    println!();
    for n in 2..=max_n {
        let family = FibFamily::new(n)?;
        let report = fib_checks(n)?;
        let gl = global_dimension(&family.antichain, ChainLimits::default())?;
        let mut lengths = family.atoms.lengths();
        lengths.sort_unstable();
        println!(
            "F_{n}: |W| = {}, atom lengths {:?}, gk = {}, gl = {gl}, checks {}",
            family.antichain.len(),
            lengths,
            family.atoms.len(),
            if report.ok() { "ok" } else { "FAILED" }
        );
    }
    Ok(())
}
