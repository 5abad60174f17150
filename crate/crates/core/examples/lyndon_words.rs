//! Lyndon words over `x < y`, the Chen-Fox-Lyndon factorization of a word and
//! standard factorizations.
//!
//! cargo run --example lyndon_words -- [WORD] [MAX_LEN]

use lyndon_algebra::prelude::*;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| "yxyyxxyxy".into());
    let max_len: usize = args.next().map_or(5, |s| s.parse().expect("MAX_LEN is a number"));
    let alpha = Alphabet::parse("xy")?;

    let words = lyndon_words_up_to(alpha.size(), max_len)?;
    println!("Lyndon words of length <= {max_len} ({}):", words.len());
    for len in 1..=max_len {
        let row: Vec<String> = words
            .iter()
            .filter(|w| w.len() == len)
            .map(|w| alpha.render(w))
            .collect();
        println!("  {len}: {}", row.join(" "));
    }

    let w = alpha.parse_word(&text)?;
    let factors: Vec<String> = cfl_factorization(&w)?.iter().map(|f| alpha.render(f)).collect();
    println!("\nCFL({text}) = {}", factors.join(" . "));

    println!("\nstandard factorizations:");
    for l in words.iter().filter(|l| l.len() >= 2).take(8) {
        let (u, v) = standard_factorization(l)?;
        println!("  {} = {} . {}", alpha.render(l), alpha.render(&u), alpha.render(&v));
    }
    Ok(())
}
