//! Validate a relation set and list its normal words.
//!
//! cargo run --example normal_words -- [ALPHABET] [RELATIONS] [MAX_LEN]

use lyndon_algebra::algebra::MatchStrategy;
use lyndon_algebra::prelude::*;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let alphabet = args.next().unwrap_or_else(|| "xy".into());
    let relations = args.next().unwrap_or_else(|| "xxy,xyy,yx".into());
    let max_len: usize = args.next().map_or(6, |s| s.parse().expect("MAX_LEN is a number"));

    let alpha = Alphabet::parse(&alphabet)?;
    let raw: Vec<Word> = relations
        .split(',')
        .map(|r| alpha.parse_word(r.trim()))
        .collect::<Result<_>>()?;
    let report = validate_lyndon_antichain(&alpha, &raw)?;
    println!("Lyndon antichain: {}", report.valid);
    for s in &report.words {
        println!("  {:<8} lyndon={}", s.word, s.lyndon);
    }
    for (a, b) in &report.comparable {
        println!("  {a} is a factor of {b}");
    }

    let w = Antichain::new(alpha.clone(), raw)?;
    let matcher = w.matcher(MatchStrategy::Automaton);
    let normal = normal_words_up_to(&w, max_len)?;
    println!("\nnormal words by length: {:?}", normal.counts);
    for (len, layer) in normal.by_length.iter().enumerate().skip(1).take(4) {
        let row: Vec<String> = layer.iter().map(|x| alpha.render(x)).collect();
        println!("  {len}: {}", row.join(" "));
    }
    assert!(normal.iter().all(|x| matcher.is_normal(x)));
    Ok(())
}
