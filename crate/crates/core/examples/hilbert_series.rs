//! Hilbert series from the atom lengths, checked against normal-word counts,
//! and the PBW decomposition of a few normal words.
//!
//! cargo run --example hilbert_series -- [ALPHABET] [RELATIONS] [TRUNC]

use lyndon_algebra::prelude::*;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let alphabet = args.next().unwrap_or_else(|| "xy".into());
    let relations = args.next().unwrap_or_else(|| "xxy,xyy".into());
    let trunc: usize = args.next().map_or(10, |s| s.parse().expect("TRUNC is a number"));

    let w = Antichain::from_relations(&alphabet, &relations)?;
    let atoms = lyndon_atoms(&w)?;
    let h = hilbert_series(&atoms, trunc)?;
    println!("H(t) = {}", h.product_form());
    let coeffs: Vec<String> = h.coeffs.iter().map(ToString::to_string).collect();
    println!("     = {} + ...", coeffs.join(", "));
    let counts = normal_words_up_to(&w, trunc.min(12))?.counts;
    println!("normal words: {counts:?}");

    let alpha = w.alphabet();
    let longest = normal_words_up_to(&w, 6)?;
    println!("\nPBW decompositions (atoms in descending order):");
    for x in longest.by_length[6].iter().take(6) {
        let d = pbw_decompose(x, &atoms)?;
        let parts: Vec<String> = d
            .factors()
            .into_iter()
            .map(|(a, k)| {
                if k == 1 {
                    format!("({})", alpha.render(a))
                } else {
                    format!("({})^{k}", alpha.render(a))
                }
            })
            .collect();
        println!("  {} = {}", alpha.render(x), parts.join(" "));
    }
    Ok(())
}
