//! Anick chains and the Betti table of the minimal resolution of the
//! residue field. Relations need not be Lyndon; for other relations the
//! enumeration is capped with `--max-n`-style limits.
//!
//! cargo run --example anick_chains -- [ALPHABET] [RELATIONS]

use lyndon_algebra::prelude::*;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let alphabet = args.next().unwrap_or_else(|| "xyz".into());
    let relations = args.next().unwrap_or_else(|| "xz,zy,xxy,xyy,zxy".into());

    let w = Antichain::from_relations(&alphabet, &relations)?;
    let limits = if w.is_lyndon() {
        ChainLimits::default()
    } else {
        ChainLimits::up_to(16)
    };
    let chains = enumerate_chains(&w, limits)?;
    let alpha = w.alphabet();
    for (n, layer) in chains.layers.iter().enumerate() {
        if layer.is_empty() {
            break;
        }
        let row: Vec<String> = layer.iter().map(|c| alpha.render(&c.word)).collect();
        println!("{n}-chains: {}", row.join(" "));
    }
    match chains.global_dimension() {
        Some(d) => println!("global dimension {d}"),
        None => println!("no empty layer within the limit"),
    }

    println!("\nBetti table:");
    print!("{}", BettiTable::from_chains(&chains));
    Ok(())
}
