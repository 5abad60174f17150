//! Machine-readable reports: atoms and Hilbert data, then the Betti table.
//!
//! cargo run --example json_report -- [ALPHABET] [RELATIONS]

use lyndon_algebra::prelude::*;
use lyndon_algebra::report::{AtomReport, BettiReport};

fn main() -> std::result::Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let alphabet = args.next().unwrap_or_else(|| "xy".into());
    let relations = args.next().unwrap_or_else(|| "xxy,xyy".into());

    let w = Antichain::from_relations(&alphabet, &relations)?;
    let atoms = AtomReport::build(&w, 10)?;
    println!("{}", serde_json::to_string_pretty(&atoms)?);

    let table = betti_table(&w, ChainLimits::default())?;
    println!("{}", serde_json::to_string_pretty(&BettiReport::new(&w, &table))?);
    Ok(())
}
