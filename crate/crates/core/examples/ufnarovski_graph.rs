//! The Ufnarovski graph: growth from its cycle structure, and DOT output.
//!
//! cargo run --example ufnarovski_graph -- [ALPHABET] [RELATIONS] > graph.dot

use lyndon_algebra::prelude::*;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let alphabet = args.next().unwrap_or_else(|| "xyz".into());
    let relations = args.next().unwrap_or_else(|| "xz,zy,xxy,xyy,zxy".into());

    let w = Antichain::from_relations(&alphabet, &relations)?;
    let graph = build_graph(&w)?;
    let alpha = w.alphabet();
    eprintln!(
        "{} vertices, {} arrows, {} components",
        graph.vertices().len(),
        graph.edge_count(),
        graph.components().len()
    );
    let cycles: Vec<String> = graph.cycle_words().iter().map(|c| alpha.render(c)).collect();
    eprintln!("cycles: {}", cycles.join(" "));
    eprintln!("growth: {:?}", growth_from_graph(&graph));
    print!("{}", export_dot(&graph));
    Ok(())
}
