//! Lyndon atoms, the growth verdict and the counting bounds on relations.
//!
//! cargo run --example atoms_and_growth -- [ALPHABET] [RELATIONS]

use lyndon_algebra::prelude::*;

fn show(alphabet: &str, relations: &str) -> Result<()> {
    let w = Antichain::from_relations(alphabet, relations)?;
    let analysis = analyze(&w)?;
    println!("W = {{{}}} over {}", w.render().join(", "), w.alphabet());
    println!("  atoms: {}", analysis.atoms.render().join(" "));
    match &analysis.verdict {
        GrowthVerdict::Polynomial { degree } => {
            println!("  polynomial growth, GK dimension {degree}");
            println!("  global dimension {}", gl_dim_poly(&w)?);
            let b = check_obstruction_bounds(&w, &analysis.atoms)?;
            println!(
                "  {} <= |W| = {} <= {}: {}",
                b.d.saturating_sub(1),
                b.relation_count,
                b.d * b.d.saturating_sub(1) / 2,
                b.lower_bound_holds && b.upper_bound_holds
            );
        }
        GrowthVerdict::Exponential { witness } => {
            println!("  exponential growth, witness {witness:?}");
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [alphabet, relations] = args.as_slice() {
        return show(alphabet, relations);
    }
    show("xy", "xxy,xyy")?;
    show("xy", "xxy")?;
    show("xyz", "xy,xz,yz")?;
    show("xy", "xxy,xyxyy,xyyy")
}
