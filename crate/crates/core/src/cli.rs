//! Command-line front end.
//!
//! Exit status: `0` on success, `2` on invalid input, `3` when the answer is
//! not determinable within the configured bounds.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{self, Antichain, EnumerationLimits};
use crate::atoms::{self, GrowthVerdict, GrowthWitness};
use crate::chains::{self, BettiTable, ChainLimits};
use crate::error::{Error, Result};
use crate::fibonacci;
use crate::report::{AtomReport, BettiReport, Count};
use crate::ufgraph;
use crate::words::{Alphabet, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNDETERMINED: i32 = 3;

/// Chain index bound used for non-Lyndon relations when none is given.
pub const DEFAULT_MAX_N: usize = 64;

#[derive(Debug, Parser)]
#[command(
    name = "lyndon",
    about = "Monomial algebras presented by Lyndon words: atoms, growth, Hilbert series, chains and Betti data"
)]
pub struct Cli {
    #[command(flatten)]
    pub input: InputArgs,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Ordered alphabet, e.g. `xy` for x < y.
    #[arg(long, global = true)]
    pub alphabet: Option<String>,
    /// Comma separated relations, e.g. `xxy,xyy`.
    #[arg(long, global = true)]
    pub relations: Option<String>,
    /// Relation file: alphabet on the first line, one word per line.
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,
    /// Use the relations of the Fibonacci algebra F_N.
    #[arg(long = "fibonacci", global = true, value_name = "N")]
    pub fibonacci_input: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Engine {
    /// Lyndon atoms for Lyndon relations, the Ufnarovski graph otherwise.
    Auto,
    Atoms,
    Graph,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate that the relations form an antichain of Lyndon words.
    Check,
    /// Lyndon atoms, growth, dimensions and Hilbert series.
    Atoms {
        #[arg(long, default_value_t = 12)]
        trunc: usize,
    },
    /// Polynomial or exponential growth.
    Growth {
        #[arg(long, value_enum, default_value_t = Engine::Auto)]
        engine: Engine,
    },
    /// Global dimension.
    Gldim {
        /// Read it off the atoms (Lyndon relations with polynomial growth).
        #[arg(long)]
        via_atoms: bool,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Hilbert series in product form and its expansion.
    Hilbert {
        #[arg(long, default_value_t = 12)]
        trunc: usize,
    },
    /// Enumerate normal words by length.
    NormalWords {
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
    /// Enumerate Anick chains.
    Chains {
        #[arg(long)]
        max: Option<usize>,
    },
    /// Ranks and multidegrees of the minimal resolution of the residue field.
    Betti {
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Ufnarovski graph and its growth verdict.
    Graph {
        /// Write the graph in DOT format to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Words, relations, atoms, Hilbert exponents and Betti table of F_N.
    Fibonacci { n: usize },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let mut out = String::new();
    match execute(cli, &mut out) {
        Ok(code) => Outcome { code, stdout: out, stderr: String::new() },
        Err(e) => {
            let code = if e.is_undetermined() { EXIT_UNDETERMINED } else { EXIT_INVALID };
            Outcome { code, stdout: out, stderr: format!("error: {e}\n") }
        }
    }
}

fn load_raw(input: &InputArgs) -> Result<(Alphabet, Vec<Word>)> {
    let sources = [
        input.relations.is_some(),
        input.file.is_some(),
        input.fibonacci_input.is_some(),
    ];
    if sources.iter().filter(|&&s| s).count() != 1 {
        return Err(Error::InvalidArgument(
            "give exactly one of --relations, --file, --fibonacci".into(),
        ));
    }
    if let Some(n) = input.fibonacci_input {
        let w = fibonacci::fib_antichain(n)?;
        return Ok((w.alphabet().clone(), w.words().to_vec()));
    }
    if let Some(path) = &input.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let (alphabet, ws) = algebra::parse_relation_file(&text)?;
        if let Some(a) = &input.alphabet {
            if Alphabet::parse(a)? != alphabet {
                return Err(Error::InvalidArgument(
                    "--alphabet disagrees with the relation file".into(),
                ));
            }
        }
        return Ok((alphabet, ws));
    }
    let alphabet = Alphabet::parse(
        input
            .alphabet
            .as_deref()
            .ok_or_else(|| Error::InvalidArgument("--alphabet is required".into()))?,
    )?;
    let ws = input
        .relations
        .as_deref()
        .unwrap_or_default()
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| alphabet.parse_word(s))
        .collect::<Result<Vec<_>>>()?;
    Ok((alphabet, ws))
}

fn load(input: &InputArgs) -> Result<Antichain> {
    let (alphabet, ws) = load_raw(input)?;
    Antichain::new(alphabet, ws)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn chain_limits(antichain: &Antichain, max_n: Option<usize>) -> ChainLimits {
    let max_n = match max_n {
        Some(n) => Some(n),
        None if antichain.is_lyndon() => None,
        None => Some(DEFAULT_MAX_N),
    };
    ChainLimits { max_n, max_len: None }
}

fn verdict_text(v: &GrowthVerdict) -> String {
    match v {
        GrowthVerdict::Polynomial { degree } => format!("polynomial, d={degree}"),
        GrowthVerdict::Exponential { witness: Some(GrowthWitness::AtomPair { left, right }) } => {
            format!("exponential (normal atom product {left}.{right})")
        }
        GrowthVerdict::Exponential {
            witness: Some(GrowthWitness::IntersectingCycles { vertex }),
        } => format!("exponential (intersecting cycles through {vertex})"),
        GrowthVerdict::Exponential { witness: None } => "exponential".into(),
    }
}

fn execute(cli: &Cli, out: &mut String) -> Result<i32> {
    match &cli.command {
        Command::Check => {
            let (alphabet, ws) = load_raw(&cli.input)?;
            let report = algebra::validate_lyndon_antichain(&alphabet, &ws)?;
            if cli.json {
                out.push_str(&to_json(&report));
            } else {
                for s in &report.words {
                    let note = if s.single_letter {
                        "single letter"
                    } else if s.lyndon {
                        "Lyndon"
                    } else {
                        "not Lyndon"
                    };
                    let _ = writeln!(out, "{}: {note}", s.word);
                }
                for (u, w) in &report.comparable {
                    let _ = writeln!(out, "{u} divides {w}");
                }
                let verdict = if report.valid { "valid" } else { "invalid" };
                let _ = writeln!(out, "{verdict} Lyndon antichain");
            }
            Ok(if report.valid { EXIT_OK } else { EXIT_INVALID })
        }
        Command::Atoms { trunc } => {
            let w = load(&cli.input)?;
            let report = AtomReport::build(&w, *trunc)?;
            if cli.json {
                out.push_str(&to_json(&report));
            } else {
                let _ = writeln!(out, "atoms: {}", report.atoms.join(" < "));
                let _ = writeln!(out, "growth: {}", report.growth);
                if let Some(pair) = &report.witness {
                    let _ = writeln!(out, "witness: {}", pair.join("."));
                }
                if let Some(d) = report.gk_dim {
                    let _ = writeln!(out, "gk_dim: {d}");
                }
                let _ = writeln!(out, "gl_dim: {}", report.gl_dim);
                if let Some(h) = &report.hilbert {
                    let c: Vec<String> = h.coeffs.iter().map(|Count(c)| c.to_string()).collect();
                    let _ = writeln!(out, "hilbert exponents: {:?}", h.exponents);
                    let _ = writeln!(out, "hilbert coeffs: {}", c.join(" "));
                }
            }
            Ok(EXIT_OK)
        }
        Command::Growth { engine } => {
            let w = load(&cli.input)?;
            let use_atoms = match engine {
                Engine::Auto => w.is_lyndon(),
                Engine::Atoms => true,
                Engine::Graph => false,
            };
            let (verdict, engine) = if use_atoms {
                (atoms::decide_growth(&w)?, "atoms")
            } else {
                (ufgraph::build_graph(&w)?.growth(), "graph")
            };
            if cli.json {
                #[derive(Serialize)]
                struct GrowthJson<'a> {
                    engine: &'a str,
                    #[serde(flatten)]
                    verdict: &'a GrowthVerdict,
                }
                out.push_str(&to_json(&GrowthJson { engine, verdict: &verdict }));
            } else {
                let _ = writeln!(out, "{}", verdict_text(&verdict));
            }
            Ok(EXIT_OK)
        }
        Command::Gldim { via_atoms, max_n } => {
            let w = load(&cli.input)?;
            let d = if *via_atoms {
                atoms::gl_dim_poly(&w)?
            } else {
                chains::global_dimension(&w, chain_limits(&w, *max_n))?
            };
            if cli.json {
                out.push_str(&to_json(&serde_json::json!({ "gl_dim": d })));
            } else {
                let _ = writeln!(out, "{d}");
            }
            Ok(EXIT_OK)
        }
        Command::Hilbert { trunc } => {
            let w = load(&cli.input)?;
            let atoms = atoms::lyndon_atoms(&w)?;
            let h = atoms::hilbert_series(&atoms, *trunc)?;
            if cli.json {
                let coeffs: Vec<Count> = h.coeffs.iter().cloned().map(Count).collect();
                out.push_str(&to_json(&serde_json::json!({
                    "exponents": h.exponents,
                    "coeffs": coeffs,
                })));
            } else {
                let c: Vec<String> = h.coeffs.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "H(t) = {}", h.product_form());
                let _ = writeln!(out, "{}", c.join(" "));
            }
            Ok(EXIT_OK)
        }
        Command::NormalWords { max } => {
            let w = load(&cli.input)?;
            let limits = EnumerationLimits { max_len: (*max).max(16), ..Default::default() };
            let set = algebra::normal_words_with_limits(&w, *max, limits)?;
            let a = w.alphabet();
            if cli.json {
                let layers: Vec<Vec<String>> = set
                    .by_length
                    .iter()
                    .map(|l| l.iter().map(|x| a.render(x)).collect())
                    .collect();
                out.push_str(&to_json(&serde_json::json!({
                    "counts": set.counts,
                    "words": layers,
                })));
            } else {
                for (len, layer) in set.by_length.iter().enumerate() {
                    let ws: Vec<String> = layer.iter().map(|x| a.render(x)).collect();
                    let shown = if len == 0 { "1".to_string() } else { ws.join(" ") };
                    let _ = writeln!(out, "{len:>3} {:>8}  {shown}", layer.len());
                }
            }
            Ok(EXIT_OK)
        }
        Command::Chains { max } => {
            let w = load(&cli.input)?;
            let chains = chains::enumerate_chains(&w, chain_limits(&w, *max))?;
            let a = w.alphabet();
            if cli.json {
                #[derive(Serialize)]
                struct ChainJson {
                    n: usize,
                    word: String,
                    obstructions: Vec<String>,
                    spans: Vec<(usize, usize)>,
                    tail: String,
                    multidegree: Vec<usize>,
                }
                let list: Vec<ChainJson> = chains
                    .iter()
                    .map(|c| ChainJson {
                        n: c.n,
                        word: a.render(&c.word),
                        obstructions: c.obstructions.iter().map(|o| a.render(o)).collect(),
                        spans: c.spans.clone(),
                        tail: a.render(&c.tail()),
                        multidegree: c.multidegree.0.clone(),
                    })
                    .collect();
                out.push_str(&to_json(&serde_json::json!({
                    "complete": chains.complete,
                    "chains": list,
                })));
            } else {
                for (n, layer) in chains.layers.iter().enumerate() {
                    let _ = writeln!(out, "{n}-chains: {}", layer.len());
                    for c in layer {
                        let obs: Vec<String> = c.obstructions.iter().map(|o| a.render(o)).collect();
                        let _ = writeln!(
                            out,
                            "  {}  [{}]  tail {}",
                            a.render(&c.word),
                            obs.join(" "),
                            a.render(&c.tail())
                        );
                    }
                }
                if !chains.complete {
                    let _ = writeln!(out, "(stopped at the chain index bound)");
                }
            }
            Ok(if chains.complete { EXIT_OK } else { EXIT_UNDETERMINED })
        }
        Command::Betti { max_n } => {
            let w = load(&cli.input)?;
            let table = chains::betti_table(&w, chain_limits(&w, *max_n))?;
            write_betti(out, cli.json, &w, &table);
            Ok(if table.complete { EXIT_OK } else { EXIT_UNDETERMINED })
        }
        Command::Graph { dot } => {
            let w = load(&cli.input)?;
            let g = ufgraph::build_graph(&w)?;
            let verdict = g.growth();
            if let Some(path) = dot {
                std::fs::write(path, g.to_dot())
                    .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
            }
            if cli.json {
                #[derive(Serialize)]
                struct GraphReport {
                    graph: ufgraph::GraphJson,
                    verdict: GrowthVerdict,
                }
                out.push_str(&to_json(&GraphReport { graph: g.adjacency(), verdict }));
            } else {
                let _ = writeln!(out, "vertices: {}", g.vertices().len());
                let _ = writeln!(out, "edges: {}", g.edge_count());
                let _ = writeln!(out, "growth: {}", verdict_text(&verdict));
            }
            Ok(EXIT_OK)
        }
        Command::Fibonacci { n } => {
            let family = fibonacci::FibFamily::new(*n)?;
            let w = &family.antichain;
            let a = w.alphabet();
            let table = chains::betti_table(w, ChainLimits::default())?;
            let words: Vec<String> = family.words.iter().map(|x| a.render(x)).collect();
            let mut exponents = family.atoms.lengths();
            exponents.sort_unstable();
            if cli.json {
                out.push_str(&to_json(&serde_json::json!({
                    "n": n,
                    "words": words,
                    "relations": w.render(),
                    "atoms": family.atoms.render(),
                    "hilbert_exponents": exponents,
                    "betti": BettiReport::new(w, &table),
                })));
            } else {
                for (i, x) in words.iter().enumerate() {
                    let _ = writeln!(out, "f_{i} = {x}");
                }
                let _ = writeln!(out, "relations: {}", w.render().join(", "));
                let _ = writeln!(out, "atoms: {}", family.atoms.render().join(" < "));
                let _ = writeln!(out, "hilbert exponents: {exponents:?}");
                write_betti(out, false, w, &table);
            }
            Ok(EXIT_OK)
        }
    }
}

fn write_betti(out: &mut String, json: bool, w: &Antichain, table: &BettiTable) {
    if json {
        out.push_str(&to_json(&BettiReport::new(w, table)));
    } else {
        let ranks: Vec<String> = table.ranks.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "ranks: {}", ranks.join(","));
        out.push_str(&table.to_string());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run_from_args(std::iter::once("lyndon").chain(args.iter().copied()))
    }

    #[test]
    fn growth_command() {
        let o = run_args(&["growth", "--alphabet", "xy", "--relations", "xxy,xyy"]);
        assert_eq!(o.code, 0);
        assert_eq!(o.stdout, "polynomial, d=3\n");
    }

    #[test]
    fn gldim_non_lyndon() {
        let o = run_args(&["gldim", "--alphabet", "xyz", "--relations", "xz,zy,xxy,xyy,zxy"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "4\n"));
        let o = run_args(&[
            "gldim", "--via-atoms", "--alphabet", "xyz", "--relations", "xz,zy,xxy,xyy,zxy",
        ]);
        assert_eq!(o.code, EXIT_INVALID);
        assert!(o.stderr.contains("not all Lyndon"));
    }

    #[test]
    fn betti_fibonacci() {
        let o = run_args(&["betti", "--fibonacci", "6"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.starts_with("ranks: 1,2,5,10,10,5,1\n"), "{}", o.stdout);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["check", "--alphabet", "xy", "--relations", "yx"]).code, 2);
        assert_eq!(run_args(&["check", "--alphabet", "xy", "--relations", "xxy,xyy"]).code, 0);
        assert_eq!(run_args(&["atoms", "--alphabet", "xy", "--relations", "x"]).code, 2);
        assert_eq!(run_args(&["hilbert", "--alphabet", "xy", "--relations", "xxy"]).code, 3);
        assert_eq!(run_args(&["atoms"]).code, 2);
        assert_eq!(run_args(&["bogus"]).code, 2);
        let o = run_args(&["gldim", "--max-n", "2", "--alphabet", "xyz", "--relations", "xz,zy,xxy,xyy,zxy"]);
        assert_eq!(o.code, 3);
        assert!(o.stderr.contains("not determined"));
    }

    #[test]
    fn normal_words_listing() {
        let o = run_args(&["normal-words", "--max", "2", "--alphabet", "xy", "--relations", "xy"]);
        assert_eq!(o.code, 0);
        assert_eq!(o.stdout, "  0        1  1\n  1        2  x y\n  2        3  xx yx yy\n");
    }
}
