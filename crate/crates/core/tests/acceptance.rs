//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use lyndon_algebra::prelude::*;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn md(pairs: &[(usize, usize)]) -> Vec<Multidegree> {
    let mut v: Vec<Multidegree> = pairs.iter().map(|&(a, b)| Multidegree(vec![a, b])).collect();
    v.sort();
    v
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    f()?;
    let took = start.elapsed();
    ensure!(took < limit, "took {took:?}, limit {limit:?}");
    Ok(())
}

/// Named Lyndon cases plus seeded random antichains with relations of length
/// at most 5 over at most 3 letters.
struct Corpus {
    named: Vec<(String, Antichain)>,
    random: Vec<Antichain>,
}

impl Corpus {
    fn build() -> Self {
        let mut named: Vec<(String, Antichain)> = [
            ("xy", "xy"),
            ("xy", "xxy,xyy"),
            ("xy", "xxxy,xxyy,xyyy"),
            ("xyz", "xy,xz,yz"),
            ("xyzw", "xy,xz,xw,yz,yw,zw"),
            ("xyz", "xy,yz"),
            ("xyz", "xxz,xy,yyz,xzz"),
            ("xy", "xxy"),
        ]
        .iter()
        .map(|(a, r)| (format!("{a}:{r}"), Antichain::from_relations(a, r).unwrap()))
        .collect();
        for n in 2..=7 {
            named.push((format!("F_{n}"), fib_antichain(n).unwrap()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut random = Vec::new();
        for i in 0..200 {
            random.push(random_lyndon_antichain(&mut rng, 2 + i % 2, 5, 4));
        }
        // polynomial cases drawn from finite atom sets
        while random.len() < 280 {
            let g = 2 + random.len() % 2;
            let w = random_polynomial_antichain(&mut rng, g, 3);
            if w.max_len() <= 5 {
                random.push(w);
            }
        }
        Corpus { named, random }
    }

    fn all(&self) -> impl Iterator<Item = (String, &Antichain)> {
        self.named
            .iter()
            .map(|(n, w)| (n.clone(), w))
            .chain(self.random.iter().map(|w| (w.render().join(","), w)))
    }

    fn polynomial(&self) -> Vec<(String, &Antichain, AtomSet)> {
        self.all()
            .filter_map(|(n, w)| {
                let a = analyze(w).unwrap();
                a.verdict.is_polynomial().then_some((n, w, a.atoms))
            })
            .collect()
    }
}

fn mixed_length_example() -> Outcome {
    timed(Duration::from_secs(1), || {
        let w = Antichain::from_relations("xyz", "xz,zy,xxy,xyy,zxy").unwrap();
        let graph = build_graph(&w).map_err(|e| e.to_string())?;
        let growth = growth_from_graph(&graph);
        ensure!(growth == GrowthVerdict::Polynomial { degree: 4 }, "graph growth {growth:?}");
        let limits = ChainLimits::up_to(8);
        let gl = global_dimension(&w, limits).map_err(|e| e.to_string())?;
        ensure!(gl == 4, "gldim {gl}");
        let chains = enumerate_chains(&w, limits).map_err(|e| e.to_string())?;
        let target = w.alphabet().parse_word("xzxyy").unwrap();
        ensure!(chains.chains(3).iter().any(|c| c.word == target), "xzxyy is not a 3-chain");
        ensure!(chains.chains(4).is_empty(), "{} 4-chains", chains.chains(4).len());
        Ok(())
    })
}

fn fibonacci_table() -> Outcome {
    let expected = [
        "x",
        "y",
        "xy",
        "xyy",
        "xyxyy",
        "xyxyyxyy",
        "xyxyyxyxyyxyy",
    ];
    let alpha = Alphabet::parse("xy").unwrap();
    for (n, e) in expected.iter().enumerate() {
        let got = alpha.render(&fib_word(n));
        ensure!(got == *e, "f_{n} = {got}, expected {e}");
    }
    Ok(())
}

fn fibonacci_resolution() -> Outcome {
    timed(Duration::from_secs(5), || {
        let w = fib_antichain(6).unwrap();
        let table = betti_table(&w, ChainLimits::default()).map_err(|e| e.to_string())?;
        let expected_ranks = [1, 2, 5, 10, 9, 4, 1];
        let expected = [
            md(&[(0, 0)]),
            md(&[(1, 0), (0, 1)]),
            md(&[(2, 1), (1, 3), (3, 4), (5, 8), (4, 7)]),
            md(&[
                (2, 3),
                (4, 4),
                (3, 5),
                (5, 7),
                (6, 8),
                (4, 8),
                (5, 8),
                (5, 9),
                (6, 9),
                (6, 10),
            ]),
            md(&[
                (4, 5),
                (5, 8),
                (5, 9),
                (6, 8),
                (6, 9),
                (6, 10),
                (6, 11),
                (7, 9),
                (7, 10),
            ]),
            md(&[(6, 9), (7, 10), (7, 11), (8, 11)]),
            md(&[(8, 12)]),
        ];
        let mut problems = Vec::new();
        if table.ranks != expected_ranks {
            problems.push(format!("ranks {:?}, expected {expected_ranks:?}", table.ranks));
        }
        for (i, e) in expected.iter().enumerate() {
            let got = table.multidegrees.get(i).cloned().unwrap_or_default();
            if &got != e {
                let extra: Vec<String> = got
                    .iter()
                    .filter(|m| !e.contains(m))
                    .map(ToString::to_string)
                    .collect();
                let missing: Vec<String> = e
                    .iter()
                    .filter(|m| !got.contains(m))
                    .map(ToString::to_string)
                    .collect();
                problems.push(format!(
                    "degree {i}: extra [{}] missing [{}]",
                    extra.join(" "),
                    missing.join(" ")
                ));
            }
        }
        ensure!(problems.is_empty(), "{}", problems.join("; "));
        Ok(())
    })
}

/// Number of words of each length `0..=n` over two letters avoiding every
/// relation, by testing all `2^(n+1) - 1` words.
fn exhaustive_binary_counts(w: &Antichain, n: usize) -> Vec<u64> {
    let rels: Vec<(u64, usize)> = w
        .words()
        .iter()
        .map(|r| (r.letters().iter().fold(0u64, |acc, &l| acc << 1 | l as u64), r.len()))
        .collect();
    (0..=n)
        .map(|len| {
            (0u64..1 << len)
                .filter(|&bits| {
                    !rels.iter().any(|&(r, k)| {
                        k <= len && (0..=len - k).any(|p| (bits >> p) & ((1 << k) - 1) == r)
                    })
                })
                .count() as u64
        })
        .collect()
}

fn fibonacci_hilbert() -> Outcome {
    let w = fib_antichain(6).unwrap();
    let atoms = lyndon_atoms(&w).map_err(|e| e.to_string())?;
    let h = hilbert_series(&atoms, 20).map_err(|e| e.to_string())?;
    ensure!(h.exponents == [1, 1, 2, 3, 5, 8], "exponents {:?}", h.exponents);
    let coeffs = h.coeffs_u64().unwrap();
    let brute = exhaustive_binary_counts(&w, 20);
    ensure!(coeffs == brute, "series {coeffs:?}\nbrute  {brute:?}");
    let limits = EnumerationLimits {
        max_len: 20,
        ..EnumerationLimits::default()
    };
    let listed = normal_words_with_limits(&w, 20, limits).map_err(|e| e.to_string())?;
    let listed: Vec<u64> = listed.counts.iter().map(|&c| c as u64).collect();
    ensure!(listed == brute, "enumeration {listed:?}\nbrute       {brute:?}");
    Ok(())
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn quadratic_extremal() -> Outcome {
    for d in [3, 4] {
        let alpha = Alphabet::standard(d).unwrap();
        let mut rels = Vec::new();
        for i in 0..d as u8 {
            for j in i + 1..d as u8 {
                rels.push(Word::from(vec![i, j]));
            }
        }
        let w = Antichain::new(alpha.clone(), rels).unwrap();
        let atoms = lyndon_atoms(&w).map_err(|e| e.to_string())?;
        ensure!(atoms.atoms() == alpha.letters().as_slice(), "d={d}: atoms {:?}", atoms.render());
        ensure!(w.len() == d * (d - 1) / 2, "d={d}: |W| = {}", w.len());
        let gk = gk_dim(&w).map_err(|e| e.to_string())?;
        let gl = global_dimension(&w, ChainLimits::default()).map_err(|e| e.to_string())?;
        ensure!(gk == d && gl == d, "d={d}: gk {gk}, gl {gl}");
        let h = hilbert_series(&atoms, 15).map_err(|e| e.to_string())?;
        for (k, c) in h.coeffs.iter().enumerate() {
            // coefficient of t^k in 1/(1-t)^d
            let e = binomial(k + d - 1, d - 1);
            ensure!(*c == e, "d={d}: t^{k} has {c}, expected {e}");
        }
        let brute = normal_counts_by_dfs(&w, 15);
        ensure!(h.coeffs_u64().unwrap() == brute, "d={d}: normal counts {brute:?}");
    }
    Ok(())
}

fn engine_agreement(corpus: &Corpus) -> Outcome {
    timed(Duration::from_secs(60), || {
        ensure!(corpus.random.len() >= 200, "only {} cases", corpus.random.len());
        let mut polynomial = 0;
        for w in &corpus.random {
            ensure!(w.is_lyndon() && w.max_len() <= 5 && w.alphabet().size() <= 3, "bad sample");
            let name = w.render().join(",");
            let atoms = decide_growth(w).map_err(|e| e.to_string())?;
            let graph = growth_from_graph(&build_graph(w).map_err(|e| e.to_string())?);
            ensure!(atoms.agrees_with(&graph), "{name}: atoms {atoms:?}, graph {graph:?}");
            if let GrowthVerdict::Polynomial { degree } = atoms {
                polynomial += 1;
                let n = lyndon_atoms(w).map_err(|e| e.to_string())?;
                let gl = global_dimension(w, ChainLimits::default()).map_err(|e| e.to_string())?;
                ensure!(n.len() == degree && graph.degree() == Some(degree) && gl == degree,
                    "{name}: |N| {}, graph {graph:?}, gl {gl}", n.len());
                let d = n.len();
                ensure!(d - 1 <= w.len() && w.len() <= d * (d - 1) / 2,
                    "{name}: |W| = {} outside [{}, {}]", w.len(), d - 1, d * (d - 1) / 2);
                let report = check_obstruction_bounds(w, &n).map_err(|e| e.to_string())?;
                ensure!(report.ok(), "{name}: {:?}", report.violations);
            }
        }
        ensure!(polynomial >= 50, "only {polynomial} polynomial cases");
        Ok(())
    })
}

fn pbw_bijection(corpus: &Corpus) -> Outcome {
    const LEN: usize = 12;
    for (name, w, atoms) in corpus.polynomial() {
        let normal: BTreeSet<Vec<u8>> = normal_by_dfs(w, LEN).into_iter().collect();
        let ascending: Vec<Vec<u8>> = atoms.atoms().iter().map(|a| a.letters().to_vec()).collect();
        let products = nonincreasing_atom_products(&ascending, LEN);
        if let Some((p, _)) = products.iter().find(|(_, &c)| c > 1) {
            return Err(format!("{name}: {p:?} has two decompositions"));
        }
        let products: BTreeSet<Vec<u8>> = products.into_keys().collect();
        ensure!(products == normal, "{name}: products and normal words differ");
        for x in &normal {
            let d = pbw_decompose(&Word::from(x.clone()), &atoms).map_err(|e| format!("{name}: {e}"))?;
            ensure!(d.product().letters() == x.as_slice(), "{name}: {x:?}");
        }
    }
    Ok(())
}

fn chain_structure(corpus: &Corpus) -> Outcome {
    for (name, w) in corpus.all().filter(|(_, w)| w.is_lyndon()) {
        let chains = enumerate_chains(w, ChainLimits::default()).map_err(|e| format!("{name}: {e}"))?;
        ensure!(chains.complete, "{name}: enumeration incomplete");
        for c in chains.iter() {
            ensure!(is_lyndon(&c.word).unwrap(), "{name}: chain {:?} not Lyndon", c.word);
            ensure!(c.obstructions.windows(2).all(|p| p[0] < p[1]),
                "{name}: obstructions of {:?} not increasing", c.word);
        }
        ensure!(chains.chains(w.len() + 1).is_empty(), "{name}: a (|W|+1)-chain exists");
        let report = verify_chain_properties(w, &chains).map_err(|e| e.to_string())?;
        ensure!(report.ok(), "{name}: {:?}", report.violations);
    }
    Ok(())
}

fn euler_identity(corpus: &Corpus) -> Outcome {
    const DEG: usize = 20;
    for (name, w, atoms) in corpus.polynomial() {
        let h = hilbert_series(&atoms, DEG).map_err(|e| e.to_string())?;
        if w.alphabet().size() <= 2 || atoms.len() <= 6 {
            let brute = normal_counts_by_dfs(w, DEG);
            ensure!(h.coeffs_u64().as_ref() == Some(&brute), "{name}: series differs from counts");
        }
        let table = betti_table(w, ChainLimits::default()).map_err(|e| e.to_string())?;
        let p = table.euler_polynomial();
        for k in 0..=DEG {
            let mut s = BigInt::zero();
            for (j, pj) in p.iter().enumerate().take(k + 1) {
                s += pj * BigInt::from(h.coeffs[k - j].clone());
            }
            let expected = if k == 0 { BigInt::one() } else { BigInt::zero() };
            ensure!(s == expected, "{name}: coefficient of t^{k} is {s}");
        }
    }
    Ok(())
}

fn main() {
    let corpus = Corpus::build();
    let criteria: Vec<Criterion> = vec![
        ("mixed-length example: growth, gldim, chains", Box::new(mixed_length_example)),
        ("Fibonacci word table", Box::new(fibonacci_table)),
        ("F_6 Betti ranks and multidegrees", Box::new(fibonacci_resolution)),
        ("F_6 Hilbert series vs brute force to length 20", Box::new(fibonacci_hilbert)),
        ("quadratic extremal case d=3,4", Box::new(quadratic_extremal)),
        ("engine agreement on random antichains", Box::new(|| engine_agreement(&corpus))),
        ("PBW bijection to length 12", Box::new(|| pbw_bijection(&corpus))),
        ("chain structure", Box::new(|| chain_structure(&corpus))),
        ("Euler identity to degree 20", Box::new(|| euler_identity(&corpus))),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        match result {
            Ok(()) => println!("PASS {} {label} ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {label} ({took:.2?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
