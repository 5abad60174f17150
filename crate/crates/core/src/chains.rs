//! Anick chains of a monomial antichain and the Betti data they carry.
//!
//! The `0`-chains are the letters and the `1`-chains the relations. An
//! `(n+1)`-prechain is an `n`-chain `c = u v` (with `u` its `(n-1)`-chain
//! prefix and `v` its tail) extended to `u s t`, where `t` is a relation that
//! starts inside the tail (`s` a proper prefix of `v`) and ends past `c`.
//! A prechain is a chain when none of its proper prefixes is a prechain of
//! the same index; the new tail is the part past `c`.
//!
//! For a monomial algebra the resolution of the residue field built on
//! chains is minimal, so the `(i-1)`-chains index the generators of the
//! `i`-th free module and their letter counts are the Betti multidegrees.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::Antichain;
use crate::error::{Error, Result};
use crate::words::{self, Multidegree, Word};

/// An Anick `n`-chain together with the relations it is built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub word: Word,
    /// Number of relations in the chain; `0` for a letter.
    pub n: usize,
    /// The relations `u_1, ..., u_n` in order of occurrence.
    pub obstructions: Vec<Word>,
    /// Half-open position range of each relation inside `word`.
    pub spans: Vec<(usize, usize)>,
    /// The tail is `word[tail_start..]`; the prefix before it is the unique
    /// `(n-1)`-chain contained in this chain as a left segment.
    pub tail_start: usize,
    pub multidegree: Multidegree,
}

impl Chain {
    fn letter(l: u8, alphabet_size: usize) -> Self {
        let word = Word::letter(l);
        Chain {
            multidegree: word.multidegree(alphabet_size),
            word,
            n: 0,
            obstructions: Vec::new(),
            spans: Vec::new(),
            tail_start: 0,
        }
    }

    pub fn tail(&self) -> Word {
        self.word.slice(self.tail_start, self.word.len())
    }

    /// The `(n-1)`-chain prefix; empty for a letter.
    pub fn parent_word(&self) -> Word {
        self.word.slice(0, self.tail_start)
    }

    /// Overlaps `v_1, ..., v_(n-1)` of consecutive relations, as ranges.
    pub fn overlap_spans(&self) -> Vec<(usize, usize)> {
        self.spans.windows(2).map(|p| (p[1].0, p[0].1)).collect()
    }
}

/// Guards for chain enumeration.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ChainLimits {
    /// Largest chain index to enumerate. Required for non-Lyndon relations.
    pub max_n: Option<usize>,
    /// Longest chain word allowed before giving up.
    pub max_len: Option<usize>,
}

impl ChainLimits {
    pub fn up_to(max_n: usize) -> Self {
        ChainLimits {
            max_n: Some(max_n),
            max_len: None,
        }
    }
}

/// Chains grouped by index: `layers[n]` holds the `n`-chains, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainEnumeration {
    pub alphabet_size: usize,
    pub layers: Vec<Vec<Chain>>,
    /// True when the last layer is empty, so no longer chains exist.
    pub complete: bool,
}

impl ChainEnumeration {
    pub fn chains(&self, n: usize) -> &[Chain] {
        self.layers.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = &Chain> {
        self.layers.iter().flatten()
    }

    /// Global dimension: the index of the first empty layer.
    pub fn global_dimension(&self) -> Option<usize> {
        self.complete.then(|| self.layers.len() - 1)
    }
}

/// Enumerates chains layer by layer.
///
/// Lyndon relations always terminate (there are at most `|W|`-chains). For
/// other relations `limits.max_n` must be set.
pub fn enumerate_chains(antichain: &Antichain, limits: ChainLimits) -> Result<ChainEnumeration> {
    if !antichain.is_lyndon() && limits.max_n.is_none() {
        return Err(Error::UnboundedChains);
    }
    let g = antichain.alphabet().size();
    let mut layers = vec![(0..g).map(|l| Chain::letter(l as u8, g)).collect::<Vec<_>>()];
    let mut complete = false;
    loop {
        let current = layers.last().expect("letters layer");
        if current.is_empty() {
            complete = true;
            break;
        }
        if limits.max_n.is_some_and(|max| layers.len() > max) {
            break;
        }
        let next = extend_layer(antichain, current, limits.max_len)?;
        layers.push(next);
    }
    Ok(ChainEnumeration {
        alphabet_size: g,
        layers,
        complete,
    })
}

fn extend_layer(
    antichain: &Antichain,
    layer: &[Chain],
    max_len: Option<usize>,
) -> Result<Vec<Chain>> {
    let g = antichain.alphabet().size();
    let mut prechains: BTreeMap<Word, Chain> = BTreeMap::new();
    for c in layer {
        let s = c.word.letters();
        for start in c.tail_start..s.len() {
            let rest = &s[start..];
            for w in antichain.words() {
                let wl = w.letters();
                if wl.len() <= rest.len() || !wl.starts_with(rest) {
                    continue;
                }
                let word = Word::from(s[..start].to_vec()).concat(w);
                if max_len.is_some_and(|max| word.len() > max) {
                    return Err(Error::LimitExceeded(format!(
                        "chain word longer than {}",
                        max_len.unwrap_or_default()
                    )));
                }
                prechains.entry(word).or_insert_with_key(|word| {
                    let mut obstructions = c.obstructions.clone();
                    obstructions.push(w.clone());
                    let mut spans = c.spans.clone();
                    spans.push((start, start + wl.len()));
                    Chain {
                        multidegree: word.multidegree(g),
                        word: word.clone(),
                        n: c.n + 1,
                        obstructions,
                        spans,
                        tail_start: s.len(),
                    }
                });
            }
        }
    }
    let words: HashSet<&[u8]> = prechains.keys().map(Word::letters).collect();
    let chains = prechains
        .values()
        .filter(|c| {
            let s = c.word.letters();
            !(1..s.len()).any(|k| words.contains(&s[..k]))
        })
        .cloned()
        .collect();
    Ok(chains)
}

/// Global dimension: `n` such that `(n-1)`-chains exist and `n`-chains do not.
pub fn global_dimension(antichain: &Antichain, limits: ChainLimits) -> Result<usize> {
    let chains = enumerate_chains(antichain, limits)?;
    chains
        .global_dimension()
        .ok_or(Error::GlobalDimensionUndetermined(chains.layers.len() - 1))
}

/// Ranks and multidegrees of the minimal resolution of the residue field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    /// `ranks[i]` is the number of `(i-1)`-chains; `ranks[0] = 1`.
    pub ranks: Vec<usize>,
    /// Multidegrees of the generators in each homological degree, sorted.
    pub multidegrees: Vec<Vec<Multidegree>>,
    /// False when enumeration stopped at `max_n` with chains remaining.
    pub complete: bool,
}

impl BettiTable {
    pub fn from_chains(chains: &ChainEnumeration) -> Self {
        let mut multidegrees = vec![vec![Multidegree::zero(chains.alphabet_size)]];
        for layer in &chains.layers {
            if layer.is_empty() {
                break;
            }
            let mut degs: Vec<Multidegree> = layer.iter().map(|c| c.multidegree.clone()).collect();
            degs.sort();
            multidegrees.push(degs);
        }
        BettiTable {
            ranks: multidegrees.iter().map(Vec::len).collect(),
            multidegrees,
            complete: chains.complete,
        }
    }

    /// Length of the resolution.
    pub fn projective_dimension(&self) -> usize {
        self.ranks.len() - 1
    }

    /// `sum_i (-1)^i sum_j beta_ij t^j`, indexed by total degree `j`.
    pub fn euler_polynomial(&self) -> Vec<BigInt> {
        let top = self
            .multidegrees
            .iter()
            .flatten()
            .map(Multidegree::total)
            .max()
            .unwrap_or(0);
        let mut poly = vec![BigInt::zero(); top + 1];
        for (i, degs) in self.multidegrees.iter().enumerate() {
            for d in degs {
                if i % 2 == 0 {
                    poly[d.total()] += 1;
                } else {
                    poly[d.total()] -= 1;
                }
            }
        }
        poly
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.ranks.iter().map(|r| r.to_string().len()).max().unwrap_or(1);
        for (i, degs) in self.multidegrees.iter().enumerate() {
            let list: Vec<String> = degs.iter().map(Multidegree::to_string).collect();
            writeln!(
                f,
                "{i:>2}  B^{:<width$}  {}",
                self.ranks[i],
                list.join(" ")
            )?;
        }
        if !self.complete {
            writeln!(f, "    ... (truncated)")?;
        }
        Ok(())
    }
}

pub fn betti_table(antichain: &Antichain, limits: ChainLimits) -> Result<BettiTable> {
    Ok(BettiTable::from_chains(&enumerate_chains(antichain, limits)?))
}

/// Structural checks on the chains of a Lyndon antichain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub chain_count: usize,
    pub counts_by_n: Vec<usize>,
    pub violations: Vec<String>,
}

impl ChainReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every chain of a Lyndon antichain is a Lyndon word, that its
/// relations are strictly increasing and successively overlapping, that its
/// `(n-1)`-chain prefix was enumerated, and that no `(|W|+1)`-chain exists.
pub fn verify_chain_properties(
    antichain: &Antichain,
    chains: &ChainEnumeration,
) -> Result<ChainReport> {
    antichain.require_lyndon()?;
    let alphabet = antichain.alphabet();
    let mut violations = Vec::new();
    let known: HashSet<&Word> = chains.iter().map(|c| &c.word).collect();
    for c in chains.iter() {
        let name = alphabet.render(&c.word);
        if !words::is_lyndon_slice(c.word.letters()) {
            violations.push(format!("{}-chain {name} is not Lyndon", c.n));
        }
        if !c.obstructions.windows(2).all(|p| p[0] < p[1]) {
            violations.push(format!("relations of {name} are not strictly increasing"));
        }
        for (k, p) in c.obstructions.windows(2).enumerate() {
            let (a, b) = (c.spans[k], c.spans[k + 1]);
            if !(words::overlaps(&p[0], &p[1]) && a.0 < b.0 && b.0 < a.1 && a.1 < b.1) {
                violations.push(format!("relations {k}, {} of {name} do not overlap", k + 1));
            }
        }
        for (w, &(s, e)) in c.obstructions.iter().zip(&c.spans) {
            if c.word.slice(s, e) != *w {
                violations.push(format!("bad span for {name}"));
            }
        }
        if c.n >= 1 && !known.contains(&c.parent_word()) {
            violations.push(format!("prefix chain of {name} was not enumerated"));
        }
    }
    if !chains.complete {
        violations.push("chain enumeration did not terminate".into());
    }
    if chains.layers.len() > antichain.len() + 2
        || !chains.chains(antichain.len() + 1).is_empty()
    {
        violations.push(format!("a {}-chain exists", antichain.len() + 1));
    }
    let counts_by_n: Vec<usize> = chains.layers.iter().map(Vec::len).collect();
    Ok(ChainReport {
        chain_count: counts_by_n.iter().sum(),
        counts_by_n,
        violations,
    })
}
