//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the enumeration routines it is used to check.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use lyndon_algebra::prelude::*;
use rand::Rng;

/// Every word of length `0..=n` over `g` letters, shortest first, then lex.
pub fn all_words(g: usize, n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..g {
                let mut e = w.clone();
                e.push(l as u8);
                next.push(e);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn words_of_len(g: usize, n: usize) -> Vec<Vec<u8>> {
    all_words(g, n).into_iter().filter(|w| w.len() == n).collect()
}

/// Strictly smaller than every proper rotation (which also rules out
/// periodic words).
pub fn lyndon_by_rotation(w: &[u8]) -> bool {
    !w.is_empty()
        && (1..w.len()).all(|i| {
            let rot: Vec<u8> = w[i..].iter().chain(&w[..i]).copied().collect();
            w < rot.as_slice()
        })
}

/// Strictly smaller than every proper right segment.
pub fn lyndon_by_suffix(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

pub fn has_factor(w: &[u8], f: &[u8]) -> bool {
    f.len() <= w.len() && w.windows(f.len()).any(|x| x == f)
}

/// All factorizations of `w` into a nonincreasing sequence of Lyndon words.
pub fn nonincreasing_lyndon_factorizations(w: &[u8]) -> Vec<Vec<Vec<u8>>> {
    fn go(rest: &[u8], prev: Option<&[u8]>, acc: &mut Vec<Vec<u8>>, out: &mut Vec<Vec<Vec<u8>>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for k in 1..=rest.len() {
            let head = &rest[..k];
            if lyndon_by_rotation(head) && prev.is_none_or(|p| head <= p) {
                acc.push(head.to_vec());
                go(&rest[k..], Some(head), acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(w, None, &mut Vec::new(), &mut out);
    out
}

pub fn normal_by_filter(antichain: &Antichain, n: usize) -> BTreeSet<Vec<u8>> {
    all_words(antichain.alphabet().size(), n)
        .into_iter()
        .filter(|w| !antichain.words().iter().any(|r| has_factor(w, r.letters())))
        .collect()
}

pub fn normal_counts_by_filter(antichain: &Antichain, n: usize) -> Vec<usize> {
    let mut counts = vec![0; n + 1];
    for w in normal_by_filter(antichain, n) {
        counts[w.len()] += 1;
    }
    counts
}

/// Normal Lyndon words of length at most `n`, by filtering all words.
pub fn atoms_by_filter(antichain: &Antichain, n: usize) -> Vec<Vec<u8>> {
    normal_by_filter(antichain, n)
        .into_iter()
        .filter(|w| lyndon_by_suffix(w))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Coefficients of `prod 1/(1 - t^e)` up to `t^n` by counting exponent
/// vectors directly.
pub fn product_coeffs_by_counting(exponents: &[usize], n: usize) -> Vec<u64> {
    fn go(exps: &[usize], left: usize, out: &mut Vec<u64>, total: usize) {
        match exps.split_first() {
            None => out[total] += 1,
            Some((&e, rest)) => {
                let mut k = 0;
                while total + k * e <= left {
                    go(rest, left, out, total + k * e);
                    k += 1;
                }
            }
        }
    }
    let mut out = vec![0u64; n + 1];
    go(exponents, n, &mut out, 0);
    out
}

/// Every nonincreasing product of atoms (given ascending) of total length at
/// most `n`, as a multiset of words.
pub fn nonincreasing_atom_products(atoms: &[Vec<u8>], n: usize) -> BTreeMap<Vec<u8>, usize> {
    fn go(
        atoms: &[Vec<u8>],
        max_idx: usize,
        cur: &mut Vec<u8>,
        n: usize,
        out: &mut BTreeMap<Vec<u8>, usize>,
    ) {
        *out.entry(cur.clone()).or_default() += 1;
        for i in 0..=max_idx {
            let a = &atoms[i];
            if cur.len() + a.len() <= n {
                cur.extend_from_slice(a);
                go(atoms, i, cur, n, out);
                cur.truncate(cur.len() - a.len());
            }
        }
    }
    let mut out = BTreeMap::new();
    if !atoms.is_empty() {
        go(atoms, atoms.len() - 1, &mut Vec::new(), n, &mut out);
    } else {
        out.insert(Vec::new(), 1);
    }
    out
}

/// Chains straight from the recursive definition, by testing every word of
/// length at most `max_len`: `w` is an `(n+1)`-prechain if `w = u v q = u s t`
/// with `u` an `(n-1)`-chain, `uv` an `n`-chain, `t` a relation and `s` a
/// proper left segment of `v`; it is a chain if no proper left segment is an
/// `(n+1)`-prechain. Returns `layers[n]` = set of `n`-chains for `n >= 0`,
/// stopping at the first empty layer or at `max_n`.
pub fn chains_by_definition(
    antichain: &Antichain,
    max_len: usize,
    max_n: usize,
) -> Vec<BTreeSet<Vec<u8>>> {
    let g = antichain.alphabet().size();
    let relations: BTreeSet<Vec<u8>> =
        antichain.words().iter().map(|w| w.letters().to_vec()).collect();
    let words = all_words(g, max_len);
    let mut layers: Vec<BTreeSet<Vec<u8>>> = vec![
        (0..g).map(|l| vec![l as u8]).collect(),
        relations.iter().filter(|w| w.len() <= max_len).cloned().collect(),
    ];
    // the empty word is the (-1)-chain
    let minus_one: BTreeSet<Vec<u8>> = std::iter::once(Vec::new()).collect();
    while layers.len() <= max_n && !layers.last().unwrap().is_empty() {
        let n = layers.len() - 1;
        let prev = if n == 0 { &minus_one } else { &layers[n - 1] };
        let cur = &layers[n];
        let is_prechain = |w: &[u8]| {
            (1..w.len()).any(|pl| {
                cur.contains(&w[..pl])
                    && (0..pl).any(|ul| {
                        prev.contains(&w[..ul])
                            && (ul..pl).any(|st| relations.contains(&w[st..]))
                    })
            })
        };
        let pre: BTreeSet<Vec<u8>> = words
            .iter()
            .filter(|w| !w.is_empty() && is_prechain(w))
            .cloned()
            .collect();
        let next: BTreeSet<Vec<u8>> = pre
            .iter()
            .filter(|w| !(1..w.len()).any(|k| pre.contains(&w[..k])))
            .cloned()
            .collect();
        layers.push(next);
    }
    layers
}

/// Number of directed walks with `len` arrows in the graph.
pub fn count_walks(graph: &UGraph, len: usize) -> u128 {
    let n = graph.vertices().len();
    let mut ways = vec![1u128; n];
    for _ in 0..len {
        let mut next = vec![0u128; n];
        for (u, w) in ways.iter().enumerate() {
            for &v in graph.successors(u) {
                next[v] += w;
            }
        }
        ways = next;
    }
    ways.into_iter().sum()
}

/// A random antichain of Lyndon words: `g` letters, relation lengths in
/// `2..=max_len`, between one and `max_count` drawn words before minimizing.
pub fn random_lyndon_antichain<R: Rng>(rng: &mut R, g: usize, max_len: usize, max_count: usize) -> Antichain {
    let pool: Vec<Word> = lyndon_words_up_to(g, max_len)
        .unwrap()
        .into_iter()
        .filter(|w| w.len() >= 2)
        .collect();
    let count = rng.gen_range(1..=max_count);
    let picked: Vec<Word> = (0..count)
        .map(|_| pool[rng.gen_range(0..pool.len())].clone())
        .collect();
    Antichain::new(Alphabet::standard(g).unwrap(), picked).unwrap()
}

/// A random antichain of Lyndon words with polynomial growth: start from
/// a random finite set of atoms closed under Lyndon factors (all letters
/// included) and take the minimal non-atoms.
pub fn random_polynomial_antichain<R: Rng>(rng: &mut R, g: usize, max_atom_len: usize) -> Antichain {
    let lyndon = lyndon_words_up_to(g, 2 * max_atom_len).unwrap();
    let mut atoms: BTreeSet<Vec<u8>> = (0..g).map(|l| vec![l as u8]).collect();
    // grow by adding products a b (a < b) of current atoms
    let extra = rng.gen_range(0..=4);
    for _ in 0..extra {
        let list: Vec<&Vec<u8>> = atoms.iter().collect();
        let a = list[rng.gen_range(0..list.len())].clone();
        let b = list[rng.gen_range(0..list.len())].clone();
        if a < b && a.len() + b.len() <= max_atom_len {
            let mut ab = a.clone();
            ab.extend_from_slice(&b);
            atoms.insert(ab);
        }
    }
    // close under Lyndon factors
    loop {
        let mut added = false;
        for a in atoms.clone() {
            for i in 0..a.len() {
                for j in i + 1..=a.len() {
                    if lyndon_by_suffix(&a[i..j]) && atoms.insert(a[i..j].to_vec()) {
                        added = true;
                    }
                }
            }
        }
        if !added {
            break;
        }
    }
    // relations: Lyndon words that are not atoms but whose proper Lyndon
    // factors all are; for a finite factor-closed set these have length at
    // most twice the longest atom
    let relations: Vec<Word> = lyndon
        .into_iter()
        .filter(|w| !atoms.contains(w.letters()))
        .filter(|w| {
            let s = w.letters();
            (0..s.len()).all(|i| {
                (i + 1..=s.len()).all(|j| {
                    (j - i == s.len()) || !lyndon_by_suffix(&s[i..j]) || atoms.contains(&s[i..j])
                })
            })
        })
        .collect();
    Antichain::new(Alphabet::standard(g).unwrap(), relations).unwrap()
}

/// Normal words up to length `n` by depth-first extension, testing each new
/// word against every relation directly. Extensions of a word with a
/// relation factor are skipped since they contain it too.
pub fn normal_by_dfs(antichain: &Antichain, n: usize) -> Vec<Vec<u8>> {
    fn go(w: &mut Vec<u8>, g: usize, n: usize, rels: &[Vec<u8>], out: &mut Vec<Vec<u8>>) {
        out.push(w.clone());
        if w.len() == n {
            return;
        }
        for l in 0..g {
            w.push(l as u8);
            if !rels.iter().any(|r| w.ends_with(r)) {
                go(w, g, n, rels, out);
            }
            w.pop();
        }
    }
    let rels: Vec<Vec<u8>> = antichain.words().iter().map(|r| r.letters().to_vec()).collect();
    let mut out = Vec::new();
    go(&mut Vec::new(), antichain.alphabet().size(), n, &rels, &mut out);
    out
}

pub fn normal_counts_by_dfs(antichain: &Antichain, n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    for w in normal_by_dfs(antichain, n) {
        counts[w.len()] += 1;
    }
    counts
}
