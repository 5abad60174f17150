//! Fibonacci-Lyndon words and the extremal Fibonacci algebras.
//!
//! Over `x < y`: `f_0 = x`, `f_1 = y`, `f_2k = f_(2k-2) f_(2k-1)` and
//! `f_(2k+1) = f_2k f_(2k-1)`. The relations of `F_n` are the factor-minimal
//! elements of `U ∪ {f_n}`, where `U` holds the words `f_(2k-2) f_2k` and
//! `f_(2k+1) f_(2k-1)` for `k >= 1`. The atoms of `F_n` are `f_0, ..., f_(n-1)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::Antichain;
use crate::atoms::{self, AtomSet};
use crate::error::{Error, Result};
use crate::words::{self, Alphabet, Word};

/// Largest index accepted by the family constructors by default
/// (`|f_12| = 233`).
pub const DEFAULT_FIB_CAP: usize = 12;

fn xy() -> Alphabet {
    Alphabet::parse("xy").expect("valid alphabet")
}

/// The words `f_0, ..., f_n` over `x < y`.
pub fn fib_words(n: usize) -> Vec<Word> {
    fib_words_in(n, &Word::letter(0), &Word::letter(1))
}

/// The words `f_0(a, b), ..., f_n(a, b)`, i.e. with `x := a` and `y := b`.
pub fn fib_words_in(n: usize, a: &Word, b: &Word) -> Vec<Word> {
    let mut f = vec![a.clone(), b.clone()];
    for k in 2..=n {
        let next = if k % 2 == 0 {
            f[k - 2].concat(&f[k - 1])
        } else {
            f[k - 1].concat(&f[k - 2])
        };
        f.push(next);
    }
    f.truncate(n + 1);
    f
}

pub fn fib_word(n: usize) -> Word {
    fib_words(n).pop().expect("at least f_0")
}

/// `|f_n|`, the Fibonacci number with `|f_0| = |f_1| = 1`.
pub fn fib_len(n: usize) -> u128 {
    let (mut a, mut b) = (1u128, 1u128);
    for _ in 0..n {
        (a, b) = (b, a.saturating_add(b));
    }
    a
}

/// Elements of `U` whose Fibonacci indices are all at most `max_index`.
pub fn u_words(max_index: usize) -> Vec<Word> {
    let f = fib_words(max_index.max(1));
    let mut out = Vec::new();
    for k in 1.. {
        let mut any = false;
        if 2 * k <= max_index {
            out.push(f[2 * k - 2].concat(&f[2 * k]));
            any = true;
        }
        if 2 * k < max_index {
            out.push(f[2 * k + 1].concat(&f[2 * k - 1]));
            any = true;
        }
        if !any {
            break;
        }
    }
    out
}

/// The relations `W_n` of the Fibonacci algebra `F_n`, with the default cap.
pub fn fib_antichain(n: usize) -> Result<Antichain> {
    fib_antichain_with_cap(n, DEFAULT_FIB_CAP)
}

/// Builds `W_n` from the elements of `U` with indices at most `n + 2` and
/// `f_n`, then checks that the next elements of `U` are already divisible.
pub fn fib_antichain_with_cap(n: usize, cap: usize) -> Result<Antichain> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("Fibonacci index {n} < 2")));
    }
    if n > cap {
        return Err(Error::CapExceeded { index: n, cap });
    }
    let mut ws = u_words(n + 2);
    ws.push(fib_word(n));
    let antichain = Antichain::new(xy(), ws)?;
    let known: BTreeSet<Word> = u_words(n + 2).into_iter().collect();
    for w in u_words(n + 4).into_iter().filter(|w| !known.contains(w)) {
        if !antichain.words().iter().any(|r| words::is_factor(r, &w)) {
            return Err(Error::InvalidArgument(format!(
                "W_{n} is not stable under further elements of U"
            )));
        }
    }
    Ok(antichain)
}

/// Atoms of `F_n` computed from `W_n`.
pub fn fib_atoms(n: usize) -> Result<AtomSet> {
    atoms::lyndon_atoms(&fib_antichain(n)?)
}

/// Everything about `F_n` in one place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibFamily {
    pub n: usize,
    /// `f_0, ..., f_n`.
    pub words: Vec<Word>,
    pub antichain: Antichain,
    pub atoms: AtomSet,
}

impl FibFamily {
    pub fn new(n: usize) -> Result<Self> {
        let antichain = fib_antichain(n)?;
        let atoms = atoms::lyndon_atoms(&antichain)?;
        Ok(FibFamily {
            n,
            words: fib_words(n),
            antichain,
            atoms,
        })
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.words.iter().map(Word::len).collect()
    }
}

/// Consistency checks on `F_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibReport {
    pub n: usize,
    pub words: Vec<String>,
    pub relations: Vec<String>,
    pub atoms: Vec<String>,
    pub all_lyndon: bool,
    pub lengths_are_fibonacci: bool,
    pub order_chain_holds: bool,
    /// The atoms of `W_n` are exactly `f_0, ..., f_(n-1)`.
    pub atoms_match: bool,
    /// Lyndon words of length at most `|f_n|` avoiding `U` are exactly the
    /// Fibonacci-Lyndon words `f_0, ..., f_n`.
    pub u_avoiders_are_fibonacci: bool,
    pub checked_len: usize,
}

impl FibReport {
    pub fn ok(&self) -> bool {
        self.all_lyndon
            && self.lengths_are_fibonacci
            && self.order_chain_holds
            && self.atoms_match
            && self.u_avoiders_are_fibonacci
    }
}

/// True iff `f_0 < f_2 < f_4 < ... < ... < f_5 < f_3 < f_1`.
pub fn order_chain_holds(f: &[Word]) -> bool {
    let evens: Vec<&Word> = f.iter().step_by(2).collect();
    let odds: Vec<&Word> = f.iter().skip(1).step_by(2).collect();
    let evens_up = evens.windows(2).all(|p| p[0] < p[1]);
    let odds_down = odds.windows(2).all(|p| p[0] > p[1]);
    let bridge = match (evens.last(), odds.last()) {
        (Some(e), Some(o)) => e < o,
        _ => true,
    };
    evens_up && odds_down && bridge
}

pub fn fib_checks(n: usize) -> Result<FibReport> {
    let family = FibFamily::new(n)?;
    let alphabet = xy();
    let f = &family.words;
    let all_lyndon = f.iter().all(|w| words::is_lyndon_slice(w.letters()));
    let lengths_are_fibonacci = f
        .iter()
        .enumerate()
        .all(|(i, w)| w.len() as u128 == fib_len(i));
    let expected: Vec<Word> = f[..n].iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let atoms_match = family.atoms.atoms() == expected.as_slice();

    let checked_len = f[n].len();
    let u_trunc: Vec<Word> = u_words(n + 4)
        .into_iter()
        .filter(|w| w.len() <= checked_len)
        .collect();
    let u_antichain = Antichain::new(alphabet.clone(), u_trunc)?;
    let avoiders = atoms::atoms_up_to(&u_antichain, checked_len)?;
    let fib_set: BTreeSet<Word> = f.iter().cloned().collect();
    let u_avoiders_are_fibonacci = avoiders.atoms().iter().cloned().collect::<BTreeSet<_>>() == fib_set;

    Ok(FibReport {
        n,
        words: f.iter().map(|w| alphabet.render(w)).collect(),
        relations: family.antichain.render(),
        atoms: family.atoms.render(),
        all_lyndon,
        lengths_are_fibonacci,
        order_chain_holds: order_chain_holds(f),
        atoms_match,
        u_avoiders_are_fibonacci,
        checked_len,
    })
}

/// Comparison of atom lengths with the Fibonacci lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalityReport {
    /// Atoms ordered by length, ties broken lexicographically.
    pub atoms_by_length: Vec<String>,
    pub atom_lengths: Vec<usize>,
    pub fibonacci_lengths: Vec<u128>,
    /// `|w_p| <= |f_p|` for every `p`.
    pub bounded: bool,
    /// Equality for every `p`.
    pub length_extremal: bool,
}

/// Checks that the atom lengths are dominated by the Fibonacci lengths.
/// Fails with [`Error::ExponentialGrowth`] when the atom set is infinite.
pub fn extremality_check(antichain: &Antichain) -> Result<ExtremalityReport> {
    let atoms = atoms::lyndon_atoms(antichain)?;
    let mut sorted: Vec<&Word> = atoms.atoms().iter().collect();
    sorted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let atom_lengths: Vec<usize> = sorted.iter().map(|w| w.len()).collect();
    let fibonacci_lengths: Vec<u128> = (0..sorted.len()).map(fib_len).collect();
    let bounded = atom_lengths
        .iter()
        .zip(&fibonacci_lengths)
        .all(|(&a, &f)| a as u128 <= f);
    let length_extremal = atom_lengths
        .iter()
        .zip(&fibonacci_lengths)
        .all(|(&a, &f)| a as u128 == f);
    Ok(ExtremalityReport {
        atoms_by_length: sorted.iter().map(|w| antichain.alphabet().render(w)).collect(),
        atom_lengths,
        fibonacci_lengths,
        bounded,
        length_extremal,
    })
}
