//! Monomial antichains and their normal words.
//!
//! An [`Antichain`] `W` presents the monomial algebra `K<X>/(W)`. A word is
//! `W`-normal when no element of `W` occurs in it as a factor; the normal
//! words form a basis of the algebra and are closed under taking factors.

use std::collections::BTreeSet;

use aho_corasick::AhoCorasick;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{self, Alphabet, Letter, Word};

/// Default upper bound on the length of enumerated normal words.
pub const DEFAULT_MAX_NORMAL_LEN: usize = 16;
/// Default upper bound on the number of enumerated normal words.
pub const DEFAULT_MAX_NORMAL_WORDS: usize = 4_000_000;

/// A finite set of pairwise factor-incomparable words, none of which is a
/// single letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Antichain {
    alphabet: Alphabet,
    words: Vec<Word>,
    lyndon: bool,
}

impl Antichain {
    /// Keeps the factor-minimal elements of `ws` (deduplicated, ascending).
    ///
    /// A single-letter relation is rejected rather than dropped together with
    /// its letter: the presentation must be minimal.
    pub fn new(alphabet: Alphabet, ws: impl IntoIterator<Item = Word>) -> Result<Self> {
        let set: BTreeSet<Word> = ws.into_iter().collect();
        for w in &set {
            alphabet.check(w)?;
            if w.is_empty() {
                return Err(Error::EmptyWord);
            }
            if w.len() == 1 {
                return Err(Error::LetterRelation(alphabet.render(w)));
            }
        }
        let words: Vec<Word> = set
            .iter()
            .filter(|w| !set.iter().any(|u| u != *w && words::is_factor(u, w)))
            .cloned()
            .collect();
        let lyndon = words.iter().all(|w| words::is_lyndon_slice(w.letters()));
        Ok(Antichain {
            alphabet,
            words,
            lyndon,
        })
    }

    /// Parses an alphabet declaration and a comma separated list of relations,
    /// e.g. `("xyz", "xz,zy,xxy,xyy,zxy")`.
    pub fn from_relations(alphabet: &str, relations: &str) -> Result<Self> {
        let alphabet = Alphabet::parse(alphabet)?;
        let ws = relations
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| alphabet.parse_word(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, ws)
    }

    /// Parses the antichain file format: the first meaningful line is the
    /// alphabet, each further nonempty line not starting with `#` is a word.
    pub fn parse_file(text: &str) -> Result<Self> {
        let (alphabet, ws) = parse_relation_file(text)?;
        Self::new(alphabet, ws)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// True iff every relation is a Lyndon word.
    pub fn is_lyndon(&self) -> bool {
        self.lyndon
    }

    /// Maximal relation length `m` (0 for the empty antichain).
    pub fn max_len(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn min_len(&self) -> usize {
        self.words.iter().map(Word::len).min().unwrap_or(0)
    }

    pub fn render(&self) -> Vec<String> {
        self.words.iter().map(|w| self.alphabet.render(w)).collect()
    }

    pub fn require_lyndon(&self) -> Result<()> {
        if self.lyndon {
            return Ok(());
        }
        let bad: Vec<String> = self
            .words
            .iter()
            .filter(|w| !words::is_lyndon_slice(w.letters()))
            .map(|w| self.alphabet.render(w))
            .collect();
        Err(Error::NonLyndonAntichain(bad.join(",")))
    }

    /// True iff some relation occurs in `s` as a factor.
    pub fn contains_obstruction(&self, s: &[Letter]) -> bool {
        self.words
            .iter()
            .any(|w| words::contains_slice(s, w.letters()))
    }

    /// True iff some relation is a suffix of `s`.
    pub fn ends_with_obstruction(&self, s: &[Letter]) -> bool {
        self.words.iter().any(|w| s.ends_with(w.letters()))
    }

    pub fn matcher(&self, strategy: MatchStrategy) -> ObstructionMatcher {
        ObstructionMatcher::new(self, strategy)
    }
}

pub(crate) fn parse_relation_file(text: &str) -> Result<(Alphabet, Vec<Word>)> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let alphabet = Alphabet::parse(
        lines
            .next()
            .ok_or_else(|| Error::Parse("missing alphabet line".into()))?,
    )?;
    let ws = lines
        .map(|l| alphabet.parse_word(l))
        .collect::<Result<Vec<_>>>()?;
    Ok((alphabet, ws))
}

/// True iff `w` avoids every element of `antichain`. The empty word is normal.
pub fn is_normal(w: &Word, antichain: &Antichain) -> bool {
    !antichain.contains_obstruction(w.letters())
}

/// How factor searches are carried out.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum MatchStrategy {
    /// Scan every relation at every position.
    #[default]
    Naive,
    /// One Aho-Corasick automaton over all relations.
    Automaton,
}

/// Obstruction search with a selectable strategy; all strategies agree.
#[derive(Debug, Clone)]
pub struct ObstructionMatcher {
    antichain: Antichain,
    automaton: Option<AhoCorasick>,
}

impl ObstructionMatcher {
    fn new(antichain: &Antichain, strategy: MatchStrategy) -> Self {
        let automaton = match strategy {
            MatchStrategy::Naive => None,
            MatchStrategy::Automaton if antichain.is_empty() => None,
            MatchStrategy::Automaton => Some(
                AhoCorasick::new(antichain.words().iter().map(|w| w.letters()))
                    .expect("relations are short byte patterns"),
            ),
        };
        ObstructionMatcher {
            antichain: antichain.clone(),
            automaton,
        }
    }

    pub fn contains_obstruction(&self, s: &[Letter]) -> bool {
        match &self.automaton {
            Some(ac) => ac.is_match(s),
            None => self.antichain.contains_obstruction(s),
        }
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        !self.contains_obstruction(w.letters())
    }
}

/// Bounds for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_len: usize,
    pub max_words: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_len: DEFAULT_MAX_NORMAL_LEN,
            max_words: DEFAULT_MAX_NORMAL_WORDS,
        }
    }
}

/// Normal words grouped by length `0..=n`, each layer ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalWordSet {
    pub by_length: Vec<Vec<Word>>,
    pub counts: Vec<usize>,
}

impl NormalWordSet {
    pub fn max_len(&self) -> usize {
        self.by_length.len() - 1
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.by_length
            .get(w.len())
            .is_some_and(|layer| layer.binary_search(w).is_ok())
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.by_length.iter().flatten()
    }
}

/// Every normal word of length at most `n`, using the default limits.
pub fn normal_words_up_to(antichain: &Antichain, n: usize) -> Result<NormalWordSet> {
    normal_words_with_limits(antichain, n, EnumerationLimits::default())
}

/// Exhaustive normal-word enumeration. Layer `l + 1` extends each normal word
/// of length `l` by one letter; since the prefix is already normal only the
/// suffixes of the extension need to be checked.
pub fn normal_words_with_limits(
    antichain: &Antichain,
    n: usize,
    limits: EnumerationLimits,
) -> Result<NormalWordSet> {
    if n > limits.max_len {
        return Err(Error::LimitExceeded(format!(
            "normal words of length {n} requested, limit is {}",
            limits.max_len
        )));
    }
    let g = antichain.alphabet().size();
    let mut by_length = vec![vec![Word::empty()]];
    let mut total = 1usize;
    for _ in 0..n {
        let prev = by_length.last().expect("layer 0 exists");
        let mut next = Vec::with_capacity(prev.len() * g);
        for w in prev {
            for l in 0..g {
                let mut ext = w.clone();
                ext.push(l as Letter);
                if !antichain.ends_with_obstruction(ext.letters()) {
                    next.push(ext);
                }
            }
        }
        total += next.len();
        if total > limits.max_words {
            return Err(Error::LimitExceeded(format!(
                "more than {} normal words",
                limits.max_words
            )));
        }
        // extending an ascending layer letter by letter keeps it ascending
        by_length.push(next);
    }
    let counts = by_length.iter().map(Vec::len).collect();
    Ok(NormalWordSet { by_length, counts })
}

/// Per-word status in a [`ValidationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordStatus {
    pub word: String,
    pub lyndon: bool,
    pub single_letter: bool,
}

/// Outcome of checking that a list of words is an antichain of Lyndon words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub words: Vec<WordStatus>,
    /// Pairs `(u, w)` with `u` a proper factor of `w`, or duplicates.
    pub comparable: Vec<(String, String)>,
    pub valid: bool,
}

impl ValidationReport {
    pub fn offending_words(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .words
            .iter()
            .filter(|s| !s.lyndon || s.single_letter)
            .map(|s| s.word.clone())
            .collect();
        for (u, w) in &self.comparable {
            out.push(u.clone());
            out.push(w.clone());
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Checks each word for the Lyndon property and every pair for factor
/// comparability. Failures are reported, not raised.
pub fn validate_lyndon_antichain(alphabet: &Alphabet, ws: &[Word]) -> Result<ValidationReport> {
    let mut statuses = Vec::with_capacity(ws.len());
    for w in ws {
        alphabet.check(w)?;
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        statuses.push(WordStatus {
            word: alphabet.render(w),
            lyndon: words::is_lyndon_slice(w.letters()),
            single_letter: w.len() == 1,
        });
    }
    let mut comparable = Vec::new();
    for (i, u) in ws.iter().enumerate() {
        for (j, w) in ws.iter().enumerate() {
            let dup = i < j && u == w;
            let proper = u.len() < w.len() && words::is_factor(u, w);
            if dup || proper {
                comparable.push((alphabet.render(u), alphabet.render(w)));
            }
        }
    }
    let valid =
        comparable.is_empty() && statuses.iter().all(|s| s.lyndon && !s.single_letter);
    Ok(ValidationReport {
        words: statuses,
        comparable,
        valid,
    })
}
