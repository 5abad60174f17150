//! Words over a totally ordered finite alphabet.
//!
//! Letters are stored as integer codes `0..g`, and the order of the alphabet
//! is the order of the codes. A [`Word`] compares with the lexicographic order
//! in which a proper prefix is strictly smaller than the longer word, so the
//! derived `Ord` on the underlying vector is exactly the order used for
//! Lyndon words. That order is total but not a well-order (`y > xy > xxy > ...`),
//! so nothing in this crate walks down descending chains of words.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Letter code. The alphabet order is the numeric order of codes.
pub type Letter = u8;

/// An ordered alphabet `x_1 < x_2 < ... < x_g` with printable letter names.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    names: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet from its letters listed in increasing order.
    pub fn new(names: impl IntoIterator<Item = char>) -> Result<Self> {
        let names: Vec<char> = names.into_iter().collect();
        if names.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if names.len() > usize::from(Letter::MAX) + 1 {
            return Err(Error::AlphabetTooLarge);
        }
        for (i, c) in names.iter().enumerate() {
            if c.is_whitespace() || c.is_control() {
                return Err(Error::InvalidArgument(format!(
                    "letter {c:?} is not printable"
                )));
            }
            if names[..i].contains(c) {
                return Err(Error::DuplicateLetter(*c));
            }
        }
        Ok(Alphabet { names })
    }

    /// Parses an alphabet declaration such as `"xy"` (meaning `x < y`).
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(text.trim().chars())
    }

    /// The standard alphabet `a < b < c < ...` restricted to `size` letters,
    /// except that sizes up to three use `x < y < z`.
    pub fn standard(size: usize) -> Result<Self> {
        match size {
            0 => Err(Error::EmptyAlphabet),
            1..=3 => Self::new("xyz".chars().take(size)),
            4..=26 => Self::new(('a'..='z').take(size)),
            _ => Err(Error::InvalidArgument(format!(
                "no standard alphabet with {size} letters"
            ))),
        }
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[char] {
        &self.names
    }

    pub fn name(&self, letter: Letter) -> char {
        self.names[usize::from(letter)]
    }

    pub fn letter(&self, name: char) -> Result<Letter> {
        self.names
            .iter()
            .position(|&c| c == name)
            .map(|i| i as Letter)
            .ok_or(Error::UnknownLetter(name))
    }

    /// All one-letter words, ascending.
    pub fn letters(&self) -> Vec<Word> {
        (0..self.size()).map(|i| Word::letter(i as Letter)).collect()
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.trim()
            .chars()
            .map(|c| self.letter(c))
            .collect::<Result<Vec<_>>>()
            .map(Word::from)
    }

    pub fn render(&self, word: &Word) -> String {
        word.letters().iter().map(|&l| self.name(l)).collect()
    }

    /// Checks that every letter of `word` belongs to this alphabet.
    pub fn check(&self, word: &Word) -> Result<()> {
        match word.letters().iter().find(|&&l| usize::from(l) >= self.size()) {
            Some(&code) => Err(Error::LetterOutOfRange {
                code,
                size: self.size(),
            }),
            None => Ok(()),
        }
    }

    /// Lexicographic comparison of two words over this alphabet.
    pub fn lex_cmp(&self, u: &Word, v: &Word) -> Result<Ordering> {
        self.check(u)?;
        self.check(v)?;
        Ok(u.cmp(v))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.names.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// A finite word; the empty word plays the role of the unit `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// Letter counts, indexed by letter code.
    pub fn multidegree(&self, alphabet_size: usize) -> Multidegree {
        let mut counts = vec![0; alphabet_size];
        for &l in &self.0 {
            counts[usize::from(l)] += 1;
        }
        Multidegree(counts)
    }

    /// Replaces every letter `i` by `images[i]`.
    pub fn substitute(&self, images: &[Word]) -> Word {
        Word(
            self.0
                .iter()
                .flat_map(|&l| images[usize::from(l)].0.iter().copied())
                .collect(),
        )
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

/// Occurrence counts of each letter in a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multidegree(pub Vec<usize>);

impl Multidegree {
    pub fn zero(alphabet_size: usize) -> Self {
        Multidegree(vec![0; alphabet_size])
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Lyndon test: `w` is Lyndon iff its Chen-Fox-Lyndon factorization has a
/// single factor, i.e. `w` is strictly smaller than all its proper rotations.
pub fn is_lyndon(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(is_lyndon_slice(w.letters()))
}

pub(crate) fn is_lyndon_slice(s: &[Letter]) -> bool {
    !s.is_empty() && first_factor_len(s) == s.len()
}

/// Length of the first factor produced by Duval's factorization of `s`.
fn first_factor_len(s: &[Letter]) -> usize {
    let n = s.len();
    let (mut j, mut k) = (1, 0);
    while j < n && s[k] <= s[j] {
        if s[k] < s[j] {
            k = 0;
        } else {
            k += 1;
        }
        j += 1;
    }
    j - k
}

/// All Lyndon words of length `1..=n` over the first `g` letters, ascending.
///
/// Uses Duval's successor rule: repeat the current word periodically up to
/// length `n`, strip trailing maximal letters, then increment the last letter.
pub fn lyndon_words_up_to(g: usize, n: usize) -> Result<Vec<Word>> {
    if g == 0 {
        return Err(Error::EmptyAlphabet);
    }
    if g > usize::from(Letter::MAX) + 1 {
        return Err(Error::AlphabetTooLarge);
    }
    if n == 0 {
        return Err(Error::InvalidArgument("length bound must be >= 1".into()));
    }
    let top = (g - 1) as Letter;
    let mut out = Vec::new();
    let mut w: Vec<Letter> = vec![0];
    loop {
        out.push(Word(w.clone()));
        let period = w.len();
        while w.len() < n {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    Ok(out)
}

/// Chen-Fox-Lyndon factorization into a nonincreasing product of Lyndon words
/// (Duval's algorithm, linear time).
pub fn cfl_factorization(w: &Word) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(cfl_slices(w.letters())
        .into_iter()
        .map(|r| Word::from(&w.letters()[r]))
        .collect())
}

pub(crate) fn cfl_slices(s: &[Letter]) -> Vec<std::ops::Range<usize>> {
    let n = s.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            out.push(i..i + period);
            i += period;
        }
    }
    out
}

/// Standard factorization `l = a b` of a Lyndon word, where `b` is the
/// longest proper right segment of `l` that is Lyndon.
pub fn standard_factorization(l: &Word) -> Result<(Word, Word)> {
    if !is_lyndon(l)? {
        return Err(Error::NotLyndon(format!("{:?}", l.letters())));
    }
    if l.len() < 2 {
        return Err(Error::TooShort(format!("{:?}", l.letters())));
    }
    let s = l.letters();
    let split = (1..s.len())
        .find(|&i| is_lyndon_slice(&s[i..]))
        .expect("the last letter is a Lyndon suffix");
    Ok((Word::from(&s[..split]), Word::from(&s[split..])))
}

/// True iff `u` occurs as a contiguous factor of `w`.
pub fn is_factor(u: &Word, w: &Word) -> bool {
    contains_slice(w.letters(), u.letters())
}

pub(crate) fn contains_slice(hay: &[Letter], needle: &[Letter]) -> bool {
    needle.is_empty() || hay.windows(needle.len()).any(|win| win == needle)
}

/// True iff `a = u v` and `b = v w` for nonempty `u`, `v`, `w`.
pub fn overlaps(a: &Word, b: &Word) -> bool {
    let (a, b) = (a.letters(), b.letters());
    (1..a.len().min(b.len())).any(|k| a[a.len() - k..] == b[..k])
}
