//! Lyndon atoms of a monomial algebra presented by Lyndon words.
//!
//! For an antichain `W` of Lyndon words, the atoms are the `W`-normal Lyndon
//! words. Every normal word is uniquely a nonincreasing product of atoms, so
//! the algebra has polynomial growth exactly when the atom set `N` is finite,
//! and then `GKdim = gldim = |N|` and `H(t) = prod 1/(1 - t^|l|)`.
//!
//! Atoms are built by length: a Lyndon word of length at least two is the
//! product `ab` of its standard factorization, both factors Lyndon with
//! `a < b`, and both normal whenever `ab` is. So the atoms of length `s` are
//! the normal products `ab` of shorter atoms `a < b` with `|a| + |b| = s`.
//! Finiteness is decided from the atoms of length at most `m - 1`, where `m`
//! is the longest relation: `N` is finite iff every product `ab` of such
//! atoms with `a < b` and `|ab| >= m` contains a relation.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{is_normal, Antichain};
use crate::error::{Error, Result};
use crate::words::{self, Alphabet, Word};

/// A sorted set of Lyndon atoms `l_1 < l_2 < ... < l_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomSet {
    alphabet: Alphabet,
    atoms: Vec<Word>,
    max_relation_len: usize,
    bound: usize,
    complete: bool,
}

impl AtomSet {
    /// Ascending atoms.
    pub fn atoms(&self) -> &[Word] {
        &self.atoms
    }

    /// Atoms in descending order; this is the order of factors in PBW products.
    pub fn descending(&self) -> Vec<Word> {
        self.atoms.iter().rev().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Length of the longest relation of the defining antichain.
    pub fn max_relation_len(&self) -> usize {
        self.max_relation_len
    }

    /// Every atom of length at most this bound is listed.
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// True when the listed atoms are all the atoms (the set is finite).
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.atoms.binary_search(w).is_ok()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.atoms.iter().map(Word::len).collect()
    }

    pub fn render(&self) -> Vec<String> {
        self.atoms.iter().map(|w| self.alphabet.render(w)).collect()
    }

    /// Longest atom length `s`.
    pub fn max_atom_len(&self) -> usize {
        self.atoms.iter().map(Word::len).max().unwrap_or(0)
    }

    /// Builds a complete atom set from an explicit list, for callers that
    /// already know `N` (used by the Fibonacci family and tests).
    pub fn from_words(
        alphabet: Alphabet,
        atoms: impl IntoIterator<Item = Word>,
        max_relation_len: usize,
    ) -> Result<Self> {
        let atoms: Vec<Word> = atoms.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        for a in &atoms {
            alphabet.check(a)?;
            if !words::is_lyndon(a)? {
                return Err(Error::NotLyndon(alphabet.render(a)));
            }
        }
        let bound = atoms.iter().map(Word::len).max().unwrap_or(0);
        Ok(AtomSet {
            alphabet,
            atoms,
            max_relation_len,
            bound,
            complete: true,
        })
    }
}

/// Where an exponential-growth verdict comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GrowthWitness {
    /// Atoms `a < b` with `ab` normal and `|ab| >= m`, so `ab` is an atom
    /// longer than any relation and the atom set is infinite.
    AtomPair { left: String, right: String },
    /// A vertex of a strongly connected component of the Ufnarovski graph that
    /// carries two distinct cycles.
    IntersectingCycles { vertex: String },
}

/// Polynomial growth of a given degree, or exponential growth.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "growth", rename_all = "snake_case")]
pub enum GrowthVerdict {
    Polynomial { degree: usize },
    Exponential { witness: Option<GrowthWitness> },
}

impl GrowthVerdict {
    pub fn is_polynomial(&self) -> bool {
        matches!(self, GrowthVerdict::Polynomial { .. })
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            GrowthVerdict::Polynomial { degree } => Some(*degree),
            GrowthVerdict::Exponential { .. } => None,
        }
    }

    /// Same kind and, if polynomial, same degree. Witnesses are ignored.
    pub fn agrees_with(&self, other: &GrowthVerdict) -> bool {
        self.degree() == other.degree()
    }
}

/// Atoms of length at most `bound`, ascending, by the recursive product
/// construction. The result is marked incomplete.
pub fn atoms_up_to(antichain: &Antichain, bound: usize) -> Result<AtomSet> {
    antichain.require_lyndon()?;
    if bound == 0 {
        return Err(Error::InvalidArgument("atom length bound must be >= 1".into()));
    }
    let alphabet = antichain.alphabet().clone();
    // by_len[s] holds the atoms of length s
    let mut by_len: Vec<Vec<Word>> = vec![Vec::new(), alphabet.letters()];
    for s in 2..=bound {
        let mut layer = BTreeSet::new();
        for left_len in 1..s {
            for a in &by_len[left_len] {
                for b in &by_len[s - left_len] {
                    if a < b {
                        let ab = a.concat(b);
                        if is_normal(&ab, antichain) {
                            layer.insert(ab);
                        }
                    }
                }
            }
        }
        by_len.push(layer.into_iter().collect());
    }
    let mut atoms: Vec<Word> = by_len.into_iter().flatten().collect();
    atoms.sort();
    Ok(AtomSet {
        alphabet,
        atoms,
        max_relation_len: antichain.max_len(),
        bound,
        complete: false,
    })
}

/// Atoms up to length `m - 1` together with the growth verdict. When the
/// growth is polynomial the returned atom set is complete.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthAnalysis {
    pub atoms: AtomSet,
    pub verdict: GrowthVerdict,
}

pub fn analyze(antichain: &Antichain) -> Result<GrowthAnalysis> {
    antichain.require_lyndon()?;
    // the empty antichain behaves like m = 2: only the letters matter
    let m = antichain.max_len().max(2);
    let mut atoms = atoms_up_to(antichain, m - 1)?;
    let alphabet = antichain.alphabet();
    let list = atoms.atoms();
    let mut witness = None;
    'scan: for (i, a) in list.iter().enumerate() {
        for b in &list[i + 1..] {
            if a.len() + b.len() >= m && is_normal(&a.concat(b), antichain) {
                witness = Some(GrowthWitness::AtomPair {
                    left: alphabet.render(a),
                    right: alphabet.render(b),
                });
                break 'scan;
            }
        }
    }
    let verdict = match witness {
        None => {
            atoms.complete = true;
            GrowthVerdict::Polynomial { degree: atoms.len() }
        }
        Some(w) => GrowthVerdict::Exponential { witness: Some(w) },
    };
    Ok(GrowthAnalysis { atoms, verdict })
}

/// Polynomial or exponential growth, decided through the Lyndon atoms.
pub fn decide_growth(antichain: &Antichain) -> Result<GrowthVerdict> {
    analyze(antichain).map(|a| a.verdict)
}

/// The complete atom set; fails with [`Error::ExponentialGrowth`] if infinite.
pub fn lyndon_atoms(antichain: &Antichain) -> Result<AtomSet> {
    let analysis = analyze(antichain)?;
    if analysis.verdict.is_polynomial() {
        Ok(analysis.atoms)
    } else {
        Err(Error::ExponentialGrowth)
    }
}

/// Gelfand-Kirillov dimension, equal to the number of atoms.
pub fn gk_dim(antichain: &Antichain) -> Result<usize> {
    lyndon_atoms(antichain).map(|a| a.len())
}

/// Global dimension in the polynomial-growth case, read off as `|N|`.
/// [`crate::chains::global_dimension`] computes it independently from chains.
pub fn gl_dim_poly(antichain: &Antichain) -> Result<usize> {
    gk_dim(antichain)
}

/// Product form `prod 1/(1 - t^e)` and its truncated expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    /// Atom lengths, ascending.
    pub exponents: Vec<usize>,
    /// Coefficients of `t^0 ..= t^trunc`.
    pub coeffs: Vec<BigUint>,
}

impl HilbertSeries {
    pub fn from_exponents(mut exponents: Vec<usize>, trunc: usize) -> Result<Self> {
        if exponents.contains(&0) {
            return Err(Error::InvalidArgument("zero exponent in Hilbert product".into()));
        }
        exponents.sort_unstable();
        let mut coeffs = vec![BigUint::zero(); trunc + 1];
        coeffs[0] = BigUint::one();
        for &e in &exponents {
            for i in e..=trunc {
                let prev = coeffs[i - e].clone();
                coeffs[i] += prev;
            }
        }
        Ok(HilbertSeries { exponents, coeffs })
    }

    /// The polynomial `prod (1 - t^e)`, the reciprocal of the series.
    pub fn reciprocal_polynomial(&self) -> Vec<BigInt> {
        let mut poly = vec![BigInt::one()];
        for &e in &self.exponents {
            let mut next = vec![BigInt::zero(); poly.len() + e];
            for (i, c) in poly.iter().enumerate() {
                next[i] += c;
                next[i + e] -= c;
            }
            poly = next;
        }
        poly
    }

    pub fn coeffs_u64(&self) -> Option<Vec<u64>> {
        self.coeffs.iter().map(|c| u64::try_from(c).ok()).collect()
    }

    /// Human-readable product form, e.g. `1/((1-t)^2(1-t^2))`.
    pub fn product_form(&self) -> String {
        if self.exponents.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.exponents.len() {
            let e = self.exponents[i];
            let k = self.exponents[i..].iter().take_while(|&&x| x == e).count();
            let base = if e == 1 { "(1-t)".to_string() } else { format!("(1-t^{e})") };
            parts.push(if k == 1 { base } else { format!("{base}^{k}") });
            i += k;
        }
        format!("1/({})", parts.concat())
    }
}

/// Hilbert series of the algebra with the given complete atom set.
pub fn hilbert_series(atoms: &AtomSet, trunc: usize) -> Result<HilbertSeries> {
    if !atoms.is_complete() {
        return Err(Error::IncompleteAtoms);
    }
    HilbertSeries::from_exponents(atoms.lengths(), trunc)
}

/// Exponents of a normal word in the PBW basis `l_d^{k_d} ... l_1^{k_1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PbwDecomposition {
    /// Atoms in descending order `l_d > ... > l_1`.
    pub atoms: Vec<Word>,
    /// `exponents[i]` is the power of `atoms[i]`.
    pub exponents: Vec<usize>,
}

impl PbwDecomposition {
    /// Nonzero powers in product order.
    pub fn factors(&self) -> Vec<(&Word, usize)> {
        self.atoms
            .iter()
            .zip(&self.exponents)
            .filter(|(_, &k)| k > 0)
            .map(|(a, &k)| (a, k))
            .collect()
    }

    /// The word `l_d^{k_d} ... l_1^{k_1}`.
    pub fn product(&self) -> Word {
        self.factors()
            .into_iter()
            .fold(Word::empty(), |acc, (a, k)| acc.concat(&a.pow(k)))
    }
}

/// Decomposes a normal word via its Chen-Fox-Lyndon factorization; every
/// factor must be an atom.
pub fn pbw_decompose(w: &Word, atoms: &AtomSet) -> Result<PbwDecomposition> {
    if !atoms.is_complete() {
        return Err(Error::IncompleteAtoms);
    }
    let desc = atoms.descending();
    let mut exponents = vec![0; desc.len()];
    if !w.is_empty() {
        for factor in words::cfl_factorization(w)? {
            // descending order: position d-1-i for ascending index i
            let i = atoms
                .atoms()
                .binary_search(&factor)
                .map_err(|_| Error::NotNormal(atoms.alphabet().render(w)))?;
            exponents[desc.len() - 1 - i] += 1;
        }
    }
    Ok(PbwDecomposition {
        atoms: desc,
        exponents,
    })
}

/// Outcome of checking the relation/atom bounds for polynomial growth:
/// `{l_i l_(i+1)} ⊆ W ⊆ {l_i l_j : i < j}`, `d - 1 <= |W| <= d(d-1)/2`,
/// `|w| <= 2s`, and the extremal case `|W| = d(d-1)/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub d: usize,
    pub relation_count: usize,
    /// Each consecutive product `l_i l_(i+1)` and whether it is a relation.
    pub consecutive_products: Vec<(String, bool)>,
    /// Relations that are not a product `l_i l_j` with `i < j`.
    pub relations_outside_products: Vec<String>,
    pub lower_bound_holds: bool,
    pub upper_bound_holds: bool,
    pub relation_lengths_bounded: bool,
    /// `|W| = d(d-1)/2`.
    pub upper_bound_attained: bool,
    /// The atoms are exactly the letters.
    pub atoms_are_letters: bool,
    /// `W` is the set of all `x_i x_j`, `i < j`.
    pub relations_all_quadratic_lyndon: bool,
    pub violations: Vec<String>,
}

impl BoundsReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_obstruction_bounds(antichain: &Antichain, atoms: &AtomSet) -> Result<BoundsReport> {
    if !atoms.is_complete() {
        return Err(Error::IncompleteAtoms);
    }
    let alphabet = antichain.alphabet();
    let l = atoms.atoms();
    let d = l.len();
    let r = antichain.len();
    let relations: BTreeSet<&Word> = antichain.words().iter().collect();
    let mut violations = Vec::new();

    let consecutive_products: Vec<(String, bool)> = l
        .windows(2)
        .map(|p| {
            let w = p[0].concat(&p[1]);
            let member = relations.contains(&w);
            (alphabet.render(&w), member)
        })
        .collect();
    for (w, member) in &consecutive_products {
        if !member {
            violations.push(format!("consecutive product {w} is not a relation"));
        }
    }

    let products: BTreeSet<Word> = l
        .iter()
        .enumerate()
        .flat_map(|(i, a)| l[i + 1..].iter().map(move |b| a.concat(b)))
        .collect();
    let relations_outside_products: Vec<String> = antichain
        .words()
        .iter()
        .filter(|w| !products.contains(*w))
        .map(|w| alphabet.render(w))
        .collect();
    for w in &relations_outside_products {
        violations.push(format!("relation {w} is not a product of atoms l_i l_j, i < j"));
    }

    let lower_bound_holds = d == 0 || r + 1 >= d;
    let upper_bound_holds = 2 * r <= d * d.saturating_sub(1);
    if !lower_bound_holds {
        violations.push(format!("|W| = {r} < d - 1 = {}", d - 1));
    }
    if !upper_bound_holds {
        violations.push(format!("|W| = {r} > d(d-1)/2"));
    }
    let s = atoms.max_atom_len();
    let relation_lengths_bounded = antichain.words().iter().all(|w| w.len() <= 2 * s);
    if !relation_lengths_bounded {
        violations.push(format!("some relation is longer than 2s = {}", 2 * s));
    }

    let upper_bound_attained = 2 * r == d * d.saturating_sub(1);
    let g = alphabet.size();
    let atoms_are_letters = l.iter().all(|a| a.len() == 1) && d == g;
    let quadratic: BTreeSet<Word> = (0..g)
        .flat_map(|i| (i + 1..g).map(move |j| Word::from(vec![i as u8, j as u8])))
        .collect();
    let relations_all_quadratic_lyndon =
        relations.len() == quadratic.len() && quadratic.iter().all(|q| relations.contains(q));
    if !(upper_bound_attained == atoms_are_letters
        && atoms_are_letters == relations_all_quadratic_lyndon)
    {
        violations.push(format!(
            "extremal case mismatch: |W| = d(d-1)/2 is {upper_bound_attained}, N = X is \
             {atoms_are_letters}, W quadratic is {relations_all_quadratic_lyndon}"
        ));
    }

    Ok(BoundsReport {
        d,
        relation_count: r,
        consecutive_products,
        relations_outside_products,
        lower_bound_holds,
        upper_bound_holds,
        relation_lengths_bounded,
        upper_bound_attained,
        atoms_are_letters,
        relations_all_quadratic_lyndon,
        violations,
    })
}

/// Checks the defining conditions of an atom set against its antichain:
/// letters are atoms, Lyndon factors of atoms are atoms, atoms are normal
/// Lyndon words, every normal Lyndon word up to the bound is listed, and a
/// complete set has no atom longer than `m - 1`. Returns the violations.
pub fn verify_atom_conditions(antichain: &Antichain, atoms: &AtomSet) -> Result<Vec<String>> {
    let alphabet = antichain.alphabet();
    let mut violations = Vec::new();
    for x in alphabet.letters() {
        if !atoms.contains(&x) {
            violations.push(format!("letter {} is not an atom", alphabet.render(&x)));
        }
    }
    for a in atoms.atoms() {
        let s = a.letters();
        if !words::is_lyndon_slice(s) || !is_normal(a, antichain) {
            violations.push(format!("{} is not a normal Lyndon word", alphabet.render(a)));
        }
        for i in 0..s.len() {
            for j in i + 1..=s.len() {
                if words::is_lyndon_slice(&s[i..j]) && !atoms.contains(&Word::from(&s[i..j])) {
                    violations.push(format!(
                        "Lyndon factor {} of atom {} is missing",
                        alphabet.render(&Word::from(&s[i..j])),
                        alphabet.render(a)
                    ));
                }
            }
        }
    }
    for l in words::lyndon_words_up_to(alphabet.size(), atoms.bound().max(1))? {
        if is_normal(&l, antichain) && !atoms.contains(&l) {
            violations.push(format!("normal Lyndon word {} is missing", alphabet.render(&l)));
        }
    }
    if atoms.is_complete() && antichain.max_len() >= 2 {
        let m = antichain.max_len();
        if atoms.max_atom_len() > m - 1 {
            violations.push(format!("complete atom set has an atom longer than {}", m - 1));
        }
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ac(alpha: &str, rel: &str) -> Antichain {
        Antichain::from_relations(alpha, rel).unwrap()
    }

    #[test]
    fn atoms_examples() {
        assert_eq!(atoms_up_to(&ac("xy", "xy"), 3).unwrap().render(), ["x", "y"]);
        assert_eq!(
            atoms_up_to(&ac("xy", "xxy,xyy"), 2).unwrap().render(),
            ["x", "xy", "y"]
        );
        assert!(matches!(
            atoms_up_to(&ac("xyz", "xz,zy,xxy,xyy,zxy"), 3),
            Err(Error::NonLyndonAntichain(_))
        ));
    }

    #[test]
    fn growth_examples() {
        assert_eq!(
            decide_growth(&ac("xy", "xxy,xyy")).unwrap(),
            GrowthVerdict::Polynomial { degree: 3 }
        );
        assert_eq!(
            decide_growth(&ac("xy", "xxy")).unwrap(),
            GrowthVerdict::Exponential {
                witness: Some(GrowthWitness::AtomPair {
                    left: "xy".into(),
                    right: "y".into()
                })
            }
        );
        assert_eq!(gk_dim(&ac("xy", "xy")).unwrap(), 2);
        assert_eq!(gk_dim(&ac("xyz", "xy,xz,yz")).unwrap(), 3);
        assert_eq!(gl_dim_poly(&ac("xyz", "xy,xz,yz")).unwrap(), 3);
        assert_eq!(gk_dim(&ac("xy", "xxy")), Err(Error::ExponentialGrowth));
    }

    #[test]
    fn free_algebras() {
        assert_eq!(
            decide_growth(&ac("x", "")).unwrap(),
            GrowthVerdict::Polynomial { degree: 1 }
        );
        assert!(!decide_growth(&ac("xy", "")).unwrap().is_polynomial());
    }

    #[test]
    fn hilbert_examples() {
        let h = hilbert_series(&lyndon_atoms(&ac("xy", "xy")).unwrap(), 4).unwrap();
        assert_eq!(h.coeffs_u64().unwrap(), [1, 2, 3, 4, 5]);
        assert_eq!(h.product_form(), "1/((1-t)^2)");
        let h = hilbert_series(&lyndon_atoms(&ac("xy", "xxy,xyy")).unwrap(), 4).unwrap();
        assert_eq!(h.exponents, [1, 1, 2]);
        assert_eq!(h.coeffs_u64().unwrap(), [1, 2, 4, 6, 9]);
        assert_eq!(h.product_form(), "1/((1-t)^2(1-t^2))");
        let partial = atoms_up_to(&ac("xy", "xy"), 1).unwrap();
        assert_eq!(hilbert_series(&partial, 3), Err(Error::IncompleteAtoms));
    }

    #[test]
    fn reciprocal_polynomial_inverts_series() {
        let h = HilbertSeries::from_exponents(vec![1, 1, 2, 3], 12).unwrap();
        let p = h.reciprocal_polynomial();
        for n in 0..=12 {
            let s: BigInt = (0..=n)
                .filter(|&i| i < p.len())
                .map(|i| &p[i] * BigInt::from(h.coeffs[n - i].clone()))
                .sum();
            assert_eq!(s, if n == 0 { BigInt::one() } else { BigInt::zero() });
        }
    }

    #[test]
    fn pbw_examples() {
        let a = Alphabet::parse("xy").unwrap();
        let w = |s| a.parse_word(s).unwrap();
        let atoms = lyndon_atoms(&ac("xy", "xy")).unwrap();
        let p = pbw_decompose(&w("yyx"), &atoms).unwrap();
        assert_eq!(p.atoms, [w("y"), w("x")]);
        assert_eq!(p.exponents, [2, 1]);
        assert_eq!(p.product(), w("yyx"));
        assert!(matches!(pbw_decompose(&w("xy"), &atoms), Err(Error::NotNormal(_))));

        let atoms = AtomSet::from_words(a.clone(), [w("x"), w("xy"), w("y")], 3).unwrap();
        let p = pbw_decompose(&w("yxyxyx"), &atoms).unwrap();
        assert_eq!(p.exponents, [1, 2, 1]);
        assert_eq!(p.product(), w("yxyxyx"));
        assert_eq!(pbw_decompose(&Word::empty(), &atoms).unwrap().exponents, [0, 0, 0]);
    }

    #[test]
    fn bounds_examples() {
        let w = ac("xyz", "xy,xz,yz");
        let r = check_obstruction_bounds(&w, &lyndon_atoms(&w).unwrap()).unwrap();
        assert!(r.ok(), "{:?}", r.violations);
        assert!(r.upper_bound_attained && r.atoms_are_letters && r.relations_all_quadratic_lyndon);

        let w = ac("xy", "xxy,xyy");
        let r = check_obstruction_bounds(&w, &lyndon_atoms(&w).unwrap()).unwrap();
        assert!(r.ok(), "{:?}", r.violations);
        assert_eq!((r.d, r.relation_count), (3, 2));
        assert!(!r.upper_bound_attained);
        assert_eq!(
            r.consecutive_products,
            [("xxy".to_string(), true), ("xyy".to_string(), true)]
        );
    }

    #[test]
    fn conditions_hold() {
        for (alpha, rel) in [("xy", "xxy,xyy"), ("xyz", "xy,xz,yz"), ("xy", "xxy")] {
            let w = ac(alpha, rel);
            let analysis = analyze(&w).unwrap();
            assert!(verify_atom_conditions(&w, &analysis.atoms).unwrap().is_empty());
        }
    }
}
