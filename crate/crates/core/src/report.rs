//! Serializable reports shared by the command-line front end and callers
//! that want machine-readable output.

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::Antichain;
use crate::atoms::{self, GrowthVerdict, GrowthWitness};
use crate::chains::{self, BettiTable, ChainLimits};
use crate::error::Result;
use crate::words::Multidegree;

/// An exact nonnegative integer written as a plain JSON number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Count(pub BigUint);

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serde_json::Number::from_string_unchecked(self.0.to_string()).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Count {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(deserializer)?;
        n.to_string()
            .parse::<BigUint>()
            .map(Count)
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertJson {
    pub exponents: Vec<usize>,
    pub coeffs: Vec<Count>,
}

/// Atoms, growth and dimensions of a Lyndon antichain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomReport {
    pub alphabet: String,
    pub relations: Vec<String>,
    /// Atoms of length at most `m - 1`; all atoms when growth is polynomial.
    pub atoms: Vec<String>,
    pub d: usize,
    pub growth: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gk_dim: Option<usize>,
    /// Global dimension from the chain enumeration.
    pub gl_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hilbert: Option<HilbertJson>,
}

impl AtomReport {
    pub fn build(antichain: &Antichain, trunc: usize) -> Result<Self> {
        let analysis = atoms::analyze(antichain)?;
        let gl_dim = chains::global_dimension(antichain, ChainLimits::default())?;
        let (growth, witness, gk_dim, hilbert) = match &analysis.verdict {
            GrowthVerdict::Polynomial { degree } => {
                let h = atoms::hilbert_series(&analysis.atoms, trunc)?;
                let hilbert = HilbertJson {
                    exponents: h.exponents,
                    coeffs: h.coeffs.into_iter().map(Count).collect(),
                };
                ("polynomial", None, Some(*degree), Some(hilbert))
            }
            GrowthVerdict::Exponential { witness } => {
                let pair = match witness {
                    Some(GrowthWitness::AtomPair { left, right }) => {
                        Some(vec![left.clone(), right.clone()])
                    }
                    _ => None,
                };
                ("exponential", pair, None, None)
            }
        };
        Ok(AtomReport {
            alphabet: antichain.alphabet().to_string(),
            relations: antichain.render(),
            atoms: analysis.atoms.render(),
            d: analysis.atoms.len(),
            growth: growth.into(),
            witness,
            gk_dim,
            gl_dim,
            hilbert,
        })
    }

    pub fn to_antichain(&self) -> Result<Antichain> {
        Antichain::from_relations(&self.alphabet, &self.relations.join(","))
    }
}

/// One homological degree of a Betti table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiDegree {
    pub degree: usize,
    pub rank: usize,
    pub multidegrees: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub alphabet: String,
    pub relations: Vec<String>,
    pub ranks: Vec<usize>,
    pub degrees: Vec<BettiDegree>,
    pub complete: bool,
}

impl BettiReport {
    pub fn new(antichain: &Antichain, table: &BettiTable) -> Self {
        BettiReport {
            alphabet: antichain.alphabet().to_string(),
            relations: antichain.render(),
            ranks: table.ranks.clone(),
            degrees: table
                .multidegrees
                .iter()
                .enumerate()
                .map(|(i, degs)| BettiDegree {
                    degree: i,
                    rank: degs.len(),
                    multidegrees: degs.iter().map(|Multidegree(v)| v.clone()).collect(),
                })
                .collect(),
            complete: table.complete,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_report_json_round_trip() {
        let w = Antichain::from_relations("xy", "xxy,xyy").unwrap();
        let report = AtomReport::build(&w, 6).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"coeffs\":[1,2,4,6,9,12,16]"), "{json}");
        let back: AtomReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(AtomReport::build(&back.to_antichain().unwrap(), 6).unwrap(), report);
    }

    #[test]
    fn exponential_report_has_witness() {
        let w = Antichain::from_relations("xy", "xxy").unwrap();
        let report = AtomReport::build(&w, 6).unwrap();
        assert_eq!(report.growth, "exponential");
        assert_eq!(report.witness, Some(vec!["xy".to_string(), "y".to_string()]));
        assert!(report.hilbert.is_none());
        let json = serde_json::to_string(&report).unwrap();
        assert!(!json.contains("gk_dim"));
    }
}
